#include <doctest.h>

#include <random>

#include "degseq/graph.hpp"
#include "test_util.hpp"

using degseq::Edge;
using degseq::Graph;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph two_triangles() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    return g;
}

} // namespace

TEST_CASE("graph rejects loops, parallels, out-of-range") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("degree_sequence") {
    CHECK(degseq::degree_sequence(cycle(6)).to_string() == "(2,2,2,2,2,2)");
    CHECK(degseq::degree_sequence(Graph(3)).to_string() == "(0,0,0)");
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(degseq::degree_sequence(k4).to_string() == "(3,3,3,3)");
}

TEST_CASE("connected_components") {
    const auto parts = degseq::connected_components(two_triangles());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::vector<int>{0, 1, 2});
    CHECK(parts[1] == std::vector<int>{3, 4, 5});

    CHECK(degseq::connected_components(Graph(4)).size() == 4);
    CHECK(degseq::connected_components(cycle(6)).size() == 1);
}

TEST_CASE("is_connected") {
    CHECK(degseq::is_connected(Graph(1)));
    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    CHECK(degseq::is_connected(path3));
    Graph disjoint(4);
    disjoint.add_edge(0, 1);
    disjoint.add_edge(2, 3);
    CHECK_FALSE(degseq::is_connected(disjoint));
    CHECK_THROWS_AS(degseq::is_connected(Graph(0)), std::invalid_argument);
}

TEST_CASE("find_cycle_edge") {
    Graph tri = cycle(3);
    auto e = degseq::find_cycle_edge(tri, {0, 1, 2});
    REQUIRE(e.has_value());
    CHECK(tri.has_edge(e->first, e->second));

    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    CHECK_FALSE(degseq::find_cycle_edge(path3, {0, 1, 2}).has_value());

    // triangle plus pendant vertex: the pendant edge must never be chosen
    Graph pend4(4);
    pend4.add_edge(0, 1);
    pend4.add_edge(0, 2);
    pend4.add_edge(1, 2);
    pend4.add_edge(2, 3);
    auto ce = degseq::find_cycle_edge(pend4, {0, 1, 2, 3});
    REQUIRE(ce.has_value());
    CHECK(*ce != Edge{2, 3});
}

TEST_CASE("cycle-edge removal keeps the component connected") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const std::size_t m = static_cast<std::size_t>(n) +
                              rng() % static_cast<std::size_t>(n);
        Graph g = testutil::random_graph(n, m, rng);
        for (const auto& part : degseq::connected_components(g)) {
            auto e = degseq::find_cycle_edge(g, part);
            std::size_t edges_in = 0;
            for (int v : part) edges_in += static_cast<std::size_t>(g.degree(v));
            edges_in /= 2;
            if (edges_in < part.size()) {
                CHECK_FALSE(e.has_value()); // tree component
                continue;
            }
            REQUIRE(e.has_value());
            Graph h = g;
            h.remove_edge(e->first, e->second);
            const auto before = degseq::connected_components(g).size();
            CHECK(degseq::connected_components(h).size() == before);
        }
    }
}

TEST_CASE("two_swap: figure-1 rewirings") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    degseq::SwapRecord rec;
    Graph h = degseq::two_swap(g, {0, 1}, {2, 3}, degseq::SwapVariant::ad_bc, &rec);
    CHECK(h.has_edge(0, 3));
    CHECK(h.has_edge(1, 2));
    CHECK(h.edge_count() == 2);
    CHECK(degseq::degree_sequence(h) == degseq::degree_sequence(g));
    CHECK(rec.added_first == Edge{0, 3});
    CHECK(rec.added_second == Edge{1, 2});
}

TEST_CASE("two_swap across triangles preserves degrees") {
    Graph g = two_triangles();
    Graph h = degseq::two_swap(g, {0, 1}, {3, 4}, degseq::SwapVariant::ad_bc);
    CHECK(h.has_edge(0, 4));
    CHECK(h.has_edge(1, 3));
    CHECK_FALSE(h.has_edge(0, 1));
    CHECK_FALSE(h.has_edge(3, 4));
    CHECK(degseq::degree_sequence(h).to_string() == "(2,2,2,2,2,2)");
}

TEST_CASE("two_swap guards") {
    Graph g = cycle(4); // edges 01,12,23,03
    CHECK_THROWS_AS(degseq::two_swap(g, {0, 1}, {1, 2}, degseq::SwapVariant::ac_bd),
                    degseq::swap_error);
    // adding an existing edge must be a simplicity violation
    Graph h(4);
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    h.add_edge(0, 2);
    try {
        degseq::two_swap(h, {0, 1}, {2, 3}, degseq::SwapVariant::ac_bd);
        FAIL("expected swap_error");
    } catch (const degseq::swap_error& e) {
        CHECK(e.kind == degseq::swap_error::Kind::simplicity);
    }
    CHECK_THROWS_AS(degseq::two_swap(g, {0, 2}, {1, 3}, degseq::SwapVariant::ac_bd),
                    degseq::swap_error); // missing edges
}

TEST_CASE("merge_components: two triangles become a 6-cycle") {
    degseq::SwapRecord rec;
    Graph h = degseq::merge_components(two_triangles(), &rec);
    CHECK(degseq::is_connected(h));
    CHECK(degseq::degree_sequence(h).to_string() == "(2,2,2,2,2,2)");
}

TEST_CASE("merge_components: triangle plus isolated edge") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    Graph h = degseq::merge_components(g);
    CHECK(degseq::is_connected(h));
    CHECK(degseq::degree_sequence(h).to_string() == "(2,2,2,1,1)");
}

TEST_CASE("merge_components preconditions") {
    Graph forest(4);
    forest.add_edge(0, 1);
    forest.add_edge(2, 3);
    CHECK_THROWS_AS(degseq::merge_components(forest), std::invalid_argument);
    CHECK_THROWS_AS(degseq::merge_components(cycle(5)), std::invalid_argument);
    // cycle plus isolated vertex: no edge outside the cyclic component
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    CHECK_THROWS_AS(degseq::merge_components(g), std::invalid_argument);
}

TEST_CASE("pigeonhole: enough edges and >= 2 components imply a cycle") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 4 + static_cast<int>(rng() % 10);
        const std::size_t m = static_cast<std::size_t>(n - 1) + rng() % 5;
        Graph g = testutil::random_graph(n, m, rng);
        const auto parts = degseq::connected_components(g);
        bool has_isolated = false;
        for (int v = 0; v < n; ++v) has_isolated |= g.degree(v) == 0;
        if (parts.size() < 2 || has_isolated || g.edge_count() < static_cast<std::size_t>(n - 1))
            continue;
        bool cyclic = false;
        for (const auto& part : parts)
            cyclic |= degseq::find_cycle_edge(g, part).has_value();
        CHECK(cyclic);
    }
}
