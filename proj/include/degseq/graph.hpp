#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/union_find.hpp"

namespace degseq {

// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Labeled simple graph: vertices 0..n-1, edge set with no loops and no
// parallel edges. Adjacency is kept in ordered sets so every traversal
// is deterministic.
class Graph {
public:
    explicit Graph(int n) : adj_(check_n(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].count(v) > 0;
    }

    void add_edge(int u, int v) {
        Edge e = make_edge(u, v);
        check_vertex(e.first);
        check_vertex(e.second);
        if (has_edge(e.first, e.second))
            throw std::invalid_argument("parallel edge " + std::to_string(e.first) +
                                        "-" + std::to_string(e.second));
        adj_[static_cast<std::size_t>(e.first)].insert(e.second);
        adj_[static_cast<std::size_t>(e.second)].insert(e.first);
        ++m_;
    }

    void remove_edge(int u, int v) {
        Edge e = make_edge(u, v);
        if (!has_edge(e.first, e.second))
            throw std::invalid_argument("missing edge " + std::to_string(e.first) +
                                        "-" + std::to_string(e.second));
        adj_[static_cast<std::size_t>(e.first)].erase(e.second);
        adj_[static_cast<std::size_t>(e.second)].erase(e.first);
        --m_;
    }

    const std::set<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const {
        return static_cast<int>(neighbors(v).size());
    }

    // All edges in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const {
        return adj_ == o.adj_;
    }

private:
    static std::size_t check_n(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return static_cast<std::size_t>(n);
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::set<int>> adj_;
    std::size_t m_ = 0;
};

// Non-increasing sequence of vertex degrees, d(G).
inline DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> degs;
    degs.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
    return DegreeSequence::normalize(std::move(degs));
}

// Partition into maximal connected vertex sets, ordered by smallest
// member, each set sorted ascending.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) uf.unite(u, v);
    std::vector<std::vector<int>> parts;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int root = uf.find(v);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v);
    }
    return parts;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("is_connected: empty graph");
    return connected_components(g).size() == 1;
}

// An edge of the component that lies on a cycle, i.e. whose removal
// keeps the component connected; nullopt iff the component is a tree.
// DFS from the smallest vertex, neighbors ascending; the first back
// edge found closes a cycle and the lexicographically smallest edge of
// that cycle is returned.
inline std::optional<Edge> find_cycle_edge(const Graph& g,
                                           const std::vector<int>& component) {
    if (component.empty())
        throw std::invalid_argument("find_cycle_edge: empty component");
    std::size_t edges_in = 0;
    for (int v : component) edges_in += static_cast<std::size_t>(g.degree(v));
    edges_in /= 2;
    if (edges_in < component.size())
        return std::nullopt; // connected component, |E| < |V| means tree

    const int start = *std::min_element(component.begin(), component.end());
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -2);
    parent[static_cast<std::size_t>(start)] = -1;
    // iterative DFS; stack entries carry (vertex, neighbor iterator)
    std::vector<std::pair<int, std::set<int>::const_iterator>> stack;
    stack.emplace_back(start, g.neighbors(start).begin());
    while (!stack.empty()) {
        auto& [u, it] = stack.back();
        if (it == g.neighbors(u).end()) {
            stack.pop_back();
            continue;
        }
        const int w = *it;
        ++it;
        if (parent[static_cast<std::size_t>(u)] == w) continue;
        if (parent[static_cast<std::size_t>(w)] == -2) {
            parent[static_cast<std::size_t>(w)] = u;
            stack.emplace_back(w, g.neighbors(w).begin());
            continue;
        }
        // back edge u-w: cycle is w .. u along the tree path plus uw
        Edge best = make_edge(u, w);
        for (int x = u; x != w; x = parent[static_cast<std::size_t>(x)])
            best = std::min(best, make_edge(x, parent[static_cast<std::size_t>(x)]));
        return best;
    }
    return std::nullopt;
}

enum class SwapVariant { ac_bd, ad_bc };

inline std::string to_string(SwapVariant v) {
    return v == SwapVariant::ac_bd ? "ac/bd" : "ad/bc";
}

// One d-invariant operation: edges ab, cd replaced by ac, bd or ad, bc.
struct SwapRecord {
    Edge removed_ab;
    Edge removed_cd;
    Edge added_first;
    Edge added_second;
    SwapVariant variant = SwapVariant::ac_bd;
};

class swap_error : public std::invalid_argument {
public:
    enum class Kind { precondition, simplicity };
    swap_error(Kind kind, const std::string& what)
        : std::invalid_argument(what), kind(kind) {}
    Kind kind;
};

namespace detail {

inline std::pair<Edge, Edge> swap_additions(Edge ab, Edge cd, SwapVariant variant) {
    const int a = ab.first, b = ab.second, c = cd.first, d = cd.second;
    if (variant == SwapVariant::ac_bd)
        return {make_edge(a, c), make_edge(b, d)};
    return {make_edge(a, d), make_edge(b, c)};
}

} // namespace detail

// Replaces edges ab, cd by the chosen variant's pair. All four
// endpoints must be distinct and the added edges must not already
// exist; degrees are unchanged.
inline Graph two_swap(const Graph& g, Edge ab, Edge cd, SwapVariant variant,
                      SwapRecord* record = nullptr) {
    ab = make_edge(ab.first, ab.second);
    cd = make_edge(cd.first, cd.second);
    if (!g.has_edge(ab.first, ab.second) || !g.has_edge(cd.first, cd.second))
        throw swap_error(swap_error::Kind::precondition, "swap edge not in graph");
    if (ab.first == cd.first || ab.first == cd.second ||
        ab.second == cd.first || ab.second == cd.second)
        throw swap_error(swap_error::Kind::precondition,
                         "swap endpoints not distinct");
    auto [e1, e2] = detail::swap_additions(ab, cd, variant);
    if (g.has_edge(e1.first, e1.second) || g.has_edge(e2.first, e2.second))
        throw swap_error(swap_error::Kind::simplicity,
                         "added edge already present");
    Graph out = g;
    out.remove_edge(ab.first, ab.second);
    out.remove_edge(cd.first, cd.second);
    out.add_edge(e1.first, e1.second);
    out.add_edge(e2.first, e2.second);
    if (record) *record = {ab, cd, e1, e2, variant};
    return out;
}

// One Lemma-1 merge: take a cycle edge ab in a cyclic component and an
// edge cd in a different component, swap to cross edges. Component
// count drops by exactly one and degrees are preserved. Selection is
// deterministic: lowest-labeled cyclic component, lexicographically
// smallest cycle edge, lowest-labeled other component that has an edge,
// its lexicographically smallest edge, variant ad/bc.
inline Graph merge_components(const Graph& g, SwapRecord* record = nullptr) {
    const auto parts = connected_components(g);
    if (parts.size() < 2)
        throw std::invalid_argument("merge_components: graph already connected");

    std::optional<Edge> cycle_edge;
    std::size_t cyclic_part = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        cycle_edge = find_cycle_edge(g, parts[i]);
        if (cycle_edge) {
            cyclic_part = i;
            break;
        }
    }
    if (!cycle_edge)
        throw std::invalid_argument("merge_components: all components acyclic");

    std::optional<Edge> other_edge;
    for (std::size_t i = 0; i < parts.size() && !other_edge; ++i) {
        if (i == cyclic_part) continue;
        for (int v : parts[i]) {
            const auto& nb = g.neighbors(v);
            auto it = nb.upper_bound(v); // smallest neighbor > v
            if (it != nb.end()) {
                other_edge = Edge{v, *it};
                break;
            }
        }
    }
    if (!other_edge)
        throw std::invalid_argument(
            "merge_components: no edge outside the cyclic component");

    SwapRecord rec;
    Graph out = two_swap(g, *cycle_edge, *other_edge, SwapVariant::ad_bc, &rec);
    if (record) *record = rec;
    return out;
}

} // namespace degseq
