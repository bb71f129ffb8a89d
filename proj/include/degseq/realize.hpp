#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "degseq/checks.hpp"
#include "degseq/graph.hpp"

namespace degseq {

// Havel-Hakimi construction: connect the vertex of largest residual
// degree to the next-largest ones, repeat. Vertices are labeled by
// position in the (sorted) input; ties prefer the lower label, so the
// output is deterministic.
inline Graph realize(const DegreeSequence& s) {
    Verdict g = is_graphic(s);
    if (!g.ok)
        throw std::invalid_argument("realize: sequence not graphic (" + g.reason + ")");

    const int n = static_cast<int>(s.size());
    Graph out(n);
    if (n == 0) return out;
    // (residual degree, label), kept sorted by residual desc, label asc
    std::vector<std::pair<int, int>> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) nodes.emplace_back(s[static_cast<std::size_t>(i)], i);

    auto order = [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    };
    while (true) {
        std::sort(nodes.begin(), nodes.end(), order);
        const int d = nodes[0].first;
        if (d == 0) break;
        if (d >= n || nodes[static_cast<std::size_t>(d)].first == 0)
            throw std::logic_error("realize: residual degrees infeasible");
        for (int k = 1; k <= d; ++k) {
            out.add_edge(nodes[0].second, nodes[static_cast<std::size_t>(k)].second);
            --nodes[static_cast<std::size_t>(k)].first;
        }
        nodes[0].first = 0;
    }
    return out;
}

struct ConnectResult {
    Graph graph;
    std::vector<SwapRecord> swaps;
};

// Repairs connectivity by repeated component merges; degrees are
// unchanged and exactly (initial components - 1) swaps are applied.
inline ConnectResult connect(Graph g) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("connect: empty graph");
    if (g.edge_count() < static_cast<std::size_t>(n) - 1)
        throw std::invalid_argument("connect: fewer than n-1 edges, "
                                    "connectivity impossible");
    for (int v = 0; v < n; ++v)
        if (n > 1 && g.degree(v) == 0)
            throw std::invalid_argument("connect: isolated vertex " +
                                        std::to_string(v) +
                                        ", connectivity impossible");
    ConnectResult result{std::move(g), {}};
    while (connected_components(result.graph).size() > 1) {
        SwapRecord rec;
        result.graph = merge_components(result.graph, &rec);
        result.swaps.push_back(rec);
    }
    return result;
}

// Witness for a connected-graphic sequence: Havel-Hakimi realization
// followed by connectivity repair.
inline ConnectResult realize_connected(const DegreeSequence& s) {
    Verdict v = is_connected_graphic(s);
    if (!v.ok)
        throw std::invalid_argument("realize_connected: " + v.reason);
    if (s.size() == 1) // (0)
        return {Graph(1), {}};
    return connect(realize(s));
}

struct RewireResult {
    Graph graph;
    std::size_t applied = 0;
    std::size_t skipped = 0;
};

// Random degree-preserving rewiring: up to `steps` uniformly proposed
// two-swaps, invalid proposals skipped. Same seed, same output.
inline RewireResult random_rewire(const Graph& g, std::size_t steps,
                                  std::uint64_t seed,
                                  bool preserve_connectivity = false) {
    RewireResult result{g, 0, 0};
    if (result.graph.edge_count() < 2) {
        result.skipped = steps;
        return result;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t step = 0; step < steps; ++step) {
        const auto edge_list = result.graph.edges();
        std::uniform_int_distribution<std::size_t> pick(0, edge_list.size() - 1);
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        const SwapVariant variant = (rng() & 1) ? SwapVariant::ad_bc
                                                : SwapVariant::ac_bd;
        if (i == j) {
            ++result.skipped;
            continue;
        }
        const Edge ab = edge_list[i], cd = edge_list[j];
        if (ab.first == cd.first || ab.first == cd.second ||
            ab.second == cd.first || ab.second == cd.second) {
            ++result.skipped;
            continue;
        }
        auto [e1, e2] = detail::swap_additions(ab, cd, variant);
        if (result.graph.has_edge(e1.first, e1.second) ||
            result.graph.has_edge(e2.first, e2.second)) {
            ++result.skipped;
            continue;
        }
        Graph candidate = two_swap(result.graph, ab, cd, variant);
        if (preserve_connectivity &&
            connected_components(candidate).size() >
                connected_components(result.graph).size()) {
            ++result.skipped;
            continue;
        }
        result.graph = std::move(candidate);
        ++result.applied;
    }
    return result;
}

// Replays a swap log on a starting graph; used to audit connect output.
inline Graph apply_swaps(Graph g, const std::vector<SwapRecord>& swaps) {
    for (const auto& rec : swaps)
        g = two_swap(g, rec.removed_ab, rec.removed_cd, rec.variant);
    return g;
}

} // namespace degseq
