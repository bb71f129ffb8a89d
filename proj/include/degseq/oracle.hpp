#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"

namespace degseq {

// Hard cap for exhaustive enumeration; the search space is every edge
// subset of K_n.
inline constexpr std::size_t kOracleMaxVertices = 8;

struct EnumerationResult {
    std::uint64_t total = 0;
    std::uint64_t connected = 0;
    std::vector<Graph> samples; // at most `limit` witnesses
};

namespace detail {

// Backtracking over vertices in label order: vertex u picks its
// neighbors among v > u, so each labeled graph is visited once.
// Residual degrees prune infeasible branches. Returns false from the
// callback to stop the search.
class RealizationEnumerator {
public:
    RealizationEnumerator(const DegreeSequence& s,
                          std::function<bool(const Graph&)> on_found)
        : n_(static_cast<int>(s.size())),
          residual_(s.terms()),
          graph_(static_cast<int>(s.size())),
          on_found_(std::move(on_found)) {}

    void run() {
        stopped_ = false;
        place(0, 1);
    }

private:
    // Satisfy vertex u's remaining degree with neighbors from `from` up.
    void place(int u, int from) {
        if (stopped_) return;
        if (u == n_) {
            if (!on_found_(graph_)) stopped_ = true;
            return;
        }
        const int need = residual_[static_cast<std::size_t>(u)];
        if (need == 0) {
            place(u + 1, u + 2);
            return;
        }
        if (need > n_ - from) return; // not enough candidates left
        // try edge (u, from)
        if (from < n_ && residual_[static_cast<std::size_t>(from)] > 0) {
            --residual_[static_cast<std::size_t>(u)];
            --residual_[static_cast<std::size_t>(from)];
            graph_.add_edge(u, from);
            place(u, from + 1);
            graph_.remove_edge(u, from);
            ++residual_[static_cast<std::size_t>(u)];
            ++residual_[static_cast<std::size_t>(from)];
        }
        if (stopped_) return;
        // skip vertex `from`
        place(u, from + 1);
    }

    int n_;
    std::vector<int> residual_;
    Graph graph_;
    std::function<bool(const Graph&)> on_found_;
    bool stopped_ = false;
};

inline void check_cap(const DegreeSequence& s) {
    if (s.size() > kOracleMaxVertices)
        throw std::invalid_argument(
            "oracle: n = " + std::to_string(s.size()) + " exceeds cap n <= " +
            std::to_string(kOracleMaxVertices));
}

} // namespace detail

// Exhaustive count of labeled simple graphs realizing s (vertex v_i has
// degree s_i), with the connected subcount. Up to `limit` witnesses are
// kept; counting always runs to completion. With connected_only set,
// only connected realizations are collected as samples.
inline EnumerationResult enumerate_realizations(const DegreeSequence& s,
                                                bool connected_only = false,
                                                std::size_t limit = 0) {
    detail::check_cap(s);
    EnumerationResult result;
    if (s.empty()) { // one empty graph realizes the empty sequence
        result.total = 1;
        result.connected = 0;
        return result;
    }
    detail::RealizationEnumerator search(s, [&](const Graph& g) {
        ++result.total;
        const bool conn = connected_components(g).size() == 1;
        if (conn) ++result.connected;
        if (result.samples.size() < limit && (conn || !connected_only))
            result.samples.push_back(g);
        return true;
    });
    search.run();
    return result;
}

// True iff some simple graph realizes s; stops at the first witness.
inline bool exists_graphic_bruteforce(const DegreeSequence& s) {
    detail::check_cap(s);
    if (s.empty()) return true;
    bool found = false;
    detail::RealizationEnumerator search(s, [&](const Graph&) {
        found = true;
        return false;
    });
    search.run();
    return found;
}

// True iff some connected simple graph realizes s; stops at the first
// connected witness.
inline bool exists_connected_bruteforce(const DegreeSequence& s) {
    detail::check_cap(s);
    if (s.empty()) return false;
    bool found = false;
    detail::RealizationEnumerator search(s, [&](const Graph& g) {
        if (connected_components(g).size() == 1) {
            found = true;
            return false;
        }
        return true;
    });
    search.run();
    return found;
}

} // namespace degseq
