#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"

namespace degseq {

struct Verdict {
    bool ok = false;
    std::string reason; // names the first violated condition; empty when ok

    explicit operator bool() const { return ok; }
};

namespace detail {

inline Verdict pass() { return {true, ""}; }
inline Verdict fail(std::string reason) { return {false, std::move(reason)}; }

inline std::string fmt_sum_bound(long long sum, std::size_t n) {
    std::ostringstream os;
    os << "sum " << sum << " < 2(n-1) = " << 2 * (static_cast<long long>(n) - 1);
    return os.str();
}

inline std::string fmt_tail_sum(long long tail, int s1) {
    std::ostringstream os;
    os << "tail sum " << tail << " < s_1 = " << s1;
    return os.str();
}

inline std::string fmt_max_degree(int d, std::size_t n) {
    std::ostringstream os;
    os << "max degree " << d << " >= n = " << n;
    return os.str();
}

// One Havel-Hakimi step on a sorted non-increasing vector with no zeros:
// remove a[0], decrement the next a[0] terms. The result is two sorted
// runs which are merged back into non-increasing order in O(n).
// Caller guarantees 1 <= a[0] <= a.size()-1.
inline std::vector<int> hh_step(const std::vector<int>& a) {
    const std::size_t d = static_cast<std::size_t>(a[0]);
    std::vector<int> out;
    out.reserve(a.size() - 1);
    std::size_t i = 1, j = d + 1;
    while (i <= d && j < a.size()) {
        if (a[i] - 1 >= a[j]) out.push_back(a[i++] - 1);
        else out.push_back(a[j++]);
    }
    while (i <= d) out.push_back(a[i++] - 1);
    while (j < a.size()) out.push_back(a[j++]);
    return out;
}

} // namespace detail

// Realizability as a loopless multigraph: even degree sum and tail sum
// covering the largest term. Requires positive terms.
inline Verdict is_realizable(const DegreeSequence& s) {
    if (s.empty())
        throw std::invalid_argument("is_realizable: empty sequence");
    if (s[s.size() - 1] <= 0)
        throw std::invalid_argument("is_realizable: zero term (strip zeros first)");
    if (s.sum() % 2 != 0)
        return detail::fail("odd degree sum");
    const long long tail = s.sum() - s[0];
    if (tail < s[0])
        return detail::fail(detail::fmt_tail_sum(tail, s[0]));
    return detail::pass();
}

// Graphic check by iterated Havel-Hakimi reduction. Zeros are allowed
// (isolated vertices); the empty sequence is graphic.
inline Verdict is_graphic(const DegreeSequence& s) {
    if (s.sum() % 2 != 0)
        return detail::fail("odd degree sum");
    std::vector<int> a = s.terms();
    while (!a.empty()) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
        if (static_cast<std::size_t>(a[0]) >= a.size())
            return detail::fail(detail::fmt_max_degree(a[0], a.size()));
        if (a.back() < 0)
            return detail::fail("negative term in reduction");
        a = detail::hh_step(a);
        if (!a.empty() && a.back() < 0)
            return detail::fail("negative term in reduction");
    }
    return detail::pass();
}

// Erdos-Gallai criterion with prefix sums; same verdict as is_graphic
// on every input, O(n log n), usable for n up to 10^6 and beyond.
inline Verdict is_graphic_fastpath(const DegreeSequence& s) {
    const std::size_t n = s.size();
    if (n == 0) return detail::pass();
    if (s.sum() % 2 != 0)
        return detail::fail("odd degree sum");
    if (static_cast<std::size_t>(s[0]) >= n)
        return detail::fail(detail::fmt_max_degree(s[0], n));

    const std::vector<int>& a = s.terms();
    std::vector<long long> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + a[i];

    for (std::size_t k = 1; k <= n; ++k) {
        // first index >= k (0-based) whose term is < k
        const auto it = std::upper_bound(a.begin() + static_cast<long>(k), a.end(),
                                         static_cast<int>(k), std::greater<int>());
        const std::size_t split = static_cast<std::size_t>(it - a.begin());
        const long long rhs = static_cast<long long>(k) * (k - 1) +
                              static_cast<long long>(k) * (split - k) +
                              (prefix[n] - prefix[split]);
        if (prefix[k] > rhs) {
            std::ostringstream os;
            os << "erdos-gallai bound violated at k = " << k;
            return detail::fail(os.str());
        }
    }
    return detail::pass();
}

// Realizability as a connected loopless multigraph: realizable and
// enough edges for a spanning tree. Requires positive terms.
inline Verdict is_connected_realizable(const DegreeSequence& s) {
    Verdict r = is_realizable(s);
    if (!r.ok) return r;
    if (s.sum() < 2 * (static_cast<long long>(s.size()) - 1))
        return detail::fail(detail::fmt_sum_bound(s.sum(), s.size()));
    return detail::pass();
}

// Connected-graphic check, formula form: the one-step Havel-Hakimi
// reduction must be graphic and the degree sum must reach 2(n-1).
// The single-vertex sequence (0) is the only connected sequence with
// a zero term.
inline Verdict is_connected_graphic(const DegreeSequence& s) {
    const std::size_t n = s.size();
    if (n == 0) return detail::fail("empty sequence");
    if (n == 1 && s[0] == 0) return detail::pass();
    if (s[n - 1] == 0)
        return detail::fail("zero term with n > 1");
    if (static_cast<std::size_t>(s[0]) >= n)
        return detail::fail(detail::fmt_max_degree(s[0], n));
    if (s.sum() < 2 * (static_cast<long long>(n) - 1))
        return detail::fail(detail::fmt_sum_bound(s.sum(), n));
    Verdict g = is_graphic_fastpath(
        DegreeSequence::from_sorted(detail::hh_step(s.terms())));
    if (!g.ok)
        return detail::fail("reduced sequence not graphic: " + g.reason);
    return detail::pass();
}

namespace detail {

// Core of the smallest-term reduction: one step removes s_n and
// decrements the s_n largest terms. Returns the terminal verdict and,
// via on_step, every intermediate sequence.
inline Verdict reduce_connected(
    const DegreeSequence& s,
    const std::function<void(const std::vector<int>&)>& on_step,
    std::string* terminal_reason = nullptr) {
    auto done = [&](Verdict v) {
        if (terminal_reason)
            *terminal_reason = v.ok ? "reached (0)" : v.reason;
        return v;
    };
    if (s.empty()) return done(fail("empty sequence"));
    std::vector<int> a = s.terms();
    while (true) {
        const std::size_t n = a.size();
        if (n == 1 && a[0] == 0) return done(pass());
        if (a.back() == 0) return done(fail("zero term with n > 1"));
        if (a.back() > static_cast<int>(n) - 1) {
            std::ostringstream os;
            os << "smallest term " << a.back() << " > n - 1 = " << n - 1;
            return done(fail(os.str()));
        }
        const int k = a.back();
        a.pop_back();
        for (int i = 0; i < k; ++i) --a[static_cast<std::size_t>(i)];
        std::sort(a.begin(), a.end(), std::greater<int>());
        if (on_step) on_step(a);
    }
}

} // namespace detail

// Connected-graphic check, recursive reduction form: delete the smallest
// term s_n, decrement the s_n largest terms, re-sort, recurse. Returns
// the same verdict as is_connected_graphic on every input.
inline Verdict is_connected_graphic_reduction(const DegreeSequence& s) {
    return detail::reduce_connected(s, nullptr);
}

struct ReductionTrace {
    std::vector<DegreeSequence> steps; // input first, terminal last
    bool connected_graphic = false;
    std::string terminal_reason;
};

// Records every intermediate sequence of the smallest-term reduction.
inline ReductionTrace reduction_trace(const DegreeSequence& s) {
    if (s.empty())
        throw std::invalid_argument("reduction_trace: empty sequence");
    ReductionTrace trace;
    trace.steps.push_back(s);
    Verdict v = detail::reduce_connected(
        s,
        [&](const std::vector<int>& step) {
            trace.steps.push_back(DegreeSequence::from_sorted(step));
        },
        &trace.terminal_reason);
    trace.connected_graphic = v.ok;
    return trace;
}

struct CheckReport {
    Verdict realizable_multigraph;
    Verdict graphic;
    Verdict connected_realizable;
    Verdict connected_graphic;
    std::size_t n = 0;
    long long degree_sum = 0;
};

// Aggregates the four verdicts. The multigraph checks are stated for
// positive terms only; here zeros are treated as isolated vertices
// (realizable iff the positive part is, connected only for (0)).
inline CheckReport check_report(const DegreeSequence& s) {
    CheckReport r;
    r.n = s.size();
    r.degree_sum = s.sum();
    r.graphic = is_graphic(s);
    r.connected_graphic = is_connected_graphic(s);

    std::vector<int> positive(s.terms().begin(),
                              std::find(s.terms().begin(), s.terms().end(), 0));
    const bool has_zero = positive.size() < s.size();
    if (positive.empty()) {
        r.realizable_multigraph = detail::pass(); // edgeless multigraph
    } else {
        r.realizable_multigraph = is_realizable(DegreeSequence::from_sorted(positive));
    }

    if (s.empty()) {
        r.connected_realizable = detail::fail("empty sequence");
    } else if (s.size() == 1 && s[0] == 0) {
        r.connected_realizable = detail::pass();
    } else if (has_zero) {
        r.connected_realizable = detail::fail("zero term with n > 1");
    } else {
        r.connected_realizable = is_connected_realizable(s);
    }
    return r;
}

} // namespace degseq
