#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace degseq {

// Non-increasing sequence of non-negative integers. All decision
// procedures in checks.hpp take their input in this form.
class DegreeSequence {
public:
    DegreeSequence() = default;

    // Sorts raw input non-increasingly. Rejects negative entries.
    static DegreeSequence normalize(std::vector<int> raw) {
        for (int v : raw) {
            if (v < 0)
                throw std::invalid_argument("negative term: " + std::to_string(v));
        }
        std::sort(raw.begin(), raw.end(), std::greater<int>());
        return DegreeSequence(std::move(raw), /*checked=*/true);
    }

    // Accepts input already sorted non-increasingly.
    static DegreeSequence from_sorted(std::vector<int> terms) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i] < 0)
                throw std::invalid_argument("negative term: " + std::to_string(terms[i]));
            if (i + 1 < terms.size() && terms[i] < terms[i + 1])
                throw std::invalid_argument("terms not non-increasing at index " +
                                            std::to_string(i));
        }
        return DegreeSequence(std::move(terms), /*checked=*/true);
    }

    const std::vector<int>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    int operator[](std::size_t i) const { return terms_[i]; }

    long long sum() const { return sum_; }

    // "(2,2,1)" / "()"
    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) os << ',';
            os << terms_[i];
        }
        os << ')';
        return os.str();
    }

    bool operator==(const DegreeSequence& o) const { return terms_ == o.terms_; }
    bool operator!=(const DegreeSequence& o) const { return !(*this == o); }

private:
    DegreeSequence(std::vector<int> terms, bool) : terms_(std::move(terms)) {
        long long s = 0;
        for (int v : terms_) {
            if (s > std::numeric_limits<long long>::max() - v)
                throw std::overflow_error("degree sum overflows 64-bit");
            s += v;
        }
        sum_ = s;
    }

    std::vector<int> terms_;
    long long sum_ = 0;
};

} // namespace degseq
