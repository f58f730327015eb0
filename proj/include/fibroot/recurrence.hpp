#pragma once

#include <vector>

#include "fibroot/bigint.hpp"
#include "fibroot/interval.hpp"
#include "fibroot/poly_core.hpp"

namespace fibroot {

// Streaming generator of the k-step sequence F_n: F_i = 0 for
// i = -(k-2)..0, F_1 = 1, and every later term is the sum of the k
// preceding terms. Maintains a sliding window plus its running sum, so
// each step costs one big-integer addition and one subtraction.
class KFibState {
public:
    explicit KFibState(FamilyIndex k);  // positioned at n = 1 (value 1)

    const BigInt& value() const { return window_[newest_]; }
    long index() const { return index_; }
    FamilyIndex family() const { return k_; }

    void advance();  // moves to n+1

private:
    FamilyIndex k_;
    std::vector<BigInt> window_;  // ring buffer of the last k values
    size_t newest_;               // ring position of F_index
    BigInt sum_;                  // invariant: sum of the window
    long index_;
};

// Exact F_n. Defined for n >= -(k-2); the initial segment is zero except
// F_1 = 1. Throws std::invalid_argument below the defined range.
BigInt kfib(FamilyIndex k, long n);

// Certified enclosure of |F_{n+1}/F_n - alpha| where alpha is the dominant
// root: the consecutive-term ratio converges to it, and the comparison is
// done in exact rational arithmetic against the certified ball. Requires
// n >= 1 (so F_n > 0).
Interval growth_check(FamilyIndex k, long n, const PrecisionConfig& prec);

}  // namespace fibroot
