#pragma once

#include <stdexcept>

#include "fibroot/ball.hpp"
#include "fibroot/bigint.hpp"

namespace fibroot {

// Order k of the polynomial family under study: f_k is the monic degree-k
// polynomial X^k - X^{k-1} - ... - X - 1 (characteristic polynomial of the
// k-step Fibonacci recurrence). Evaluation goes through the trinomial
// g_k(X) = (X - 1) f_k(X) = X^{k+1} - 2 X^k + 1, which shares f_k's roots
// plus the extra simple root 1, and its reversal
// h_k(X) = X^{k+1} g_k(1/X) = X^{k+1} - 2X + 1.
struct FamilyIndex {
    int k;
    explicit FamilyIndex(int k_) : k(k_) {
        if (k < 2) throw std::invalid_argument("family index must be >= 2");
    }
};

struct PrecisionConfig {
    long working_bits = 128;
    double target_radius = 1e-40;
    int max_escalations = 6;

    void validate() const {
        if (working_bits < 53)
            throw std::invalid_argument("working_bits must be >= 53");
        if (!(target_radius > 0))
            throw std::invalid_argument("target_radius must be positive");
        if (max_escalations < 1)
            throw std::invalid_argument("max_escalations must be >= 1");
    }
};

// g_k(z) = z^k (z - 2) + 1, evaluated with binary powering (O(log k) ball
// multiplications). Result contains g_k(w) for every w in z.
Ball eval_g(FamilyIndex k, const Ball& z, const PrecisionConfig& prec);

// g_k'(z) = z^{k-1} ((k+1) z - 2k).
Ball eval_g_prime(FamilyIndex k, const Ball& z, const PrecisionConfig& prec);

// h_k'(y) = (k+1) y^k - 2.
Ball eval_h_prime(FamilyIndex k, const Ball& y, const PrecisionConfig& prec);

// |disc(g_k)| = |disc(h_k)| = 2^{k+1} k^k - (k+1)^{k+1}, exact.
BigInt discriminant_closed_form(FamilyIndex k);

inline constexpr int kResultantOracleCap = 24;

// Independent check of the closed form: |Res(g_k, g_k')| via an exact
// integer Sylvester determinant (fraction-free Bareiss elimination).
// Refuses k above the cap: the determinant is an oracle, not a production
// path, and its cost grows quickly.
BigInt discriminant_resultant_oracle(FamilyIndex k,
                                     int cap = kResultantOracleCap);

// |disc(f_k)| = |disc(g_k)| / (k-1)^2; throws if the division is not exact
// (that would falsify the identity the divisor comes from).
BigInt disc_f_from_disc_g(FamilyIndex k);

}  // namespace fibroot
