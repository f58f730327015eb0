#pragma once

#include <gmpxx.h>

namespace fibroot {

// Exact signed integer of unbounded magnitude.
using BigInt = mpz_class;

inline BigInt bigint_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigInt bigint_pow_z(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace fibroot
