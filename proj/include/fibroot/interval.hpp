#pragma once

#include <gmpxx.h>

#include "fibroot/real.hpp"

namespace fibroot {

// Closed real interval [lo, hi] with directed-rounding endpoint arithmetic:
// every operation rounds the lower endpoint down and the upper endpoint up,
// so the result interval always contains the exact image of the inputs.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

    // Exact point intervals (no rounding).
    static Interval exact_si(long v, mpfr_prec_t prec);
    static Interval point(const Real& x);
    // Directed enclosures of exact integers / rationals.
    static Interval of_z(const mpz_class& z, mpfr_prec_t prec);
    static Interval of_q(const mpq_class& q, mpfr_prec_t prec);
    // Takes ownership of endpoints; requires lo <= hi.
    static Interval make(Real lo, Real hi);

    // Certified constant enclosures.
    static Interval pi(mpfr_prec_t prec);
    static Interval euler_e(mpfr_prec_t prec);
    static Interval log_of_3(mpfr_prec_t prec);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    bool is_point() const { return lo_.equals(hi_); }
    bool contains_si(long v) const {
        return lo_.cmp_si(v) <= 0 && hi_.cmp_si(v) >= 0;
    }
    bool contains_zero() const { return contains_si(0); }
    bool is_finite() const { return lo_.is_number() && hi_.is_number(); }

private:
    Real lo_, hi_;
};

// Binary operations produce results at max(prec(a), prec(b)); unary at the
// operand's precision unless stated otherwise.
Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
// Requires b to certainly exclude zero.
Interval iv_div(const Interval& a, const Interval& b);
Interval iv_neg(const Interval& a);
Interval iv_abs(const Interval& a);
// Requires a.lo >= 0.
Interval iv_sqrt(const Interval& a);
Interval iv_exp(const Interval& a);
// Requires a.lo > 0.
Interval iv_log(const Interval& a);
// Requires a.lo >= 0 (monotone nonnegative-base power).
Interval iv_pow_ui(const Interval& a, unsigned long n);
// x^y via exp(y*log(x)); requires x.lo > 0.
Interval iv_pow(const Interval& x, const Interval& y);
Interval iv_recip(const Interval& a);
Interval iv_add_si(const Interval& a, long c);
Interval iv_sub_from_si(long c, const Interval& a);
Interval iv_mul_si(const Interval& a, long c);
Interval iv_div_si(const Interval& a, long c);
Interval iv_mul_2si(const Interval& a, long e);

// a.lo > b.hi: every point of a exceeds every point of b.
bool certainly_gt(const Interval& a, const Interval& b);
// a.hi < b.lo.
bool certainly_lt(const Interval& a, const Interval& b);
// x certifiably inside the open interval (a, b) where a and b are endpoint
// enclosures: x.lo > a.hi and x.hi < b.lo.
bool certainly_inside_open(const Interval& x, const Interval& a,
                           const Interval& b);
bool overlaps(const Interval& a, const Interval& b);

}  // namespace fibroot
