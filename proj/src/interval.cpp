#include "fibroot/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibroot {

namespace {

mpfr_prec_t result_prec(const Interval& a, const Interval& b) {
    return std::max(a.prec(), b.prec());
}

}  // namespace

Interval Interval::exact_si(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.raw(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.raw(), v, MPFR_RNDU);
    return r;
}

Interval Interval::point(const Real& x) {
    Interval r(x.prec());
    r.lo_ = x;
    r.hi_ = x;
    return r;
}

Interval Interval::of_z(const mpz_class& z, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_.raw(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.raw(), z.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::of_q(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::make(Real lo, Real hi) {
    if (mpfr_cmp(lo.raw(), hi.raw()) > 0)
        throw std::invalid_argument("interval endpoints out of order");
    Interval r(std::max(lo.prec(), hi.prec()));
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_.raw(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::euler_e(mpfr_prec_t prec) {
    Interval r(prec);
    Real one = Real::of_si(1, prec);
    mpfr_exp(r.lo_.raw(), one.raw(), MPFR_RNDD);
    mpfr_exp(r.hi_.raw(), one.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::log_of_3(mpfr_prec_t prec) {
    Interval r(prec);
    Real three = Real::of_si(3, prec);
    mpfr_log(r.lo_.raw(), three.raw(), MPFR_RNDD);
    mpfr_log(r.hi_.raw(), three.raw(), MPFR_RNDU);
    return r;
}

Interval iv_add(const Interval& a, const Interval& b) {
    Interval r(result_prec(a, b));
    Real lo(r.prec()), hi(r.prec());
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_sub(const Interval& a, const Interval& b) {
    Interval r(result_prec(a, b));
    Real lo(r.prec()), hi(r.prec());
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_mul(const Interval& a, const Interval& b) {
    mpfr_prec_t p = result_prec(a, b);
    const mpfr_srcptr ea[2] = {a.lo().raw(), a.hi().raw()};
    const mpfr_srcptr eb[2] = {b.lo().raw(), b.hi().raw()};
    Real lo(p), hi(p), t(p);
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t.raw(), ea[i], eb[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) lo = t;
            mpfr_mul(t.raw(), ea[i], eb[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) hi = t;
            first = false;
        }
    }
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_div(const Interval& a, const Interval& b) {
    if (b.lo().sign() <= 0 && b.hi().sign() >= 0)
        throw std::invalid_argument(
            "interval division by an interval containing zero");
    mpfr_prec_t p = result_prec(a, b);
    const mpfr_srcptr ea[2] = {a.lo().raw(), a.hi().raw()};
    const mpfr_srcptr eb[2] = {b.lo().raw(), b.hi().raw()};
    Real lo(p), hi(p), t(p);
    bool first = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t.raw(), ea[i], eb[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) lo = t;
            mpfr_div(t.raw(), ea[i], eb[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) hi = t;
            first = false;
        }
    }
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_neg(const Interval& a) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_neg(lo.raw(), a.hi().raw(), MPFR_RNDD);  // exact
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDU);  // exact
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_abs(const Interval& a) {
    if (a.lo().sign() >= 0) return a;
    if (a.hi().sign() <= 0) return iv_neg(a);
    // Straddles zero: [0, max(|lo|, hi)].
    Real lo(a.prec()), hi(a.prec());
    mpfr_set_zero(lo.raw(), 1);
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDU);
    if (mpfr_cmp(a.hi().raw(), hi.raw()) > 0) hi = a.hi();
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_sqrt(const Interval& a) {
    if (a.lo().sign() < 0)
        throw std::invalid_argument("interval sqrt of a negative interval");
    Real lo(a.prec()), hi(a.prec());
    mpfr_sqrt(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_exp(const Interval& a) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_exp(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_log(const Interval& a) {
    if (a.lo().sign() <= 0)
        throw std::invalid_argument("interval log requires a positive interval");
    Real lo(a.prec()), hi(a.prec());
    mpfr_log(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_pow_ui(const Interval& a, unsigned long n) {
    if (a.lo().sign() < 0)
        throw std::invalid_argument("iv_pow_ui requires a nonnegative base");
    Real lo(a.prec()), hi(a.prec());
    mpfr_pow_ui(lo.raw(), a.lo().raw(), n, MPFR_RNDD);
    mpfr_pow_ui(hi.raw(), a.hi().raw(), n, MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_pow(const Interval& x, const Interval& y) {
    return iv_exp(iv_mul(y, iv_log(x)));
}

Interval iv_recip(const Interval& a) {
    if (a.lo().sign() <= 0 && a.hi().sign() >= 0)
        throw std::invalid_argument(
            "interval reciprocal of an interval containing zero");
    Real lo(a.prec()), hi(a.prec());
    mpfr_si_div(lo.raw(), 1, a.hi().raw(), MPFR_RNDD);
    mpfr_si_div(hi.raw(), 1, a.lo().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_add_si(const Interval& a, long c) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_add_si(lo.raw(), a.lo().raw(), c, MPFR_RNDD);
    mpfr_add_si(hi.raw(), a.hi().raw(), c, MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_sub_from_si(long c, const Interval& a) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_si_sub(lo.raw(), c, a.hi().raw(), MPFR_RNDD);
    mpfr_si_sub(hi.raw(), c, a.lo().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_mul_si(const Interval& a, long c) {
    Real lo(a.prec()), hi(a.prec());
    if (c >= 0) {
        mpfr_mul_si(lo.raw(), a.lo().raw(), c, MPFR_RNDD);
        mpfr_mul_si(hi.raw(), a.hi().raw(), c, MPFR_RNDU);
    } else {
        mpfr_mul_si(lo.raw(), a.hi().raw(), c, MPFR_RNDD);
        mpfr_mul_si(hi.raw(), a.lo().raw(), c, MPFR_RNDU);
    }
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_div_si(const Interval& a, long c) {
    if (c == 0) throw std::invalid_argument("interval division by zero");
    Real lo(a.prec()), hi(a.prec());
    if (c > 0) {
        mpfr_div_si(lo.raw(), a.lo().raw(), c, MPFR_RNDD);
        mpfr_div_si(hi.raw(), a.hi().raw(), c, MPFR_RNDU);
    } else {
        mpfr_div_si(lo.raw(), a.hi().raw(), c, MPFR_RNDD);
        mpfr_div_si(hi.raw(), a.lo().raw(), c, MPFR_RNDU);
    }
    return Interval::make(std::move(lo), std::move(hi));
}

Interval iv_mul_2si(const Interval& a, long e) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_mul_2si(lo.raw(), a.lo().raw(), e, MPFR_RNDD);  // exact
    mpfr_mul_2si(hi.raw(), a.hi().raw(), e, MPFR_RNDU);  // exact
    return Interval::make(std::move(lo), std::move(hi));
}

bool certainly_gt(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.lo().raw(), b.hi().raw()) > 0;
}

bool certainly_lt(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi().raw(), b.lo().raw()) < 0;
}

bool certainly_inside_open(const Interval& x, const Interval& a,
                           const Interval& b) {
    return certainly_gt(x, a) && certainly_lt(x, b);
}

bool overlaps(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi().raw(), b.lo().raw()) >= 0 &&
           mpfr_cmp(b.hi().raw(), a.lo().raw()) >= 0;
}

}  // namespace fibroot
