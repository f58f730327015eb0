#include "fibroot/ball.hpp"

#include <algorithm>

namespace fibroot {

namespace {

constexpr mpfr_prec_t RP = Ball::kRadiusPrec;

// Upper/lower bound of |(re, im)| at radius precision.
void hypot_up(mpfr_ptr out, mpfr_srcptr re, mpfr_srcptr im) {
    mpfr_hypot(out, re, im, MPFR_RNDU);
}
void hypot_down(mpfr_ptr out, mpfr_srcptr re, mpfr_srcptr im) {
    mpfr_hypot(out, re, im, MPFR_RNDD);
}

// rad += |(re, im)|^ * 2^{shift - p}: accounts for nearest-rounded midpoint
// components, whose per-component error is at most 2^{-p} of the rounded
// value (half an ulp of a p-bit significand).
void add_rounding_term(Real& rad, mpfr_srcptr re, mpfr_srcptr im, long shift,
                       mpfr_prec_t p) {
    Real t(RP);
    mpfr_hypot(t.raw(), re, im, MPFR_RNDU);
    mpfr_mul_2si(t.raw(), t.raw(), shift - static_cast<long>(p), MPFR_RNDU);
    mpfr_add(rad.raw(), rad.raw(), t.raw(), MPFR_RNDU);
}

// Distance between midpoints, rounded down / up.
void mid_dist(mpfr_ptr out, const Ball& a, const Ball& b, bool up) {
    Real dx(RP), dy(RP);
    // Toward-zero keeps |fl(x)| <= |x| for the lower bound; away-from-zero
    // keeps |fl(x)| >= |x| for the upper bound.
    mpfr_rnd_t comp = up ? MPFR_RNDA : MPFR_RNDZ;
    mpfr_sub(dx.raw(), a.re().raw(), b.re().raw(), comp);
    mpfr_sub(dy.raw(), a.im().raw(), b.im().raw(), comp);
    mpfr_hypot(out, dx.raw(), dy.raw(), up ? MPFR_RNDU : MPFR_RNDD);
}

void mid_dist_si(mpfr_ptr out, const Ball& a, long c, bool up) {
    Real dx(RP), dy(RP);
    mpfr_rnd_t comp = up ? MPFR_RNDA : MPFR_RNDZ;
    mpfr_sub_si(dx.raw(), a.re().raw(), c, comp);
    mpfr_set(dy.raw(), a.im().raw(), comp);
    mpfr_hypot(out, dx.raw(), dy.raw(), up ? MPFR_RNDU : MPFR_RNDD);
}

}  // namespace

Ball Ball::point_si(long re, mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_set_si(b.re_.raw(), re, MPFR_RNDN);
    return b;
}

Ball Ball::point_d(double re, double im, mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_set_d(b.re_.raw(), re, MPFR_RNDN);  // exact for prec >= 53
    mpfr_set_d(b.im_.raw(), im, MPFR_RNDN);
    return b;
}

Ball Ball::point(Real re, Real im) {
    Ball b(std::max(re.prec(), im.prec()));
    mpfr_set(b.re_.raw(), re.raw(), MPFR_RNDN);  // exact: prec >= source
    mpfr_set(b.im_.raw(), im.raw(), MPFR_RNDN);
    return b;
}

Ball Ball::from_interval(const Interval& re, mpfr_prec_t prec) {
    Ball b(std::max(prec, re.prec()));
    Real half(b.prec());
    mpfr_add(half.raw(), re.lo().raw(), re.hi().raw(), MPFR_RNDN);
    mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);  // exact
    mpfr_set(b.re_.raw(), half.raw(), MPFR_RNDN);
    Real d1(RP), d2(RP);
    mpfr_sub(d1.raw(), half.raw(), re.lo().raw(), MPFR_RNDA);
    mpfr_abs(d1.raw(), d1.raw(), MPFR_RNDU);
    mpfr_sub(d2.raw(), re.hi().raw(), half.raw(), MPFR_RNDA);
    mpfr_abs(d2.raw(), d2.raw(), MPFR_RNDU);
    if (mpfr_cmp(d1.raw(), d2.raw()) < 0) d1 = d2;
    mpfr_set(b.rad_.raw(), d1.raw(), MPFR_RNDU);
    return b;
}

Ball Ball::with_radius(Ball mid, const Real& rad) {
    mpfr_set(mid.rad_.raw(), rad.raw(), MPFR_RNDU);
    return mid;
}

Ball Ball::conjugate() const {
    Ball b(*this);
    mpfr_neg(b.im_.raw(), b.im_.raw(), MPFR_RNDN);  // exact
    return b;
}

Interval Ball::abs_interval() const {
    mpfr_prec_t p = prec();
    Real lo(p), hi(p);
    mpfr_hypot(lo.raw(), re_.raw(), im_.raw(), MPFR_RNDD);
    mpfr_sub(lo.raw(), lo.raw(), rad_.raw(), MPFR_RNDD);
    if (lo.sign() < 0) mpfr_set_zero(lo.raw(), 1);
    mpfr_hypot(hi.raw(), re_.raw(), im_.raw(), MPFR_RNDU);
    mpfr_add(hi.raw(), hi.raw(), rad_.raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval Ball::arg_interval() const {
    if (!certainly_excludes_zero())
        throw std::invalid_argument(
            "argument enclosure requires a ball excluding zero");
    mpfr_prec_t p = prec();
    Real tlo(p), thi(p);
    mpfr_atan2(tlo.raw(), im_.raw(), re_.raw(), MPFR_RNDD);
    mpfr_atan2(thi.raw(), im_.raw(), re_.raw(), MPFR_RNDU);
    // Every point of the ball lies in the cone around the midpoint direction
    // with half-angle asin(radius / |mid|).
    Real mlo(RP), q(RP), delta(RP);
    hypot_down(mlo.raw(), re_.raw(), im_.raw());
    mpfr_div(q.raw(), rad_.raw(), mlo.raw(), MPFR_RNDU);
    if (mpfr_cmp_ui(q.raw(), 1) > 0)
        throw std::invalid_argument("argument enclosure wider than a half-turn");
    mpfr_asin(delta.raw(), q.raw(), MPFR_RNDU);
    Real lo(p), hi(p);
    mpfr_sub(lo.raw(), tlo.raw(), delta.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), thi.raw(), delta.raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

bool Ball::certainly_excludes_zero() const {
    Real m(RP);
    hypot_down(m.raw(), re_.raw(), im_.raw());
    return mpfr_cmp(m.raw(), rad_.raw()) > 0;
}

bool Ball::certainly_excludes_si(long c) const {
    Real d(RP);
    mid_dist_si(d.raw(), *this, c, /*up=*/false);
    return mpfr_cmp(d.raw(), rad_.raw()) > 0;
}

bool Ball::contains_si(long c) const {
    Real d(RP);
    mid_dist_si(d.raw(), *this, c, /*up=*/true);
    return mpfr_cmp(d.raw(), rad_.raw()) <= 0;
}

void Ball::validate() const {
    if (!re_.is_number() || !im_.is_number() || !rad_.is_number() ||
        rad_.sign() < 0)
        throw PrecisionExhausted("ball enclosure degenerated to non-finite");
}

Ball bl_add(const Ball& a, const Ball& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Ball r(p);
    mpfr_add(r.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_add(r.im_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_add(r.rad_.raw(), a.rad().raw(), b.rad().raw(), MPFR_RNDU);
    add_rounding_term(r.rad_, r.re_.raw(), r.im_.raw(), 0, p);
    return r;
}

Ball bl_sub(const Ball& a, const Ball& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Ball r(p);
    mpfr_sub(r.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_sub(r.im_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_add(r.rad_.raw(), a.rad().raw(), b.rad().raw(), MPFR_RNDU);
    add_rounding_term(r.rad_, r.re_.raw(), r.im_.raw(), 0, p);
    return r;
}

Ball bl_mul(const Ball& a, const Ball& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Ball r(p);
    Real u(p), v(p);
    mpfr_mul(u.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_mul(v.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_sub(r.re_.raw(), u.raw(), v.raw(), MPFR_RNDN);
    mpfr_mul(u.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_mul(v.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_add(r.im_.raw(), u.raw(), v.raw(), MPFR_RNDN);

    // |A| ra_b + |B| ra_a + ra_a ra_b covers the enclosure product; the
    // 2^{3-p} |A||B| term dominates the three nearest-rounded midpoint
    // operations per component (constant < 3 * 2^{-p}, Cauchy-Schwarz).
    Real A(RP), B(RP), t1(RP), t2(RP);
    hypot_up(A.raw(), a.re_.raw(), a.im_.raw());
    hypot_up(B.raw(), b.re_.raw(), b.im_.raw());
    mpfr_mul(t1.raw(), A.raw(), b.rad_.raw(), MPFR_RNDU);
    mpfr_mul(t2.raw(), B.raw(), a.rad().raw(), MPFR_RNDU);
    mpfr_add(t1.raw(), t1.raw(), t2.raw(), MPFR_RNDU);
    mpfr_mul(t2.raw(), a.rad().raw(), b.rad().raw(), MPFR_RNDU);
    mpfr_add(t1.raw(), t1.raw(), t2.raw(), MPFR_RNDU);
    mpfr_mul(t2.raw(), A.raw(), B.raw(), MPFR_RNDU);
    mpfr_mul_2si(t2.raw(), t2.raw(), 3 - static_cast<long>(p), MPFR_RNDU);
    mpfr_add(r.rad_.raw(), t1.raw(), t2.raw(), MPFR_RNDU);
    return r;
}

Ball bl_mul_si(const Ball& a, long c) {
    mpfr_prec_t p = a.prec();
    Ball r(p);
    mpfr_mul_si(r.re_.raw(), a.re_.raw(), c, MPFR_RNDN);
    mpfr_mul_si(r.im_.raw(), a.im_.raw(), c, MPFR_RNDN);
    Real t(RP);
    mpfr_mul_si(t.raw(), a.rad().raw(), c >= 0 ? c : -c, MPFR_RNDU);
    mpfr_set(r.rad_.raw(), t.raw(), MPFR_RNDU);
    add_rounding_term(r.rad_, r.re_.raw(), r.im_.raw(), 0, p);
    return r;
}

Ball bl_add_si(const Ball& a, long c) {
    mpfr_prec_t p = a.prec();
    Ball r(a);
    mpfr_add_si(r.re_.raw(), a.re_.raw(), c, MPFR_RNDN);
    Real t(RP);
    mpfr_abs(t.raw(), r.re_.raw(), MPFR_RNDU);
    mpfr_mul_2si(t.raw(), t.raw(), -static_cast<long>(p), MPFR_RNDU);
    mpfr_add(r.rad_.raw(), r.rad_.raw(), t.raw(), MPFR_RNDU);
    return r;
}

Ball bl_neg(const Ball& a) {
    Ball r(a);
    mpfr_neg(r.re_.raw(), r.re_.raw(), MPFR_RNDN);  // exact
    mpfr_neg(r.im_.raw(), r.im_.raw(), MPFR_RNDN);  // exact
    return r;
}

Ball bl_inv(const Ball& a) {
    if (!a.certainly_excludes_zero())
        throw std::domain_error("ball inverse of a ball containing zero");
    mpfr_prec_t p = a.prec();
    Ball r(p);
    Real n1(p), n2(p), d(p);
    mpfr_sqr(n1.raw(), a.re_.raw(), MPFR_RNDN);
    mpfr_sqr(n2.raw(), a.im_.raw(), MPFR_RNDN);
    mpfr_add(d.raw(), n1.raw(), n2.raw(), MPFR_RNDN);
    mpfr_div(r.re_.raw(), a.re_.raw(), d.raw(), MPFR_RNDN);
    mpfr_div(r.im_.raw(), a.im_.raw(), d.raw(), MPFR_RNDN);
    mpfr_neg(r.im_.raw(), r.im_.raw(), MPFR_RNDN);  // exact

    // Enclosure term r/(|m|(|m|-r)) plus 2^{3-p}/|m| for the five
    // nearest-rounded midpoint operations (constant < 6 * 2^{-p}).
    Real mlo(RP), t(RP), denom(RP), encl(RP);
    hypot_down(mlo.raw(), a.re_.raw(), a.im_.raw());
    mpfr_sub(t.raw(), mlo.raw(), a.rad().raw(), MPFR_RNDD);
    if (t.sign() <= 0)
        throw PrecisionExhausted("ball inverse margin lost to rounding");
    mpfr_mul(denom.raw(), mlo.raw(), t.raw(), MPFR_RNDD);
    mpfr_div(encl.raw(), a.rad().raw(), denom.raw(), MPFR_RNDU);
    mpfr_si_div(t.raw(), 1, mlo.raw(), MPFR_RNDU);
    mpfr_mul_2si(t.raw(), t.raw(), 3 - static_cast<long>(p), MPFR_RNDU);
    mpfr_add(r.rad_.raw(), encl.raw(), t.raw(), MPFR_RNDU);
    return r;
}

Ball bl_div(const Ball& a, const Ball& b) { return bl_mul(a, bl_inv(b)); }

Ball bl_pow_ui(const Ball& a, unsigned long n) {
    if (n == 0) return Ball::point_si(1, a.prec());
    if (n == 1) return a;
    int top = 63;
    while (((n >> top) & 1UL) == 0) --top;
    Ball r = a;
    for (int i = top - 1; i >= 0; --i) {
        r = bl_mul(r, r);
        if ((n >> i) & 1UL) r = bl_mul(r, a);
    }
    return r;
}

Ball bl_promote(const Ball& a, mpfr_prec_t prec) {
    if (prec <= a.prec()) return a;
    Real re(prec), im(prec);
    mpfr_set(re.raw(), a.re().raw(), MPFR_RNDN);  // exact: wider target
    mpfr_set(im.raw(), a.im().raw(), MPFR_RNDN);
    return Ball::with_radius(Ball::point(std::move(re), std::move(im)),
                             a.rad());
}

Interval bl_dist(const Ball& a, const Ball& b) {
    Real lo(RP), hi(RP), t(RP);
    mid_dist(lo.raw(), a, b, /*up=*/false);
    mpfr_add(t.raw(), a.rad().raw(), b.rad().raw(), MPFR_RNDU);
    mpfr_sub(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    if (lo.sign() < 0) mpfr_set_zero(lo.raw(), 1);
    mid_dist(hi.raw(), a, b, /*up=*/true);
    mpfr_add(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

Interval bl_dist_si(const Ball& a, long c) {
    Real lo(RP), hi(RP);
    mid_dist_si(lo.raw(), a, c, /*up=*/false);
    mpfr_sub(lo.raw(), lo.raw(), a.rad().raw(), MPFR_RNDD);
    if (lo.sign() < 0) mpfr_set_zero(lo.raw(), 1);
    mid_dist_si(hi.raw(), a, c, /*up=*/true);
    mpfr_add(hi.raw(), hi.raw(), a.rad().raw(), MPFR_RNDU);
    return Interval::make(std::move(lo), std::move(hi));
}

bool certainly_disjoint(const Ball& a, const Ball& b) {
    Real d(RP), t(RP);
    mid_dist(d.raw(), a, b, /*up=*/false);
    mpfr_add(t.raw(), a.rad().raw(), b.rad().raw(), MPFR_RNDU);
    return mpfr_cmp(d.raw(), t.raw()) > 0;
}

}  // namespace fibroot
