#pragma once

#include <stdexcept>

#include "fibroot/interval.hpp"
#include "fibroot/real.hpp"

namespace fibroot {

// Thrown when enclosure arithmetic degenerates (non-finite midpoint or
// radius): the computation must be retried at higher working precision.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Midpoint-radius enclosure of one complex number. Midpoint components are
// nearest-rounded at the working precision; the radius is a 64-bit value
// maintained with upward rounding and accounts for both the enclosure
// (input radii) and every midpoint rounding committed by an operation, so
// the exact image of any point of the input balls stays inside the result.
class Ball {
public:
    static constexpr mpfr_prec_t kRadiusPrec = 64;

    explicit Ball(mpfr_prec_t prec)
        : re_(prec), im_(prec), rad_(kRadiusPrec) {
        mpfr_set_zero(re_.raw(), 1);
        mpfr_set_zero(im_.raw(), 1);
        mpfr_set_zero(rad_.raw(), 1);
    }

    static Ball point_si(long re, mpfr_prec_t prec);
    static Ball point_d(double re, double im, mpfr_prec_t prec);
    static Ball point(Real re, Real im);
    // Real ball covering a real interval: midpoint at the interval center.
    static Ball from_interval(const Interval& re, mpfr_prec_t prec);
    static Ball with_radius(Ball mid, const Real& rad);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    const Real& rad() const { return rad_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    Ball conjugate() const;  // exact
    bool mid_is_real() const { return im_.is_zero(); }

    // Certified enclosure of |z| over the ball, at the midpoint precision.
    Interval abs_interval() const;
    // Certified argument enclosure atan2-based: requires the ball to
    // certainly exclude zero. Range: within (-pi - d, pi + d] unwrapped.
    Interval arg_interval() const;

    bool certainly_excludes_zero() const;
    // True when every point of the ball differs from the integer c.
    bool certainly_excludes_si(long c) const;
    // True when the integer c is certified to lie inside the ball.
    bool contains_si(long c) const;

    // Throws PrecisionExhausted on non-finite midpoint/radius.
    void validate() const;

private:
    Real re_, im_;
    Real rad_;

    friend Ball bl_add(const Ball&, const Ball&);
    friend Ball bl_sub(const Ball&, const Ball&);
    friend Ball bl_mul(const Ball&, const Ball&);
    friend Ball bl_mul_si(const Ball&, long);
    friend Ball bl_add_si(const Ball&, long);
    friend Ball bl_neg(const Ball&);
    friend Ball bl_inv(const Ball&);
};

Ball bl_add(const Ball& a, const Ball& b);
Ball bl_sub(const Ball& a, const Ball& b);
Ball bl_mul(const Ball& a, const Ball& b);
Ball bl_mul_si(const Ball& a, long c);
Ball bl_add_si(const Ball& a, long c);
Ball bl_neg(const Ball& a);
// Requires a to certainly exclude zero (throws std::domain_error otherwise).
Ball bl_inv(const Ball& a);
Ball bl_div(const Ball& a, const Ball& b);
// Binary powering; n >= 0.
Ball bl_pow_ui(const Ball& a, unsigned long n);

// Same ball re-expressed at midpoint precision >= prec (exact widening).
Ball bl_promote(const Ball& a, mpfr_prec_t prec);

// Certified enclosure of |a - b| over both balls.
Interval bl_dist(const Ball& a, const Ball& b);
// Certified enclosure of |a - c| for an exact integer point c.
Interval bl_dist_si(const Ball& a, long c);
// Certified: the two balls share no point.
bool certainly_disjoint(const Ball& a, const Ball& b);

}  // namespace fibroot
