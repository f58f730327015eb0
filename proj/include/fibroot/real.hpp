#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace fibroot {

// RAII owner of one mpfr number. Arithmetic with explicit rounding modes
// lives in the interval and ball layers, which operate on raw(); this class
// only manages storage, copies, and conversions.
class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    Real() : Real(64) {}

    Real(const Real& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);  // exact: same precision
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);  // exact: same precision
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real of_si(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of_d(double x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }

    bool is_number() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_si(long x) const { return mpfr_cmp_si(v_, x); }
    int cmp_d(double x) const { return mpfr_cmp_d(v_, x); }
    // Numeric equality (0 == -0; false if either is NaN).
    bool equals(const Real& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific-notation string with `digits` significant decimal digits.
    std::string str(int digits) const {
        if (digits < 2) digits = 2;
        int n = mpfr_snprintf(nullptr, 0, "%.*RNe", digits - 1, v_);
        std::string out(static_cast<size_t>(n), '\0');
        mpfr_snprintf(out.data(), static_cast<size_t>(n) + 1, "%.*RNe",
                      digits - 1, v_);
        return out;
    }

private:
    mpfr_t v_;
};

}  // namespace fibroot
