#include "fibroot/rootfinder.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <optional>
#include <utility>

namespace fibroot {

namespace {

constexpr mpfr_prec_t RP = Ball::kRadiusPrec;
constexpr int kMaxNewtonIterations = 200;

struct Attempt {
    Ball ball;
    bool converged;
    int iterations;
};

long max_component_exp(const Ball& b) {
    long e = LONG_MIN;
    if (!mpfr_zero_p(b.re().raw()))
        e = std::max(e, static_cast<long>(mpfr_get_exp(b.re().raw())));
    if (!mpfr_zero_p(b.im().raw()))
        e = std::max(e, static_cast<long>(mpfr_get_exp(b.im().raw())));
    return e;
}

Ball unresolved_ball(const Ball& mid) {
    Real inf(RP);
    mpfr_set_inf(inf.raw(), 1);
    return Ball::with_radius(mid, inf);
}

// Newton iteration on the midpoint (point-ball evaluations), then the
// nearest-root certification radius (k+1) * |g(z)| / |g'(z)|: the distance
// from z to the closest root of the degree-(k+1) trinomial is at most that.
Attempt refine_ball(FamilyIndex k, const Ball& seed, long bits,
                    double target) {
    PrecisionConfig ev{bits, target, 1};
    Ball wide = bl_promote(seed, static_cast<mpfr_prec_t>(bits));
    // Drop any seed radius: Newton iterates midpoints only.
    Ball z = Ball::point(wide.re(), wide.im());
    int iter = 0;
    long prev_sexp = 0;
    bool have_prev = false;
    int stagnant = 0;
    for (; iter < kMaxNewtonIterations; ++iter) {
        Ball g = eval_g(k, z, ev);
        Ball gp = eval_g_prime(k, z, ev);
        if (!gp.certainly_excludes_zero())
            return {unresolved_ball(z), false, iter};
        Ball step = bl_div(g, gp);
        long zexp = max_component_exp(z);
        if (zexp == LONG_MIN) zexp = 0;
        bool step_zero = mpfr_zero_p(step.re().raw()) != 0 &&
                         mpfr_zero_p(step.im().raw()) != 0;
        Real nre(static_cast<mpfr_prec_t>(bits)),
            nim(static_cast<mpfr_prec_t>(bits));
        mpfr_sub(nre.raw(), z.re().raw(), step.re().raw(), MPFR_RNDN);
        mpfr_sub(nim.raw(), z.im().raw(), step.im().raw(), MPFR_RNDN);
        z = Ball::point(std::move(nre), std::move(nim));
        if (step_zero) {
            ++iter;
            break;
        }
        long sexp = max_component_exp(step);
        if (sexp <= zexp - (bits - 2)) {
            ++iter;
            break;
        }
        if (have_prev && sexp >= prev_sexp && iter >= 8) {
            if (++stagnant >= 3) break;  // stagnated at working precision
        } else {
            stagnant = 0;
        }
        prev_sexp = sexp;
        have_prev = true;
    }
    Ball g = eval_g(k, z, ev);
    Ball gp = eval_g_prime(k, z, ev);
    Interval ga = g.abs_interval();
    Interval gpa = gp.abs_interval();
    if (gpa.lo().sign() <= 0) return {unresolved_ball(z), false, iter};
    Real rad(RP);
    mpfr_mul_si(rad.raw(), ga.hi().raw(), k.k + 1, MPFR_RNDU);
    mpfr_div(rad.raw(), rad.raw(), gpa.lo().raw(), MPFR_RNDU);
    Ball out = Ball::with_radius(z, rad);
    bool converged =
        mpfr_number_p(rad.raw()) != 0 && mpfr_cmp_d(rad.raw(), target) <= 0;
    return {out, converged, iter};
}

// Kind implied by the upper-half refinement index.
RootKind upper_kind(FamilyIndex k, int h) {
    if (h == 0) return RootKind::dominant;
    if (2 * h == k.k) return RootKind::negative_real;
    return RootKind::complex_upper;
}

// Honest fallback when a ball is too wide for an argument cone: any
// argument representative lies within (-pi, 2*pi) and [-4, 8] covers it.
Interval wide_arg(mpfr_prec_t p) {
    return Interval::make(Real::of_si(-4, p), Real::of_si(8, p));
}

// Structural sanity of one refined upper-half ball: excludes the deflated
// root 1, sits in the right half-plane/axis for its index, and (complex
// case) has a certified argument inside its own sector. A failure triggers
// the perturbed-seed retry and then precision escalation.
bool root_shape_ok(FamilyIndex k, int h, const Ball& b) {
    if (!b.certainly_excludes_si(1)) return false;
    switch (upper_kind(k, h)) {
        case RootKind::dominant:
            return b.mid_is_real() && b.re().sign() > 0;
        case RootKind::negative_real:
            return b.mid_is_real() && b.re().sign() < 0;
        default:
            break;
    }
    if (b.im().sign() <= 0) return false;
    try {
        Interval arg = b.arg_interval();
        SectorBounds sb = sector_bounds(k, h, b.prec());
        return certainly_inside_open(arg, sb.lo, sb.hi);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

RootBall make_upper_root(FamilyIndex k, int h, const Ball& b,
                         mpfr_prec_t p) {
    RootKind kind = upper_kind(k, h);
    Interval mod = b.abs_interval();
    if (kind == RootKind::dominant)
        return {b, 0, kind, std::move(mod), Interval::exact_si(0, p)};
    if (kind == RootKind::negative_real)
        return {b, h, kind, std::move(mod), Interval::pi(p)};
    Interval arg = wide_arg(p);
    if (b.im().sign() > 0) {
        try {
            arg = b.arg_interval();
        } catch (const std::invalid_argument&) {
            // keep the wide fallback; certification will reject it
        }
    }
    return {b, h, kind, std::move(mod), std::move(arg)};
}

RootBall make_lower_root(FamilyIndex k, const RootBall& upper,
                         mpfr_prec_t p) {
    Ball conj = upper.value.conjugate();
    Interval mod = conj.abs_interval();
    Interval two_pi = iv_mul_2si(Interval::pi(p), 1);
    Interval arg = iv_sub(two_pi, upper.argument);
    return {std::move(conj), k.k - upper.sector_h, RootKind::complex_lower,
            std::move(mod), std::move(arg)};
}

RootSet assemble(FamilyIndex k, const std::vector<Attempt>& attempts,
                 long bits, const PrecisionConfig& cfg) {
    const auto p = static_cast<mpfr_prec_t>(bits);
    std::vector<std::optional<RootBall>> slots(static_cast<size_t>(k.k));
    for (int h = 0; h < static_cast<int>(attempts.size()); ++h) {
        RootBall upper = make_upper_root(k, h, attempts[static_cast<size_t>(h)].ball, p);
        if (upper.kind == RootKind::complex_upper)
            slots[static_cast<size_t>(k.k - h)] = make_lower_root(k, upper, p);
        slots[static_cast<size_t>(h)] = std::move(upper);
    }
    RootSet rs{k, {}, cfg, false, ""};
    rs.precision_used.working_bits = bits;
    rs.roots.reserve(static_cast<size_t>(k.k));
    for (auto& s : slots) rs.roots.push_back(std::move(*s));
    return rs;
}

}  // namespace

const char* root_kind_name(RootKind kind) {
    switch (kind) {
        case RootKind::dominant:
            return "dominant";
        case RootKind::complex_upper:
            return "complex_upper";
        case RootKind::complex_lower:
            return "complex_lower";
        case RootKind::negative_real:
            return "negative_real";
    }
    return "unknown";
}

std::vector<std::complex<double>> initial_guesses(FamilyIndex k) {
    std::vector<std::complex<double>> g;
    g.reserve(static_cast<size_t>(k.k));
    g.emplace_back(2.0, 0.0);
    const double r = 1.0 - std::log(3.0) / (2.0 * k.k);
    for (int h = 1; h < k.k; ++h) {
        // The seed for a real root must carry an exactly-zero imaginary
        // part: complex rounding never flushes a stray sin(pi) residue to
        // zero, and Newton preserves exact realness from a real start.
        if (2 * h == k.k)
            g.emplace_back(-r, 0.0);
        else
            g.push_back(std::polar(r, 2.0 * M_PI * h / k.k));
    }
    return g;
}

RefineResult refine_newton(FamilyIndex k, std::complex<double> z0,
                           const PrecisionConfig& prec) {
    prec.validate();
    Ball seed = Ball::point_d(z0.real(), z0.imag(),
                              static_cast<mpfr_prec_t>(prec.working_bits));
    Attempt a = refine_ball(k, seed, prec.working_bits, prec.target_radius);
    return {std::move(a.ball), a.converged, a.iterations};
}

RootSet solve_all(FamilyIndex k, const PrecisionConfig& prec) {
    prec.validate();
    const auto seeds = initial_guesses(k);
    const int m = k.k / 2;
    long bits = prec.working_bits;
    std::vector<Ball> warm;
    for (int esc = 0;; ++esc) {
        std::vector<Attempt> attempts;
        attempts.reserve(static_cast<size_t>(m) + 1);
        bool all_ok = true;
        for (int h = 0; h <= m; ++h) {
            Ball seed = warm.empty()
                            ? Ball::point_d(seeds[static_cast<size_t>(h)].real(),
                                            seeds[static_cast<size_t>(h)].imag(),
                                            static_cast<mpfr_prec_t>(bits))
                            : warm[static_cast<size_t>(h)];
            Attempt a = refine_ball(k, seed, bits, prec.target_radius);
            bool ok = a.converged && root_shape_ok(k, h, a.ball);
            if (!ok) {
                // One perturbed retry recovers rare basin captures before
                // escalating: complex seeds rotate by pi/(4k); real-root
                // seeds bump along the axis to stay exactly real.
                std::complex<double> cold = seeds[static_cast<size_t>(h)];
                std::complex<double> moved =
                    upper_kind(k, h) == RootKind::complex_upper
                        ? cold * std::polar(1.0, M_PI / (4.0 * k.k))
                        : cold * (1.0 + 1.0 / 64.0);
                Ball pseed =
                    Ball::point_d(moved.real(), moved.imag(),
                                  static_cast<mpfr_prec_t>(bits));
                Attempt b = refine_ball(k, pseed, bits, prec.target_radius);
                if (b.converged && root_shape_ok(k, h, b.ball)) {
                    a = std::move(b);
                    ok = true;
                }
            }
            all_ok = all_ok && ok;
            attempts.push_back(std::move(a));
        }
        RootSet rs = assemble(k, attempts, bits, prec);
        if (all_ok) {
            rs = certify_bijection(std::move(rs));
            if (rs.certified) return rs;
        } else {
            rs.failure = "refinement did not reach the target radius";
        }
        if (esc == prec.max_escalations) return rs;
        warm.clear();
        warm.reserve(attempts.size());
        for (const auto& a : attempts)
            warm.push_back(Ball::point(a.ball.re(), a.ball.im()));
        bits *= 2;
    }
}

RootSet certify_bijection(RootSet rs) {
    const int kk = rs.k.k;
    auto reject = [&rs](std::string why) {
        rs.certified = false;
        rs.failure = std::move(why);
        return std::move(rs);
    };

    // Exact squarefreeness: a positive discriminant means the trinomial has
    // k+1 distinct roots, so k disjoint balls each holding at least one root
    // and all excluding 1 pin down exactly the k roots of f_k.
    if (discriminant_closed_form(rs.k) <= 0) return reject("squarefree");

    if (rs.roots.size() != static_cast<size_t>(kk)) return reject("structure");
    for (int i = 0; i < kk; ++i) {
        const RootBall& r = rs.roots[static_cast<size_t>(i)];
        if (r.sector_h != i) return reject("structure");
        RootKind expect = i == 0 ? RootKind::dominant
                          : 2 * i == kk
                              ? RootKind::negative_real
                              : (2 * i < kk ? RootKind::complex_upper
                                            : RootKind::complex_lower);
        if (r.kind != expect) return reject("structure");
        try {
            r.value.validate();
        } catch (const PrecisionExhausted&) {
            return reject("finite-enclosures");
        }
        if (!r.value.rad().is_number()) return reject("finite-enclosures");
    }

    // Exact conjugate pairing between sector h and sector k-h.
    for (int h = 1; 2 * h < kk; ++h) {
        const Ball& up = rs.roots[static_cast<size_t>(h)].value;
        const Ball& lo = rs.roots[static_cast<size_t>(kk - h)].value;
        if (!up.re().equals(lo.re())) return reject("conjugate-pairing");
        if (mpfr_cmpabs(up.im().raw(), lo.im().raw()) != 0 ||
            up.im().sign() <= 0 || lo.im().sign() >= 0)
            return reject("conjugate-pairing");
        if (!up.rad().equals(lo.rad())) return reject("conjugate-pairing");
    }

    // Real roots have exactly-real midpoints of the right sign; combined
    // with exactly-one-root-per-ball this certifies the roots themselves
    // are real (a non-real root would bring its conjugate into the ball).
    {
        const Ball& dom = rs.roots[0].value;
        if (!dom.mid_is_real() || dom.re().sign() <= 0)
            return reject("real-midpoints");
        if (kk % 2 == 0) {
            const Ball& neg = rs.roots[static_cast<size_t>(kk / 2)].value;
            if (!neg.mid_is_real() || neg.re().sign() >= 0)
                return reject("real-midpoints");
        }
    }

    // Nearest-root residual: the stored radius must dominate the certified
    // bound (k+1)|g(mid)|/|g'(mid)|, which guarantees each ball contains a
    // root of the trinomial.
    {
        PrecisionConfig ev = rs.precision_used;
        for (int i = 0; i < kk; ++i) {
            const Ball& b = rs.roots[static_cast<size_t>(i)].value;
            Ball mid = Ball::point(b.re(), b.im());
            Interval ga = eval_g(rs.k, mid, ev).abs_interval();
            Interval gpa = eval_g_prime(rs.k, mid, ev).abs_interval();
            if (gpa.lo().sign() <= 0)
                return reject("residual(" + std::to_string(i) + ")");
            Real bound(RP);
            mpfr_mul_si(bound.raw(), ga.hi().raw(), kk + 1, MPFR_RNDU);
            mpfr_div(bound.raw(), bound.raw(), gpa.lo().raw(), MPFR_RNDU);
            if (mpfr_cmp(b.rad().raw(), bound.raw()) < 0)
                return reject("residual(" + std::to_string(i) + ")");
        }
    }

    for (int i = 0; i < kk; ++i)
        if (!rs.roots[static_cast<size_t>(i)].value.certainly_excludes_si(1))
            return reject("excludes-one(" + std::to_string(i) + ")");

    for (int i = 0; i < kk; ++i)
        for (int j = i + 1; j < kk; ++j)
            if (!certainly_disjoint(rs.roots[static_cast<size_t>(i)].value,
                                    rs.roots[static_cast<size_t>(j)].value))
                return reject("disjoint(" + std::to_string(i) + "," +
                              std::to_string(j) + ")");

    {
        Ball sum = rs.roots[0].value;
        for (int i = 1; i < kk; ++i)
            sum = bl_add(sum, rs.roots[static_cast<size_t>(i)].value);
        if (!sum.contains_si(1)) return reject("vieta-sum");
    }

    {
        Interval prod = rs.roots[0].modulus;
        for (int i = 1; i < kk; ++i)
            prod = iv_mul(prod, rs.roots[static_cast<size_t>(i)].modulus);
        if (!prod.contains_si(1)) return reject("vieta-product");
    }

    const auto p =
        static_cast<mpfr_prec_t>(rs.precision_used.working_bits);
    const Interval zero = Interval::exact_si(0, p);
    const Interval one = Interval::exact_si(1, p);
    const Interval two = Interval::exact_si(2, p);
    for (int i = 0; i < kk; ++i) {
        const RootBall& r = rs.roots[static_cast<size_t>(i)];
        // Stored modulus must be a superset of a freshly certified one.
        Interval rec = r.value.abs_interval();
        if (mpfr_cmp(r.modulus.lo().raw(), rec.lo().raw()) > 0 ||
            mpfr_cmp(rec.hi().raw(), r.modulus.hi().raw()) > 0)
            return reject("modulus-consistency(" + std::to_string(i) + ")");
        bool in_range =
            r.kind == RootKind::dominant
                ? certainly_inside_open(r.modulus, one, two)
                : certainly_inside_open(r.modulus, zero, one);
        if (!in_range)
            return reject("modulus-range(" + std::to_string(i) + ")");
        if (r.kind == RootKind::complex_upper) {
            try {
                Interval ra = r.value.arg_interval();
                if (mpfr_cmp(r.argument.lo().raw(), ra.lo().raw()) > 0 ||
                    mpfr_cmp(ra.hi().raw(), r.argument.hi().raw()) > 0)
                    return reject("argument-consistency(" +
                                  std::to_string(i) + ")");
            } catch (const std::invalid_argument&) {
                return reject("argument-consistency(" + std::to_string(i) +
                              ")");
            }
        }
    }

    // Each argument interval certifiably inside its own sector: with the
    // sectors pairwise disjoint and index == sector, this is the bijection.
    for (int i = 0; i < kk; ++i) {
        const RootBall& r = rs.roots[static_cast<size_t>(i)];
        SectorBounds sb = sector_bounds(rs.k, i, p);
        if (!certainly_inside_open(r.argument, sb.lo, sb.hi))
            return reject("sector(" + std::to_string(i) + ")");
    }

    rs.certified = true;
    rs.failure.clear();
    return rs;
}

Ball dominant_root(FamilyIndex k, const PrecisionConfig& prec) {
    prec.validate();
    long bits = prec.working_bits;
    Ball seed = Ball::point_si(2, static_cast<mpfr_prec_t>(bits));
    for (int esc = 0;; ++esc) {
        Attempt a = refine_ball(k, seed, bits, prec.target_radius);
        if (a.converged && a.ball.mid_is_real() && a.ball.re().sign() > 0 &&
            a.ball.certainly_excludes_si(1)) {
            Interval alpha = a.ball.abs_interval();
            Interval lb = dominant_bracket_lower(k, static_cast<mpfr_prec_t>(bits));
            Interval two = Interval::exact_si(2, static_cast<mpfr_prec_t>(bits));
            if (certainly_inside_open(alpha, lb, two)) return a.ball;
            if (certainly_lt(alpha, lb) || certainly_gt(alpha, two))
                throw std::runtime_error(
                    "dominant root enclosure escapes (2 - 2^{1-k}, 2): known "
                    "bound falsified");
        }
        if (esc == prec.max_escalations)
            throw std::runtime_error(
                "dominant root bracket unresolved at max escalation");
        seed = Ball::point(a.ball.re(), a.ball.im());
        bits *= 2;
    }
}

SectorBounds sector_bounds(FamilyIndex k, int h, mpfr_prec_t prec) {
    Interval pi = Interval::pi(prec);
    return {iv_div_si(iv_mul_si(pi, 2L * h - 1), k.k),
            iv_div_si(iv_mul_si(pi, 2L * h + 1), k.k)};
}

Interval dominant_bracket_lower(FamilyIndex k, mpfr_prec_t prec) {
    // 2 - 2^{1-k} is dyadic with a k-bit significand: exact at this width.
    Real lb(std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(k.k) + 8));
    mpfr_set_si_2exp(lb.raw(), -1, 1 - k.k, MPFR_RNDN);
    mpfr_add_si(lb.raw(), lb.raw(), 2, MPFR_RNDN);
    return Interval::point(lb);
}

}  // namespace fibroot
