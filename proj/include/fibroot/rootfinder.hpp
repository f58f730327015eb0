#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fibroot/poly_core.hpp"

namespace fibroot {

enum class RootKind { dominant, complex_upper, complex_lower, negative_real };

const char* root_kind_name(RootKind kind);

struct RootBall {
    Ball value;
    int sector_h;
    RootKind kind;
    Interval modulus;   // certified |root| enclosure
    Interval argument;  // certified arg enclosure, within (-pi/k, 2*pi)
};

// All k roots of f_k as labeled certified balls, ordered so that
// roots[h].sector_h == h.
struct RootSet {
    FamilyIndex k;
    std::vector<RootBall> roots;
    PrecisionConfig precision_used;  // working_bits = bits actually used
    bool certified = false;
    std::string failure;  // empty when certified; names the failed check
};

// k plain floating-point starting points: index 0 is the dominant seed 2;
// index h in 1..k-1 sits at modulus 1 - log(3)/(2k) and angle 2*pi*h/k.
std::vector<std::complex<double>> initial_guesses(FamilyIndex k);

struct RefineResult {
    Ball ball;       // centered at the final iterate; radius certifies the
                     // distance to the nearest root of g_k
    bool converged;  // radius is finite and <= target_radius
    int iterations;
};

// Newton iteration on g_k from z0 at prec.working_bits, followed by the
// nearest-root certification radius (k+1) * |g_k(z)| / |g_k'(z)| evaluated
// in ball arithmetic. Non-convergence (derivative enclosing 0, or radius
// above target after the iteration cap) is reported via converged=false.
RefineResult refine_newton(FamilyIndex k, std::complex<double> z0,
                           const PrecisionConfig& prec);

// Refines the upper-half roots (h = 0..floor(k/2)), reconstructs the lower
// half by exact conjugation, assembles and certifies the RootSet. Escalates
// working_bits by doubling (warm-starting from previous midpoints) up to
// max_escalations; if certification still fails, returns the partial set
// with certified=false and the failing check named.
RootSet solve_all(FamilyIndex k, const PrecisionConfig& prec);

// Re-verifies every certification property of rs from scratch:
// exact squarefreeness of the family, structural labeling, exact conjugate
// pairing, exactly-real midpoints for the real roots, every ball excluding
// the deflated root 1, pairwise disjointness, Vieta sum enclosing 1 and
// modulus product enclosing 1, modulus ranges per kind, and each argument
// interval certifiably inside its own sector. Sets certified/failure.
RootSet certify_bijection(RootSet rs);

// Real ball for the dominant root with certified enclosure inside
// (2 - 2^{1-k}, 2). Throws std::runtime_error if the enclosure certifiably
// escapes the bracket (falsifying a known bound) or cannot be resolved.
Ball dominant_root(FamilyIndex k, const PrecisionConfig& prec);

// Enclosures of the sector endpoints 2*pi*h/k -+ pi/k.
struct SectorBounds {
    Interval lo, hi;
};
SectorBounds sector_bounds(FamilyIndex k, int h, mpfr_prec_t prec);

// Exact point interval for 2 - 2^{1-k}, the lower end of the dominant-root
// bracket.
Interval dominant_bracket_lower(FamilyIndex k, mpfr_prec_t prec);

}  // namespace fibroot
