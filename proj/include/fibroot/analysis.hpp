#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fibroot/bigint.hpp"
#include "fibroot/rootfinder.hpp"

namespace fibroot {

// One shared absolute value among the roots inside the unit disk: a
// conjugate pair shares a level by exact symmetry, and for even k the
// negative real root holds a level of its own.
struct ModulusClass {
    int level_index;           // 1 = largest small-root modulus
    Interval modulus;          // hull of the members' certified enclosures
    std::vector<int> members;  // root indices, ascending; size 1 or 2
};

struct ClassesOutcome {
    bool resolved;  // false when two distinct levels could not be certified
                    // apart (their modulus enclosures overlap)
    std::vector<ModulusClass> classes;  // strictly decreasing when resolved
};

// Groups the non-dominant roots into modulus levels ordered strictly
// decreasing. Levels are merged only by exact conjugacy; any overlap
// between distinct levels marks the outcome unresolved (the caller needs
// tighter enclosures), never "equal".
ClassesOutcome modulus_classes(const RootSet& rs);

struct SectorOutcome {
    enum class State {
        certified,   // the sector map is a certified bijection
        unresolved,  // some argument interval straddles a sector boundary
        violated     // a sector certifiably holds two roots (or none)
    };
    State state;
    std::vector<int> root_of_sector;  // sector h -> root index; -1 if unset
    // Minimum certified distance from an argument interval to its sector
    // boundary, normalized by pi/k (so 1.0 means dead center). Meaningful
    // for certified outcomes; 0 otherwise.
    double min_slack;
    int worst_root;  // root index attaining min_slack; -1 if none
};

// Re-derives each root's sector from its certified argument interval and
// checks that the map sector -> root is a bijection with every argument
// interval strictly inside the open cone (2*pi*h/k - pi/k, 2*pi*h/k + pi/k).
SectorOutcome sector_assignment(const RootSet& rs);

enum class SeparationScope { all_pairs, small_only };

// Shared carrier for the two pair statistics; each operation fills its own
// part and leaves the other empty.
struct SeparationStats {
    std::optional<Interval> min_separation;  // enclosure of min |a_i - a_j|
    std::optional<std::pair<int, int>> argmin_pair;  // root indices
    std::optional<Interval> min_ratio_excess;  // min over adjacent levels of
                                               // rho_i / rho_j - 1
    std::optional<std::pair<int, int>> argmin_ratio_pair;  // level indices
};

// Certified minimum pairwise distance over the scope (all roots, or only
// the roots inside the unit disk). The pair scan runs under OpenMP with a
// deterministic lowest-index-pair reduction; the _serial variant is the
// single-threaded reference and must produce identical results.
SeparationStats min_separation(const RootSet& rs, SeparationScope scope);
SeparationStats min_separation_serial(const RootSet& rs,
                                      SeparationScope scope);

// Same scan over an explicit list of balls; witnesses are list positions.
SeparationStats min_pairwise_distance(const std::vector<Ball>& balls);
SeparationStats min_pairwise_distance_serial(const std::vector<Ball>& balls);

// Certified enclosure of the minimum of rho_i/rho_j - 1 over adjacent
// levels (the global minimum over i < j is attained at consecutive levels
// because the levels are strictly ordered). Ratio part empty when fewer
// than two classes exist.
SeparationStats min_modulus_ratio(const std::vector<ModulusClass>& classes);

// Balls for the reciprocals 1/root_i in root-index order, followed by the
// exact extra root 1 of the reversed trinomial X^{k+1} - 2X + 1.
std::vector<Ball> reversed_roots(const RootSet& rs);

// Certified enclosures of the bound formulas, evaluated with 32 guard bits
// over the requested precision.
//
//   bound_thm1:  1 / (10 k^{9.6} (pi/e)^k)   - modulus-ratio excess bound
//   bound_thm2:  1 / (k^{6.6} (pi/e)^k)      - root-separation bound
//   *_poly:      the same without the exponential factor (valid k <= 99)
//   bound_weak:  1 / (k^{3/2} 3^{k/2})       - separation bound for k >= 100
//   bound_mahler_mignotte: sqrt(3|disc|) / (d^{d/2+1} 6^{(d-1)/2}), d = k+1
//                - generic separation bound for the reversed trinomial
Interval bound_thm1(FamilyIndex k, mpfr_prec_t prec);
Interval bound_thm1_poly(FamilyIndex k, mpfr_prec_t prec);
Interval bound_thm2(FamilyIndex k, mpfr_prec_t prec);
Interval bound_thm2_poly(FamilyIndex k, mpfr_prec_t prec);
Interval bound_weak(FamilyIndex k, mpfr_prec_t prec);
Interval bound_mahler_mignotte(FamilyIndex k, const BigInt& disc,
                               mpfr_prec_t prec);

// Open band (1 - log(3)/k, 1 - 1/(2^8 k^3)) that must contain every
// small-root modulus for k >= 4.
struct ModulusBand {
    Interval lo, hi;
};
ModulusBand small_modulus_band(FamilyIndex k, mpfr_prec_t prec);

}  // namespace fibroot
