#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fibroot/analysis.hpp"
#include "fibroot/rootfinder.hpp"

namespace fibroot {

// Claims evaluated per family index, in canonical report order:
//   L1       small-root moduli inside (1 - log3/k, 1 - 1/(2^8 k^3)), k >= 4
//   L2R1     sector map is a certified bijection, k >= 2
//   T1       min modulus-ratio excess > 1/(10 k^{9.6} (pi/e)^k), k >= 4
//   T2       min root separation > 1/(k^{6.6} (pi/e)^k), k >= 4
//   T1_POLY  ratio excess > 1/(10 k^{9.6}), 4 <= k <= 99
//   T2_POLY  separation > 1/k^{6.6}, 4 <= k <= 99
//   WEAK     separation > 1/(k^{3/2} 3^{k/2}), k >= 100
//   MM_CHAIN reversed-root pairwise distance > generic separation bound,
//            k >= 100
//   DISC     closed-form discriminant == exact resultant, k <= oracle cap
//   ALPHA    dominant root inside (2 - 2^{1-k}, 2), k >= 2
enum class ClaimId {
    L1,
    L2R1,
    T1,
    T2,
    T1_POLY,
    T2_POLY,
    WEAK,
    MM_CHAIN,
    DISC,
    ALPHA
};
inline constexpr int kNumClaims = 10;

const char* claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(const std::string& name);
bool claim_applicable(ClaimId id, int k);

enum class Status { CertifiedPass, Fail, Inapplicable, Unresolved };

const char* status_name(Status s);
std::optional<Status> status_from_name(const std::string& name);

struct ClaimResult {
    int k;
    ClaimId claim;
    Status status;
    // Relative slack (measured_lower - bound_upper)/bound_upper; for
    // two-sided claims the minimum over both sides; for the sector claim
    // the boundary slack normalized by pi/k. Absent for Inapplicable and
    // for the exact-identity claim.
    std::optional<double> margin;
    std::vector<int> witness;  // argmin root/level indices (0, 1 or 2)
    long bits_used;

    bool operator==(const ClaimResult&) const = default;
};

struct ReportConfig {
    int k_min;
    int k_max;
    long bits;
    double target_radius;
    int max_escalations;
    int parallel;
    std::string version;

    bool operator==(const ReportConfig&) const = default;
};

struct Report {
    ReportConfig config;
    std::vector<ClaimResult> results;  // sorted by (k, claim)
    // Worst (minimum) margin seen per claim across the range; empty for
    // claims that never produced a margin.
    std::array<std::optional<double>, kNumClaims> worst_margin_per_claim{};
    Status verdict = Status::CertifiedPass;  // Fail > Unresolved > pass
    double runtime_seconds = 0.0;
};

// Evaluates every claim against an already-solved RootSet (one row per
// ClaimId, canonical order). An uncertified RootSet yields Unresolved for
// every root-dependent claim; the exact-integer claim is unaffected.
std::vector<ClaimResult> verify_claims(const RootSet& rs);

// solve_all + verify_claims.
std::vector<ClaimResult> verify_k(FamilyIndex k, const PrecisionConfig& prec);

// Runs verify_k over [k_min, k_max] (parallel across k when parallel != 1;
// 0 means the OpenMP default), assembles the canonical report with worst
// margins and the aggregate verdict, and stamps the wall time.
Report verify_range(int k_min, int k_max, const PrecisionConfig& prec,
                    int parallel = 0);

// Recomputes worst_margin_per_claim and verdict from results.
void recompute_summary(Report& report);

}  // namespace fibroot
