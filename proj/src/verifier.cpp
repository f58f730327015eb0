#include "fibroot/verifier.hpp"

#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fibroot {

namespace {

const char* const kClaimNames[kNumClaims] = {
    "L1",      "L2R1", "T1",       "T2",   "T1_POLY",
    "T2_POLY", "WEAK", "MM_CHAIN", "DISC", "ALPHA"};

const char* const kStatusNames[4] = {"CertifiedPass", "Fail", "Inapplicable",
                                     "Unresolved"};

// (a - b) / denom at 64-bit precision, rounded once to double. Subtraction
// in MPFR is exact-then-round, so slacks far below double granularity
// relative to the operands survive.
double rel_gap(const Real& a, const Real& b, const Real& denom) {
    Real t(64);
    mpfr_sub(t.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_div(t.raw(), t.raw(), denom.raw(), MPFR_RNDN);
    return mpfr_get_d(t.raw(), MPFR_RNDN);
}

struct Comparison {
    Status status;
    double margin;
};

// Certified comparison "measured > bound" with relative margin
// (measured.lo - bound.hi) / bound.hi.
Comparison compare_exceeds(const Interval& measured, const Interval& bound) {
    Status st;
    if (mpfr_cmp(measured.lo().raw(), bound.hi().raw()) > 0)
        st = Status::CertifiedPass;
    else if (mpfr_cmp(measured.hi().raw(), bound.lo().raw()) < 0)
        st = Status::Fail;
    else
        st = Status::Unresolved;
    return {st, rel_gap(measured.lo(), bound.hi(), bound.hi())};
}

void eval_band_claim(ClaimResult& r, const RootSet& rs, mpfr_prec_t p) {
    ModulusBand band = small_modulus_band(rs.k, p);
    bool all_inside = true;
    bool any_violation = false;
    std::optional<double> worst;
    int worst_root = -1;
    for (int i = 1; i < rs.k.k; ++i) {
        const Interval& m = rs.roots[static_cast<size_t>(i)].modulus;
        const bool lo_ok = mpfr_cmp(m.lo().raw(), band.lo.hi().raw()) > 0;
        const bool hi_ok = mpfr_cmp(band.hi.lo().raw(), m.hi().raw()) > 0;
        all_inside = all_inside && lo_ok && hi_ok;
        if (mpfr_cmp(m.hi().raw(), band.lo.lo().raw()) < 0 ||
            mpfr_cmp(m.lo().raw(), band.hi.hi().raw()) > 0)
            any_violation = true;
        const double side = std::min(
            rel_gap(m.lo(), band.lo.hi(), band.lo.hi()),
            rel_gap(band.hi.lo(), m.hi(), band.hi.lo()));
        if (!worst || side < *worst) {
            worst = side;
            worst_root = i;
        }
    }
    r.status = any_violation ? Status::Fail
               : all_inside  ? Status::CertifiedPass
                             : Status::Unresolved;
    r.margin = worst;
    if (worst_root >= 0) r.witness = {worst_root};
}

void eval_sector_claim(ClaimResult& r, const RootSet& rs) {
    SectorOutcome so = sector_assignment(rs);
    switch (so.state) {
        case SectorOutcome::State::certified:
            r.status = Status::CertifiedPass;
            r.margin = so.min_slack;
            if (so.worst_root >= 0) r.witness = {so.worst_root};
            break;
        case SectorOutcome::State::violated:
            r.status = Status::Fail;
            break;
        case SectorOutcome::State::unresolved:
            r.status = Status::Unresolved;
            break;
    }
}

void eval_disc_claim(ClaimResult& r, FamilyIndex k) {
    bool ok = discriminant_closed_form(k) == discriminant_resultant_oracle(k);
    try {
        (void)disc_f_from_disc_g(k);
    } catch (const std::runtime_error&) {
        ok = false;
    }
    r.status = ok ? Status::CertifiedPass : Status::Fail;
}

void eval_alpha_claim(ClaimResult& r, const RootSet& rs, mpfr_prec_t p) {
    const Interval& m = rs.roots[0].modulus;
    Interval lb = dominant_bracket_lower(rs.k, p);
    Interval two = Interval::exact_si(2, p);
    const bool lo_ok = mpfr_cmp(m.lo().raw(), lb.hi().raw()) > 0;
    const bool hi_ok = mpfr_cmp(m.hi().raw(), two.lo().raw()) < 0;
    const bool violation =
        mpfr_cmp(m.hi().raw(), lb.lo().raw()) < 0 ||
        mpfr_cmp(m.lo().raw(), two.hi().raw()) > 0;
    r.status = violation          ? Status::Fail
               : (lo_ok && hi_ok) ? Status::CertifiedPass
                                  : Status::Unresolved;
    r.margin = std::min(rel_gap(m.lo(), lb.hi(), lb.hi()),
                        rel_gap(two.lo(), m.hi(), two.lo()));
    r.witness = {0};
}

}  // namespace

const char* claim_name(ClaimId id) {
    return kClaimNames[static_cast<int>(id)];
}

std::optional<ClaimId> claim_from_name(const std::string& name) {
    for (int i = 0; i < kNumClaims; ++i)
        if (name == kClaimNames[i]) return static_cast<ClaimId>(i);
    return std::nullopt;
}

bool claim_applicable(ClaimId id, int k) {
    switch (id) {
        case ClaimId::L1:
        case ClaimId::T1:
        case ClaimId::T2:
            return k >= 4;
        case ClaimId::T1_POLY:
        case ClaimId::T2_POLY:
            return k >= 4 && k <= 99;
        case ClaimId::WEAK:
        case ClaimId::MM_CHAIN:
            return k >= 100;
        case ClaimId::DISC:
            return k <= kResultantOracleCap;
        case ClaimId::L2R1:
        case ClaimId::ALPHA:
            return k >= 2;
    }
    return false;
}

const char* status_name(Status s) { return kStatusNames[static_cast<int>(s)]; }

std::optional<Status> status_from_name(const std::string& name) {
    for (int i = 0; i < 4; ++i)
        if (name == kStatusNames[i]) return static_cast<Status>(i);
    return std::nullopt;
}

std::vector<ClaimResult> verify_claims(const RootSet& rs) {
    const int k = rs.k.k;
    const long bits = rs.precision_used.working_bits;
    const auto p = static_cast<mpfr_prec_t>(bits);
    std::vector<ClaimResult> rows;
    rows.reserve(kNumClaims);

    // Shared measurements, computed at most once.
    std::optional<SeparationStats> sep;
    auto separation = [&]() -> const SeparationStats& {
        if (!sep) sep = min_separation(rs, SeparationScope::all_pairs);
        return *sep;
    };
    std::optional<ClassesOutcome> cls;
    std::optional<SeparationStats> ratio;
    auto ratio_stats = [&]() -> const SeparationStats& {
        if (!cls) {
            cls = modulus_classes(rs);
            ratio = cls->resolved ? min_modulus_ratio(cls->classes)
                                  : SeparationStats{};
        }
        return *ratio;
    };

    auto exceeds_claim = [&](ClaimResult& r, const SeparationStats& st,
                             bool ratio_part, const Interval& bound) {
        const std::optional<Interval>& measured =
            ratio_part ? st.min_ratio_excess : st.min_separation;
        const auto& pair = ratio_part ? st.argmin_ratio_pair : st.argmin_pair;
        if (!measured) {
            r.status = Status::Unresolved;
            return;
        }
        Comparison c = compare_exceeds(*measured, bound);
        r.status = c.status;
        r.margin = c.margin;
        if (pair) r.witness = {pair->first, pair->second};
    };

    for (int ci = 0; ci < kNumClaims; ++ci) {
        const auto id = static_cast<ClaimId>(ci);
        ClaimResult r{k, id, Status::Inapplicable, std::nullopt, {}, bits};
        if (!claim_applicable(id, k)) {
            rows.push_back(std::move(r));
            continue;
        }
        if (id == ClaimId::DISC) {
            eval_disc_claim(r, rs.k);
            rows.push_back(std::move(r));
            continue;
        }
        if (!rs.certified) {
            r.status = Status::Unresolved;
            rows.push_back(std::move(r));
            continue;
        }
        switch (id) {
            case ClaimId::L1:
                eval_band_claim(r, rs, p);
                break;
            case ClaimId::L2R1:
                eval_sector_claim(r, rs);
                break;
            case ClaimId::T1:
                exceeds_claim(r, ratio_stats(), true, bound_thm1(rs.k, p));
                break;
            case ClaimId::T2:
                exceeds_claim(r, separation(), false, bound_thm2(rs.k, p));
                break;
            case ClaimId::T1_POLY:
                exceeds_claim(r, ratio_stats(), true,
                              bound_thm1_poly(rs.k, p));
                break;
            case ClaimId::T2_POLY:
                exceeds_claim(r, separation(), false,
                              bound_thm2_poly(rs.k, p));
                break;
            case ClaimId::WEAK:
                exceeds_claim(r, separation(), false, bound_weak(rs.k, p));
                break;
            case ClaimId::MM_CHAIN: {
                SeparationStats st =
                    min_pairwise_distance(reversed_roots(rs));
                exceeds_claim(
                    r, st, false,
                    bound_mahler_mignotte(
                        rs.k, discriminant_closed_form(rs.k), p));
                break;
            }
            case ClaimId::ALPHA:
                eval_alpha_claim(r, rs, p);
                break;
            case ClaimId::DISC:
                break;  // handled above
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ClaimResult> verify_k(FamilyIndex k, const PrecisionConfig& prec) {
    return verify_claims(solve_all(k, prec));
}

void recompute_summary(Report& report) {
    report.worst_margin_per_claim = {};
    bool any_fail = false;
    bool any_unresolved = false;
    for (const ClaimResult& r : report.results) {
        if (r.margin) {
            auto& slot =
                report.worst_margin_per_claim[static_cast<size_t>(r.claim)];
            if (!slot || *r.margin < *slot) slot = r.margin;
        }
        any_fail = any_fail || r.status == Status::Fail;
        any_unresolved = any_unresolved || r.status == Status::Unresolved;
    }
    report.verdict = any_fail         ? Status::Fail
                     : any_unresolved ? Status::Unresolved
                                      : Status::CertifiedPass;
}

Report verify_range(int k_min, int k_max, const PrecisionConfig& prec,
                    int parallel) {
    if (k_min < 2 || k_min > k_max)
        throw std::invalid_argument("range requires 2 <= k_min <= k_max");
    prec.validate();
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.config = {k_min,
                     k_max,
                     prec.working_bits,
                     prec.target_radius,
                     prec.max_escalations,
                     parallel,
                     FIBROOT_VERSION};
    const int n = k_max - k_min + 1;
    std::vector<std::vector<ClaimResult>> slots(static_cast<size_t>(n));
    int threads = parallel;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < n; ++i)
        slots[static_cast<size_t>(i)] =
            verify_k(FamilyIndex(k_min + i), prec);
    for (auto& rows : slots)
        for (auto& r : rows) report.results.push_back(std::move(r));
    recompute_summary(report);
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

}  // namespace fibroot
