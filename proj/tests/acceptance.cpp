// Acceptance harness: runs the binding end-to-end checks, prints one
// [PASS]/[FAIL] line per criterion, and exits nonzero when any fail.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "fibroot/analysis.hpp"
#include "fibroot/poly_core.hpp"
#include "fibroot/recurrence.hpp"
#include "fibroot/report_io.hpp"
#include "fibroot/rootfinder.hpp"
#include "fibroot/verifier.hpp"
#include "test_support.hpp"

using fibroot::Ball;
using fibroot::BigInt;
using fibroot::ClaimId;
using fibroot::ClaimResult;
using fibroot::FamilyIndex;
using fibroot::Interval;
using fibroot::PrecisionConfig;
using fibroot::RootSet;
using fibroot::SeparationScope;
using fibroot::Status;

namespace {

constexpr int kMaxOrder = 200;
const PrecisionConfig kCfg{128, 1e-40, 6};

int g_failures = 0;

void report(int num, bool ok, const std::string& desc) {
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", num, desc.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

const ClaimResult& row(const std::vector<ClaimResult>& rows, ClaimId id) {
    return rows[static_cast<size_t>(id)];
}

bool rows_pass(const std::map<int, std::vector<ClaimResult>>& all, ClaimId id,
               int k_lo, int k_hi, std::string& detail) {
    for (int k = k_lo; k <= k_hi; ++k) {
        const auto it = all.find(k);
        if (it == all.end()) {
            detail = "no results for k=" + std::to_string(k);
            return false;
        }
        const auto& r = row(it->second, id);
        if (r.status != Status::CertifiedPass) {
            detail = std::string(fibroot::claim_name(id)) + " at k=" +
                     std::to_string(k) + " is " +
                     fibroot::status_name(r.status);
            return false;
        }
    }
    return true;
}

int run_cli_exit(const std::string& args) {
    const std::string cmd = std::string(FIBROOT_CLI_PATH) + " " + args +
                            " > acceptance_cli_out.txt 2>&1";
    const int status = std::system(cmd.c_str());
    std::remove("acceptance_cli_out.txt");
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
    std::printf("acceptance sweep: orders 2..%d\n", kMaxOrder);
    std::fflush(stdout);

    // ---- Criterion 1: exact discriminant identities, under 30 seconds.
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= fibroot::kResultantOracleCap && ok; ++k) {
            if (fibroot::discriminant_closed_form(FamilyIndex(k)) !=
                fibroot::discriminant_resultant_oracle(FamilyIndex(k))) {
                ok = false;
                detail = " (oracle mismatch at k=" + std::to_string(k) + ")";
            }
        }
        for (int k = 2; k <= kMaxOrder && ok; ++k) {
            const BigInt d = fibroot::discriminant_closed_form(FamilyIndex(k));
            const BigInt sq = BigInt(k - 1) * BigInt(k - 1);
            if (d % sq != 0) {
                ok = false;
                detail = " (square factor fails at k=" + std::to_string(k) + ")";
            }
        }
        ok = ok && fibroot::disc_f_from_disc_g(FamilyIndex(2)) == 5;
        ok = ok && fibroot::disc_f_from_disc_g(FamilyIndex(3)) == 44;
        const double dt = seconds_since(t0);
        if (dt >= 30.0) {
            ok = false;
            detail += " (took " + std::to_string(dt) + "s)";
        }
        report(1, ok,
               "discriminant closed form matches the exact resultant and "
               "divisibility holds" + detail);
    }

    // ---- Criterion 2: every order solves to certified disjoint balls at
    //      the target radius, under 10 minutes. The sweep is shared by the
    //      later criteria.
    std::map<int, RootSet> sets;
    std::map<int, std::vector<ClaimResult>> claims;
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= kMaxOrder; ++k) {
            RootSet rs = fibroot::solve_all(FamilyIndex(k), kCfg);
            if (!rs.certified) {
                ok = false;
                detail = " (k=" + std::to_string(k) +
                         " uncertified: " + rs.failure + ")";
                sets.emplace(k, std::move(rs));
                break;
            }
            sets.emplace(k, std::move(rs));
        }
        if (ok) {
            for (int k = 2; k <= kMaxOrder && ok; ++k) {
                const RootSet& rs = sets.at(k);
                // Radii meet the target.
                for (const auto& r : rs.roots)
                    if (mpfr_cmp_d(r.value.rad().raw(), kCfg.target_radius) >
                        0) {
                        ok = false;
                        detail = " (radius above target at k=" +
                                 std::to_string(k) + ")";
                        break;
                    }
                if (!ok) break;
                // Exact conjugate pairing and exclusion of the deflated
                // root 1, re-checked directly.
                for (int h = 1; h < k; ++h) {
                    const Ball& up = rs.roots[h].value;
                    const Ball& dn = rs.roots[k - h].value;
                    if (h != k - h) {
                        fibroot::Real neg(up.prec());
                        mpfr_neg(neg.raw(), up.im().raw(), MPFR_RNDN);
                        if (!mpfr_equal_p(up.re().raw(), dn.re().raw()) ||
                            !mpfr_equal_p(neg.raw(), dn.im().raw())) {
                            ok = false;
                            detail = " (conjugate pairing broken at k=" +
                                     std::to_string(k) + ")";
                            break;
                        }
                    }
                }
                if (!ok) break;
                for (const auto& r : rs.roots)
                    if (!r.value.certainly_excludes_si(1)) {
                        ok = false;
                        detail = " (a ball admits the deflated root 1 at k=" +
                                 std::to_string(k) + ")";
                        break;
                    }
                if (!ok) break;
                // Vieta anchors: roots sum to 1 and moduli multiply to 1.
                Ball sum = Ball::point_si(0, rs.roots[0].value.prec());
                Interval prod = Interval::exact_si(1, 128);
                for (const auto& r : rs.roots) {
                    sum = fibroot::bl_add(sum, r.value);
                    prod = fibroot::iv_mul(prod, r.modulus);
                }
                if (!sum.contains_si(1) || !prod.contains_si(1)) {
                    ok = false;
                    detail =
                        " (Vieta anchors fail at k=" + std::to_string(k) + ")";
                    break;
                }
                // Disjointness: the certified minimum pairwise distance is
                // strictly positive.
                const auto st =
                    fibroot::min_separation(rs, SeparationScope::all_pairs);
                if (!st.min_separation ||
                    mpfr_cmp_d(st.min_separation->lo().raw(), 0.0) <= 0) {
                    ok = false;
                    detail = " (pairwise disjointness unresolved at k=" +
                             std::to_string(k) + ")";
                    break;
                }
            }
        }
        const double dt = seconds_since(t0);
        if (dt >= 600.0) {
            ok = false;
            detail += " (took " + std::to_string(dt) + "s)";
        }
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "all %d orders solved to certified disjoint enclosures "
                      "in %.1fs",
                      kMaxOrder - 1, dt);
        report(2, ok, buf + detail);

        for (const auto& [k, rs] : sets)
            claims.emplace(k, fibroot::verify_claims(rs));
    }

    // ---- Criterion 3: interior-modulus band.
    {
        std::string detail;
        const bool ok = rows_pass(claims, ClaimId::L1, 4, kMaxOrder, detail);
        report(3, ok,
               "small-root moduli certified inside their band for orders "
               "4..200" +
                   (detail.empty() ? "" : " (" + detail + ")"));
    }

    // ---- Criterion 4: sector bijection.
    {
        std::string detail;
        const bool ok = rows_pass(claims, ClaimId::L2R1, 2, kMaxOrder, detail);
        report(4, ok,
               "one root per angular sector certified for orders 2..200" +
                   (detail.empty() ? "" : " (" + detail + ")"));
    }

    // ---- Criterion 5: separation lower bounds.
    {
        std::string d1, d2;
        const bool ok = rows_pass(claims, ClaimId::T2, 4, kMaxOrder, d1) &&
                        rows_pass(claims, ClaimId::T2_POLY, 4, 99, d2);
        report(5, ok,
               "root separation beats its exponential and polynomial bounds" +
                   (d1.empty() && d2.empty() ? "" : " (" + d1 + d2 + ")"));
    }

    // ---- Criterion 6: modulus-ratio lower bounds.
    {
        std::string d1, d2;
        const bool ok = rows_pass(claims, ClaimId::T1, 4, kMaxOrder, d1) &&
                        rows_pass(claims, ClaimId::T1_POLY, 4, 99, d2);
        report(6, ok,
               "modulus-level ratios beat their exponential and polynomial "
               "bounds" +
                   (d1.empty() && d2.empty() ? "" : " (" + d1 + d2 + ")"));
    }

    // ---- Criterion 7: asymptotic separation chain for orders 100..150.
    {
        std::string d1, d2;
        const bool ok = rows_pass(claims, ClaimId::WEAK, 100, 150, d1) &&
                        rows_pass(claims, ClaimId::MM_CHAIN, 100, 150, d2);
        report(7, ok,
               "weak separation and reversed-root chain certified for orders "
               "100..150" +
                   (d1.empty() && d2.empty() ? "" : " (" + d1 + d2 + ")"));
    }

    // ---- Criterion 8: dominant-root bracket plus classic constants.
    {
        std::string detail;
        bool ok = rows_pass(claims, ClaimId::ALPHA, 2, kMaxOrder, detail);
        if (ok) {
            const Ball phi = fibroot::dominant_root(FamilyIndex(2), kCfg);
            ok = testsupport::near_str(
                phi.re(), "1.618033988749894848204586834365638118", 1e-30);
            if (!ok) detail = "golden ratio digits drifted";
        }
        if (ok) {
            const Ball tri = fibroot::dominant_root(FamilyIndex(3), kCfg);
            ok = testsupport::near_str(tri.re(), "1.8392867552141611",
                                       1e-10);
            if (!ok) detail = "three-step constant digits drifted";
        }
        report(8, ok,
               "dominant roots certified inside (2 - 2^(1-k), 2) with classic "
               "constants reproduced" +
                   (detail.empty() ? "" : " (" + detail + ")"));
    }

    // ---- Criterion 9: recurrence cross-checks.
    {
        bool ok = true;
        std::string detail;
        const long fib30[30] = {1,      1,      2,      3,     5,     8,
                                13,     21,     34,     55,    89,    144,
                                233,    377,    610,    987,   1597,  2584,
                                4181,   6765,   10946,  17711, 28657, 46368,
                                75025,  121393, 196418, 317811,
                                514229, 832040};
        for (long n = 1; n <= 30 && ok; ++n)
            if (fibroot::kfib(FamilyIndex(2), n) != BigInt(fib30[n - 1])) {
                ok = false;
                detail = " (two-step term " + std::to_string(n) + " wrong)";
            }
        for (int k = 2; k <= 10 && ok; ++k) {
            const Interval gap =
                fibroot::growth_check(FamilyIndex(k), 200, kCfg);
            if (mpfr_cmp_d(gap.hi().raw(), 1e-10) >= 0) {
                ok = false;
                detail = " (growth gap too large at k=" + std::to_string(k) +
                         ")";
            }
        }
        report(9, ok,
               "sequence terms and growth rates match the certified roots" +
                   detail);
    }

    // ---- Criterion 10: determinism, tamper rejection, honest starvation.
    {
        bool ok = true;
        std::string detail;

        const fibroot::Report serial = fibroot::verify_range(2, 30, kCfg, 1);
        const fibroot::Report wide = fibroot::verify_range(2, 30, kCfg, 4);
        const std::string csv_a =
            fibroot::serialize_report(serial, fibroot::OutputFormat::csv);
        const std::string csv_b =
            fibroot::serialize_report(wide, fibroot::OutputFormat::csv);
        if (csv_a != csv_b) {
            ok = false;
            detail += " (thread count changed report bytes)";
        }

        RootSet tampered = sets.count(5)
                               ? sets.at(5)
                               : fibroot::solve_all(FamilyIndex(5), kCfg);
        tampered.roots[2].value = tampered.roots[1].value;
        tampered.roots[2].modulus = tampered.roots[1].modulus;
        tampered.roots[2].argument = tampered.roots[1].argument;
        tampered.roots[3].value = tampered.roots[4].value;
        tampered.roots[3].modulus = tampered.roots[4].modulus;
        tampered.roots[3].argument = tampered.roots[4].argument;
        if (fibroot::certify_bijection(std::move(tampered)).certified) {
            ok = false;
            detail += " (duplicated root escaped recertification)";
        }

        const PrecisionConfig starved{53, 1e-40, 1};
        const auto rows = fibroot::verify_k(FamilyIndex(4), starved);
        for (const auto& r : rows)
            if (r.status == Status::Fail) {
                ok = false;
                detail += " (starvation produced a spurious Fail)";
                break;
            }
        bool any_unresolved = false;
        for (const auto& r : rows)
            any_unresolved |= r.status == Status::Unresolved;
        if (!any_unresolved) {
            ok = false;
            detail += " (starvation went unnoticed)";
        }
        if (run_cli_exit("verify --k 4..4 --bits 53 --max-escalations 1") !=
            2) {
            ok = false;
            detail += " (starved run exited with the wrong code)";
        }

        report(10, ok,
               "reports are thread-count invariant, tampering is rejected, "
               "and precision starvation reports Unresolved" +
                   detail);
    }

    std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
