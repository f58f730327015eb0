#include "fibroot/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fibroot {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

mpfr_prec_t working_prec(const RootSet& rs) {
    return static_cast<mpfr_prec_t>(rs.precision_used.working_bits);
}

// (pi/e)^k as a certified enclosure.
Interval pi_over_e_pow(int k, mpfr_prec_t p) {
    Interval pe = iv_div(Interval::pi(p), Interval::euler_e(p));
    return iv_pow_ui(pe, static_cast<unsigned long>(k));
}

// k^(num/den) via exp((num/den) * log k).
Interval k_pow_q(int k, long num, long den, mpfr_prec_t p) {
    Interval base = Interval::exact_si(k, p);
    Interval expo = Interval::of_q(mpq_class(num, den), p);
    return iv_pow(base, expo);
}

// Deterministic reduction of pairwise distances: smallest lower endpoint
// wins, ties broken by lowest pair position. The interval handed back is
// [min over pairs of lo, min over pairs of hi], a certified enclosure of
// the exact minimum distance.
SeparationStats reduce_pairs(const std::vector<std::pair<int, int>>& pairs,
                             const std::vector<std::optional<Interval>>& dists) {
    SeparationStats stats;
    if (pairs.empty()) return stats;
    const Interval& first = *dists[0];
    Real min_lo = first.lo();
    Real min_hi = first.hi();
    size_t best = 0;
    for (size_t idx = 1; idx < pairs.size(); ++idx) {
        const Interval& d = *dists[idx];
        if (mpfr_cmp(d.lo().raw(), min_lo.raw()) < 0) {
            min_lo = d.lo();
            best = idx;
        }
        if (mpfr_cmp(d.hi().raw(), min_hi.raw()) < 0) min_hi = d.hi();
    }
    stats.min_separation = Interval::make(std::move(min_lo), std::move(min_hi));
    stats.argmin_pair = pairs[best];
    return stats;
}

SeparationStats pair_scan(const std::vector<const Ball*>& balls,
                          const std::vector<int>& labels, bool parallel) {
    const long n = static_cast<long>(balls.size());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n * (n - 1) / 2));
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            pairs.emplace_back(labels[static_cast<size_t>(i)],
                               labels[static_cast<size_t>(j)]);
    std::vector<std::pair<long, long>> index_pairs;
    index_pairs.reserve(pairs.size());
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) index_pairs.emplace_back(i, j);
    std::vector<std::optional<Interval>> dists(pairs.size());
    const long npairs = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long idx = 0; idx < npairs; ++idx) {
        const auto [i, j] = index_pairs[static_cast<size_t>(idx)];
        dists[static_cast<size_t>(idx)] =
            bl_dist(*balls[static_cast<size_t>(i)],
                    *balls[static_cast<size_t>(j)]);
    }
    return reduce_pairs(pairs, dists);
}

SeparationStats min_separation_impl(const RootSet& rs, SeparationScope scope,
                                    bool parallel) {
    std::vector<const Ball*> balls;
    std::vector<int> labels;
    const int start = scope == SeparationScope::small_only ? 1 : 0;
    for (int i = start; i < rs.k.k; ++i) {
        balls.push_back(&rs.roots[static_cast<size_t>(i)].value);
        labels.push_back(i);
    }
    return pair_scan(balls, labels, parallel);
}

SeparationStats min_pairwise_distance_impl(const std::vector<Ball>& balls,
                                           bool parallel) {
    std::vector<const Ball*> ptrs;
    std::vector<int> labels;
    for (size_t i = 0; i < balls.size(); ++i) {
        ptrs.push_back(&balls[i]);
        labels.push_back(static_cast<int>(i));
    }
    return pair_scan(ptrs, labels, parallel);
}

}  // namespace

ClassesOutcome modulus_classes(const RootSet& rs) {
    const int k = rs.k.k;
    ClassesOutcome out{true, {}};
    for (int h = 1; 2 * h <= k; ++h) {
        ModulusClass cls{0, rs.roots[static_cast<size_t>(h)].modulus, {h}};
        if (2 * h != k) {
            const Interval& other =
                rs.roots[static_cast<size_t>(k - h)].modulus;
            Real lo = mpfr_cmp(cls.modulus.lo().raw(), other.lo().raw()) <= 0
                          ? cls.modulus.lo()
                          : other.lo();
            Real hi = mpfr_cmp(cls.modulus.hi().raw(), other.hi().raw()) >= 0
                          ? cls.modulus.hi()
                          : other.hi();
            cls.modulus = Interval::make(std::move(lo), std::move(hi));
            cls.members.push_back(k - h);
        }
        out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const ModulusClass& a, const ModulusClass& b) {
                  int c = mpfr_cmp(a.modulus.lo().raw(), b.modulus.lo().raw());
                  if (c != 0) return c > 0;
                  return a.members.front() < b.members.front();
              });
    for (size_t i = 0; i < out.classes.size(); ++i) {
        out.classes[i].level_index = static_cast<int>(i) + 1;
        if (i + 1 < out.classes.size() &&
            !certainly_gt(out.classes[i].modulus,
                          out.classes[i + 1].modulus))
            out.resolved = false;
    }
    return out;
}

SectorOutcome sector_assignment(const RootSet& rs) {
    const int k = rs.k.k;
    const mpfr_prec_t p = working_prec(rs);
    SectorOutcome out{SectorOutcome::State::certified,
                      std::vector<int>(static_cast<size_t>(k), -1), 0.0, -1};
    const double two_pi = 2.0 * M_PI;
    bool any_unresolved = false;
    bool any_violation = false;
    std::optional<double> min_slack;
    Interval pi_iv = Interval::pi(p);
    for (int i = 0; i < k; ++i) {
        const Interval& arg = rs.roots[static_cast<size_t>(i)].argument;
        const double amid =
            0.5 * (mpfr_get_d(arg.lo().raw(), MPFR_RNDN) +
                   mpfr_get_d(arg.hi().raw(), MPFR_RNDN));
        long cand = std::lround(amid * k / two_pi);
        cand = std::clamp(cand, 0L, static_cast<long>(k) - 1);
        SectorBounds sb = sector_bounds(rs.k, static_cast<int>(cand), p);
        Interval gap_lo = iv_sub(arg, sb.lo);
        Interval gap_hi = iv_sub(sb.hi, arg);
        const bool inside =
            gap_lo.lo().sign() > 0 && gap_hi.lo().sign() > 0;
        if (!inside) {
            any_unresolved = true;
            continue;
        }
        int& slot = out.root_of_sector[static_cast<size_t>(cand)];
        if (slot != -1) {
            any_violation = true;
            continue;
        }
        slot = i;
        const Interval& tighter =
            mpfr_cmp(gap_lo.lo().raw(), gap_hi.lo().raw()) <= 0 ? gap_lo
                                                                : gap_hi;
        Interval norm = iv_div(iv_mul_si(tighter, k), pi_iv);
        const double slack = mpfr_get_d(norm.lo().raw(), MPFR_RNDD);
        if (!min_slack || slack < *min_slack) {
            min_slack = slack;
            out.worst_root = i;
        }
    }
    if (any_violation)
        out.state = SectorOutcome::State::violated;
    else if (any_unresolved)
        out.state = SectorOutcome::State::unresolved;
    else
        out.state = SectorOutcome::State::certified;
    if (out.state == SectorOutcome::State::certified && min_slack)
        out.min_slack = *min_slack;
    return out;
}

SeparationStats min_separation(const RootSet& rs, SeparationScope scope) {
    return min_separation_impl(rs, scope, true);
}

SeparationStats min_separation_serial(const RootSet& rs,
                                      SeparationScope scope) {
    return min_separation_impl(rs, scope, false);
}

SeparationStats min_pairwise_distance(const std::vector<Ball>& balls) {
    return min_pairwise_distance_impl(balls, true);
}

SeparationStats min_pairwise_distance_serial(const std::vector<Ball>& balls) {
    return min_pairwise_distance_impl(balls, false);
}

SeparationStats min_modulus_ratio(const std::vector<ModulusClass>& classes) {
    SeparationStats stats;
    if (classes.size() < 2) return stats;
    std::optional<Real> min_lo, min_hi;
    size_t best = 0;
    for (size_t i = 0; i + 1 < classes.size(); ++i) {
        Interval excess = iv_add_si(
            iv_div(classes[i].modulus, classes[i + 1].modulus), -1);
        if (!min_lo || mpfr_cmp(excess.lo().raw(), min_lo->raw()) < 0) {
            min_lo = excess.lo();
            best = i;
        }
        if (!min_hi || mpfr_cmp(excess.hi().raw(), min_hi->raw()) < 0)
            min_hi = excess.hi();
    }
    stats.min_ratio_excess =
        Interval::make(std::move(*min_lo), std::move(*min_hi));
    stats.argmin_ratio_pair = {classes[best].level_index,
                               classes[best + 1].level_index};
    return stats;
}

std::vector<Ball> reversed_roots(const RootSet& rs) {
    std::vector<Ball> out;
    out.reserve(rs.roots.size() + 1);
    for (const RootBall& r : rs.roots) out.push_back(bl_inv(r.value));
    const mpfr_prec_t p =
        out.empty() ? working_prec(rs) : out.front().prec();
    out.push_back(Ball::point_si(1, p));
    return out;
}

Interval bound_thm1(FamilyIndex k, mpfr_prec_t prec) {
    const mpfr_prec_t p = prec + kGuardBits;
    Interval denom = iv_mul_si(
        iv_mul(k_pow_q(k.k, 48, 5, p), pi_over_e_pow(k.k, p)), 10);
    return iv_recip(denom);
}

Interval bound_thm1_poly(FamilyIndex k, mpfr_prec_t prec) {
    const mpfr_prec_t p = prec + kGuardBits;
    return iv_recip(iv_mul_si(k_pow_q(k.k, 48, 5, p), 10));
}

Interval bound_thm2(FamilyIndex k, mpfr_prec_t prec) {
    const mpfr_prec_t p = prec + kGuardBits;
    return iv_recip(iv_mul(k_pow_q(k.k, 33, 5, p), pi_over_e_pow(k.k, p)));
}

Interval bound_thm2_poly(FamilyIndex k, mpfr_prec_t prec) {
    const mpfr_prec_t p = prec + kGuardBits;
    return iv_recip(k_pow_q(k.k, 33, 5, p));
}

Interval bound_weak(FamilyIndex k, mpfr_prec_t prec) {
    const mpfr_prec_t p = prec + kGuardBits;
    // 1 / (k^{3/2} 3^{k/2}) = 1 / sqrt(k^3 3^k), exact integer radicand.
    BigInt radicand = bigint_pow(static_cast<unsigned long>(k.k), 3) *
                      bigint_pow(3, static_cast<unsigned long>(k.k));
    return iv_recip(iv_sqrt(Interval::of_z(radicand, p)));
}

Interval bound_mahler_mignotte(FamilyIndex k, const BigInt& disc,
                               mpfr_prec_t prec) {
    if (disc <= 0) throw std::invalid_argument("discriminant must be > 0");
    const mpfr_prec_t p = prec + kGuardBits;
    // sqrt(3 disc) / (d^{d/2+1} 6^{(d-1)/2}) with d = k+1 equals
    // sqrt(3 disc / ((k+1)^{k+3} 6^k)): one directed sqrt of an exact
    // rational.
    BigInt den = bigint_pow(static_cast<unsigned long>(k.k) + 1,
                            static_cast<unsigned long>(k.k) + 3) *
                 bigint_pow(6, static_cast<unsigned long>(k.k));
    mpq_class q(3 * disc, den);
    q.canonicalize();
    return iv_sqrt(Interval::of_q(q, p));
}

ModulusBand small_modulus_band(FamilyIndex k, mpfr_prec_t prec) {
    const mpfr_prec_t p = prec + kGuardBits;
    Interval lo =
        iv_sub_from_si(1, iv_div_si(Interval::log_of_3(p), k.k));
    BigInt den = 256 * bigint_pow(static_cast<unsigned long>(k.k), 3);
    Interval hi =
        iv_sub_from_si(1, Interval::of_q(mpq_class(1, den), p));
    return {std::move(lo), std::move(hi)};
}

}  // namespace fibroot
