#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fibroot/analysis.hpp"
#include "test_support.hpp"

using fibroot::Ball;
using fibroot::FamilyIndex;
using fibroot::Interval;
using fibroot::ModulusClass;
using fibroot::PrecisionConfig;
using fibroot::RootSet;
using fibroot::SectorOutcome;
using fibroot::SeparationScope;
using fibroot::SeparationStats;
using testsupport::interval_near;
using testsupport::near_str;

namespace {

const PrecisionConfig kCfg{128, 1e-40, 6};

RootSet solved(int k) {
    RootSet rs = fibroot::solve_all(FamilyIndex(k), kCfg);
    REQUIRE(rs.certified);
    return rs;
}

bool stats_equal(const SeparationStats& a, const SeparationStats& b) {
    if (a.min_separation.has_value() != b.min_separation.has_value())
        return false;
    if (a.min_separation &&
        (!mpfr_equal_p(a.min_separation->lo().raw(),
                       b.min_separation->lo().raw()) ||
         !mpfr_equal_p(a.min_separation->hi().raw(),
                       b.min_separation->hi().raw())))
        return false;
    return a.argmin_pair == b.argmin_pair;
}

}  // namespace

TEST_CASE("modulus levels for the smallest orders") {
    SUBCASE("order 2: one level holding the single interior root") {
        const auto out = fibroot::modulus_classes(solved(2));
        REQUIRE(out.resolved);
        REQUIRE(out.classes.size() == 1);
        CHECK(out.classes[0].level_index == 1);
        CHECK(out.classes[0].members == std::vector<int>{1});
        CHECK(interval_near(out.classes[0].modulus,
                            "0.6180339887498948482045868343656381177",
                            1e-30));
    }

    SUBCASE("order 3: the conjugate pair shares one level") {
        const auto out = fibroot::modulus_classes(solved(3));
        REQUIRE(out.resolved);
        REQUIRE(out.classes.size() == 1);
        CHECK(out.classes[0].members == std::vector<int>{1, 2});
        CHECK(interval_near(out.classes[0].modulus,
                            "0.7373527057603276752017597", 1e-24));
    }

    SUBCASE("order 4: pair level above the negative-real level") {
        const auto out = fibroot::modulus_classes(solved(4));
        REQUIRE(out.resolved);
        REQUIRE(out.classes.size() == 2);
        CHECK(out.classes[0].level_index == 1);
        CHECK(out.classes[0].members == std::vector<int>{1, 3});
        CHECK(interval_near(out.classes[0].modulus,
                            "0.8182760987795397722162671", 1e-24));
        CHECK(out.classes[1].level_index == 2);
        CHECK(out.classes[1].members == std::vector<int>{2});
        CHECK(interval_near(out.classes[1].modulus,
                            "0.7748041132154338540924033", 1e-24));
    }

    SUBCASE("order 5: two pair levels strictly ordered") {
        const auto out = fibroot::modulus_classes(solved(5));
        REQUIRE(out.resolved);
        REQUIRE(out.classes.size() == 2);
        CHECK(out.classes[0].members == std::vector<int>{1, 4});
        CHECK(out.classes[1].members == std::vector<int>{2, 3});
        CHECK(fibroot::certainly_gt(out.classes[0].modulus,
                                    out.classes[1].modulus));
    }
}

TEST_CASE("level counts follow the parity formula") {
    for (int k = 2; k <= 30; ++k) {
        CAPTURE(k);
        const auto out = fibroot::modulus_classes(solved(k));
        REQUIRE(out.resolved);
        const size_t expected =
            (k % 2 == 0) ? static_cast<size_t>(k) / 2
                         : static_cast<size_t>(k - 1) / 2;
        CHECK(out.classes.size() == expected);
        // Strictly decreasing and internally consistent.
        for (size_t i = 0; i < out.classes.size(); ++i) {
            CHECK(out.classes[i].level_index == static_cast<int>(i) + 1);
            if (i + 1 < out.classes.size())
                CHECK(fibroot::certainly_gt(out.classes[i].modulus,
                                            out.classes[i + 1].modulus));
        }
    }
}

TEST_CASE("sector assignment certifies the identity bijection") {
    for (int k : {2, 3, 4, 7, 12, 25}) {
        CAPTURE(k);
        const auto out = fibroot::sector_assignment(solved(k));
        REQUIRE(out.state == SectorOutcome::State::certified);
        REQUIRE(out.root_of_sector.size() == static_cast<size_t>(k));
        for (int h = 0; h < k; ++h) CHECK(out.root_of_sector[h] == h);
        CHECK(out.min_slack > 0.0);
        CHECK(out.min_slack <= 1.0);
        CHECK(out.worst_root >= 0);
    }
}

TEST_CASE("sector slack at order 4 matches the frozen reference") {
    const auto out = fibroot::sector_assignment(solved(4));
    REQUIRE(out.state == SectorOutcome::State::certified);
    CHECK(out.min_slack == doctest::Approx(0.880980946554).epsilon(1e-9));
    // The extremes are the conjugate pair; either member may be reported.
    CHECK((out.worst_root == 1 || out.worst_root == 3));
}

TEST_CASE("minimum root separation matches frozen references") {
    SUBCASE("order 2 is the golden-ratio gap sqrt(5)") {
        const auto st = fibroot::min_separation(solved(2),
                                                SeparationScope::all_pairs);
        REQUIRE(st.min_separation.has_value());
        CHECK(interval_near(*st.min_separation,
                            "2.2360679774997896964091736687313", 1e-17));
        CHECK(st.argmin_pair == std::make_pair(0, 1));
    }
    SUBCASE("order 3") {
        const auto st = fibroot::min_separation(solved(3),
                                                SeparationScope::all_pairs);
        REQUIRE(st.min_separation.has_value());
        CHECK(interval_near(*st.min_separation,
                            "1.212581458414398738518684", 1e-17));
    }
    SUBCASE("order 4 attained between the pair and the negative real root") {
        const auto st = fibroot::min_separation(solved(4),
                                                SeparationScope::all_pairs);
        REQUIRE(st.min_separation.has_value());
        CHECK(interval_near(*st.min_separation,
                            "1.073098209708025221346852", 1e-17));
        CHECK(st.argmin_pair == std::make_pair(1, 2));
    }
    SUBCASE("order 5") {
        const auto st = fibroot::min_separation(solved(5),
                                                SeparationScope::all_pairs);
        REQUIRE(st.min_separation.has_value());
        CHECK(interval_near(*st.min_separation,
                            "0.9170723745462889991406425", 1e-17));
    }
}

TEST_CASE("interior-only scope drops pairs that involve the dominant root") {
    const RootSet rs = solved(4);
    const auto all = fibroot::min_separation(rs, SeparationScope::all_pairs);
    const auto small =
        fibroot::min_separation(rs, SeparationScope::small_only);
    REQUIRE(all.min_separation.has_value());
    REQUIRE(small.min_separation.has_value());
    // At order 4 the closest pair lies inside the unit disk, so the two
    // scopes agree exactly.
    CHECK(stats_equal(all, small));
    CHECK(small.argmin_pair == std::make_pair(1, 2));

    // At order 2 the only interior pair count is zero: no statistic.
    const auto lone =
        fibroot::min_separation(solved(2), SeparationScope::small_only);
    CHECK_FALSE(lone.min_separation.has_value());
    CHECK_FALSE(lone.argmin_pair.has_value());
}

TEST_CASE("parallel and serial pair scans are bitwise identical") {
    for (int k : {5, 20, 41}) {
        CAPTURE(k);
        const RootSet rs = solved(k);
        for (auto scope :
             {SeparationScope::all_pairs, SeparationScope::small_only}) {
            const auto par = fibroot::min_separation(rs, scope);
            const auto ser = fibroot::min_separation_serial(rs, scope);
            CHECK(stats_equal(par, ser));
        }
    }
}

TEST_CASE("explicit ball-list scan agrees with its serial reference") {
    const RootSet rs = solved(30);
    const std::vector<Ball> rev = fibroot::reversed_roots(rs);
    const auto par = fibroot::min_pairwise_distance(rev);
    const auto ser = fibroot::min_pairwise_distance_serial(rev);
    CHECK(stats_equal(par, ser));
    REQUIRE(par.min_separation.has_value());
    CHECK(mpfr_cmp_d(par.min_separation->lo().raw(), 0.0) > 0);
}

TEST_CASE("adjacent-level modulus ratios match frozen references") {
    SUBCASE("order 4") {
        const auto classes = fibroot::modulus_classes(solved(4));
        REQUIRE(classes.resolved);
        const auto st = fibroot::min_modulus_ratio(classes.classes);
        REQUIRE(st.min_ratio_excess.has_value());
        CHECK(interval_near(*st.min_ratio_excess,
                            "0.05610706606047476756313843", 1e-23));
        CHECK(st.argmin_ratio_pair == std::make_pair(1, 2));
        CHECK_FALSE(st.min_separation.has_value());
    }
    SUBCASE("order 5") {
        const auto classes = fibroot::modulus_classes(solved(5));
        REQUIRE(classes.resolved);
        const auto st = fibroot::min_modulus_ratio(classes.classes);
        REQUIRE(st.min_ratio_excess.has_value());
        CHECK(interval_near(*st.min_ratio_excess,
                            "0.06382491426769621652238286", 1e-23));
    }
    SUBCASE("single level yields no ratio statistic") {
        const auto classes = fibroot::modulus_classes(solved(3));
        REQUIRE(classes.resolved);
        const auto st = fibroot::min_modulus_ratio(classes.classes);
        CHECK_FALSE(st.min_ratio_excess.has_value());
        CHECK_FALSE(st.argmin_ratio_pair.has_value());
    }
}

TEST_CASE("reciprocal root balls carry the expected values") {
    const RootSet rs = solved(2);
    const std::vector<Ball> rev = fibroot::reversed_roots(rs);
    REQUIRE(rev.size() == 3);  // k reciprocals plus the exact root 1
    CHECK(near_str(rev[0].re(), "0.6180339887498948482045868343656381177",
                   1e-30));
    CHECK(near_str(rev[1].re(), "-1.6180339887498948482045868343656381177",
                   1e-30));
    CHECK(mpfr_cmp_si(rev[2].re().raw(), 1) == 0);
    CHECK(rev[2].rad().is_zero());
    CHECK(rev[2].im().is_zero());
}

TEST_CASE("reciprocal dominant root hugs one half from above") {
    const RootSet rs = solved(10);
    const std::vector<Ball> rev = fibroot::reversed_roots(rs);
    const Interval mag = rev[0].abs_interval();
    CHECK(mpfr_cmp_d(mag.lo().raw(), 0.5) > 0);
    CHECK(mpfr_cmp_d(mag.hi().raw(), 0.5008) < 0);
}

TEST_CASE("reversed-roots minimum distance at order 100") {
    const RootSet rs = fibroot::solve_all(FamilyIndex(100), kCfg);
    REQUIRE(rs.certified);
    const auto st =
        fibroot::min_pairwise_distance(fibroot::reversed_roots(rs));
    REQUIRE(st.min_separation.has_value());
    CHECK(interval_near(*st.min_separation, "0.06316765923430233311", 1e-17));
}

TEST_CASE("bound formulas match frozen enclosures") {
    CHECK(interval_near(fibroot::bound_thm1(FamilyIndex(4), 128),
                        "9.306845836463679890350093e-8", 1e-28));
    CHECK(interval_near(fibroot::bound_thm2(FamilyIndex(4), 128),
                        "5.956381335336755129824059e-5", 1e-25));
    CHECK(interval_near(fibroot::bound_thm1_poly(FamilyIndex(4), 128),
                        "1.66044342669701412036184314247e-7", 1e-28));
    CHECK(interval_near(fibroot::bound_thm2_poly(FamilyIndex(4), 128),
                        "1.06268379308608903703157961118e-4", 1e-25));
    CHECK(interval_near(fibroot::bound_weak(FamilyIndex(100), 128),
                        "1.392955569098538346336442e-27", 1e-47));
    const fibroot::BigInt disc100 =
        fibroot::discriminant_closed_form(FamilyIndex(100));
    CHECK(interval_near(
        fibroot::bound_mahler_mignotte(FamilyIndex(100), disc100, 128),
        "2.043911745635981880699808e-27", 1e-47));
}

TEST_CASE("generic separation bound at order 2 with discriminant 5") {
    const Interval mm =
        fibroot::bound_mahler_mignotte(FamilyIndex(2), fibroot::BigInt(5), 128);
    // sqrt(15) / (3^{5/2} * 6) rounded: the d = k+1 = 3 instance.
    CHECK(interval_near(mm, "0.0414086662499961054890587", 1e-22));
    CHECK(mpfr_cmp_d(mm.hi().raw(), 0.05) < 0);
}

TEST_CASE("ratio bound stays below the measured excess at small orders") {
    for (int k : {4, 5, 6, 10}) {
        CAPTURE(k);
        const auto classes = fibroot::modulus_classes(solved(k));
        REQUIRE(classes.resolved);
        const auto st = fibroot::min_modulus_ratio(classes.classes);
        REQUIRE(st.min_ratio_excess.has_value());
        CHECK(fibroot::certainly_gt(*st.min_ratio_excess,
                                    fibroot::bound_thm1(FamilyIndex(k), 128)));
    }
}

TEST_CASE("separation bound stays below the measured separation") {
    for (int k : {4, 9, 15}) {
        CAPTURE(k);
        const auto st = fibroot::min_separation(solved(k),
                                                SeparationScope::all_pairs);
        REQUIRE(st.min_separation.has_value());
        CHECK(fibroot::certainly_gt(*st.min_separation,
                                    fibroot::bound_thm2(FamilyIndex(k), 128)));
    }
}

TEST_CASE("interior modulus band endpoints") {
    const auto band = fibroot::small_modulus_band(FamilyIndex(4), 128);
    CHECK(interval_near(band.lo, "0.725346927832972577151188690769", 1e-28));
    // 1 - 1/(2^8 * 4^3) = 1 - 2^-14 is exactly representable: a point.
    CHECK(band.hi.is_point());
    CHECK(near_str(band.hi.lo(), "0.99993896484375", 1e-60));
    CHECK(fibroot::certainly_lt(band.lo, band.hi));
}

TEST_CASE("small-root moduli live inside the band for orders four and up") {
    for (int k : {4, 5, 11, 30}) {
        CAPTURE(k);
        const RootSet rs = solved(k);
        const auto band = fibroot::small_modulus_band(FamilyIndex(k), 128);
        for (int h = 1; h < k; ++h) {
            CAPTURE(h);
            CHECK(fibroot::certainly_inside_open(rs.roots[h].modulus, band.lo,
                                                 band.hi));
        }
    }
}

TEST_CASE("band upper end still holds at the orders below four") {
    // The full two-sided band is only promised from order 4 upward, but the
    // upper end empirically holds at orders 2 and 3 as well.
    for (int k : {2, 3}) {
        CAPTURE(k);
        const RootSet rs = solved(k);
        const auto band = fibroot::small_modulus_band(FamilyIndex(k), 128);
        for (int h = 1; h < k; ++h)
            CHECK(fibroot::certainly_lt(rs.roots[h].modulus, band.hi));
    }
}
