#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fogndt/bounds.hpp"
#include "fogndt/envelope.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace fogndt;

namespace {

NetworkConfig cfg_of(int m, int k, double mu, double r) {
    return {m, k, k, mu, r};
}

SweepSpec single_point(int m, int k, double mu, double r) {
    SweepSpec spec;
    spec.en_counts = {m};
    spec.user_counts = {k};
    spec.cache_fractions = {MuValue::literal(mu)};
    spec.rates = {r};
    return spec;
}

} // namespace

TEST_CASE("cut-set terms") {
    CHECK(lower_bound_term(cfg_of(3, 3, 1.0 / 3, 1.0), 1) ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(lower_bound_term(cfg_of(3, 3, 1.0 / 3, 1.0), 0) == 0.0);
    CHECK(lower_bound_term(cfg_of(2, 2, 0.0, 1.0), 0) == 2.0);

    CHECK_THROWS_AS(lower_bound_term(cfg_of(3, 3, 0.5, 1.0), -1),
                    std::out_of_range);
    CHECK_THROWS_AS(lower_bound_term(cfg_of(3, 3, 0.5, 1.0), 4),
                    std::out_of_range);

    // l = 0 at rate zero: unbounded only with bits left in the cloud.
    CHECK(std::isinf(lower_bound_term(cfg_of(2, 2, 0.0, 0.0), 0)));
    CHECK(lower_bound_term(cfg_of(2, 2, 0.5, 0.0), 0) == 0.0);
}

TEST_CASE("lower bound breakdown") {
    const BoundBreakdown even = lower_bound(cfg_of(3, 3, 1.0 / 3, 1.0));
    CHECK(even.edge_bound == 1.0);
    CHECK(even.best == 1.0);
    CHECK_FALSE(even.argmax_l.has_value());
    REQUIRE(even.cutset_terms.size() == 4);
    CHECK(even.cutset_terms[0].second == 0.0);
    CHECK(even.cutset_terms[1].second ==
          doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(even.cutset_terms[2].second ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(even.cutset_terms[3].second ==
          doctest::Approx(3.0 / 4.0).epsilon(1e-12));

    const BoundBreakdown cloudy = lower_bound(cfg_of(2, 2, 0.0, 1.0));
    CHECK(cloudy.best == 2.0);
    REQUIRE(cloudy.argmax_l.has_value());
    CHECK(*cloudy.argmax_l == 0);
}

TEST_CASE("full caches leave only the edge bound") {
    for (int m = 2; m <= 6; ++m)
        for (int k = 2; k <= 6; ++k)
            for (double r : {0.0, 0.5, 1.0, 4.0}) {
                const BoundBreakdown b = lower_bound(cfg_of(m, k, 1.0, r));
                CHECK(b.best ==
                      doctest::Approx(static_cast<double>(k) / std::min(m, k))
                          .epsilon(1e-12));
                CHECK_FALSE(b.argmax_l.has_value());
            }
}

TEST_CASE("optimality gap spot values") {
    CHECK(optimality_gap(cfg_of(3, 3, 1.0 / 3, 1.0)) ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(optimality_gap(cfg_of(3, 3, 1.0, 5.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(optimality_gap(cfg_of(2, 2, 0.0, 1.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::isinf(optimality_gap(cfg_of(2, 2, 0.0, 0.0))));
}

TEST_CASE("bounds bracket the achievable envelope") {
    for (int m = 2; m <= 5; ++m)
        for (int k = 2; k <= 5; ++k)
            for (int i = 0; i <= 10; ++i)
                for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                    const NetworkConfig cfg = cfg_of(m, k, i / 10.0, r);
                    CHECK(lower_bound(cfg).best <=
                          achievable_ndt(cfg) * (1.0 + 1e-12));
                }
}

TEST_CASE("lower bound is monotone in cache size and rate") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 2; k <= 4; ++k) {
            for (double r : {0.2, 1.0, 3.0}) {
                double prev = kUnbounded;
                for (int i = 0; i <= 20; ++i) {
                    const double b = lower_bound(cfg_of(m, k, i / 20.0, r)).best;
                    CHECK(b <= prev * (1.0 + 1e-12));
                    prev = b;
                }
            }
            for (double mu : {0.0, 0.25, 0.6}) {
                double prev = kUnbounded;
                for (int j = 1; j <= 30; ++j) {
                    const double b = lower_bound(cfg_of(m, k, mu, j / 10.0)).best;
                    CHECK(b <= prev * (1.0 + 1e-12));
                    prev = b;
                }
            }
        }
}

TEST_CASE("edge bound dominates past r2 at the split cache point") {
    for (int m = 2; m <= 6; ++m)
        for (int k = 2; k <= 6; ++k) {
            const RegimeThresholds t = regime_thresholds(cfg_of(m, k, 0, 1));
            for (double r : {t.r2, t.r2 + 0.3, t.r3, 2 * t.r3}) {
                const BoundBreakdown b = lower_bound(cfg_of(m, k, 1.0 / m, r));
                CHECK(b.best ==
                      doctest::Approx(static_cast<double>(k) / std::min(m, k))
                          .epsilon(1e-12));
            }
        }
}

TEST_CASE("gap audit over grids") {
    const GapReport one = gap_audit(single_point(3, 3, 1.0 / 3, 1.0));
    CHECK(one.evaluated == 1);
    CHECK(one.max_ratio == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(one.violations.empty());
    REQUIRE(one.argmax.has_value());
    CHECK(one.argmax->en_count == 3);

    const GapReport flat = gap_audit(single_point(2, 2, 1.0, 3.0));
    CHECK(flat.max_ratio == doctest::Approx(1.0).epsilon(1e-12));

    SweepSpec grid;
    grid.en_counts = {2, 3};
    grid.user_counts = {2, 3};
    for (int i = 0; i <= 10; ++i)
        grid.cache_fractions.push_back(MuValue::literal(i / 10.0));
    grid.rates = {0.25, 0.5, 1.0, 2.0, 4.0};
    const GapReport report = gap_audit(grid);
    CHECK(report.evaluated == 2 * 2 * 11 * 5);
    CHECK(report.skipped == 0);
    CHECK(report.violations.empty());
    CHECK(report.max_ratio <= 3.0 + kGapSlack);
}

TEST_CASE("unbounded points are skipped, not flagged") {
    SweepSpec grid = single_point(3, 3, 0.0, 0.0);
    grid.cache_fractions.push_back(MuValue::literal(1.0));
    grid.rates.push_back(1.0);
    const GapReport report = gap_audit(grid);
    CHECK(report.skipped == 1); // (mu=0, r=0) only
    CHECK(report.evaluated == 3);
    CHECK(report.violations.empty());
}

TEST_CASE("gap audit is deterministic") {
    SweepSpec grid;
    grid.en_counts = {2, 3, 4};
    grid.user_counts = {2, 3};
    grid.cache_fractions = {MuValue::literal(0.1), MuValue::one_over_m(),
                            MuValue::literal(0.9)};
    grid.rates = {0.3, 1.0, 2.7};
    const GapReport a = gap_audit(grid);
    const GapReport b = gap_audit(grid);
    CHECK(a.max_ratio == b.max_ratio);
    REQUIRE(a.argmax.has_value());
    REQUIRE(b.argmax.has_value());
    CHECK(a.argmax->en_count == b.argmax->en_count);
    CHECK(a.argmax->user_count == b.argmax->user_count);
    CHECK(a.argmax->cache_fraction == b.argmax->cache_fraction);
    CHECK(a.argmax->fronthaul_rate == b.argmax->fronthaul_rate);
    CHECK(a.evaluated == b.evaluated);
}

TEST_CASE("empty grids are rejected") {
    SweepSpec empty;
    CHECK_THROWS_AS(gap_audit(empty), ValidationError);
    SweepSpec no_rates = single_point(2, 2, 0.5, 1.0);
    no_rates.rates.clear();
    CHECK_THROWS_AS(gap_audit(no_rates), ValidationError);
}
