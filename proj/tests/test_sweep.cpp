#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fogndt/bounds.hpp"
#include "fogndt/sweep.hpp"
#include "test_util.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace fogndt;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

} // namespace

TEST_CASE("grid expands in lexicographic order with sorted unique values") {
    SweepSpec spec;
    spec.en_counts = {3, 2, 3};
    spec.user_counts = {2};
    spec.cache_fractions = {MuValue::literal(0.5), MuValue::literal(0.0)};
    spec.rates = {1.0, 0.5};
    std::vector<NetworkConfig> points;
    for_each_point(spec, [&](const NetworkConfig& cfg) { points.push_back(cfg); });
    REQUIRE(points.size() == 8);
    CHECK(points[0].en_count == 2);
    CHECK(points[0].cache_fraction == 0.0);
    CHECK(points[0].fronthaul_rate == 0.5);
    CHECK(points[1].fronthaul_rate == 1.0);
    CHECK(points[2].cache_fraction == 0.5);
    CHECK(points[4].en_count == 3);
    CHECK(points.back().en_count == 3);
    CHECK(points.back().cache_fraction == 0.5);
    CHECK(points.back().fronthaul_rate == 1.0);
    for (const NetworkConfig& cfg : points)
        CHECK(cfg.file_count == cfg.user_count);
}

TEST_CASE("the 1/M token resolves exactly per EN count") {
    SweepSpec spec;
    spec.en_counts = {3, 7};
    spec.user_counts = {2};
    spec.cache_fractions = {MuValue::one_over_m()};
    spec.rates = {1.0};
    std::vector<double> mus;
    for_each_point(spec, [&](const NetworkConfig& cfg) {
        mus.push_back(cfg.cache_fraction);
    });
    REQUIRE(mus.size() == 2);
    CHECK(mus[0] == 1.0 / 3);
    CHECK(mus[1] == 1.0 / 7);
}

TEST_CASE("auto rates run to twice the smaller dimension") {
    SweepSpec spec;
    spec.en_counts = {2, 5};
    spec.user_counts = {3};
    spec.cache_fractions = {MuValue::literal(0.5)};
    spec.auto_rate = true;
    int count_m2 = 0, count_m5 = 0;
    double max_r = 0;
    for_each_point(spec, [&](const NetworkConfig& cfg) {
        (cfg.en_count == 2 ? count_m2 : count_m5) += 1;
        if (cfg.en_count == 5) max_r = std::max(max_r, cfg.fronthaul_rate);
    });
    CHECK(count_m2 == 40); // 2*min{2,3}*10
    CHECK(count_m5 == 60); // 2*min{5,3}*10
    CHECK(max_r == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("default audit grid shape") {
    const SweepSpec grid = default_audit_grid();
    CHECK(grid.en_counts == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(grid.user_counts == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(grid.cache_fractions.size() == 21);
    CHECK(grid.auto_rate);
    std::size_t points = 0;
    for_each_point(grid, [&](const NetworkConfig&) { ++points; });
    CHECK(points == 33600);
}

TEST_CASE("sweep grid validation") {
    SweepSpec spec;
    CHECK_THROWS_AS(validate(spec), ValidationError);
    spec.en_counts = {2};
    spec.user_counts = {2};
    spec.cache_fractions = {MuValue::literal(0.5)};
    CHECK_THROWS_AS(validate(spec), ValidationError); // no rates
    spec.rates = {1.0};
    CHECK_NOTHROW(validate(spec));
    spec.cache_fractions.push_back(MuValue::literal(1.5));
    CHECK_THROWS_AS(validate(spec), ValidationError);
    spec.cache_fractions.pop_back();
    spec.rates.push_back(-1.0);
    CHECK_THROWS_AS(validate(spec), ValidationError);
}

TEST_CASE("values print with 12 significant digits and inf spelled out") {
    CHECK(format_value(5.0 / 3.0) == "1.66666666667");
    CHECK(format_value(1.0) == "1");
    CHECK(format_value(0.05) == "0.05");
    CHECK(format_value(kUnbounded) == "inf");
}

TEST_CASE("CSV row for a known point") {
    const NetworkConfig cfg{3, 3, 3, 1.0 / 3, 1.0};
    const SweepQuantities q;
    CHECK(csv_header(q) == "M,K,mu,r,regime,achievable,lower_bound,gap");
    CHECK(csv_row(evaluate_row(cfg, q), q) ==
          "3,3,0.333333333333,1,LOW,1.66666666667,1,1.66666666667");
}

TEST_CASE("per-scheme columns are the pipelined NDTs at native cache points") {
    SweepQuantities q;
    q.per_scheme = true;
    CHECK(csv_header(q) ==
          "M,K,mu,r,regime,achievable,lower_bound,gap,pl_zf,pl_ia,pl_ca,pl_cc");
    const SweepRow row = evaluate_row(NetworkConfig{3, 3, 3, 0.5, 1.5}, q);
    CHECK(*row.pl_zf == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*row.pl_ia == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(*row.pl_ca == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(*row.pl_cc == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("CSV output is deterministic and round-trips") {
    SweepSpec spec;
    spec.en_counts = {2, 3};
    spec.user_counts = {2, 4};
    for (int i = 0; i <= 20; ++i)
        spec.cache_fractions.push_back(MuValue::literal(i / 20.0));
    spec.rates = {0.25, 0.5, 1.0, 2.0, 4.0};

    std::ostringstream first, second;
    write_csv(first, spec);
    write_csv(second, spec);
    CHECK(first.str() == second.str());

    const std::vector<std::string> lines = split_lines(first.str());
    REQUIRE(lines.size() == 1 + 2 * 2 * 21 * 5);
    CHECK(lines[0] == "M,K,mu,r,regime,achievable,lower_bound,gap");
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const std::vector<std::string> f = split_fields(lines[idx]);
        REQUIRE(f.size() == 8);
        NetworkConfig cfg;
        cfg.en_count = std::stoi(f[0]);
        cfg.user_count = std::stoi(f[1]);
        cfg.file_count = cfg.user_count;
        cfg.cache_fraction = std::stod(f[2]);
        cfg.fronthaul_rate = std::stod(f[3]);
        CHECK(f[4] == to_string(regime_of(cfg)));
        // Re-evaluating at the parsed (rounded) point reproduces the
        // printed values to printed precision; the parse perturbation is
        // ~1e-12 relative and the steepest branch slope keeps the drift
        // below 1e-8.
        CHECK(rel_close(achievable_ndt(cfg), std::stod(f[5]), 1e-8));
        CHECK(rel_close(lower_bound(cfg).best, std::stod(f[6]), 1e-8));
        CHECK(rel_close(optimality_gap(cfg), std::stod(f[7]), 1e-8));
    }
}

TEST_CASE("series are monotone within their row groups") {
    SweepSpec spec;
    spec.en_counts = {3};
    spec.user_counts = {2, 3, 4};
    spec.cache_fractions = {MuValue::literal(0.0), MuValue::one_over_m(),
                            MuValue::literal(0.8)};
    for (int j = 1; j <= 16; ++j) spec.rates.push_back(j / 4.0);

    std::ostringstream out;
    write_csv(out, spec);
    const std::vector<std::string> lines = split_lines(out.str());
    // Rows arrive grouped by (M, K, mu) with r ascending innermost.
    double prev = kUnbounded;
    std::string prev_group;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const std::vector<std::string> f = split_fields(lines[idx]);
        const std::string group = f[0] + "," + f[1] + "," + f[2];
        const double achievable =
            f[5] == "inf" ? kUnbounded : std::stod(f[5]);
        if (group != prev_group) {
            prev_group = group;
            prev = kUnbounded;
        }
        CHECK(achievable <= prev * (1.0 + 1e-12));
        prev = achievable;
    }
}
