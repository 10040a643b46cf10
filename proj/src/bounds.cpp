#include "fogndt/bounds.hpp"

#include "fogndt/envelope.hpp"

#include <cmath>
#include <string>

namespace fogndt {

double lower_bound_term(const NetworkConfig& cfg, int l) {
    validate(cfg);
    const int mn = min_mk(cfg);
    if (l < 0 || l > mn)
        throw std::out_of_range("cut-set index l = " + std::to_string(l) +
                                " outside [0, " + std::to_string(mn) + "]");
    const double num =
        cfg.user_count -
        static_cast<double>(cfg.user_count - l) * (cfg.en_count - l) *
            cfg.cache_fraction;
    if (num <= 0.0) return 0.0;
    const double den = l + cfg.fronthaul_rate;
    if (den == 0.0) return kUnbounded;
    return num / den;
}

BoundBreakdown lower_bound(const NetworkConfig& cfg) {
    validate(cfg);
    BoundBreakdown out;
    out.edge_bound = static_cast<double>(cfg.user_count) / min_mk(cfg);
    out.best = out.edge_bound;
    const int mn = min_mk(cfg);
    out.cutset_terms.reserve(mn + 1);
    for (int l = 0; l <= mn; ++l) {
        const double term = lower_bound_term(cfg, l);
        out.cutset_terms.emplace_back(l, term);
        if (term > out.best) {
            out.best = term;
            out.argmax_l = l;
        }
    }
    return out;
}

double optimality_gap(const NetworkConfig& cfg) {
    const double ach = achievable_ndt(cfg);
    if (std::isinf(ach)) return kUnbounded;
    return ach / lower_bound(cfg).best; // best >= K/min{M,K} >= 1
}

GapReport gap_audit(const SweepSpec& grid) {
    validate(grid);
    GapReport report;
    for_each_point(grid, [&report](const NetworkConfig& cfg) {
        const double ratio = optimality_gap(cfg);
        if (std::isinf(ratio)) {
            ++report.skipped;
            return;
        }
        ++report.evaluated;
        GapPoint point{cfg.en_count, cfg.user_count, cfg.cache_fraction,
                       cfg.fronthaul_rate, ratio};
        if (ratio > report.max_ratio || !report.argmax) {
            report.max_ratio = ratio;
            report.argmax = point;
        }
        if (ratio > 3.0 + kGapSlack) report.violations.push_back(point);
    });
    return report;
}

} // namespace fogndt
