#include "fogndt/ndt.hpp"

#include <algorithm>
#include <cmath>

namespace fogndt {

namespace {

// num/den on extended nonnegative reals: a zero load costs nothing even
// at rate zero, and a positive load at rate zero never finishes.
double ratio_or_unbounded(double num, double den) {
    if (num == 0.0) return 0.0;
    if (den == 0.0) return kUnbounded;
    return num / den;
}

} // namespace

void validate(const NetworkConfig& cfg) {
    if (cfg.en_count < 1)
        throw ValidationError("en_count must be >= 1, got " +
                              std::to_string(cfg.en_count));
    if (cfg.user_count < 1)
        throw ValidationError("user_count must be >= 1, got " +
                              std::to_string(cfg.user_count));
    if (cfg.file_count < cfg.user_count)
        throw ValidationError("file_count must be >= user_count, got N=" +
                              std::to_string(cfg.file_count) + " K=" +
                              std::to_string(cfg.user_count));
    if (!(cfg.cache_fraction >= 0.0 && cfg.cache_fraction <= 1.0))
        throw ValidationError("cache_fraction must lie in [0,1], got " +
                              std::to_string(cfg.cache_fraction));
    if (!(cfg.fronthaul_rate >= 0.0))
        throw ValidationError("fronthaul_rate must be >= 0, got " +
                              std::to_string(cfg.fronthaul_rate));
}

const char* to_string(SchemeId s) {
    switch (s) {
    case SchemeId::ZF: return "ZF";
    case SchemeId::IA: return "IA";
    case SchemeId::CA: return "CA";
    case SchemeId::CC: return "CC";
    }
    return "?";
}

const char* to_string(PipelinedBranch b) {
    switch (b) {
    case PipelinedBranch::EdgeIA: return "E_IA";
    case PipelinedBranch::FronthaulCC: return "F_CC";
    case PipelinedBranch::EdgeCC: return "E_CC";
    case PipelinedBranch::EdgeCA: return "E_CA";
    }
    return "?";
}

NdtPair scheme_ndt(SchemeId scheme, const NetworkConfig& cfg) {
    validate(cfg);
    const int m = cfg.en_count;
    const int k = cfg.user_count;
    const int mn = min_mk(cfg);
    const double edge_zf = static_cast<double>(k) / mn;

    switch (scheme) {
    case SchemeId::ZF:
        if (cfg.cache_fraction != 1.0)
            throw PreconditionError("ZF is defined at mu = 1, got mu = " +
                                    std::to_string(cfg.cache_fraction));
        return {0.0, edge_zf};
    case SchemeId::IA:
        if (cfg.cache_fraction != 1.0 / m)
            throw PreconditionError("IA is defined at mu = 1/M = " +
                                    std::to_string(1.0 / m) + ", got mu = " +
                                    std::to_string(cfg.cache_fraction));
        return {0.0, static_cast<double>(m + k - 1) / m};
    case SchemeId::CA:
        return {ratio_or_unbounded(static_cast<double>(k), cfg.fronthaul_rate),
                edge_zf};
    case SchemeId::CC:
        if (cfg.cache_fraction != 1.0 / m)
            throw PreconditionError("CC is defined at mu = 1/M = " +
                                    std::to_string(1.0 / m) + ", got mu = " +
                                    std::to_string(cfg.cache_fraction));
        return {ratio_or_unbounded(static_cast<double>(k) * (m - 1),
                                   m * cfg.fronthaul_rate),
                edge_zf};
    }
    throw ValidationError("unknown scheme");
}

double pipelined_ndt(const NdtPair& pair) {
    return std::max(pair.fronthaul, pair.edge);
}

double serial_ndt(const NdtPair& pair) {
    return pair.fronthaul + pair.edge;
}

double blend(double alpha, double value1, double value2) {
    if (alpha == 0.0) return value2;
    if (alpha == 1.0) return value1;
    if (std::isinf(value1) || std::isinf(value2)) return kUnbounded;
    return alpha * value1 + (1.0 - alpha) * value2;
}

ShareResult time_share(double delta1, double mu1, double delta2, double mu2,
                       double mu) {
    if (mu1 == mu2)
        throw ValidationError("time_share anchors must differ, both at mu = " +
                              std::to_string(mu1));
    const double lo = std::min(mu1, mu2);
    const double hi = std::max(mu1, mu2);
    if (mu < lo || mu > hi)
        throw std::out_of_range("time_share target mu = " + std::to_string(mu) +
                                " outside anchor interval [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                "]");
    double alpha;
    if (mu == mu1)
        alpha = 1.0;
    else if (mu == mu2)
        alpha = 0.0;
    else
        alpha = (mu - mu2) / (mu1 - mu2);
    return {alpha, blend(alpha, delta1, delta2)};
}

RegimeThresholds regime_thresholds(const NetworkConfig& cfg) {
    validate(cfg);
    const int m = cfg.en_count;
    const int k = cfg.user_count;
    const int mn = min_mk(cfg);
    RegimeThresholds t;
    t.r1 = static_cast<double>(k) * (m - 1) / (m + k - 1);
    t.r2 = static_cast<double>(m - 1) * mn / m;
    t.r3 = mn;
    return t;
}

BestPipelined best_pipelined(const NetworkConfig& cfg) {
    validate(cfg);
    const int m = cfg.en_count;
    if (cfg.cache_fraction != 1.0 / m)
        throw PreconditionError(
            "best_pipelined is defined at mu = 1/M = " + std::to_string(1.0 / m) +
            ", got mu = " + std::to_string(cfg.cache_fraction));

    const double ia = pipelined_ndt(scheme_ndt(SchemeId::IA, cfg));
    const double cc = pipelined_ndt(scheme_ndt(SchemeId::CC, cfg));
    const double ca = pipelined_ndt(scheme_ndt(SchemeId::CA, cfg));
    const double best = std::min({ia, cc, ca});

    const RegimeThresholds t = regime_thresholds(cfg);
    const double r = cfg.fronthaul_rate;
    BestPipelined out;
    out.value = best;
    if (r <= t.r1) {
        out.scheme = SchemeId::IA;
        out.branch = PipelinedBranch::EdgeIA;
    } else if (r <= t.r2) {
        out.scheme = SchemeId::CC;
        out.branch = PipelinedBranch::FronthaulCC;
    } else if (r <= t.r3) {
        out.scheme = SchemeId::CC;
        out.branch = PipelinedBranch::EdgeCC;
    } else {
        out.scheme = SchemeId::CA;
        out.branch = PipelinedBranch::EdgeCA;
    }
    return out;
}

} // namespace fogndt
