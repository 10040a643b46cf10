#include "fogndt/envelope.hpp"

#include <cmath>

namespace fogndt {

namespace {

double ratio_or_unbounded(double num, double den) {
    if (num == 0.0) return 0.0;
    if (den == 0.0) return kUnbounded;
    return num / den;
}

double pipelined_at(SchemeId scheme, const NetworkConfig& cfg, double mu) {
    NetworkConfig at = cfg;
    at.cache_fraction = mu;
    return pipelined_ndt(scheme_ndt(scheme, at));
}

} // namespace

const char* to_string(Regime regime) {
    switch (regime) {
    case Regime::Low: return "LOW";
    case Regime::MidI: return "MID_I";
    case Regime::MidII: return "MID_II";
    case Regime::High: return "HIGH";
    }
    return "?";
}

Regime regime_of(const NetworkConfig& cfg) {
    validate(cfg);
    const RegimeThresholds t = regime_thresholds(cfg);
    const double r = cfg.fronthaul_rate;
    if (r <= t.r1) return Regime::Low;
    if (r <= t.r2) return Regime::MidI;
    if (r <= t.r3) return Regime::MidII;
    return Regime::High;
}

double closed_form_value(const NetworkConfig& cfg, Regime regime,
                         CacheBranch branch) {
    validate(cfg);
    const int m = cfg.en_count;
    if (m < 2)
        throw PreconditionError(
            "closed_form_value divides by M-1; use single_en_ndt for M = 1");
    const double k = cfg.user_count;
    const int mn = min_mk(cfg);
    const int mx = max_mk(cfg);
    const double mu = cfg.cache_fraction;
    const double r = cfg.fronthaul_rate;

    switch (regime) {
    case Regime::Low:
        if (branch == CacheBranch::Light)
            return mu * (m + k - 1) + ratio_or_unbounded(k * (1.0 - mu * m), r);
        return (m + k - 1 - mu * (mn - 1) - k / mn) / (m - 1);
    case Regime::MidI:
        if (branch == CacheBranch::Light)
            return ratio_or_unbounded(k * (1.0 - mu), r);
        return k * (mu * m - 1.0) / ((m - 1) * mn) +
               ratio_or_unbounded(k * (1.0 - mu), r);
    case Regime::MidII:
        if (branch == CacheBranch::Light)
            return mu * mx + ratio_or_unbounded(k * (1.0 - mu * m), r);
        return k / mn;
    case Regime::High:
        return k / mn;
    }
    throw ValidationError("unknown regime");
}

double single_en_ndt(const NetworkConfig& cfg) {
    validate(cfg);
    const double k = cfg.user_count;
    const double ca = std::max(
        k, ratio_or_unbounded(k, cfg.fronthaul_rate)); // pipelined CA at mu=0
    return blend(cfg.cache_fraction, k, ca);
}

double achievable_ndt(const NetworkConfig& cfg) {
    validate(cfg);
    if (cfg.en_count == 1) return single_en_ndt(cfg);
    const Regime regime = regime_of(cfg);
    const CacheBranch branch = cfg.cache_fraction <= 1.0 / cfg.en_count
                                   ? CacheBranch::Light
                                   : CacheBranch::Heavy;
    return closed_form_value(cfg, regime, branch);
}

DeliveryPlan achievable_plan(const NetworkConfig& cfg) {
    validate(cfg);
    const int m = cfg.en_count;
    const double mu = cfg.cache_fraction;
    DeliveryPlan plan;
    plan.regime = regime_of(cfg);

    if (m == 1) {
        plan.primary = {SchemeId::ZF, 1.0};
        plan.secondary = {SchemeId::CA, 0.0};
        plan.alpha = mu;
        plan.single_en_fallback = true;
        plan.value = blend(mu, pipelined_at(SchemeId::ZF, cfg, 1.0),
                           pipelined_at(SchemeId::CA, cfg, 0.0));
        return plan;
    }

    if (plan.regime == Regime::High) {
        // Cloud-aided delivery alone is already optimal; caches are idle.
        plan.primary = {SchemeId::CA, mu};
        plan.secondary = {SchemeId::CA, mu};
        plan.alpha = 1.0;
        plan.value = pipelined_at(SchemeId::CA, cfg, mu);
        return plan;
    }

    const double split = 1.0 / m;
    const SchemeId split_scheme =
        plan.regime == Regime::Low ? SchemeId::IA : SchemeId::CC;
    plan.primary = {split_scheme, split};
    if (mu <= split) {
        plan.secondary = {SchemeId::CA, 0.0};
        plan.alpha = mu * m;
    } else {
        plan.secondary = {SchemeId::ZF, 1.0};
        plan.alpha = m * (1.0 - mu) / (m - 1);
    }
    plan.value = blend(plan.alpha,
                       pipelined_at(plan.primary.scheme, cfg,
                                    plan.primary.cache_fraction),
                       pipelined_at(plan.secondary.scheme, cfg,
                                    plan.secondary.cache_fraction));
    return plan;
}

} // namespace fogndt
