// Achievable NDT envelope: piecewise closed forms over four fronthaul-rate
// regimes and two cache branches, plus the constructive time-sharing plans
// that realize the same values. The two routes are kept independent so they
// can be cross-checked against each other.

#pragma once

#include "fogndt/ndt.hpp"

namespace fogndt {

enum class Regime { Low, MidI, MidII, High };

const char* to_string(Regime regime);

// mu relative to the split point 1/M at which the library exactly fits
// disjointly across the ENs. Light: mu <= 1/M, Heavy: mu >= 1/M.
enum class CacheBranch { Light, Heavy };

// Classify cfg.fronthaul_rate against the thresholds. Exact breakpoint
// hits land in the lower-r regime; the envelope value is continuous there.
Regime regime_of(const NetworkConfig& cfg);

// Evaluate the printed closed form of one (regime, branch) cell at cfg,
// whether or not cfg actually lies in that cell. Used by achievable_ndt
// for the applicable cell and by continuity checks for adjacent cells.
// M = 1 has no closed-form cell; see single_en_ndt.
double closed_form_value(const NetworkConfig& cfg, Regime regime,
                         CacheBranch branch);

// Best achievable NDT at cfg (closed-form route). Unbounded only when
// r = 0 with mu*M < 1. For M = 1 falls back to single_en_ndt.
double achievable_ndt(const NetworkConfig& cfg);

struct PlanAnchor {
    SchemeId scheme = SchemeId::CA;
    double cache_fraction = 0;
};

// Constructive delivery plan: run `primary` for a fraction alpha of the
// time and `secondary` for the rest, cache split accordingly.
struct DeliveryPlan {
    PlanAnchor primary;
    PlanAnchor secondary;
    double alpha = 1;
    Regime regime = Regime::Low;
    double value = 0;
    // Set when M = 1: the regular anchors divide by M-1, so the plan
    // degrades to sharing ZF(mu=1) with CA(mu=0) directly.
    bool single_en_fallback = false;
};

// Constructive route: pick the regime's anchor pair, solve alpha, blend
// the pipelined anchor NDTs. plan.value agrees with achievable_ndt(cfg).
DeliveryPlan achievable_plan(const NetworkConfig& cfg);

// M = 1 envelope: time-share ZF(mu=1) with pipelined CA(mu=0), alpha = mu.
double single_en_ndt(const NetworkConfig& cfg);

} // namespace fogndt
