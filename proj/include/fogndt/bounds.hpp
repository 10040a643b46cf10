// Cut-set lower bounds on the minimum NDT and the multiplicative
// optimality-gap audit against the achievable envelope.

#pragma once

#include "fogndt/ndt.hpp"
#include "fogndt/sweep.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace fogndt {

// Cut-set term for a decoder granted l EN observations plus the fronthaul:
// max(0, (K - (K-l)(M-l) mu) / (l + r)). Negative numerators clamp to 0
// (a negative bound is vacuous). l = 0 with r = 0 yields kUnbounded when
// the numerator is positive. Throws std::out_of_range unless
// 0 <= l <= min{M,K}.
double lower_bound_term(const NetworkConfig& cfg, int l);

struct BoundBreakdown {
    double edge_bound = 0; // K / min{M,K}
    std::vector<std::pair<int, double>> cutset_terms; // (l, value), l ascending
    double best = 0;
    // Set iff some cut-set term strictly beats the edge bound; smallest
    // such l on ties between terms.
    std::optional<int> argmax_l;
};

// All cut-set terms for l = 0..min{M,K} combined with the edge bound.
BoundBreakdown lower_bound(const NetworkConfig& cfg);

// achievable_ndt(cfg) / lower_bound(cfg).best; kUnbounded when the
// achievable side is unbounded (r = 0, mu M < 1).
double optimality_gap(const NetworkConfig& cfg);

struct GapPoint {
    int en_count = 0;
    int user_count = 0;
    double cache_fraction = 0;
    double fronthaul_rate = 0;
    double ratio = 0;
};

inline constexpr double kGapSlack = 1e-9; // absorbs float noise on ratio 3

struct GapReport {
    double max_ratio = 0;
    std::optional<GapPoint> argmax; // lexicographically first maximizer
    std::size_t evaluated = 0;
    std::size_t skipped = 0; // unbounded achievable, excluded from the audit
    std::vector<GapPoint> violations; // ratio > 3 + kGapSlack
};

// Evaluate optimality_gap over the grid. Deterministic row order; the
// recorded argmax is the first maximizer in (M, K, mu, r) order.
// Throws ValidationError on an empty grid.
GapReport gap_audit(const SweepSpec& grid);

} // namespace fogndt
