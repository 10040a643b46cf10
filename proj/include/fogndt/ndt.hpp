// Core NDT types and per-scheme evaluators for an M x K fog network
// with multicast fronthaul: scheme NDT pairs, pipelined/serial
// composition, time sharing and the fronthaul-rate regime thresholds.

#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace fogndt {

// Thrown when a NetworkConfig or request violates a structural invariant.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an operation is invoked outside its defining operating point
// (e.g. a delivery scheme at the wrong cache fraction).
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// One operating point of the fog network.
struct NetworkConfig {
    int en_count = 1;          // M, edge nodes
    int user_count = 1;        // K, served users
    int file_count = 1;        // N, popular files; N >= K
    double cache_fraction = 0; // mu in [0,1], per-EN share of the library
    double fronthaul_rate = 0; // r >= 0, fronthaul power-scaling exponent
};

// Throws ValidationError unless M,K >= 1, N >= K, 0 <= mu <= 1, r >= 0.
void validate(const NetworkConfig& cfg);

inline int min_mk(const NetworkConfig& cfg) {
    return cfg.en_count < cfg.user_count ? cfg.en_count : cfg.user_count;
}
inline int max_mk(const NetworkConfig& cfg) {
    return cfg.en_count > cfg.user_count ? cfg.en_count : cfg.user_count;
}

// Content delivery schemes. ZF and IA work purely from edge caches,
// CA ships everything over the fronthaul, CC multicasts XORed subfiles.
enum class SchemeId { ZF, IA, CA, CC };

const char* to_string(SchemeId s);

// Fronthaul/edge NDT pair of one scheme at one operating point.
// Values are extended nonnegative reals; fronthaul may be kUnbounded
// only when r = 0 with a nonzero fronthaul load.
struct NdtPair {
    double fronthaul = 0; // delta_F
    double edge = 0;      // delta_E
};

// NDT pair of `scheme` at cfg. ZF requires mu = 1, IA and CC require
// mu = 1/M (the cache points at which those schemes are defined);
// CA carries no cache requirement. Throws PreconditionError otherwise.
NdtPair scheme_ndt(SchemeId scheme, const NetworkConfig& cfg);

// Simultaneous fronthaul+edge operation: max of the two NDTs.
double pipelined_ndt(const NdtPair& pair);

// Fronthaul phase followed by edge phase: sum of the two NDTs.
double serial_ndt(const NdtPair& pair);

struct ShareResult {
    double alpha = 0; // fraction of time spent on policy 1
    double value = 0; // combined NDT
};

// Time-share two policies with NDTs delta1/delta2 at cache points mu1/mu2
// so the blend lands at cache point mu. alpha solves
// mu = alpha*mu1 + (1-alpha)*mu2. Endpoints are exact: mu == mu1 returns
// delta1 untouched. Throws std::out_of_range when mu lies outside the
// anchor interval, ValidationError when mu1 == mu2.
ShareResult time_share(double delta1, double mu1, double delta2, double mu2,
                       double mu);

// alpha-weighted blend that keeps endpoints exact and never multiplies
// an unbounded value by zero.
double blend(double alpha, double value1, double value2);

// Fronthaul-rate breakpoints separating the four delivery regimes.
// Always ordered 0 <= r1 <= r2 <= r3.
struct RegimeThresholds {
    double r1 = 0; // K(M-1)/(M+K-1)
    double r2 = 0; // (M-1) min{M,K} / M
    double r3 = 0; // min{M,K}
};

RegimeThresholds regime_thresholds(const NetworkConfig& cfg);

// Which side of a pipelined scheme dominates the best choice at mu = 1/M.
enum class PipelinedBranch { EdgeIA, FronthaulCC, EdgeCC, EdgeCA };

const char* to_string(PipelinedBranch b);

struct BestPipelined {
    SchemeId scheme = SchemeId::IA;
    PipelinedBranch branch = PipelinedBranch::EdgeIA;
    double value = 0;
};

// Minimizer over pipelined IA, CC and CA at cache fraction 1/M. The branch
// label follows the r-interval against the thresholds; exact breakpoint
// hits take the lower-r label (the adjacent values coincide).
// Requires cfg.cache_fraction == 1/M.
BestPipelined best_pipelined(const NetworkConfig& cfg);

} // namespace fogndt
