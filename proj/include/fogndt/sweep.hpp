// Parameter-grid plumbing shared by the gap audit and the CLI sweeps:
// grid specification, lexicographic expansion, row evaluation and the
// deterministic CSV encoding.

#pragma once

#include "fogndt/envelope.hpp"
#include "fogndt/ndt.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fogndt {

// One cache-fraction entry: either a literal value or the symbolic split
// point 1/M, which resolves per grid point so the branch boundary is hit
// exactly instead of through a rounded decimal.
struct MuValue {
    double value = 0;
    bool split_point = false; // true: resolve to 1/M of the current M

    static MuValue literal(double v) { return {v, false}; }
    static MuValue one_over_m() { return {0, true}; }
    double resolve(int en_count) const {
        return split_point ? 1.0 / en_count : value;
    }
};

struct SweepQuantities {
    bool achievable = true;
    bool lower_bound = true;
    bool gap = true;
    bool per_scheme = false; // adds pipelined ZF/IA/CA/CC columns
};

// A finite evaluation grid. Rows expand in lexicographic (M, K, mu, r)
// order; value lists are sorted and deduplicated first. With auto_rate
// set, r runs over 0.1, 0.2, ..., 2*min{M,K} per (M, K) pair and the
// rates list is ignored.
struct SweepSpec {
    std::vector<int> en_counts;
    std::vector<int> user_counts;
    std::vector<MuValue> cache_fractions;
    std::vector<double> rates;
    bool auto_rate = false;
    SweepQuantities quantities;
};

// The default audit grid: M, K in {2..6}, mu in {0, 0.05, ..., 1},
// r in {0.1, ..., 2 min{M,K}}.
SweepSpec default_audit_grid();

// Throws ValidationError on empty lists, out-of-range values, or an
// empty effective rate list.
void validate(const SweepSpec& spec);

// Invoke fn for each grid point in row order. Configs carry N = K; no
// evaluated quantity depends on the library size beyond validity.
void for_each_point(const SweepSpec& spec,
                    const std::function<void(const NetworkConfig&)>& fn);

struct SweepRow {
    NetworkConfig cfg;
    Regime regime = Regime::Low;
    std::optional<double> achievable;
    std::optional<double> lower_bound;
    std::optional<double> gap;
    std::optional<double> pl_zf, pl_ia, pl_ca, pl_cc;
};

SweepRow evaluate_row(const NetworkConfig& cfg, const SweepQuantities& q);

// 12 significant digits, "inf" for unbounded values, locale-independent.
std::string format_value(double v);

std::string csv_header(const SweepQuantities& q);
std::string csv_row(const SweepRow& row, const SweepQuantities& q);

// Write the full sweep as CSV. Deterministic: identical spec, identical
// bytes.
void write_csv(std::ostream& out, const SweepSpec& spec);

} // namespace fogndt
