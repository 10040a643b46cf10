#include "fogndt/sweep.hpp"

#include "fogndt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fogndt {

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<double> resolve_mu(const std::vector<MuValue>& entries,
                               int en_count) {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const MuValue& e : entries) out.push_back(e.resolve(en_count));
    return sorted_unique(std::move(out));
}

std::vector<double> auto_rates(int en_count, int user_count) {
    const int mn = std::min(en_count, user_count);
    std::vector<double> out;
    out.reserve(20 * mn);
    for (int j = 1; j <= 20 * mn; ++j) out.push_back(j / 10.0);
    return out;
}

} // namespace

SweepSpec default_audit_grid() {
    SweepSpec spec;
    spec.en_counts = {2, 3, 4, 5, 6};
    spec.user_counts = {2, 3, 4, 5, 6};
    for (int i = 0; i <= 20; ++i)
        spec.cache_fractions.push_back(MuValue::literal(i / 20.0));
    spec.auto_rate = true;
    return spec;
}

void validate(const SweepSpec& spec) {
    if (spec.en_counts.empty() || spec.user_counts.empty() ||
        spec.cache_fractions.empty())
        throw ValidationError("sweep grid has an empty value list");
    if (!spec.auto_rate && spec.rates.empty())
        throw ValidationError("sweep grid has no fronthaul rates");
    for (int m : spec.en_counts)
        if (m < 1) throw ValidationError("sweep M values must be >= 1");
    for (int k : spec.user_counts)
        if (k < 1) throw ValidationError("sweep K values must be >= 1");
    for (const MuValue& mu : spec.cache_fractions)
        if (!mu.split_point && !(mu.value >= 0.0 && mu.value <= 1.0))
            throw ValidationError("sweep mu values must lie in [0,1]");
    for (double r : spec.rates)
        if (!(r >= 0.0)) throw ValidationError("sweep r values must be >= 0");
}

void for_each_point(const SweepSpec& spec,
                    const std::function<void(const NetworkConfig&)>& fn) {
    validate(spec);
    const std::vector<int> ms = sorted_unique(spec.en_counts);
    const std::vector<int> ks = sorted_unique(spec.user_counts);
    const std::vector<double> fixed_rates =
        spec.auto_rate ? std::vector<double>{} : sorted_unique(spec.rates);
    for (int m : ms) {
        const std::vector<double> mus = resolve_mu(spec.cache_fractions, m);
        for (int k : ks) {
            const std::vector<double>& rs =
                spec.auto_rate ? auto_rates(m, k) : fixed_rates;
            for (double mu : mus) {
                for (double r : rs) {
                    NetworkConfig cfg{m, k, k, mu, r};
                    fn(cfg);
                }
            }
        }
    }
}

SweepRow evaluate_row(const NetworkConfig& cfg, const SweepQuantities& q) {
    validate(cfg);
    SweepRow row;
    row.cfg = cfg;
    row.regime = regime_of(cfg);
    if (q.achievable || q.gap) row.achievable = achievable_ndt(cfg);
    if (q.lower_bound || q.gap) row.lower_bound = lower_bound(cfg).best;
    if (q.gap) {
        row.gap = std::isinf(*row.achievable) ? kUnbounded
                                              : *row.achievable / *row.lower_bound;
    }
    if (q.per_scheme) {
        NetworkConfig at = cfg;
        at.cache_fraction = 1.0;
        row.pl_zf = pipelined_ndt(scheme_ndt(SchemeId::ZF, at));
        at.cache_fraction = 1.0 / cfg.en_count;
        row.pl_ia = pipelined_ndt(scheme_ndt(SchemeId::IA, at));
        row.pl_cc = pipelined_ndt(scheme_ndt(SchemeId::CC, at));
        row.pl_ca = pipelined_ndt(scheme_ndt(SchemeId::CA, at));
    }
    return row;
}

std::string format_value(double v) {
    if (std::isinf(v)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_header(const SweepQuantities& q) {
    std::string header = "M,K,mu,r,regime,achievable,lower_bound,gap";
    if (q.per_scheme) header += ",pl_zf,pl_ia,pl_ca,pl_cc";
    return header;
}

std::string csv_row(const SweepRow& row, const SweepQuantities& q) {
    std::string line = std::to_string(row.cfg.en_count) + "," +
                       std::to_string(row.cfg.user_count) + "," +
                       format_value(row.cfg.cache_fraction) + "," +
                       format_value(row.cfg.fronthaul_rate) + "," +
                       to_string(row.regime);
    line += "," + (q.achievable ? format_value(*row.achievable) : std::string());
    line += "," + (q.lower_bound ? format_value(*row.lower_bound) : std::string());
    line += "," + (q.gap ? format_value(*row.gap) : std::string());
    if (q.per_scheme) {
        line += "," + format_value(*row.pl_zf);
        line += "," + format_value(*row.pl_ia);
        line += "," + format_value(*row.pl_ca);
        line += "," + format_value(*row.pl_cc);
    }
    return line;
}

void write_csv(std::ostream& out, const SweepSpec& spec) {
    out << csv_header(spec.quantities) << "\n";
    for_each_point(spec, [&](const NetworkConfig& cfg) {
        out << csv_row(evaluate_row(cfg, spec.quantities), spec.quantities)
            << "\n";
    });
}

} // namespace fogndt
