// fogndt - command-line front end for the fog-network NDT library.
//
// Subcommands:
//   eval      single operating point: achievable NDT, delivery plan,
//             lower-bound breakdown, optimality gap
//   sweep     CSV over a parameter grid (figure-style series)
//   audit     optimality-gap audit over a grid, JSON report
//   simulate  bit-level coded-multicast delivery run, JSON report
//
// Exit codes: 0 success, 2 usage/validation, 3 I/O,
// 4 simulated reconstruction failure.

#include "fogndt/bounds.hpp"
#include "fogndt/envelope.hpp"
#include "fogndt/multicast.hpp"
#include "fogndt/ndt.hpp"
#include "fogndt/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using fogndt::MuValue;
using fogndt::NetworkConfig;
using fogndt::SweepSpec;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitReconstruction = 4;

// JSON has no infinity literal; unbounded values encode as the string
// "inf", mirroring the CSV convention.
json number_or_inf(double v) {
    if (std::isinf(v)) return json("inf");
    return json(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, sep)) out.push_back(token);
    return out;
}

double parse_double(const std::string& token) {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size())
        throw fogndt::ValidationError("malformed number '" + token + "'");
    return v;
}

int parse_int(const std::string& token) {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size())
        throw fogndt::ValidationError("malformed integer '" + token + "'");
    return v;
}

// "a,b,c" or "lo:hi" or "lo:hi:step", inclusive bounds.
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const std::string& piece : split(text, ',')) {
        const std::vector<std::string> range = split(piece, ':');
        if (range.size() == 1) {
            out.push_back(parse_int(piece));
        } else if (range.size() == 2 || range.size() == 3) {
            const int lo = parse_int(range[0]);
            const int hi = parse_int(range[1]);
            const int step = range.size() == 3 ? parse_int(range[2]) : 1;
            if (step <= 0)
                throw fogndt::ValidationError("range step must be positive in '" +
                                              piece + "'");
            for (int v = lo; v <= hi; v += step) out.push_back(v);
        } else {
            throw fogndt::ValidationError("malformed range '" + piece + "'");
        }
    }
    return out;
}

// "lo:hi:step" expanded by index to avoid accumulating rounding error.
std::vector<double> expand_range(double lo, double hi, double step) {
    if (step <= 0)
        throw fogndt::ValidationError("range step must be positive");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double v = lo + i * step;
        if (v > hi + step * 1e-9) break;
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& piece : split(text, ',')) {
        const std::vector<std::string> range = split(piece, ':');
        if (range.size() == 1) {
            out.push_back(parse_double(piece));
        } else if (range.size() == 3) {
            for (double v : expand_range(parse_double(range[0]),
                                         parse_double(range[1]),
                                         parse_double(range[2])))
                out.push_back(v);
        } else {
            throw fogndt::ValidationError("malformed range '" + piece + "'");
        }
    }
    return out;
}

// A mu token is a decimal, a lo:hi:step range, or the literal "1/M",
// which resolves per grid point so the split cache point is hit exactly.
std::vector<MuValue> parse_mu_list(const std::string& text) {
    std::vector<MuValue> out;
    for (const std::string& piece : split(text, ',')) {
        if (piece == "1/M") {
            out.push_back(MuValue::one_over_m());
            continue;
        }
        for (double v : parse_double_list(piece))
            out.push_back(MuValue::literal(v));
    }
    return out;
}

double parse_mu_scalar(const std::string& text, int en_count) {
    if (text == "1/M") return 1.0 / en_count;
    return parse_double(text);
}

void apply_quantities(const std::vector<std::string>& names,
                      fogndt::SweepQuantities& q) {
    q = {false, false, false, false};
    for (const std::string& name : names) {
        if (name == "achievable") q.achievable = true;
        else if (name == "lower_bound") q.lower_bound = true;
        else if (name == "gap") q.gap = true;
        else if (name == "per_scheme") q.per_scheme = true;
        else
            throw fogndt::ValidationError("unknown quantity '" + name + "'");
    }
}

SweepSpec load_config_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open config file '" + path + "'");
    json doc = json::parse(in);
    SweepSpec spec;
    if (doc.contains("M_values"))
        spec.en_counts = doc["M_values"].get<std::vector<int>>();
    if (doc.contains("K_values"))
        spec.user_counts = doc["K_values"].get<std::vector<int>>();
    if (doc.contains("mu_values"))
        for (const json& entry : doc["mu_values"]) {
            if (entry.is_string()) {
                if (entry.get<std::string>() != "1/M")
                    throw fogndt::ValidationError(
                        "mu_values strings must be \"1/M\"");
                spec.cache_fractions.push_back(MuValue::one_over_m());
            } else {
                spec.cache_fractions.push_back(
                    MuValue::literal(entry.get<double>()));
            }
        }
    if (doc.contains("r_values")) {
        if (doc["r_values"].is_string()) {
            if (doc["r_values"].get<std::string>() != "auto")
                throw fogndt::ValidationError("r_values string must be \"auto\"");
            spec.auto_rate = true;
        } else {
            spec.rates = doc["r_values"].get<std::vector<double>>();
        }
    }
    if (doc.contains("quantities"))
        apply_quantities(doc["quantities"].get<std::vector<std::string>>(),
                         spec.quantities);
    return spec;
}

json plan_to_json(const fogndt::DeliveryPlan& plan) {
    return json{
        {"anchor1",
         {{"scheme", fogndt::to_string(plan.primary.scheme)},
          {"mu", plan.primary.cache_fraction}}},
        {"anchor2",
         {{"scheme", fogndt::to_string(plan.secondary.scheme)},
          {"mu", plan.secondary.cache_fraction}}},
        {"alpha", plan.alpha},
        {"regime", fogndt::to_string(plan.regime)},
        {"value", number_or_inf(plan.value)},
        {"single_en_fallback", plan.single_en_fallback},
    };
}

json breakdown_to_json(const fogndt::BoundBreakdown& bound) {
    json terms = json::array();
    for (const auto& [l, value] : bound.cutset_terms)
        terms.push_back(json{{"l", l}, {"value", number_or_inf(value)}});
    json out{{"edge_bound", bound.edge_bound},
             {"cutset_terms", terms},
             {"best", number_or_inf(bound.best)}};
    out["argmax_l"] = bound.argmax_l ? json(*bound.argmax_l) : json(nullptr);
    return out;
}

json config_to_json(const NetworkConfig& cfg) {
    return json{{"M", cfg.en_count},
                {"K", cfg.user_count},
                {"N", cfg.file_count},
                {"mu", cfg.cache_fraction},
                {"r", cfg.fronthaul_rate}};
}

int cmd_eval(const NetworkConfig& cfg) {
    fogndt::validate(cfg);
    const double achievable = fogndt::achievable_ndt(cfg);
    const fogndt::BoundBreakdown bound = fogndt::lower_bound(cfg);
    json out{
        {"config", config_to_json(cfg)},
        {"regime", fogndt::to_string(fogndt::regime_of(cfg))},
        {"achievable", number_or_inf(achievable)},
        {"plan", plan_to_json(fogndt::achievable_plan(cfg))},
        {"lower_bound", breakdown_to_json(bound)},
        {"gap", number_or_inf(fogndt::optimality_gap(cfg))},
    };
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_sweep(const SweepSpec& spec, const std::string& output_path) {
    fogndt::validate(spec);
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot open '" << output_path
                  << "' for writing\n";
        return kExitIo;
    }
    fogndt::write_csv(out, spec);
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing '" << output_path << "'\n";
        return kExitIo;
    }
    return 0;
}

int cmd_audit(const SweepSpec& spec) {
    const fogndt::GapReport report = fogndt::gap_audit(spec);
    json argmax = nullptr;
    if (report.argmax)
        argmax = json{{"M", report.argmax->en_count},
                      {"K", report.argmax->user_count},
                      {"mu", report.argmax->cache_fraction},
                      {"r", report.argmax->fronthaul_rate},
                      {"ratio", report.argmax->ratio}};
    json violations = json::array();
    for (const fogndt::GapPoint& p : report.violations)
        violations.push_back(json{{"M", p.en_count},
                                  {"K", p.user_count},
                                  {"mu", p.cache_fraction},
                                  {"r", p.fronthaul_rate},
                                  {"ratio", p.ratio}});
    json out{{"n_points", report.evaluated},
             {"skipped", report.skipped},
             {"max_ratio", report.max_ratio},
             {"argmax", argmax},
             {"violations", violations}};
    std::cout << out.dump(2) << "\n";
    return report.violations.empty() ? 0 : 1;
}

int cmd_simulate(const NetworkConfig& cfg, std::vector<int> demand,
                 std::uint32_t seed, int file_bits) {
    if (demand.empty())
        demand = fogndt::draw_demand(cfg.file_count, cfg.user_count, seed);
    const fogndt::DeliveryReport report =
        fogndt::run_delivery(cfg, demand, seed, file_bits);
    json recon = json::array();
    for (bool ok : report.per_en_reconstruction) recon.push_back(ok);
    json out{
        {"config", config_to_json(cfg)},
        {"seed", seed},
        {"demand", report.demand},
        {"fronthaul_bits", report.fronthaul_bits},
        {"implied_delta_f", number_or_inf(report.implied_delta_f)},
        {"per_en_reconstruction", recon},
        {"edge_delta_e", report.edge_delta_e},
        {"file_bits", report.file_bits},
        {"original_bits", report.original_bits},
    };
    std::cout << out.dump(2) << "\n";
    return fogndt::all_reconstructed(report) ? 0 : kExitReconstruction;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized delivery time calculator for cache-aided fog "
                 "networks with multicast fronthaul"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand(
        "eval", "Evaluate one operating point and print a JSON summary");
    int eval_m = 0, eval_k = 0, eval_n = 0;
    std::string eval_mu;
    double eval_r = 0;
    eval->add_option("--M", eval_m, "Edge nodes")->required();
    eval->add_option("--K", eval_k, "Users")->required();
    eval->add_option("--N", eval_n, "Popular files (N >= K)")->required();
    eval->add_option("--mu", eval_mu, "Cache fraction in [0,1], or 1/M")
        ->required();
    eval->add_option("--r", eval_r, "Fronthaul rate (>= 0)")->required();

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "Evaluate a parameter grid and write CSV rows");
    std::string sweep_ms, sweep_ks, sweep_mus, sweep_rs, sweep_out, sweep_cfg;
    bool sweep_per_scheme = false;
    sweep->add_option("--M", sweep_ms, "M list/range, e.g. 3 or 2,3,4 or 2:6");
    sweep->add_option("--K", sweep_ks, "K list/range");
    sweep->add_option("--mu", sweep_mus,
                      "mu list/range, entries may be 1/M, e.g. 0:1:0.05");
    sweep->add_option("--r", sweep_rs,
                      "r list/range, e.g. 0.25:4:0.25, or auto "
                      "(0.1 steps up to 2*min{M,K})");
    sweep->add_option("--config", sweep_cfg,
                      "JSON file with M_values/K_values/mu_values/r_values/"
                      "quantities; explicit flags override");
    sweep->add_flag("--per-scheme", sweep_per_scheme,
                    "Append pipelined per-scheme NDT columns");
    sweep->add_option("--output", sweep_out, "CSV output path")->required();

    // audit
    auto* audit = app.add_subcommand(
        "audit", "Audit achievable/lower-bound ratio over a grid (JSON)");
    std::string audit_ms, audit_ks, audit_mus, audit_rs, audit_cfg;
    audit->add_option("--M", audit_ms, "M list/range (default 2:6)");
    audit->add_option("--K", audit_ks, "K list/range (default 2:6)");
    audit->add_option("--mu", audit_mus, "mu list/range (default 0:1:0.05)");
    audit->add_option("--r", audit_rs, "r list/range or auto (default auto)");
    audit->add_option("--config", audit_cfg, "JSON grid file, as for sweep");

    // simulate
    auto* simulate = app.add_subcommand(
        "simulate",
        "Run the coded-multicast fronthaul protocol on random file bits");
    int sim_m = 0, sim_k = 0, sim_n = 0, sim_l = 0;
    double sim_r = 0;
    std::uint32_t sim_seed = 0;
    std::vector<int> sim_demand;
    simulate->add_option("--M", sim_m, "Edge nodes")->required();
    simulate->add_option("--K", sim_k, "Users")->required();
    simulate->add_option("--N", sim_n, "Popular files (N >= K)")->required();
    simulate->add_option("--r", sim_r, "Fronthaul rate (> 0)")->required();
    simulate->add_option("--L", sim_l, "File size in bits (padded to M | L)")
        ->required();
    simulate->add_option("--seed", sim_seed, "Library/demand seed");
    simulate->add_option("--demand", sim_demand,
                         "Demanded file indices, e.g. 1,1,2 (default: drawn "
                         "distinct from the seed)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(eval)) {
            NetworkConfig cfg{eval_m, eval_k, eval_n,
                              parse_mu_scalar(eval_mu, eval_m), eval_r};
            return cmd_eval(cfg);
        }
        if (app.got_subcommand(sweep) || app.got_subcommand(audit)) {
            const bool is_audit = app.got_subcommand(audit);
            const std::string& cfg_path = is_audit ? audit_cfg : sweep_cfg;
            SweepSpec spec;
            if (!cfg_path.empty()) spec = load_config_spec(cfg_path);
            else if (is_audit) spec = fogndt::default_audit_grid();
            const std::string& ms = is_audit ? audit_ms : sweep_ms;
            const std::string& ks = is_audit ? audit_ks : sweep_ks;
            const std::string& mus = is_audit ? audit_mus : sweep_mus;
            const std::string& rs = is_audit ? audit_rs : sweep_rs;
            if (!ms.empty()) spec.en_counts = parse_int_list(ms);
            if (!ks.empty()) spec.user_counts = parse_int_list(ks);
            if (!mus.empty()) spec.cache_fractions = parse_mu_list(mus);
            if (!rs.empty()) {
                if (rs == "auto") {
                    spec.auto_rate = true;
                    spec.rates.clear();
                } else {
                    spec.auto_rate = false;
                    spec.rates = parse_double_list(rs);
                }
            }
            if (is_audit) return cmd_audit(spec);
            spec.quantities.per_scheme |= sweep_per_scheme;
            return cmd_sweep(spec, sweep_out);
        }
        if (app.got_subcommand(simulate)) {
            NetworkConfig cfg{sim_m, sim_k, sim_n,
                              sim_m >= 1 ? 1.0 / sim_m : 0.0, sim_r};
            return cmd_simulate(cfg, sim_demand, sim_seed, sim_l);
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
