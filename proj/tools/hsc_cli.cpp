#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hsc/experiment.hpp"

namespace {

std::vector<double> parse_snr_range(const std::string& spec) {
    // "lo:step:hi" in dB, inclusive endpoints.
    std::vector<double> out;
    double lo, step, hi;
    char c1, c2;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':' || step <= 0)
        throw CLI::ValidationError("--snr", "expected lo:step:hi with positive step");
    for (double s = lo; s <= hi + 1e-9; s += step) out.push_back(s);
    return out;
}

struct CommonFlags {
    std::string config_path, snr_spec, ber_spec, assoc, out_path = "-";
    std::string format = "csv", curve_path;
    int L = 0, k = 0, trials = 0, qos_trials = 0;
    long long seed = -1;
    bool full = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file");
    cmd->add_option("--snr", f.snr_spec, "SNR sweep lo:step:hi (dB)");
    cmd->add_option("--L", f.L, "Number of subcarriers");
    cmd->add_option("--k", f.k, "Semantic symbols per word");
    cmd->add_option("--trials", f.trials, "Channel realizations per SNR point");
    cmd->add_option("--qos-trials", f.qos_trials, "QoS realizations per channel");
    cmd->add_option("--seed", f.seed, "Master RNG seed");
    cmd->add_option("--ber", f.ber_spec, "BER target (number) or 'none' for capacity");
    cmd->add_option("--assoc", f.assoc, "Association policy: sst | ost")
        ->check(CLI::IsMember({"sst", "ost"}));
    cmd->add_option("--out", f.out_path, "Output path ('-' for stdout)");
    cmd->add_option("--format", f.format, "Output format: csv | text")
        ->check(CLI::IsMember({"csv", "text"}));
    cmd->add_flag("--full", f.full, "Full-scale run (500 channel x 10 QoS trials)");
    cmd->add_option("--curve", f.curve_path, "Similarity curve JSON file");
}

int run(hsc::Problem problem, const CommonFlags& f) {
    hsc::ExperimentConfig cfg;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) {
            std::cerr << "cannot open config: " << f.config_path << '\n';
            return 1;
        }
        cfg = hsc::ExperimentConfig::from_json(in);
    }
    cfg.problem = problem;
    if (!f.snr_spec.empty()) cfg.snr_points_db = parse_snr_range(f.snr_spec);
    if (cfg.snr_points_db.empty())
        for (double s = 10.0; s <= 35.0 + 1e-9; s += 2.5) cfg.snr_points_db.push_back(s);
    if (f.L > 0) cfg.subcarriers = f.L;
    if (f.k > 0) cfg.symbols_per_word = f.k;
    if (f.trials > 0) cfg.trials = f.trials;
    if (f.qos_trials > 0) cfg.qos_trials = f.qos_trials;
    if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
    if (!f.assoc.empty()) cfg.association = f.assoc;
    if (!f.ber_spec.empty()) {
        if (f.ber_spec == "none") cfg.ber.reset();
        else cfg.ber = std::stod(f.ber_spec);
    }
    if (f.full) {
        cfg.trials = 500;
        cfg.qos_trials = 10;
    }

    std::optional<hsc::SimilarityCurve> curve;
    if (!f.curve_path.empty()) {
        std::ifstream in(f.curve_path);
        if (!in) {
            std::cerr << "cannot open curve: " << f.curve_path << '\n';
            return 1;
        }
        curve = hsc::load_curve(in);
    }

    const hsc::RunMetrics metrics = hsc::run_sweep(cfg, curve ? &*curve : nullptr);
    if (f.out_path == "-") {
        hsc::emit_results(metrics, std::cout, f.format);
    } else {
        std::ofstream out(f.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write: " << f.out_path << '\n';
            return 1;
        }
        hsc::emit_results(metrics, out, f.format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid semantic/Shannon multi-carrier delay-minimization sweeps"};
    app.require_subcommand(1);

    CommonFlags sum_flags, minmax_flags;
    CLI::App* sum = app.add_subcommand("sum", "Minimize the sum of subcarrier delays");
    CLI::App* minmax = app.add_subcommand("minmax", "Minimize the maximum subcarrier delay");
    add_common(sum, sum_flags);
    add_common(minmax, minmax_flags);

    CLI11_PARSE(app, argc, argv);
    try {
        if (sum->parsed()) return run(hsc::Problem::Sum, sum_flags);
        return run(hsc::Problem::MinMax, minmax_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
