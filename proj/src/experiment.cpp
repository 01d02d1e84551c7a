#include "hsc/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "hsc/association.hpp"
#include "hsc/channel.hpp"
#include "hsc/link.hpp"
#include "hsc/minmax_solver.hpp"
#include "hsc/problem.hpp"
#include "hsc/sum_solver.hpp"
#include "hsc/text.hpp"

namespace hsc {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string problem_name(Problem p) { return p == Problem::Sum ? "sum" : "minmax"; }
std::string scope_name(QosScope s) {
    return s == QosScope::Sentence ? "sentence" : "subcarrier";
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    return mix64(mix64(mix64(master ^ mix64(a)) ^ mix64(b)) ^ mix64(c));
}

void ExperimentConfig::validate() const {
    if (subcarriers < 1 || symbols_per_word < 1 || trials < 1 || qos_trials < 1 ||
        num_sentences < 1)
        throw std::invalid_argument("config: all counts must be at least 1");
    if (association != "sst" && association != "ost")
        throw std::invalid_argument("config: association must be sst or ost");
    if (snr_points_db.empty())
        throw std::invalid_argument("config: need at least one SNR point");
    for (double s : snr_points_db)
        if (!std::isfinite(s)) throw std::invalid_argument("config: non-finite SNR point");
    if (ber) (void)gamma_from_ber(*ber);  // validates the range
    if (!(qos_range.first > 0.0) || qos_range.first > qos_range.second ||
        qos_range.second > 1.0)
        throw std::invalid_argument("config: bad QoS threshold range");
    if (word_range.first < 1 || word_range.first > word_range.second)
        throw std::invalid_argument("config: bad word-count range");
}

ExperimentConfig ExperimentConfig::from_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    ExperimentConfig c;
    const std::string prob = j.value("problem", problem_name(c.problem));
    if (prob == "sum") c.problem = Problem::Sum;
    else if (prob == "minmax") c.problem = Problem::MinMax;
    else throw std::invalid_argument("config: problem must be sum or minmax");

    c.subcarriers = j.value("subcarriers", c.subcarriers);
    c.symbols_per_word = j.value("symbols_per_word", c.symbols_per_word);
    c.association = j.value("association", c.association);
    c.snr_points_db = j.value("snr_points_db", c.snr_points_db);
    c.trials = j.value("trials", c.trials);
    c.qos_trials = j.value("qos_trials", c.qos_trials);
    if (j.contains("ber") && !j["ber"].is_null()) c.ber = j["ber"].get<double>();
    c.noise_psd_dbm_hz = j.value("noise_psd_dbm_hz", c.noise_psd_dbm_hz);
    c.total_bandwidth_hz = j.value("total_bandwidth_hz", c.total_bandwidth_hz);
    c.carrier_freq_hz = j.value("carrier_freq_hz", c.carrier_freq_hz);
    c.distance_m = j.value("distance_m", c.distance_m);
    c.path_loss_exponent = j.value("path_loss_exponent", c.path_loss_exponent);
    c.num_sentences = j.value("num_sentences", c.num_sentences);
    if (j.contains("word_range"))
        c.word_range = {j["word_range"][0].get<int>(), j["word_range"][1].get<int>()};
    c.chars_per_word = j.value("chars_per_word", c.chars_per_word);
    if (j.contains("qos_range"))
        c.qos_range = {j["qos_range"][0].get<double>(), j["qos_range"][1].get<double>()};
    const std::string scope = j.value("qos_scope", scope_name(c.qos_scope));
    if (scope == "sentence") c.qos_scope = QosScope::Sentence;
    else if (scope == "subcarrier") c.qos_scope = QosScope::Subcarrier;
    else throw std::invalid_argument("config: qos_scope must be sentence or subcarrier");
    c.saturation = j.value("saturation", c.saturation);
    c.seed = j.value("seed", c.seed);
    c.validate();
    return c;
}

void ExperimentConfig::to_json(std::ostream& out) const {
    nlohmann::json j;
    j["problem"] = problem_name(problem);
    j["subcarriers"] = subcarriers;
    j["symbols_per_word"] = symbols_per_word;
    j["association"] = association;
    j["snr_points_db"] = snr_points_db;
    j["trials"] = trials;
    j["qos_trials"] = qos_trials;
    if (ber) j["ber"] = *ber; else j["ber"] = nullptr;
    j["noise_psd_dbm_hz"] = noise_psd_dbm_hz;
    j["total_bandwidth_hz"] = total_bandwidth_hz;
    j["carrier_freq_hz"] = carrier_freq_hz;
    j["distance_m"] = distance_m;
    j["path_loss_exponent"] = path_loss_exponent;
    j["num_sentences"] = num_sentences;
    j["word_range"] = {word_range.first, word_range.second};
    j["chars_per_word"] = chars_per_word;
    j["qos_range"] = {qos_range.first, qos_range.second};
    j["qos_scope"] = scope_name(qos_scope);
    j["saturation"] = saturation;
    j["seed"] = seed;
    out << j.dump(2) << '\n';
}

RunMetrics run_sweep(const ExperimentConfig& config, const SimilarityCurve* curve_in) {
    config.validate();
    const SimilarityCurve curve =
        curve_in ? *curve_in : default_curve(config.symbols_per_word, config.saturation);

    const int L = config.subcarriers;
    const double bandwidth = config.total_bandwidth_hz / L;
    const double noise_psd = std::pow(10.0, (config.noise_psd_dbm_hz - 30.0) / 10.0);
    const double path_gain = path_loss(config.carrier_freq_hz, config.distance_m,
                                       config.path_loss_exponent);
    const double gap = config.ber ? gamma_from_ber(*config.ber) : 1.0;

    TextPartition partition = TextPartition::from_sentences(
        generate_text(config.num_sentences, config.word_range, config.chars_per_word,
                      derive_seed(config.seed, 0, 0, 0)),
        L);
    const Assignment sst = assign_sst(partition);

    RunMetrics metrics;
    for (std::size_t si = 0; si < config.snr_points_db.size(); ++si) {
        const double snr_db = config.snr_points_db[si];
        const double p_tot = power_for_snr(std::pow(10.0, snr_db / 10.0), path_gain,
                                           noise_psd, bandwidth);
        SnrPointMetrics point;
        point.snr_db = snr_db;
        double util = 0, improv = 0, delay = 0;

        for (int t = 0; t < config.trials; ++t) {
            const ChannelRealization channel = sample_channels(
                L, path_gain, bandwidth, noise_psd, derive_seed(config.seed, si + 1, t + 1, 0));
            const Assignment scheme_assignment = config.association == "ost"
                                                     ? assign_ost(partition, channel)
                                                     : sst;
            for (int q = 0; q < config.qos_trials; ++q) {
                const std::uint64_t qos_seed = derive_seed(config.seed, si + 1, t + 1, q + 1);
                std::vector<double> carrier_thresholds;
                if (config.qos_scope == QosScope::Subcarrier) {
                    std::mt19937_64 rng(qos_seed);
                    std::uniform_real_distribution<double> dist(config.qos_range.first,
                                                                config.qos_range.second);
                    carrier_thresholds.resize(static_cast<std::size_t>(L));
                    for (double& v : carrier_thresholds) v = dist(rng);
                } else {
                    qos_sample(partition, config.qos_range, qos_seed);
                }
                const std::vector<double>* thr =
                    carrier_thresholds.empty() ? nullptr : &carrier_thresholds;

                try {
                    const ProblemInstance base_inst =
                        build_instance(partition, sst, channel, curve, p_tot, gap, thr);
                    const ProblemInstance scheme_inst = build_instance(
                        partition, scheme_assignment, channel, curve, p_tot, gap, thr);

                    double base_obj, scheme_obj;
                    int semantic_count = 0;
                    if (config.problem == Problem::Sum) {
                        const BoolArray none = BoolArray::Constant(L, false);
                        auto base = solve_p2(base_inst, none);
                        if (!base) throw std::runtime_error("baseline infeasible");
                        base_obj = base->objective;
                        const SumSolution sol = alternate_optimize(scheme_inst);
                        scheme_obj = sol.objective;
                        semantic_count = static_cast<int>(sol.semantic.count());
                    } else {
                        std::vector<int> all(static_cast<std::size_t>(L));
                        std::iota(all.begin(), all.end(), 0);
                        auto base = equal_delay_allocation(base_inst, all, p_tot);
                        if (!base) throw std::runtime_error("baseline infeasible");
                        base_obj = base->delay;
                        const MinMaxSolution sol = minmax_heuristic(scheme_inst);
                        scheme_obj = sol.max_delay;
                        semantic_count = static_cast<int>(sol.semantic.count());
                    }

                    util += 100.0 * semantic_count / L;
                    improv += base_obj > 0 ? 100.0 * (base_obj - scheme_obj) / base_obj : 0.0;
                    delay += scheme_obj;
                    ++point.trials_ok;
                } catch (const std::exception&) {
                    ++point.trials_infeasible;
                }
            }
        }
        if (point.trials_ok > 0) {
            point.utilization_pct = util / point.trials_ok;
            point.improvement_pct = improv / point.trials_ok;
            point.mean_delay_s = delay / point.trials_ok;
        }
        metrics.points.push_back(point);
    }
    return metrics;
}

void emit_results(const RunMetrics& metrics, std::ostream& out,
                  const std::string& format) {
    const bool csv = format == "csv";
    if (!csv && format != "text")
        throw std::invalid_argument("format must be csv or text");
    const char sep = csv ? ',' : ' ';
    out << "snr_db" << sep << "utilization_pct" << sep << "improvement_pct" << sep
        << "mean_delay_s" << sep << "trials_ok" << sep << "trials_infeasible" << '\n';
    char buf[64];
    const auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return std::string(buf);
    };
    for (const SnrPointMetrics& p : metrics.points) {
        out << num(p.snr_db) << sep << num(p.utilization_pct) << sep
            << num(p.improvement_pct) << sep << num(p.mean_delay_s) << sep
            << p.trials_ok << sep << p.trials_infeasible << '\n';
    }
}

}  // namespace hsc
