#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsc/similarity.hpp"

namespace hsc {

enum class Problem { Sum, MinMax };
enum class QosScope {
    Sentence,    // independent threshold per sentence; the per-subcarrier
                 // maximum binds (strict reading, rarely semantic-feasible
                 // for long partitions)
    Subcarrier,  // one threshold draw per subcarrier and QoS realization
};

struct ExperimentConfig {
    Problem problem = Problem::Sum;
    int subcarriers = 64;             // L
    int symbols_per_word = 16;        // k
    std::string association = "sst";  // "sst" | "ost"
    std::vector<double> snr_points_db;
    int trials = 50;                  // channel realizations
    int qos_trials = 5;               // QoS realizations per channel
    std::optional<double> ber;        // empty -> Gamma = 1

    // Physical and corpus constants.
    double noise_psd_dbm_hz = -174.0;
    double total_bandwidth_hz = 20e6;
    double carrier_freq_hz = 2.4e9;
    double distance_m = 100.0;
    double path_loss_exponent = 2.0;
    int num_sentences = 7296;         // P
    std::pair<int, int> word_range = {4, 32};
    int chars_per_word = 3;
    std::pair<double, double> qos_range = {0.6, 1.0};
    QosScope qos_scope = QosScope::Subcarrier;
    double saturation = 0.98;         // M_sat of the default curve
    std::uint64_t seed = 1;

    void validate() const;

    /// JSON mirror, field-for-field; round-trips losslessly.
    static ExperimentConfig from_json(std::istream& in);
    void to_json(std::ostream& out) const;
};

struct SnrPointMetrics {
    double snr_db = 0.0;
    double utilization_pct = 0.0;   // mean % of subcarriers in semantic mode
    double improvement_pct = 0.0;   // mean vs all-Shannon SST on the same draw
    double mean_delay_s = 0.0;      // mean scheme objective
    int trials_ok = 0;
    int trials_infeasible = 0;
};

struct RunMetrics {
    std::vector<SnrPointMetrics> points;
};

/// Monte-Carlo sweep over the configured SNR points. Each (snr, trial, qos)
/// cell gets a counter-derived sub-seed, so two schemes run with the same
/// master seed see identical channel and threshold draws.
RunMetrics run_sweep(const ExperimentConfig& config,
                     const SimilarityCurve* curve = nullptr);

/// One row per SNR point, 9 significant digits, fixed column order.
void emit_results(const RunMetrics& metrics, std::ostream& out,
                  const std::string& format = "csv");

/// Counter-based seed split used by the sweep (splitmix-style mix).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c);

}  // namespace hsc
