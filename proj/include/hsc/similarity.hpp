#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace hsc {

/// Monotone similarity-vs-SNR behavior of the semantic transceiver for a
/// fixed number of DNN outputs per word. Values between knots are linearly
/// interpolated; outside the table they clamp to the endpoint values. The
/// highest tabulated similarity is the saturation ceiling M_sat.
///
/// The shipped default table (default_curve) is synthetic: it reproduces the
/// qualitative shape of a trained DeepSC model (monotone rise to a saturation
/// ceiling, earlier rise for larger k), not any measured curve.
struct SimilarityCurve {
    int symbols_per_word = 0;  // k
    std::vector<std::pair<double, double>> knots;  // (snr_dB, similarity)
    double saturation = 0.0;   // M_sat, equals the largest knot similarity

    void validate() const;  // throws std::invalid_argument naming the bad knot
};

/// Piecewise-linear interpolation, clamped outside the knot range.
double similarity_at(const SimilarityCurve& curve, double snr_db);

/// Smallest SNR (dB) whose similarity reaches threshold, via bisection over
/// the table domain; empty when threshold exceeds the saturation ceiling.
std::optional<double> required_snr(const SimilarityCurve& curve, double threshold);

struct SubcarrierThreshold {
    double max_similarity = 0.0;               // M_l^max over the slice
    std::optional<double> min_snr_linear;      // gamma_l^max; empty = infeasible
};

/// Binding per-subcarrier constraint: the largest sentence threshold and the
/// matching minimum linear SNR. thresholds holds the M_th of the sentences
/// assigned to one subcarrier.
SubcarrierThreshold subcarrier_threshold(const std::vector<double>& thresholds,
                                         const SimilarityCurve& curve);

/// Synthetic default table for a given k (see SimilarityCurve docs).
SimilarityCurve default_curve(int symbols_per_word, double saturation = 0.98);

/// Curve file: JSON {"k": ..., "m_sat": ..., "knots": [[snr_db, sim], ...]}.
SimilarityCurve load_curve(std::istream& in);
void save_curve(const SimilarityCurve& curve, std::ostream& out);

}  // namespace hsc
