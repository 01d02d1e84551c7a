#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hsc/channel.hpp"
#include "hsc/similarity.hpp"
#include "hsc/text.hpp"

namespace hsc {

struct Assignment;  // association.hpp

using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;

/// Everything the solvers need for one (corpus, channel, QoS) realization,
/// reduced to per-subcarrier aggregates.
struct ProblemInstance {
    Eigen::ArrayXd cost;         // c_l = N0 W / |h_l|^2
    Eigen::ArrayXd bits;         // U_l = 8 sum of chars
    Eigen::ArrayXd sem_delay;    // k * word sum / W (seconds)
    Eigen::ArrayXd min_snr;      // gamma_l^max, linear; +inf when semantic
                                 // is infeasible for the subcarrier
    double total_power = 0.0;    // P_tot (W)
    double gap = 1.0;            // Gamma
    double bandwidth = 0.0;      // W (Hz)

    [[nodiscard]] int size() const { return static_cast<int>(cost.size()); }
    /// Semantic pin power gamma_l^max c_l (may be +inf).
    [[nodiscard]] double pin_power(int l) const { return min_snr[l] * cost[l]; }
    [[nodiscard]] bool semantic_allowed(int l) const {
        return std::isfinite(min_snr[l]);
    }
    [[nodiscard]] double delay_at(int l, double power, bool semantic) const;
};

/// Aggregates a sentence-to-subcarrier assignment into a solver instance.
/// When subcarrier_thresholds is given (one M_th per subcarrier) it replaces
/// the per-sentence maxima of the slice.
ProblemInstance build_instance(const TextPartition& partition,
                               const Assignment& assignment,
                               const ChannelRealization& channel,
                               const SimilarityCurve& curve, double total_power,
                               double gap,
                               const std::vector<double>* subcarrier_thresholds = nullptr);

}  // namespace hsc
