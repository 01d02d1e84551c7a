#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>

namespace hsc {

/// One Rayleigh-faded multi-carrier channel draw. Gains are |h_l|^2 with the
/// path loss factor already applied.
struct ChannelRealization {
    Eigen::ArrayXd gains;  // |h_l|^2, strictly positive
    double bandwidth = 0;  // W, per-subcarrier (Hz)
    double noise_psd = 0;  // N0 (W/Hz)

    [[nodiscard]] int size() const { return static_cast<int>(gains.size()); }
    [[nodiscard]] double noise_power() const { return noise_psd * bandwidth; }
    /// Noise-normalized channel cost c_l = N0 W / |h_l|^2.
    [[nodiscard]] Eigen::ArrayXd cost() const { return noise_power() / gains; }
};

/// Free-space style path loss (lambda_c / (4 pi R))^nu.
double path_loss(double carrier_freq_hz, double distance_m, double exponent);

/// Draws |h_l|^2 as i.i.d. exponential with mean path_gain (squared magnitude
/// of CN(0, path_gain)). Deterministic under the seed.
ChannelRealization sample_channels(int subcarriers, double path_gain,
                                   double bandwidth_hz, double noise_psd,
                                   std::uint64_t seed);

/// Total average received SNR P_tot E[|h|^2] / (N0 W), linear.
double average_received_snr(double total_power, double mean_gain,
                            double noise_psd, double bandwidth_hz);

/// Inverts average_received_snr for a target linear SNR.
double power_for_snr(double snr_linear, double mean_gain, double noise_psd,
                     double bandwidth_hz);

/// One gain per line, for regression fixtures.
void export_gains(const ChannelRealization& channel, std::ostream& out);

}  // namespace hsc
