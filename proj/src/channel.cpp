#include "hsc/channel.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace hsc {

namespace {
constexpr double kSpeedOfLight = 3.0e8;  // m/s
constexpr double kGainFloor = 1e-30;     // guards against underflow to zero
}  // namespace

double path_loss(double carrier_freq_hz, double distance_m, double exponent) {
    if (carrier_freq_hz <= 0 || distance_m <= 0)
        throw std::domain_error("path_loss: frequency and distance must be positive");
    if (exponent < 1.0) throw std::domain_error("path_loss: exponent must be >= 1");
    const double wavelength = kSpeedOfLight / carrier_freq_hz;
    return std::pow(wavelength / (4.0 * std::numbers::pi * distance_m), exponent);
}

ChannelRealization sample_channels(int subcarriers, double path_gain,
                                   double bandwidth_hz, double noise_psd,
                                   std::uint64_t seed) {
    if (subcarriers < 1) throw std::invalid_argument("need at least one subcarrier");
    if (path_gain <= 0 || bandwidth_hz <= 0 || noise_psd <= 0)
        throw std::invalid_argument("channel parameters must be positive");

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> dist(1.0 / path_gain);
    ChannelRealization ch;
    ch.gains.resize(subcarriers);
    ch.bandwidth = bandwidth_hz;
    ch.noise_psd = noise_psd;
    for (int l = 0; l < subcarriers; ++l)
        ch.gains[l] = std::max(dist(rng), kGainFloor);
    return ch;
}

double average_received_snr(double total_power, double mean_gain,
                            double noise_psd, double bandwidth_hz) {
    return total_power * mean_gain / (noise_psd * bandwidth_hz);
}

double power_for_snr(double snr_linear, double mean_gain, double noise_psd,
                     double bandwidth_hz) {
    return snr_linear * noise_psd * bandwidth_hz / mean_gain;
}

void export_gains(const ChannelRealization& channel, std::ostream& out) {
    for (int l = 0; l < channel.size(); ++l) out << channel.gains[l] << '\n';
}

}  // namespace hsc
