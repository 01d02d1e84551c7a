#pragma once

#include <limits>

namespace hsc {

enum class Mode { Shannon, Semantic };

/// Saturating stand-in for "unusable at zero rate"; keeps min/argmin total.
inline constexpr double kInfiniteDelay = std::numeric_limits<double>::max();

/// SNR gap of an uncoded M-QAM scheme meeting the given BER,
/// Gamma = -ln(5 BER) / 1.5. Rejects BER values that would give Gamma < 1.
double gamma_from_ber(double ber);

/// W log2(1 + P / (c Gamma)) in bits/s; Gamma = 1 is the capacity limit.
double shannon_rate(double power, double cost, double gap, double bandwidth_hz);

/// bits / rate; kInfiniteDelay at zero rate with nonzero payload.
double shannon_delay(double bits, double rate);

/// k * words / W seconds; fixed semantic rate of one symbol per channel use,
/// independent of transmit power.
double semantic_delay(double word_sum, int symbols_per_word, double bandwidth_hz);

/// Solver output for one subcarrier.
struct SubcarrierAllocation {
    double power = 0.0;
    Mode mode = Mode::Shannon;
    double delay = 0.0;
};

}  // namespace hsc
