#include "hsc/link.hpp"

#include <cmath>
#include <stdexcept>

namespace hsc {

double gamma_from_ber(double ber) {
    if (!(ber > 0.0) || ber >= 0.2)
        throw std::domain_error("gamma_from_ber: BER must lie in (0, 0.2)");
    const double gap = -std::log(5.0 * ber) / 1.5;
    if (gap < 1.0)
        throw std::domain_error("gamma_from_ber: BER implies an SNR gap below 1");
    return gap;
}

double shannon_rate(double power, double cost, double gap, double bandwidth_hz) {
    if (power < 0 || cost <= 0 || gap < 1.0 || bandwidth_hz <= 0)
        throw std::domain_error("shannon_rate: invalid parameters");
    return bandwidth_hz * std::log2(1.0 + power / (cost * gap));
}

double shannon_delay(double bits, double rate) {
    if (bits < 0 || rate < 0) throw std::domain_error("shannon_delay: negative input");
    if (bits == 0.0) return 0.0;
    if (rate == 0.0) return kInfiniteDelay;
    return bits / rate;
}

double semantic_delay(double word_sum, int symbols_per_word, double bandwidth_hz) {
    if (word_sum < 0 || symbols_per_word <= 0 || bandwidth_hz <= 0)
        throw std::domain_error("semantic_delay: invalid parameters");
    return symbols_per_word * word_sum / bandwidth_hz;
}

}  // namespace hsc
