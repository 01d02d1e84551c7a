#include "hsc/problem.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsc/association.hpp"
#include "hsc/link.hpp"

namespace hsc {

double ProblemInstance::delay_at(int l, double power, bool semantic) const {
    if (semantic) return sem_delay[l];
    return shannon_delay(bits[l], shannon_rate(power, cost[l], gap, bandwidth));
}

ProblemInstance build_instance(const TextPartition& partition,
                               const Assignment& assignment,
                               const ChannelRealization& channel,
                               const SimilarityCurve& curve, double total_power,
                               double gap,
                               const std::vector<double>* subcarrier_thresholds) {
    const int L = assignment.subcarriers();
    if (L != channel.size())
        throw std::invalid_argument("assignment and channel subcarrier counts differ");
    if (!(total_power > 0)) throw std::invalid_argument("total power must be positive");
    if (gap < 1.0) throw std::invalid_argument("SNR gap must be >= 1");

    ProblemInstance inst;
    inst.cost = channel.cost();
    inst.bits = Eigen::ArrayXd::Zero(L);
    inst.sem_delay = Eigen::ArrayXd::Zero(L);
    inst.min_snr =
        Eigen::ArrayXd::Constant(L, std::numeric_limits<double>::infinity());
    inst.total_power = total_power;
    inst.gap = gap;
    inst.bandwidth = channel.bandwidth;

    for (int l = 0; l < L; ++l) {
        double words = 0;
        std::vector<double> thresholds;
        for (int j : assignment.slots[static_cast<std::size_t>(l)]) {
            const Sentence& s = partition.sentences[static_cast<std::size_t>(j - 1)];
            inst.bits[l] += s.bit_count();
            words += s.word_count;
            if (!s.is_sentinel()) thresholds.push_back(s.similarity_threshold);
        }
        inst.sem_delay[l] =
            semantic_delay(words, curve.symbols_per_word, channel.bandwidth);
        if (subcarrier_thresholds) {
            thresholds.assign(1, (*subcarrier_thresholds)[static_cast<std::size_t>(l)]);
        }
        if (!thresholds.empty()) {
            const SubcarrierThreshold th = subcarrier_threshold(thresholds, curve);
            if (th.min_snr_linear) inst.min_snr[l] = *th.min_snr_linear;
        }
    }
    return inst;
}

}  // namespace hsc
