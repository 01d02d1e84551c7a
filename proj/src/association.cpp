#include "hsc/association.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace hsc {

void Assignment::dump(std::ostream& out) const {
    for (std::size_t l = 0; l < slots.size(); ++l) {
        out << (l + 1) << ':';
        for (int j : slots[l]) out << ' ' << j;
        out << '\n';
    }
}

Assignment assign_sst(const TextPartition& partition) {
    Assignment a;
    a.policy = Policy::SST;
    a.slots.resize(static_cast<std::size_t>(partition.subcarriers));
    for (const Sentence& s : partition.sentences)
        a.slots[static_cast<std::size_t>((s.serial_index - 1) % partition.subcarriers)]
            .push_back(s.serial_index);
    return a;
}

Assignment assign_ost(const TextPartition& partition,
                      const ChannelRealization& channel) {
    const int L = partition.subcarriers;
    const int N = partition.sentences_per_carrier;
    if (channel.size() != L)
        throw std::invalid_argument("channel subcarrier count mismatch");

    // Sentences ascending by size (ties by serial index keep it deterministic).
    std::vector<int> order(partition.sentences.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& sa = partition.sentences[static_cast<std::size_t>(a)];
        const auto& sb = partition.sentences[static_cast<std::size_t>(b)];
        if (sa.char_count != sb.char_count) return sa.char_count < sb.char_count;
        return sa.serial_index < sb.serial_index;
    });

    // Subcarriers ascending by gain.
    std::vector<int> by_gain(static_cast<std::size_t>(L));
    std::iota(by_gain.begin(), by_gain.end(), 0);
    std::sort(by_gain.begin(), by_gain.end(),
              [&](int a, int b) { return channel.gains[a] < channel.gains[b]; });

    Assignment a;
    a.policy = Policy::OST;
    a.slots.resize(static_cast<std::size_t>(L));
    for (int t = 0; t < L; ++t) {
        auto& slot = a.slots[static_cast<std::size_t>(by_gain[static_cast<std::size_t>(t)])];
        for (int n = 0; n < N; ++n)
            slot.push_back(
                partition.sentences[static_cast<std::size_t>(order[static_cast<std::size_t>(t * N + n)])]
                    .serial_index);
    }
    return a;
}

RepairResult capacity_order_repair(const Eigen::ArrayXd& powers,
                                   const Eigen::ArrayXd& gains) {
    const int L = static_cast<int>(powers.size());
    if (gains.size() != L) throw std::invalid_argument("size mismatch");
    if ((powers <= 0.0).any() || (gains <= 0.0).any())
        throw std::invalid_argument("powers and gains must be positive");

    RepairResult r;
    r.powers = powers;
    Eigen::ArrayXd received = powers * gains;  // Q_i

    // Iterate gain-ascending positions; each swap fixes one out-of-order pair
    // while preserving the Q (capacity) multiset.
    std::vector<int> by_gain(static_cast<std::size_t>(L));
    std::iota(by_gain.begin(), by_gain.end(), 0);
    std::sort(by_gain.begin(), by_gain.end(),
              [&](int a, int b) { return gains[a] < gains[b]; });

    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t + 1 < L; ++t) {
            const int i = by_gain[static_cast<std::size_t>(t)];
            const int j = by_gain[static_cast<std::size_t>(t + 1)];
            if (received[i] > received[j]) {
                std::swap(received[i], received[j]);
                changed = true;
                ++r.swaps;
            }
        }
    }
    r.powers = received / gains;
    r.power_saved = powers.sum() - r.powers.sum();
    return r;
}

RearrangementCheck rearrangement_bound_check(const std::vector<double>& rates,
                                             const std::vector<double>& sizes,
                                             int random_trials, std::uint64_t seed) {
    if (rates.size() != sizes.size() || rates.empty())
        throw std::invalid_argument("rates and sizes must have equal nonzero length");
    const std::size_t n = sizes.size();

    std::vector<double> inv_rates(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(rates[i] > 0.0)) throw std::invalid_argument("rates must be positive");
        inv_rates[i] = 1.0 / rates[i];
    }
    std::sort(inv_rates.begin(), inv_rates.end(), std::greater<>());

    const auto pairing = [&](const std::vector<double>& s) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += s[i] * inv_rates[i];
        return sum;
    };

    std::vector<double> sorted_sizes = sizes;
    std::sort(sorted_sizes.begin(), sorted_sizes.end());

    RearrangementCheck out;
    out.sorted_sum = pairing(sorted_sizes);
    out.worst_sum = out.sorted_sum;
    bool minimal = true;

    if (n <= 8) {
        std::vector<double> perm = sorted_sizes;
        do {
            const double v = pairing(perm);
            out.worst_sum = std::max(out.worst_sum, v);
            if (v < out.sorted_sum * (1.0 - 1e-12)) minimal = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::mt19937_64 rng(seed);
        std::vector<double> perm = sorted_sizes;
        for (int t = 0; t < random_trials; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const double v = pairing(perm);
            out.worst_sum = std::max(out.worst_sum, v);
            if (v < out.sorted_sum * (1.0 - 1e-12)) minimal = false;
        }
    }
    out.sorted_is_minimal = minimal;
    return out;
}

}  // namespace hsc
