#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hsc/channel.hpp"
#include "hsc/text.hpp"

namespace hsc {

enum class Policy { SST, OST };

/// Sentence-to-subcarrier map: slots[l] holds the serial indices (1-based)
/// of the N sentences carried by subcarrier l+1.
struct Assignment {
    std::vector<std::vector<int>> slots;
    Policy policy = Policy::SST;

    [[nodiscard]] int subcarriers() const { return static_cast<int>(slots.size()); }
    void dump(std::ostream& out) const;  // "l: j j j ..." per line
};

/// Serial round-robin rule: sentence j goes to subcarrier ((j-1) mod L) + 1.
Assignment assign_sst(const TextPartition& partition);

/// Ordered rule: sentences sorted ascending by character count (ties by
/// serial index) are split into contiguous blocks of N; the t-th block goes
/// to the subcarrier with the t-th smallest gain.
Assignment assign_ost(const TextPartition& partition,
                      const ChannelRealization& channel);

struct RepairResult {
    Eigen::ArrayXd powers;
    double power_saved = 0.0;  // strictly positive iff the input was mis-ordered
    int swaps = 0;
};

/// Capacity-order swap repair: exchanges received powers Q_i = P_i |h_i|^2
/// between out-of-order pairs until the Q order matches the gain order. The
/// capacity multiset is preserved and total power never increases.
RepairResult capacity_order_repair(const Eigen::ArrayXd& powers,
                                   const Eigen::ArrayXd& gains);

struct RearrangementCheck {
    double sorted_sum = 0.0;  // sizes ascending against inverse rates descending
    double worst_sum = 0.0;
    bool sorted_is_minimal = false;
};

/// Verifies the rearrangement inequality for the given per-slot rates and
/// sizes: exhaustively for up to 8 slots, by random permutations otherwise.
RearrangementCheck rearrangement_bound_check(const std::vector<double>& rates,
                                             const std::vector<double>& sizes,
                                             int random_trials = 200,
                                             std::uint64_t seed = 1);

}  // namespace hsc
