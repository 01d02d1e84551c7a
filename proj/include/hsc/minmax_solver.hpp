#pragma once

#include <optional>
#include <vector>

#include "hsc/problem.hpp"

namespace hsc {

/// Power split under which all Shannon subcarriers with data finish at the
/// same time.
struct EqualDelaySolution {
    Eigen::ArrayXd powers;  // full length; zero outside the Shannon set
    double delay = 0.0;     // the common Shannon delay
};

/// Solves the equal-delay system over the Shannon set for a power budget:
/// the reference subcarrier (largest payload) is bisected on [0, budget] and
/// the rest follow from the pairwise equal-delay relation
/// P_m = c_m G ((1 + P_ref/(c_ref G))^(U_m/U_ref) - 1).
/// Empty result when the budget is nonpositive but payload remains.
std::optional<EqualDelaySolution> equal_delay_allocation(
    const ProblemInstance& inst, const std::vector<int>& shannon_set,
    double budget);

struct MinMaxSolution {
    BoolArray semantic;
    Eigen::ArrayXd powers;
    double max_delay = 0.0;
    std::vector<double> shannon_delay_history;  // Delta_i per outer iteration
};

/// Greedy semantic switching: starting all-Shannon, repeatedly moves the
/// fastest qualifying subcarrier (semantic delay below the current common
/// delay, current power above the semantic pin) to semantic mode and
/// re-solves the equal-delay split with the freed power.
/// candidates_ascending selects the candidate scan direction.
MinMaxSolution minmax_heuristic(const ProblemInstance& inst,
                                bool candidates_ascending = true);

/// Diagnostic operation-count model L log2 L + 2 L^2 + (L^2+L)/2 * X.
double complexity_estimate(int subcarriers, double root_iters);

}  // namespace hsc
