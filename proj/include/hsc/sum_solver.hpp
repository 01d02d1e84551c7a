#pragma once

#include <optional>
#include <vector>

#include "hsc/problem.hpp"

namespace hsc {

/// Water-filling result for a fixed semantic/Shannon split.
struct PowerSolution {
    Eigen::ArrayXd powers;
    double dual = 0.0;       // lambda of the power budget constraint
    double objective = 0.0;  // sum of per-subcarrier delays (seconds)
};

/// Sum-of-delays objective at fixed modes and powers.
double sum_objective(const ProblemInstance& inst, const BoolArray& semantic,
                     const Eigen::ArrayXd& powers);

/// Closed-form optimal power split for fixed modes: semantic subcarriers are
/// pinned at gamma c, Shannon subcarriers get the Lambert-W water-filling
/// level, and the dual is bisected until the budget closes to 1e-9 relative.
/// Empty result means the semantic selection leaves no power for the Shannon
/// subcarriers (the caller must revert semantic choices).
std::optional<PowerSolution> solve_p2(const ProblemInstance& inst,
                                      const BoolArray& semantic);

/// Exact per-subcarrier mode selection at fixed powers: semantic iff it is
/// feasible (threshold reachable and the current power covers the pin) and
/// strictly faster; ties keep Shannon.
BoolArray select_modes_p3(const ProblemInstance& inst, const Eigen::ArrayXd& powers);

struct SumSolution {
    BoolArray semantic;
    Eigen::ArrayXd powers;
    double objective = 0.0;
    int iterations = 0;
    std::vector<double> objective_history;
};

/// Alternating optimization: all-Shannon start, then mode selection and
/// power re-solve until the mode vector repeats; the best iterate wins.
SumSolution alternate_optimize(const ProblemInstance& inst, int max_iters = 32);

}  // namespace hsc
