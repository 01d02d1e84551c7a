#include "hsc/sum_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hsc/lambert.hpp"
#include "hsc/link.hpp"

namespace hsc {

namespace {

/// Water-filling level of one Shannon subcarrier at dual lambda (Lambert W
/// closed form of the stationarity condition).
double shannon_power_at(const ProblemInstance& inst, int l, double lambda) {
    if (inst.bits[l] <= 0.0) return 0.0;
    const double cg = inst.cost[l] * inst.gap;
    const double delta =
        std::numbers::ln2 * inst.bits[l] / (lambda * inst.bandwidth * cg);
    return cg * (std::exp(2.0 * lambert_w0(std::sqrt(delta / 4.0))) - 1.0);
}

/// d(sum delay)/dP of one Shannon subcarrier, negated; equals lambda at the
/// optimum.
double marginal(const ProblemInstance& inst, int l, double power) {
    const double cg = inst.cost[l] * inst.gap;
    const double z = std::log1p(power / cg);
    return std::numbers::ln2 * inst.bits[l] /
           (inst.bandwidth * cg * (1.0 + power / cg) * z * z);
}

}  // namespace

double sum_objective(const ProblemInstance& inst, const BoolArray& semantic,
                     const Eigen::ArrayXd& powers) {
    double total = 0.0;
    for (int l = 0; l < inst.size(); ++l)
        total += inst.delay_at(l, powers[l], semantic[l]);
    return total;
}

std::optional<PowerSolution> solve_p2(const ProblemInstance& inst,
                                      const BoolArray& semantic) {
    const int L = inst.size();
    Eigen::ArrayXd powers = Eigen::ArrayXd::Zero(L);
    std::vector<int> shannon;
    std::vector<int> pinned;
    double residual = inst.total_power;
    for (int l = 0; l < L; ++l) {
        if (semantic[l]) {
            if (!inst.semantic_allowed(l))
                throw std::invalid_argument("semantic mode on an infeasible subcarrier");
            powers[l] = inst.pin_power(l);
            residual -= powers[l];
            pinned.push_back(l);
        } else {
            shannon.push_back(l);
        }
    }

    if (shannon.empty()) {
        if (residual < 0.0) return std::nullopt;
        // The pins fit; the slack is spread over the pins (the similarity
        // constraint is one-sided, semantic delay ignores power).
        for (int l : pinned) powers[l] += residual / static_cast<double>(pinned.size());
        return PowerSolution{powers, 0.0, sum_objective(inst, semantic, powers)};
    }
    if (!(residual > 0.0)) return std::nullopt;

    std::vector<int> active;  // Shannon subcarriers that carry data
    for (int l : shannon)
        if (inst.bits[l] > 0.0) active.push_back(l);

    double lambda = 0.0;
    if (active.empty()) {
        for (int l : shannon) powers[l] = residual / static_cast<double>(shannon.size());
    } else {
        const auto total_at = [&](double lam) {
            double sum = 0.0;
            for (int l : active) sum += shannon_power_at(inst, l, lam);
            return sum;
        };
        // Bracket the dual around the marginal at an equal split; the total
        // allocated power is strictly decreasing in lambda.
        double lo = marginal(inst, active.front(),
                             residual / static_cast<double>(active.size()));
        double hi = lo;
        while (total_at(lo) < residual) lo *= 0.5;
        while (total_at(hi) > residual) hi *= 2.0;
        for (int i = 0; i < 200 && hi - lo > 1e-15 * lo; ++i) {
            const double mid = 0.5 * (lo + hi);
            (total_at(mid) > residual ? lo : hi) = mid;
        }
        lambda = 0.5 * (lo + hi);
        double allocated = 0.0;
        int largest = active.front();
        for (int l : active) {
            powers[l] = shannon_power_at(inst, l, lambda);
            allocated += powers[l];
            if (powers[l] > powers[largest]) largest = l;
        }
        powers[largest] += residual - allocated;  // close the budget exactly
        if (powers[largest] < 0.0) return std::nullopt;
    }

    return PowerSolution{powers, lambda, sum_objective(inst, semantic, powers)};
}

BoolArray select_modes_p3(const ProblemInstance& inst, const Eigen::ArrayXd& powers) {
    const int L = inst.size();
    BoolArray semantic = BoolArray::Constant(L, false);
    for (int l = 0; l < L; ++l) {
        if (!inst.semantic_allowed(l)) continue;
        if (powers[l] < inst.pin_power(l)) continue;
        // Strict improvement only; a tie keeps Shannon.
        if (inst.sem_delay[l] < inst.delay_at(l, powers[l], false)) semantic[l] = true;
    }
    return semantic;
}

SumSolution alternate_optimize(const ProblemInstance& inst, int max_iters) {
    BoolArray modes = BoolArray::Constant(inst.size(), false);
    auto current = solve_p2(inst, modes);
    if (!current)
        throw std::invalid_argument("all-Shannon start is infeasible (nonpositive budget)");

    SumSolution best;
    best.semantic = modes;
    best.powers = current->powers;
    best.objective = current->objective;
    best.objective_history.push_back(current->objective);

    std::vector<BoolArray> seen{modes};
    const auto recurs = [&](const BoolArray& m) {
        return std::any_of(seen.begin(), seen.end(),
                           [&](const BoolArray& s) { return (s == m).all(); });
    };

    for (int i = 1; i <= max_iters; ++i) {
        BoolArray proposal = select_modes_p3(inst, current->powers);
        if ((proposal == modes).all()) break;
        if (recurs(proposal)) break;  // non-consecutive cycle: keep the best seen

        auto next = solve_p2(inst, proposal);
        bool reverted = false;
        if (!next) {
            // The switches starve the Shannon set; undo the newest semantic
            // picks one at a time until the power split exists again.
            for (int l = inst.size() - 1; l >= 0 && !next; --l) {
                if (proposal[l] && !modes[l]) {
                    proposal[l] = false;
                    next = solve_p2(inst, proposal);
                }
            }
            reverted = true;
            if (!next) break;
        }

        modes = proposal;
        current = next;
        seen.push_back(modes);
        best.iterations = i;
        best.objective_history.push_back(current->objective);
        if (current->objective < best.objective) {
            best.semantic = modes;
            best.powers = current->powers;
            best.objective = current->objective;
        }
        if (reverted) break;
    }
    return best;
}

}  // namespace hsc
