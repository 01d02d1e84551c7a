#include "hsc/minmax_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hsc/link.hpp"

namespace hsc {

std::optional<EqualDelaySolution> equal_delay_allocation(
    const ProblemInstance& inst, const std::vector<int>& shannon_set,
    double budget) {
    EqualDelaySolution sol;
    sol.powers = Eigen::ArrayXd::Zero(inst.size());

    std::vector<int> data;  // members that actually carry bits
    for (int l : shannon_set)
        if (inst.bits[l] > 0.0) data.push_back(l);

    if (data.empty()) {
        if (!shannon_set.empty() && budget > 0.0)
            for (int l : shannon_set)
                sol.powers[l] = budget / static_cast<double>(shannon_set.size());
        return sol;
    }
    if (!(budget > 0.0)) return std::nullopt;

    // Reference subcarrier with the largest payload keeps the pairwise
    // exponents U_m / U_ref at most one.
    const int ref = *std::max_element(data.begin(), data.end(), [&](int a, int b) {
        return inst.bits[a] < inst.bits[b];
    });
    const double cg_ref = inst.cost[ref] * inst.gap;

    const auto spent = [&](double p_ref) {
        const double base = 1.0 + p_ref / cg_ref;
        double sum = 0.0;
        for (int m : data) {
            if (m == ref) {
                sum += p_ref;
            } else {
                const double cg = inst.cost[m] * inst.gap;
                sum += cg * (std::pow(base, inst.bits[m] / inst.bits[ref]) - 1.0);
            }
        }
        return sum;
    };

    // spent is strictly increasing and spent(budget) >= budget, so the root
    // lies in [0, budget].
    double lo = 0.0, hi = budget;
    for (int i = 0; i < 200 && hi - lo > 1e-16 * budget; ++i) {
        const double mid = 0.5 * (lo + hi);
        (spent(mid) > budget ? hi : lo) = mid;
    }
    const double p_ref = 0.5 * (lo + hi);

    double allocated = 0.0;
    const double base = 1.0 + p_ref / cg_ref;
    for (int m : data) {
        if (m == ref) {
            sol.powers[m] = p_ref;
        } else {
            const double cg = inst.cost[m] * inst.gap;
            sol.powers[m] = cg * (std::pow(base, inst.bits[m] / inst.bits[ref]) - 1.0);
        }
        allocated += sol.powers[m];
    }
    sol.powers[ref] += budget - allocated;  // close the budget exactly
    if (sol.powers[ref] <= 0.0) return std::nullopt;
    sol.delay = shannon_delay(
        inst.bits[ref],
        shannon_rate(sol.powers[ref], inst.cost[ref], inst.gap, inst.bandwidth));
    return sol;
}

MinMaxSolution minmax_heuristic(const ProblemInstance& inst,
                                bool candidates_ascending) {
    const int L = inst.size();
    MinMaxSolution out;
    out.semantic = BoolArray::Constant(L, false);

    std::vector<int> shannon(static_cast<std::size_t>(L));
    std::iota(shannon.begin(), shannon.end(), 0);
    double budget = inst.total_power;

    auto current = equal_delay_allocation(inst, shannon, budget);
    if (!current) throw std::invalid_argument("nonpositive power budget");
    out.shannon_delay_history.push_back(current->delay);

    for (int iter = 0; iter < L; ++iter) {
        std::vector<int> candidates;
        for (int l : shannon)
            if (inst.semantic_allowed(l) && inst.sem_delay[l] < current->delay)
                candidates.push_back(l);
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return candidates_ascending ? inst.sem_delay[a] < inst.sem_delay[b]
                                        : inst.sem_delay[a] > inst.sem_delay[b];
        });

        int pick = -1;
        for (int l : candidates) {
            if (current->powers[l] > inst.pin_power(l)) {
                pick = l;
                break;
            }
        }
        if (pick < 0) break;

        std::vector<int> next_shannon;
        for (int l : shannon)
            if (l != pick) next_shannon.push_back(l);
        const double next_budget = budget - inst.pin_power(pick);
        auto next = equal_delay_allocation(inst, next_shannon, next_budget);
        if (!next) break;  // keep the last feasible split

        out.semantic[pick] = true;
        shannon = std::move(next_shannon);
        budget = next_budget;
        current = next;
        out.shannon_delay_history.push_back(current->delay);
    }

    out.powers = current->powers;
    out.max_delay = current->delay;
    int semantic_count = 0;
    for (int l = 0; l < L; ++l) {
        if (out.semantic[l]) {
            out.powers[l] = inst.pin_power(l);
            out.max_delay = std::max(out.max_delay, inst.sem_delay[l]);
            ++semantic_count;
        }
    }
    if (shannon.empty() && semantic_count > 0) {
        // Degenerate all-semantic end state: park the slack on the pins.
        const double slack = inst.total_power - out.powers.sum();
        for (int l = 0; l < L; ++l)
            if (out.semantic[l]) out.powers[l] += slack / semantic_count;
    }
    return out;
}

double complexity_estimate(int subcarriers, double root_iters) {
    if (subcarriers < 1) throw std::invalid_argument("need at least one subcarrier");
    const double L = subcarriers;
    return L * std::log2(L) + 2.0 * L * L + 0.5 * (L * L + L) * root_iters;
}

}  // namespace hsc
