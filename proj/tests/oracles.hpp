#pragma once

// Independent reference implementations used to cross-check the solvers.
// Everything here is deliberately built on different numerics than the
// library (no Lambert W, no closed forms): golden-section coordinate descent
// for the sum objective, delay-domain bisection for the min-max objective,
// and exhaustive enumeration for mode selection.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "hsc/problem.hpp"
#include "hsc/sum_solver.hpp"

namespace oracle {

/// Random solver instance with positive payloads on every subcarrier.
/// with_semantic draws a finite QoS floor on roughly 70% of subcarriers;
/// otherwise semantic mode is everywhere infeasible.
inline hsc::ProblemInstance random_instance(std::mt19937_64& rng, int L,
                                            bool with_semantic) {
    std::uniform_real_distribution<double> cost(0.5, 5.0);
    std::uniform_real_distribution<double> bits(1e3, 2e5);
    std::uniform_real_distribution<double> snr_floor(0.3, 8.0);
    std::uniform_real_distribution<double> spectral(1.0, 6.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    hsc::ProblemInstance inst;
    inst.cost.resize(L);
    inst.bits.resize(L);
    inst.sem_delay.resize(L);
    inst.min_snr =
        Eigen::ArrayXd::Constant(L, std::numeric_limits<double>::infinity());
    inst.bandwidth = 312500.0;
    inst.gap = 1.0;
    for (int l = 0; l < L; ++l) {
        inst.cost[l] = cost(rng);
        inst.bits[l] = bits(rng);
        // Semantic delay equals the bit delay at a spectral efficiency of
        // 1..6 bit/s/Hz, so the crossover SNR varies across instances and
        // both modes stay competitive over the sampled power range.
        inst.sem_delay[l] = inst.bits[l] / (spectral(rng) * inst.bandwidth);
        if (with_semantic && unit(rng) < 0.7) inst.min_snr[l] = snr_floor(rng);
    }
    std::uniform_real_distribution<double> budget(0.5 * L, 40.0 * L);
    inst.total_power = budget(rng);
    return inst;
}

/// Per-subcarrier bit-mode delay at power p.
inline double bit_delay(const hsc::ProblemInstance& inst, int l, double p) {
    const double cg = inst.cost[l] * inst.gap;
    const double rate = inst.bandwidth * std::log2(1.0 + p / cg);
    if (inst.bits[l] <= 0.0) return 0.0;
    if (rate <= 0.0) return std::numeric_limits<double>::max();
    return inst.bits[l] / rate;
}

/// Minimum sum of bit-mode delays over the power simplex, by pairwise power
/// transfers with golden-section line search. Shannon-only; semantic fields
/// of the instance are ignored.
inline double sum_delay_minimum(const hsc::ProblemInstance& inst,
                                int max_sweeps = 400) {
    const int L = inst.size();
    std::vector<double> p(static_cast<std::size_t>(L),
                          inst.total_power / static_cast<double>(L));
    const auto objective = [&] {
        double s = 0.0;
        for (int l = 0; l < L; ++l) s += bit_delay(inst, l, p[static_cast<std::size_t>(l)]);
        return s;
    };

    constexpr double kInvPhi = 0.6180339887498949;
    double prev = objective();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        for (int i = 0; i < L; ++i) {
            for (int j = i + 1; j < L; ++j) {
                double& pi = p[static_cast<std::size_t>(i)];
                double& pj = p[static_cast<std::size_t>(j)];
                const double total = pi + pj;
                const auto pair_cost = [&](double xi) {
                    return bit_delay(inst, i, xi) + bit_delay(inst, j, total - xi);
                };
                double a = 0.0, b = total;
                double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
                double f1 = pair_cost(x1), f2 = pair_cost(x2);
                for (int it = 0; it < 90; ++it) {
                    if (f1 < f2) {
                        b = x2; x2 = x1; f2 = f1;
                        x1 = b - kInvPhi * (b - a);
                        f1 = pair_cost(x1);
                    } else {
                        a = x1; x1 = x2; f1 = f2;
                        x2 = a + kInvPhi * (b - a);
                        f2 = pair_cost(x2);
                    }
                }
                pi = 0.5 * (a + b);
                pj = total - pi;
            }
        }
        const double now = objective();
        if (prev - now <= 1e-13 * now) break;
        prev = now;
    }
    return objective();
}

/// Minimum of the maximum bit-mode delay: a target delay d is affordable iff
/// the power needed to finish every subcarrier within d fits the budget;
/// bisect d. Shannon-only.
inline double minmax_delay_minimum(const hsc::ProblemInstance& inst) {
    const auto power_needed = [&](double d) {
        double sum = 0.0;
        for (int l = 0; l < inst.size(); ++l) {
            if (inst.bits[l] <= 0.0) continue;
            const double cg = inst.cost[l] * inst.gap;
            sum += cg * (std::exp2(inst.bits[l] / (inst.bandwidth * d)) - 1.0);
        }
        return sum;
    };
    double hi = 1.0;
    while (power_needed(hi) > inst.total_power) hi *= 2.0;
    double lo = hi;
    while (power_needed(lo) < inst.total_power) lo *= 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (power_needed(mid) > inst.total_power ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Best objective over all 2^L admissible mode selections at fixed powers.
/// A selection is admissible when every semantic subcarrier has a reachable
/// QoS floor covered by its current power.
inline double best_selection_objective(const hsc::ProblemInstance& inst,
                                       const Eigen::ArrayXd& powers) {
    const int L = inst.size();
    double best = std::numeric_limits<double>::max();
    for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
        hsc::BoolArray semantic = hsc::BoolArray::Constant(L, false);
        bool admissible = true;
        for (int l = 0; l < L && admissible; ++l) {
            if (!(mask & (1u << l))) continue;
            if (!inst.semantic_allowed(l) || powers[l] < inst.pin_power(l)) {
                admissible = false;
            } else {
                semantic[l] = true;
            }
        }
        if (!admissible) continue;
        best = std::min(best, hsc::sum_objective(inst, semantic, powers));
    }
    return best;
}

}  // namespace oracle
