#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "rmq/core/archive.hpp"
#include "rmq/costmodel/cost_model.hpp"
#include "rmq/optimizer/budget.hpp"

namespace rmq {

/// Iterative improvement: random plan, climb to a local Pareto optimum,
/// archive it.  One climb per iteration.
Archive run_ii(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink = {});

struct SaParams {
    /// Neighbors examined per temperature stage, times the table count.
    double neighbors_per_table = 16.0;
    double cooling = 0.95;
    /// Initial temperature relative to the start plan's normalized cost.
    double initial_temperature = 2.0;
    double freeze_temperature = 1e-3;
    std::size_t freeze_stages = 4;
};

struct SaState {
    Plan current;
    double temperature = 0.0;
    std::size_t stage_counter = 0;
    std::size_t unimproved_stages = 0;
    Archive archive;
};

/// Mean over metrics of the relative cost change, clamped at 0.
double sa_delta(const CostVector &current, const CostVector &neighbor);

/// exp(-delta / temperature), 1 for delta <= 0.
double sa_move_probability(double delta, double temperature);

/// Uniform node, then a uniform non-identity root rule at that node.
/// Returns `p` itself when no node admits a mutation.
Plan random_neighbor(const CostModel &model, const Plan &p, std::mt19937_64 &rng);

/// Multi-objective simulated annealing.  Every visited plan is offered to
/// the archive; a frozen run restarts from a fresh random plan while budget
/// remains.  One neighbor evaluation per iteration.
Archive run_sa(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink = {},
               const SaParams &params = {});

/// Plan minimizing the sum of costs normalized by the archive's per-metric
/// minima, paired with that sum.  The archive must be nonempty.
std::pair<Plan, double> two_phase_start(const Archive &archive);

/// Two-phase optimization: 10 II iterations, then annealing from the best
/// archived plan with initial temperature 0.1 × its normalized cost sum.
/// Repeats while budget remains.
Archive run_2p(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink = {},
               const SaParams &params = {});

} // namespace rmq
