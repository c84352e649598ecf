#include "rmq/baselines/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmq/core/dominance.hpp"
#include "rmq/optimizer/climb.hpp"
#include "rmq/optimizer/mutations.hpp"
#include "rmq/optimizer/random_plan.hpp"

namespace rmq {

Archive run_ii(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink) {
    BudgetClock clock(budget);
    Rng rng(seed);
    Archive archive;
    std::uint64_t iterations = 0;
    while (!clock.exhausted(iterations)) {
        archive.insert(pareto_climb(model, random_plan(model, rng)).plan);
        ++iterations;
        if (sink) sink(Progress{clock.elapsed_ms(), iterations, archive.plans()});
    }
    return archive;
}

double sa_delta(const CostVector &current, const CostVector &neighbor) {
    double sum = 0.0;
    for (std::size_t k = 0; k < current.size(); ++k) sum += (neighbor[k] - current[k]) / current[k];
    return std::max(0.0, sum / static_cast<double>(current.size()));
}

double sa_move_probability(double delta, double temperature) {
    if (delta <= 0.0) return 1.0;
    if (temperature <= 0.0) return 0.0;
    return std::exp(-delta / temperature);
}

Plan random_neighbor(const CostModel &model, const Plan &p, std::mt19937_64 &rng) {
    std::vector<Plan> candidates;
    const std::size_t nodes = p.node_count();
    std::uniform_int_distribution<std::size_t> pick_node(0, nodes - 1);
    // A root join always admits commutation, so this rarely needs many draws.
    for (std::size_t attempt = 0; attempt < 4 * nodes; ++attempt) {
        std::size_t index = pick_node(rng);
        const Plan &node = node_at(p, index);
        candidates.clear();
        bool identity = true;
        for_each_mutation(model, node, [&](Plan m) {
            if (identity) {
                identity = false;
                return;
            }
            candidates.push_back(std::move(m));
        });
        if (candidates.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        return replace_node(model, p, index, candidates[pick(rng)]);
    }
    return p;
}

namespace {

/// Shared annealing loop of SA and 2P.
class Annealer {
  public:
    Annealer(const CostModel &model, const BudgetClock &clock, Rng &rng, const ProgressSink &sink,
             const SaParams &params, SaState &state, std::uint64_t &iterations)
        : model_(model), clock_(clock), rng_(rng), sink_(sink), params_(params), state_(state),
          iterations_(iterations) {}

    /// Anneals from `start` until frozen (returns false) or out of budget
    /// (returns true).
    bool run(Plan start, double initial_temperature) {
        state_.current = std::move(start);
        state_.archive.insert(state_.current);
        state_.temperature = initial_temperature;
        state_.stage_counter = 0;
        state_.unimproved_stages = 0;
        const auto stage_size = static_cast<std::size_t>(
            std::max(1.0, std::round(params_.neighbors_per_table * static_cast<double>(model_.table_count()))));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (;;) {
            bool improved = false;
            for (std::size_t k = 0; k < stage_size; ++k) {
                if (clock_.exhausted(iterations_)) return true;
                Plan neighbor = random_neighbor(model_, state_.current, rng_);
                ++iterations_;
                if (state_.archive.insert(neighbor)) improved = true;
                if (strictly_dominates(neighbor.cost(), state_.current.cost())) {
                    state_.current = std::move(neighbor);
                } else {
                    double p = sa_move_probability(sa_delta(state_.current.cost(), neighbor.cost()),
                                                   state_.temperature);
                    if (unit(rng_) < p) state_.current = std::move(neighbor);
                }
                if (sink_) sink_(Progress{clock_.elapsed_ms(), iterations_, state_.archive.plans()});
            }
            state_.temperature *= params_.cooling;
            ++state_.stage_counter;
            state_.unimproved_stages = improved ? 0 : state_.unimproved_stages + 1;
            if (state_.temperature < params_.freeze_temperature &&
                state_.unimproved_stages >= params_.freeze_stages)
                return false;
        }
    }

  private:
    const CostModel &model_;
    const BudgetClock &clock_;
    Rng &rng_;
    const ProgressSink &sink_;
    const SaParams &params_;
    SaState &state_;
    std::uint64_t &iterations_;
};

} // namespace

Archive run_sa(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink,
               const SaParams &params) {
    BudgetClock clock(budget);
    Rng rng(seed);
    SaState state;
    std::uint64_t iterations = 0;
    Annealer annealer(model, clock, rng, sink, params, state, iterations);
    while (!clock.exhausted(iterations)) {
        // Relative cost differences make the start plan's normalized cost 1
        // in every metric.
        if (annealer.run(random_plan(model, rng), params.initial_temperature)) break;
    }
    return std::move(state.archive);
}

std::pair<Plan, double> two_phase_start(const Archive &archive) {
    if (archive.empty()) throw std::invalid_argument("two-phase handoff needs a nonempty archive");
    const auto plans = archive.plans();
    const std::size_t l = plans.front().cost().size();
    CostVector minima(l, std::numeric_limits<double>::infinity());
    for (const auto &p : plans)
        for (std::size_t k = 0; k < l; ++k) minima[k] = std::min(minima[k], p.cost()[k]);
    Plan best;
    double best_sum = std::numeric_limits<double>::infinity();
    for (const auto &p : plans) {
        double sum = 0.0;
        for (std::size_t k = 0; k < l; ++k) sum += p.cost()[k] / minima[k];
        if (sum < best_sum) {
            best_sum = sum;
            best = p;
        }
    }
    return {best, best_sum};
}

Archive run_2p(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink,
               const SaParams &params) {
    constexpr int kPhaseOneIterations = 10;
    BudgetClock clock(budget);
    Rng rng(seed);
    SaState state;
    std::uint64_t iterations = 0;
    Annealer annealer(model, clock, rng, sink, params, state, iterations);
    while (!clock.exhausted(iterations)) {
        for (int k = 0; k < kPhaseOneIterations; ++k) {
            if (clock.exhausted(iterations)) return std::move(state.archive);
            state.archive.insert(pareto_climb(model, random_plan(model, rng)).plan);
            ++iterations;
            if (sink) sink(Progress{clock.elapsed_ms(), iterations, state.archive.plans()});
        }
        auto [start, normalized] = two_phase_start(state.archive);
        if (annealer.run(start, 0.1 * normalized)) break;
    }
    return std::move(state.archive);
}

} // namespace rmq
