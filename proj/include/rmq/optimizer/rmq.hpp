#pragma once

#include <algorithm>
#include <cstdint>
#include <span>

#include "rmq/core/archive.hpp"
#include "rmq/optimizer/budget.hpp"
#include "rmq/optimizer/climb.hpp"
#include "rmq/optimizer/frontier.hpp"
#include "rmq/optimizer/random_plan.hpp"

namespace rmq {

struct RmqOptions {
    AlphaSchedule schedule = alpha_schedule;
    /// Hard cap on cached plans; exceeding it throws PlanCacheFull.  0 = none.
    std::size_t max_cached_plans = 0;
};

/// Randomized multi-objective optimizer.  Each iteration draws a random plan,
/// climbs to a local Pareto optimum and refines the cached frontiers of all
/// intermediate results of that optimum.
class RmqOptimizer {
  public:
    RmqOptimizer(const CostModel &model, std::uint64_t seed, RmqOptions options = {});

    void iterate();

    std::uint64_t iterations() const { return iteration_ - 1; }
    /// Schedule value for the next iteration, never below 1.
    double current_alpha() const { return std::max(1.0, options_.schedule(iteration_)); }
    std::size_t last_path_length() const { return last_path_length_; }

    /// Cached plans joining all query tables.
    std::span<const Plan> frontier() const { return cache_.at(model_.query().tables()); }
    /// frontier() re-pruned with strict dominance.
    Archive result() const;

    const PlanCache &cache() const { return cache_; }
    PlanCache &cache() { return cache_; }

  private:
    const CostModel &model_;
    RmqOptions options_;
    Rng rng_;
    PlanCache cache_;
    std::uint64_t iteration_ = 1;
    std::size_t last_path_length_ = 0;
};

Archive rmq_optimize(const CostModel &model, const Budget &budget, std::uint64_t seed,
                     const ProgressSink &sink = {}, RmqOptions options = {});

} // namespace rmq
