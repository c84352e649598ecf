#pragma once

#include <cstddef>
#include <vector>

#include "rmq/costmodel/cost_model.hpp"

namespace rmq {

/// p1 has the same output format as p2 and strictly dominates it.
bool better(const Plan &p1, const Plan &p2);

/// Keeps one plan per output format.  `new_plan` takes the slot of its
/// format if the slot is free or its occupant is strictly dominated by
/// `new_plan`; otherwise the set is unchanged.  Returns true when inserted.
bool prune_strict(std::vector<Plan> &plans, const Plan &new_plan);

/// One improvement step with simultaneous sub-tree mutations: both sub-plans
/// are improved recursively, then every root mutation of each reassembled
/// node is offered to prune_strict.  Returns one plan per reachable format.
std::vector<Plan> pareto_step(const CostModel &model, const Plan &p);

struct ClimbResult {
    Plan plan;
    /// Number of adopted plans on the way to the local optimum.
    std::size_t path_length = 0;
};

/// Hill climbing until no plan from pareto_step strictly dominates the
/// current plan.  The first strictly dominating plan is adopted.
ClimbResult pareto_climb(const CostModel &model, Plan p);

} // namespace rmq
