#pragma once

#include "rmq/core/archive.hpp"
#include "rmq/costmodel/cost_model.hpp"
#include "rmq/optimizer/budget.hpp"

namespace rmq {

/// Per-join-level pruning factor that compounds to at most `alpha` at the
/// root: alpha^(1/(n-1)).
double dp_level_alpha(double alpha, std::size_t tables);

/// Bottom-up dynamic programming over table subsets in ascending cardinality.
/// Each subset combines the stored frontiers of all its 2-partitions with
/// every join operator and prunes approximately.  alpha = 1 is exact,
/// alpha = ∞ keeps the first plan per (subset, format).  Returns an empty
/// archive if `clock` runs out of time first.
Archive dp_frontier(const CostModel &model, double alpha, const BudgetClock *clock = nullptr);

} // namespace rmq
