#pragma once

#include <cstddef>

#include "rmq/core/archive.hpp"
#include "rmq/costmodel/cost_model.hpp"

namespace rmq {

enum class EnumerationMode {
    /// kFull while the plan count stays below kFullEnumerationLimit.
    kAuto,
    /// Every bushy plan: all shapes × leaf permutations × operator choices.
    kFull,
    /// Every join tree (shape × leaf permutation); operator choices of one
    /// tree are combined bottom-up keeping only non-dominated alternatives.
    kPerJoinTree,
};

inline constexpr double kFullEnumerationLimit = 2e7;
inline constexpr std::size_t kExhaustiveMaxTables = 7;

/// Number of distinct bushy plans: n! · Catalan(n-1) · scans^n · joins^(n-1).
double bushy_plan_count(std::size_t tables, std::size_t scan_ops, std::size_t join_ops);

/// Exact Pareto frontier by enumeration.  Throws std::length_error for more
/// than kExhaustiveMaxTables tables.
Archive exhaustive_frontier(const CostModel &model, EnumerationMode mode = EnumerationMode::kAuto);

} // namespace rmq
