#pragma once

#include <span>

#include "rmq/core/cost_vector.hpp"

namespace rmq {

/// Multiplicative ε-indicator: the smallest factor α such that every
/// reference vector is α-approximately dominated by some candidate,
///   max_r min_c max_k c[k] / r[k].
/// +∞ for an empty candidate set.  Throws std::invalid_argument for an empty
/// reference.  Components must be positive.
double epsilon_indicator(std::span<const CostVector> candidate, std::span<const CostVector> reference);

} // namespace rmq
