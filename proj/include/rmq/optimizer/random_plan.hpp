#pragma once

#include <random>

#include "rmq/costmodel/cost_model.hpp"

namespace rmq {

using Rng = std::mt19937_64;

/// Uniformly random bushy plan: a uniform binary tree shape grown with Rémy's
/// algorithm, leaves labeled by a random permutation of the tables and a
/// uniformly chosen operator per node.  O(n).
Plan random_plan(const CostModel &model, Rng &rng);

} // namespace rmq
