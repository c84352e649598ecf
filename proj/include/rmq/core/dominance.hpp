#pragma once

#include <cassert>
#include <stdexcept>

#include "rmq/core/cost_vector.hpp"

namespace rmq {

/// c1 ⪯ c2: no worse in every metric.
inline bool weakly_dominates(const CostVector &c1, const CostVector &c2) {
    assert(c1.size() == c2.size());
    for (std::size_t k = 0; k < c1.size(); ++k)
        if (c1[k] > c2[k]) return false;
    return true;
}

/// c1 ≺ c2: weak dominance with at least one strictly better metric.
inline bool strictly_dominates(const CostVector &c1, const CostVector &c2) {
    assert(c1.size() == c2.size());
    bool better = false;
    for (std::size_t k = 0; k < c1.size(); ++k) {
        if (c1[k] > c2[k]) return false;
        if (c1[k] < c2[k]) better = true;
    }
    return better;
}

/// c1[k] <= alpha * c2[k] for every metric.  Throws for alpha < 1.
inline bool approx_dominates(const CostVector &c1, const CostVector &c2, double alpha) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("approximation factor must be >= 1");
    assert(c1.size() == c2.size());
    for (std::size_t k = 0; k < c1.size(); ++k)
        if (c1[k] > alpha * c2[k]) return false;
    return true;
}

} // namespace rmq
