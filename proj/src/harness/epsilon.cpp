#include "rmq/harness/epsilon.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rmq {

double epsilon_indicator(std::span<const CostVector> candidate, std::span<const CostVector> reference) {
    if (reference.empty()) throw std::invalid_argument("epsilon_indicator: empty reference set");
    if (candidate.empty()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const CostVector &r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const CostVector &c : candidate) {
            if (c.size() != r.size()) throw std::invalid_argument("epsilon_indicator: cost vector sizes differ");
            double ratio = 0.0;
            for (std::size_t k = 0; k < r.size() && ratio < best; ++k) ratio = std::max(ratio, c[k] / r[k]);
            best = std::min(best, ratio);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace rmq
