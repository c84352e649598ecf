#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rmq/core/archive.hpp"
#include "rmq/costmodel/cost_model.hpp"
#include "rmq/querygen/querygen.hpp"

namespace rmq::test {

inline CostVector random_cost(std::mt19937_64 &rng, std::size_t l, double lo = 1.0, double hi = 10.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    CostVector c(l);
    for (std::size_t k = 0; k < l; ++k) c[k] = u(rng);
    return c;
}

// small integer grid so ties and dominance both occur often
inline CostVector random_grid_cost(std::mt19937_64 &rng, std::size_t l, int levels = 4) {
    std::uniform_int_distribution<int> u(1, levels);
    CostVector c(l);
    for (std::size_t k = 0; k < l; ++k) c[k] = u(rng);
    return c;
}

inline std::vector<Metric> first_metrics(std::size_t l) {
    std::vector<Metric> m;
    for (std::size_t k = 0; k < l; ++k) m.push_back(static_cast<Metric>(k));
    return m;
}

inline CostModel random_model(std::size_t n, std::uint64_t seed, std::size_t l = 3,
                              Topology topology = Topology::kChain,
                              SelectivityMode mode = SelectivityMode::kSteinbrunn,
                              OperatorCatalog catalog = OperatorCatalog::default_catalog()) {
    return CostModel(generate_query({n, topology, mode, seed}), std::move(catalog), first_metrics(l));
}

inline std::vector<CostVector> cost_set(const std::vector<CostVector> &costs) {
    std::vector<CostVector> out = costs;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<CostVector> cost_set(const Archive &a) { return cost_set(a.costs()); }

inline OperatorDescriptor make_op(const char *name, const char *time, const char *buffer = "const:1",
                                  const char *disc = "const:0", OutputFormat f = OutputFormat::kPipelined) {
    return {name, f, {CostFormula::parse(time), CostFormula::parse(buffer), CostFormula::parse(disc)}};
}

} // namespace rmq::test
