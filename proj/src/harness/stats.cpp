#include "rmq/harness/stats.hpp"

#include <algorithm>
#include <stdexcept>

#include "rmq/harness/experiment.hpp"
#include "rmq/optimizer/climb.hpp"
#include "rmq/optimizer/random_plan.hpp"
#include "rmq/optimizer/rmq.hpp"

namespace rmq {

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty set");
    std::sort(values.begin(), values.end());
    std::size_t m = values.size() / 2;
    return values.size() % 2 ? values[m] : (values[m - 1] + values[m]) / 2.0;
}

std::vector<ClimbStatsRow> climb_stats(const StatsConfig &cfg) {
    if (cfg.seeds.empty()) throw std::invalid_argument("climb_stats: no seeds");
    std::vector<ClimbStatsRow> rows;
    for (std::size_t n : cfg.tables) {
        ExperimentConfig ec;
        ec.tables = n;
        // cycles need three tables; tiny queries fall back to chains
        ec.topology = (cfg.topology == Topology::kCycle && n < 3) ? Topology::kChain : cfg.topology;
        ec.selectivity = cfg.selectivity;
        ec.metrics = cfg.metrics;
        ec.catalog = cfg.catalog;

        ClimbStatsRow row;
        row.tables = n;
        std::vector<double> lengths, sizes;
        for (std::uint64_t seed : cfg.seeds) {
            CostModel model = make_test_case(ec, seed);
            Rng rng(seed * 0x9e3779b97f4a7c15ULL + n);
            ClimbResult climb = pareto_climb(model, random_plan(model, rng));
            row.path_lengths.push_back(climb.path_length);
            lengths.push_back(static_cast<double>(climb.path_length));
            if (!cfg.rmq_budget.is_zero()) sizes.push_back(static_cast<double>(rmq_optimize(model, cfg.rmq_budget, seed).size()));
        }
        row.median_path_length = median(lengths);
        row.median_pareto_plans = sizes.empty() ? 0.0 : median(sizes);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace rmq
