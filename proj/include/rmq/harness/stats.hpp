#pragma once

#include <cstdint>
#include <vector>

#include "rmq/harness/config.hpp"

namespace rmq {

struct StatsConfig {
    std::vector<std::size_t> tables = {10, 25, 50, 100};
    Topology topology = Topology::kChain;
    SelectivityMode selectivity = SelectivityMode::kSteinbrunn;
    std::size_t metrics = 3;
    std::vector<std::uint64_t> seeds = ExperimentConfig::default_seeds();
    /// Budget of the RMQ runs that measure the final Pareto-set size.
    Budget rmq_budget = Budget::iterations(20);
    OperatorCatalog catalog = OperatorCatalog::default_catalog();
};

struct ClimbStatsRow {
    std::size_t tables = 0;
    double median_path_length = 0.0;
    double median_pareto_plans = 0.0;
    std::vector<std::size_t> path_lengths;
};

/// Climb path length from fresh random plans and RMQ result sizes, median
/// over seeds, per table count.
std::vector<ClimbStatsRow> climb_stats(const StatsConfig &cfg);

double median(std::vector<double> values);

} // namespace rmq
