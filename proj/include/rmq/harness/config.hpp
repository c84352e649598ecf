#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmq/costmodel/catalog.hpp"
#include "rmq/harness/algorithms.hpp"
#include "rmq/optimizer/budget.hpp"
#include "rmq/querygen/querygen.hpp"

namespace rmq {

/// Invalid configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ReferenceMode { kUnion, kExact };

const char *reference_mode_name(ReferenceMode m);

/// Largest query for which an EXACT reference (DP(1.01)) is accepted.
inline constexpr std::size_t kExactReferenceMaxTables = 10;

struct ExperimentConfig {
    std::size_t tables = 10;
    Topology topology = Topology::kChain;
    SelectivityMode selectivity = SelectivityMode::kSteinbrunn;
    std::size_t metrics = 3;
    std::vector<AlgorithmSpec> algorithms = {{AlgorithmKind::kRmq}, {AlgorithmKind::kIi}, {AlgorithmKind::kSa},
                                             {AlgorithmKind::kTwoPhase}, {AlgorithmKind::kNsga2},
                                             {AlgorithmKind::kDp, 2.0}};
    Budget budget = Budget::millis(3000);
    /// Milliseconds for time budgets, iterations for iteration budgets.
    double sample_interval = 100;
    std::vector<std::uint64_t> seeds = default_seeds();
    ReferenceMode reference = ReferenceMode::kUnion;
    std::string output_path = "results.csv";
    OperatorCatalog catalog = OperatorCatalog::default_catalog();
    /// Worker threads for (seed, algorithm) cells.
    std::size_t jobs = 1;

    static std::vector<std::uint64_t> default_seeds();

    /// Throws ConfigError.
    void validate() const;

    /// Flat key=value text with section headers; parsed back by
    /// parse_config.
    std::string to_text() const;
};

/// Reads the config file format.  Sections:
///   [query]       tables topology selectivity
///   [experiment]  metrics algorithms budget_ms|budget_iters
///                 sample_ms|sample_iters seeds reference output jobs
///   [scan NAME] / [join NAME]  format time buffer disc
/// Any operator section replaces the whole default catalog.  Missing keys
/// keep their defaults.  Throws ConfigError.
ExperimentConfig parse_config(const std::string &text);
ExperimentConfig load_config(const std::string &path);

/// "1-20", "1,2,7" or combinations ("1-3,9").  Throws ConfigError.
std::vector<std::uint64_t> parse_seeds(const std::string &text);

} // namespace rmq
