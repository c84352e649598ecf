#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmq/core/archive.hpp"
#include "rmq/costmodel/cost_model.hpp"
#include "rmq/optimizer/budget.hpp"

namespace rmq {

enum class AlgorithmKind { kRmq, kIi, kSa, kTwoPhase, kNsga2, kDp };

struct AlgorithmSpec {
    AlgorithmKind kind = AlgorithmKind::kRmq;
    /// Only used by kDp; may be +∞.
    double alpha = 1.0;

    /// "RMQ", "II", "SA", "2P", "NSGA2", "DP(2)", "DP(inf)".
    std::string name() const;
    bool operator==(const AlgorithmSpec &) const = default;
};

/// Accepts the display names case-insensitively, plus "dp:<alpha>".
/// Throws std::invalid_argument.
AlgorithmSpec parse_algorithm(const std::string &text);
/// Comma or whitespace separated list.
std::vector<AlgorithmSpec> parse_algorithms(const std::string &text);

/// Uniform entry point for every algorithm.  DP reports no progress and
/// returns an empty archive when a time budget expires first.
Archive run_algorithm(const AlgorithmSpec &spec, const CostModel &model, const Budget &budget, std::uint64_t seed,
                      const ProgressSink &sink = {});

} // namespace rmq
