#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "rmq/costmodel/query.hpp"

namespace rmq {

enum class SelectivityMode { kSteinbrunn, kMinMax };

const char *selectivity_mode_name(SelectivityMode m);
SelectivityMode parse_selectivity_mode(const std::string &name);

/// Random query generation parameters.
struct GenSpec {
    std::size_t tables = 10;
    Topology topology = Topology::kChain;
    SelectivityMode selectivity = SelectivityMode::kSteinbrunn;
    std::uint64_t seed = 0;
};

using Rng = std::mt19937_64;

/// Cardinality strata: [low, high) with draw probability.  The last stratum
/// includes its upper bound.
struct CardinalityStratum {
    double low;
    double high;
    double probability;
};
inline constexpr std::array<CardinalityStratum, 4> kCardinalityStrata = {{
    {10, 100, 0.15},
    {100, 1000, 0.35},
    {1000, 10000, 0.35},
    {10000, 100000, 0.15},
}};

/// Stratified table cardinality: stratum by probability, then a uniform
/// integer inside it.
double sample_cardinality(Rng &rng);

/// Log-uniform selectivity over [1e-4, 1].
double sample_selectivity_steinbrunn(Rng &rng);

/// Selectivity such that the join output lies uniformly between the two input
/// cardinalities.
double sample_selectivity_minmax(double card_a, double card_b, Rng &rng);

/// Deterministic in `spec.seed`.  Throws std::invalid_argument for invalid
/// specs (no tables, too many tables, cycles below three tables).
QueryInstance generate_query(const GenSpec &spec);

} // namespace rmq
