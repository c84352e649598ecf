#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rmq/core/archive.hpp"
#include "rmq/costmodel/cost_model.hpp"
#include "rmq/optimizer/budget.hpp"

namespace rmq {

/// Ordinal encoding of left-deep plans as one flat gene array:
///   [0, n-1)       ordinal genes, gene k in [0, n-1-k], picking the next table
///                  from the shrinking list of remaining tables
///   [n-1, 2n-1)    scan operator per table id
///   [2n-1, 3n-2)   join operator per join, bottom-up
/// Every in-range gene array decodes to a valid plan.
class OrdinalEncoding {
  public:
    OrdinalEncoding(std::size_t tables, std::size_t scan_ops, std::size_t join_ops);

    std::size_t gene_count() const { return 3 * n_ - 2; }
    /// Number of values gene `g` can take.
    std::uint16_t range(std::size_t g) const;
    bool valid(std::span<const std::uint16_t> genes) const;

    std::vector<std::uint16_t> random(std::mt19937_64 &rng) const;
    Plan decode(const CostModel &model, std::span<const std::uint16_t> genes) const;

  private:
    std::size_t n_;
    std::size_t scans_;
    std::size_t joins_;
};

struct Nsga2Individual {
    std::vector<std::uint16_t> genes;
    Plan decoded;
    std::size_t rank = 0;
    double crowding = 0.0;
};

struct Nsga2Params {
    std::size_t population = 200;
    double crossover_probability = 0.9;
};

/// Fast non-dominated sort; rank 0 is the first front.
std::vector<std::size_t> non_dominated_ranks(std::span<const CostVector> costs);

/// Crowding distance of each member of `front` (indices into `costs`),
/// infinite at the boundaries.
std::vector<double> crowding_distances(std::span<const CostVector> costs, std::span<const std::size_t> front);

/// NSGA-II over ordinal-encoded left-deep plans.  One generation per
/// iteration; every evaluated individual is offered to the result archive.
Archive run_nsga2(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink = {},
                  const Nsga2Params &params = {});

/// Population-level access for tests: runs `generations` generations and
/// returns the final population.
std::vector<Nsga2Individual> nsga2_population(const CostModel &model, std::uint64_t seed, std::size_t generations,
                                              const Nsga2Params &params = {}, std::size_t *evaluations = nullptr);

} // namespace rmq
