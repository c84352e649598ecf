#pragma once

#include <span>
#include <vector>

#include "rmq/core/plan.hpp"

namespace rmq {

/// Mutually non-dominated set of complete plans.  Within one output format no
/// entry weakly dominates another; on exact cost ties the earlier plan stays.
class Archive {
  public:
    /// Inserts `plan` unless a same-format entry weakly dominates it, and
    /// drops every same-format entry that `plan` weakly dominates.
    bool insert(const Plan &plan);

    /// Whether insert() would accept a plan with this cost and format.
    bool accepts(const CostVector &cost, OutputFormat format) const;

    std::span<const Plan> plans() const { return plans_; }
    std::size_t size() const { return plans_.size(); }
    bool empty() const { return plans_.empty(); }

    /// Cost vectors of all entries, in insertion order.
    std::vector<CostVector> costs() const;

    /// Merges another archive entry by entry.
    void merge(const Archive &other);

  private:
    std::vector<Plan> plans_;
};

/// Free-function form of Archive::insert.
inline bool archive_insert(Archive &archive, const Plan &plan) { return archive.insert(plan); }

} // namespace rmq
