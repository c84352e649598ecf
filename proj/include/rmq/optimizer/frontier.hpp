#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <span>
#include <unordered_map>
#include <vector>

#include "rmq/core/dominance.hpp"
#include "rmq/costmodel/cost_model.hpp"

namespace rmq {

/// Coarse-to-fine precision factor: 25 · 0.99^⌊i/25⌋.  Throws for i < 1.
double alpha_schedule(std::uint64_t iteration);

using AlphaSchedule = std::function<double(std::uint64_t)>;

/// Same output format and p1.cost ⪯_α p2.cost.  Throws for alpha < 1.
bool sig_better(const Plan &p1, const Plan &p2, double alpha);

/// α-approximate frontier pruning.  `new_plan` is inserted unless some plan
/// is significantly better than it with factor alpha; on insertion every plan
/// that `new_plan` is significantly better than with factor 1 is removed.
bool prune_approx(std::vector<Plan> &plans, const Plan &new_plan, double alpha);

/// Thrown when the cache exceeds its configured plan limit.
struct PlanCacheFull : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Map from table set to an α-pruned list of partial plans joining exactly
/// those tables.  Never evicts.
class PlanCache {
  public:
    using Bucket = std::vector<Plan>;
    /// Observes every offer after pruning.
    using OfferHook = std::function<void(const Plan &offered, double alpha, bool inserted, const Bucket &bucket)>;

    std::span<const Plan> at(TableSet key) const;

    /// prune_approx of `plan` into the bucket of plan.rel().
    bool offer(const Plan &plan, double alpha);

    /// Same as offer() but only builds the plan if it survives pruning.
    template <typename Make>
    bool offer(TableSet key, const CostVector &cost, OutputFormat format, double alpha, Make &&make);

    std::size_t key_count() const { return map_.size(); }
    std::size_t plan_count() const { return plans_; }
    const std::unordered_map<TableSet, Bucket, TableSetHash> &buckets() const { return map_; }

    /// 0 means unlimited.
    void set_plan_limit(std::size_t limit) { limit_ = limit; }
    void set_offer_hook(OfferHook hook) { hook_ = std::move(hook); }

  private:
    void check_limit() const;

    std::unordered_map<TableSet, Bucket, TableSetHash> map_;
    std::size_t plans_ = 0;
    std::size_t limit_ = 0;
    OfferHook hook_;
};

/// Approximates the frontier of every intermediate result of `p` from cached
/// partial plans, in post-order: leaves try every scan operator, joins combine
/// every cached outer and inner plan with every join operator.
void approximate_frontiers(const CostModel &model, const Plan &p, PlanCache &cache, double alpha);

/// Overload taking the main-loop iteration and the default schedule.
inline void approximate_frontiers(const CostModel &model, const Plan &p, PlanCache &cache, std::uint64_t iteration) {
    approximate_frontiers(model, p, cache, alpha_schedule(iteration));
}

template <typename Make>
bool PlanCache::offer(TableSet key, const CostVector &cost, OutputFormat format, double alpha, Make &&make) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("approximation factor must be >= 1");
    Bucket &bucket = map_[key];
    bool rejected = false;
    for (const auto &p : bucket) {
        if (p.format() == format && approx_dominates(p.cost(), cost, alpha)) {
            rejected = true;
            break;
        }
    }
    if (rejected) {
        if (hook_) hook_(make(), alpha, false, bucket);
        return false;
    }
    std::size_t before = bucket.size();
    std::erase_if(bucket, [&](const Plan &p) { return p.format() == format && weakly_dominates(cost, p.cost()); });
    plans_ -= before - bucket.size();
    bucket.push_back(make());
    ++plans_;
    if (hook_) hook_(bucket.back(), alpha, true, bucket);
    check_limit();
    return true;
}

} // namespace rmq
