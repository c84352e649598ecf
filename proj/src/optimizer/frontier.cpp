#include "rmq/optimizer/frontier.hpp"

#include <cmath>

namespace rmq {

double alpha_schedule(std::uint64_t iteration) {
    if (iteration < 1) throw std::invalid_argument("iteration counter starts at 1");
    return 25.0 * std::pow(0.99, static_cast<double>(iteration / 25));
}

bool sig_better(const Plan &p1, const Plan &p2, double alpha) {
    // alpha is validated even when the formats differ
    bool dominated = approx_dominates(p1.cost(), p2.cost(), alpha);
    return p1.format() == p2.format() && dominated;
}

bool prune_approx(std::vector<Plan> &plans, const Plan &new_plan, double alpha) {
    for (const auto &p : plans)
        if (sig_better(p, new_plan, alpha)) return false;
    std::erase_if(plans, [&](const Plan &p) { return sig_better(new_plan, p, 1.0); });
    plans.push_back(new_plan);
    return true;
}

std::span<const Plan> PlanCache::at(TableSet key) const {
    auto it = map_.find(key);
    if (it == map_.end()) return {};
    return it->second;
}

bool PlanCache::offer(const Plan &plan, double alpha) {
    return offer(plan.rel(), plan.cost(), plan.format(), alpha, [&] { return plan; });
}

void PlanCache::check_limit() const {
    if (limit_ != 0 && plans_ > limit_)
        throw PlanCacheFull("plan cache exceeded its limit of " + std::to_string(limit_) + " plans");
}

void approximate_frontiers(const CostModel &model, const Plan &p, PlanCache &cache, double alpha) {
    if (!p.is_join()) {
        for (OperatorId op = 0; op < model.scan_op_count(); ++op) {
            Plan scan = model.scan(p.table(), op);
            cache.offer(scan, alpha);
        }
        return;
    }
    approximate_frontiers(model, p.outer(), cache, alpha);
    approximate_frontiers(model, p.inner(), cache, alpha);
    // Buckets are node-stable vectors; only the bucket of p.rel() changes below.
    std::span<const Plan> outers = cache.at(p.outer().rel());
    std::span<const Plan> inners = cache.at(p.inner().rel());
    const double card = p.card();
    for (const auto &outer : outers) {
        for (const auto &inner : inners) {
            for (OperatorId op = 0; op < model.join_op_count(); ++op) {
                CostVector cost = model.join_cost(outer, inner, op, card);
                OutputFormat format = model.join_format(op);
                cache.offer(p.rel(), cost, format, alpha,
                            [&] { return Plan::make_join(outer, inner, op, card, format, cost); });
            }
        }
    }
}

} // namespace rmq
