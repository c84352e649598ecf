#include "rmq/optimizer/climb.hpp"

#include "rmq/core/dominance.hpp"
#include "rmq/optimizer/mutations.hpp"

namespace rmq {

bool better(const Plan &p1, const Plan &p2) {
    return p1.format() == p2.format() && strictly_dominates(p1.cost(), p2.cost());
}

bool prune_strict(std::vector<Plan> &plans, const Plan &new_plan) {
    for (auto &p : plans) {
        if (p.format() != new_plan.format()) continue;
        if (!better(new_plan, p)) return false;
        p = new_plan;
        return true;
    }
    plans.push_back(new_plan);
    return true;
}

std::vector<Plan> pareto_step(const CostModel &model, const Plan &p) {
    std::vector<Plan> result;
    auto offer = [&](Plan m) { prune_strict(result, m); };
    if (!p.is_join()) {
        for_each_mutation(model, p, offer);
        return result;
    }
    std::vector<Plan> outers = pareto_step(model, p.outer());
    std::vector<Plan> inners = pareto_step(model, p.inner());
    for (const auto &outer : outers) {
        for (const auto &inner : inners) {
            if (outer.same_node(p.outer()) && inner.same_node(p.inner()))
                for_each_mutation(model, p, offer);
            else
                for_each_mutation(model, model.join(outer, inner, p.op(), p.card()), offer);
        }
    }
    return result;
}

ClimbResult pareto_climb(const CostModel &model, Plan p) {
    ClimbResult r;
    for (;;) {
        bool improved = false;
        for (const auto &pm : pareto_step(model, p)) {
            if (strictly_dominates(pm.cost(), p.cost())) {
                p = pm;
                ++r.path_length;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    r.plan = std::move(p);
    return r;
}

} // namespace rmq
