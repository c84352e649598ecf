#include "rmq/costmodel/cost_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmq {

CostModel::CostModel(QueryInstance query, OperatorCatalog catalog, std::vector<Metric> metrics)
    : query_(std::move(query)), catalog_(std::move(catalog)), metrics_(std::move(metrics)) {
    if (metrics_.empty() || metrics_.size() > kMetricCount)
        throw std::invalid_argument("metric count must be between 1 and 3");
}

CostVector CostModel::local(const OperatorDescriptor &d, const CostInputs &in) const {
    CostVector c(metrics_.size());
    for (std::size_t k = 0; k < metrics_.size(); ++k) {
        double v = d.formulas[static_cast<std::size_t>(metrics_[k])].evaluate(in);
        c[k] = std::min(std::max(v, 1.0), kValueCeiling);
    }
    return c;
}

CostVector CostModel::scan_local(TableId table, OperatorId op) const {
    CostInputs in;
    in.card = in.out = query_.card(table);
    return local(catalog_.scan_ops()[op], in);
}

CostVector CostModel::join_local(OperatorId op, double outer_card, double inner_card, double out_card) const {
    return local(catalog_.join_ops()[op], CostInputs{0.0, outer_card, inner_card, out_card});
}

CostVector CostModel::join_cost(const Plan &outer, const Plan &inner, OperatorId op, double out_card) const {
    CostVector c = join_local(op, outer.card(), inner.card(), out_card);
    const auto &oc = outer.cost();
    const auto &ic = inner.cost();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = c[k] + oc[k] + ic[k];
    return c;
}

Plan CostModel::scan(TableId table, OperatorId op) const {
    return Plan::make_scan(table, op, query_.card(table), scan_format(op), scan_local(table, op));
}

Plan CostModel::join(const Plan &outer, const Plan &inner, OperatorId op) const {
    return join(outer, inner, op, cardinality(outer.rel() | inner.rel()));
}

Plan CostModel::join(const Plan &outer, const Plan &inner, OperatorId op, double out_card) const {
    return Plan::make_join(outer, inner, op, out_card, join_format(op), join_cost(outer, inner, op, out_card));
}

CostVector plan_cost(const CostModel &model, const Plan &plan) {
    if (!plan.is_join()) return model.scan_local(plan.table(), plan.op());
    CostVector outer = plan_cost(model, plan.outer());
    CostVector inner = plan_cost(model, plan.inner());
    double out_card = cardinality(model.query(), plan.rel());
    double outer_card = cardinality(model.query(), plan.outer().rel());
    double inner_card = cardinality(model.query(), plan.inner().rel());
    CostVector c = model.join_local(plan.op(), outer_card, inner_card, out_card);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = c[k] + outer[k] + inner[k];
    return c;
}

Plan recost(const CostModel &model, const Plan &plan) {
    if (!plan.is_join()) return model.scan(plan.table(), plan.op());
    return model.join(recost(model, plan.outer()), recost(model, plan.inner()), plan.op());
}

} // namespace rmq
