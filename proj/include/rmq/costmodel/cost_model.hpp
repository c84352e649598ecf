#pragma once

#include <span>
#include <vector>

#include "rmq/core/cost_vector.hpp"
#include "rmq/core/plan.hpp"
#include "rmq/costmodel/catalog.hpp"
#include "rmq/costmodel/query.hpp"

namespace rmq {

/// Recursive multi-metric plan costing.  A node's cost is its local operator
/// cost (every metric floored at 1) plus the costs of its sub-plans.  Only the
/// selected metrics are materialized in cost vectors.
///
/// The model is the factory for plans: every plan it builds carries a cached
/// cost computed from the children's cached costs in O(l).
class CostModel {
  public:
    explicit CostModel(QueryInstance query, OperatorCatalog catalog = OperatorCatalog::default_catalog(),
                       std::vector<Metric> metrics = {Metric::kTime, Metric::kBuffer, Metric::kDisc});

    const QueryInstance &query() const { return query_; }
    const OperatorCatalog &catalog() const { return catalog_; }
    std::span<const Metric> metrics() const { return metrics_; }
    std::size_t metric_count() const { return metrics_.size(); }
    std::size_t table_count() const { return query_.table_count(); }
    std::size_t scan_op_count() const { return catalog_.scan_ops().size(); }
    std::size_t join_op_count() const { return catalog_.join_ops().size(); }

    double cardinality(TableSet s) const { return rmq::cardinality(query_, s); }

    CostVector scan_local(TableId table, OperatorId op) const;
    CostVector join_local(OperatorId op, double outer_card, double inner_card, double out_card) const;

    /// Total cost of joining two costed sub-plans, without building the node.
    CostVector join_cost(const Plan &outer, const Plan &inner, OperatorId op, double out_card) const;

    Plan scan(TableId table, OperatorId op) const;
    Plan join(const Plan &outer, const Plan &inner, OperatorId op) const;
    /// Same as above with the output cardinality already known.
    Plan join(const Plan &outer, const Plan &inner, OperatorId op, double out_card) const;

    OutputFormat scan_format(OperatorId op) const { return catalog_.scan_ops()[op].format; }
    OutputFormat join_format(OperatorId op) const { return catalog_.join_ops()[op].format; }

  private:
    CostVector local(const OperatorDescriptor &d, const CostInputs &in) const;

    QueryInstance query_;
    OperatorCatalog catalog_;
    std::vector<Metric> metrics_;
};

/// Recomputes a plan's cost from scratch by walking the whole tree.
CostVector plan_cost(const CostModel &model, const Plan &plan);

/// Rebuilds every node of `plan` through the model, refreshing cached values.
Plan recost(const CostModel &model, const Plan &plan);

} // namespace rmq
