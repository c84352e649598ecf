#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "rmq/core/cost_vector.hpp"
#include "rmq/core/table_set.hpp"

namespace rmq {

/// Data representation produced by a plan.  Plans are only cost-compared
/// when their formats agree.
enum class OutputFormat : std::uint8_t { kPipelined = 0, kMaterialized = 1 };

const char *format_name(OutputFormat f);

using OperatorId = std::uint16_t;

/// Immutable binary operator tree.  Leaves scan one table; inner nodes join an
/// outer and an inner sub-plan.  Every node caches its table set, output
/// cardinality, output format and accumulated cost vector.
///
/// Nodes are shared: a mutation rebuilds only the nodes on the path to the
/// root, so sub-plans are reused across mutations, plan caches and archives.
/// A default-constructed Plan is empty.
class Plan {
  public:
    Plan() = default;

    /// Raw construction; the caller provides the cached values.  The cost
    /// model is the normal entry point, tests use these to inject costs.
    static Plan make_scan(TableId table, OperatorId op, double card, OutputFormat format, const CostVector &cost);
    static Plan make_join(Plan outer, Plan inner, OperatorId op, double card, OutputFormat format,
                          const CostVector &cost);

    explicit operator bool() const { return node_ != nullptr; }
    bool is_join() const;

    const TableSet &rel() const;
    const CostVector &cost() const;
    double card() const;
    OutputFormat format() const;
    OperatorId op() const;
    /// Scanned table; only meaningful for leaves.
    TableId table() const;
    const Plan &outer() const;
    const Plan &inner() const;
    /// Number of nodes in the tree (2|rel| - 1).
    std::size_t node_count() const;

    /// Identity of the underlying node.
    bool same_node(const Plan &o) const { return node_ == o.node_; }

    /// Structural equality: same shape, tables and operators.
    bool same_structure(const Plan &o) const;

    /// E.g. "((0/1 *1 2/0) *0 1/0)": table/scan-op leaves, *op joins.
    std::string to_string() const;

  private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct Plan::Node {
    TableSet rel;
    CostVector cost;
    double card = 0.0;
    Plan outer;
    Plan inner;
    std::uint32_t nodes = 1;
    OperatorId op = 0;
    TableId table = 0;
    OutputFormat format = OutputFormat::kPipelined;
};

inline bool Plan::is_join() const { return static_cast<bool>(node_->outer); }
inline const TableSet &Plan::rel() const { return node_->rel; }
inline const CostVector &Plan::cost() const { return node_->cost; }
inline double Plan::card() const { return node_->card; }
inline OutputFormat Plan::format() const { return node_->format; }
inline OperatorId Plan::op() const { return node_->op; }
inline TableId Plan::table() const { return node_->table; }
inline const Plan &Plan::outer() const { return node_->outer; }
inline const Plan &Plan::inner() const { return node_->inner; }
inline std::size_t Plan::node_count() const { return node_->nodes; }

} // namespace rmq
