#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rmq/core/table_set.hpp"

namespace rmq {

/// Join graph shape.  kCustom skips the shape check and is meant for
/// hand-built instances.
enum class Topology { kChain, kCycle, kStar, kCustom };

const char *topology_name(Topology t);
Topology parse_topology(const std::string &name);

struct JoinEdge {
    TableId a = 0;
    TableId b = 0;
    double selectivity = 1.0;
};

/// Optimization problem input: table cardinalities and a join graph with
/// predicate selectivities.
class QueryInstance {
  public:
    /// Validates endpoints, duplicates, selectivity range and that the edges
    /// match `topology`.  Throws std::invalid_argument.
    QueryInstance(std::vector<double> cards, std::vector<JoinEdge> edges, Topology topology);

    std::size_t table_count() const { return cards_.size(); }
    TableSet tables() const { return TableSet::first_n(cards_.size()); }
    double card(TableId t) const { return cards_[t]; }
    const std::vector<double> &cards() const { return cards_; }
    const std::vector<JoinEdge> &edges() const { return edges_; }
    Topology topology() const { return topology_; }
    /// Cardinality of the largest base table.
    double max_card() const;

    /// Edges from `t` to lower-numbered tables, sorted by neighbor id.
    const std::vector<std::pair<TableId, double>> &lower_neighbors(TableId t) const { return lower_[t]; }

    bool operator==(const QueryInstance &o) const;

  private:
    std::vector<double> cards_;
    std::vector<JoinEdge> edges_;
    Topology topology_;
    std::vector<std::vector<std::pair<TableId, double>>> lower_;
};

/// Largest value any cardinality or cost component is allowed to reach.
/// Cross products over many tables exceed the double range otherwise.
inline constexpr double kValueCeiling = 1e250;

/// ∏ table cardinalities × ∏ selectivities of edges inside `s`, multiplied in
/// a canonical order so the result depends on the set only.
/// Throws std::invalid_argument if `s` is empty or not a subset of the tables.
double cardinality(const QueryInstance &q, TableSet s);

} // namespace rmq
