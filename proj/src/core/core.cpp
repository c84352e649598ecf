#include <algorithm>
#include <cmath>
#include <sstream>

#include "rmq/core/archive.hpp"
#include "rmq/core/dominance.hpp"
#include "rmq/core/plan.hpp"

namespace rmq {

std::string TableSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](TableId t) {
        if (!first) os << ',';
        os << t;
        first = false;
    });
    os << '}';
    return os.str();
}

const char *metric_name(Metric m) {
    switch (m) {
    case Metric::kTime: return "time";
    case Metric::kBuffer: return "buffer";
    case Metric::kDisc: return "disc";
    }
    return "?";
}

std::string CostVector::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << '[';
    for (std::size_t k = 0; k < size(); ++k) {
        if (k) os << ',';
        os << values_[k];
    }
    os << ']';
    return os.str();
}

const char *format_name(OutputFormat f) {
    return f == OutputFormat::kPipelined ? "pipelined" : "materialized";
}

Plan Plan::make_scan(TableId table, OperatorId op, double card, OutputFormat format, const CostVector &cost) {
    auto node = std::make_shared<Node>();
    node->rel = TableSet::single(table);
    node->cost = cost;
    node->card = card;
    node->op = op;
    node->table = table;
    node->format = format;
    Plan p;
    p.node_ = std::move(node);
    return p;
}

Plan Plan::make_join(Plan outer, Plan inner, OperatorId op, double card, OutputFormat format,
                     const CostVector &cost) {
    assert(outer && inner);
    assert(!outer.rel().intersects(inner.rel()));
    auto node = std::make_shared<Node>();
    node->rel = outer.rel() | inner.rel();
    node->cost = cost;
    node->card = card;
    node->nodes = 1 + outer.node_->nodes + inner.node_->nodes;
    node->op = op;
    node->table = 0;
    node->format = format;
    node->outer = std::move(outer);
    node->inner = std::move(inner);
    Plan p;
    p.node_ = std::move(node);
    return p;
}

bool Plan::same_structure(const Plan &o) const {
    if (node_ == o.node_) return true;
    if (!node_ || !o.node_) return false;
    if (is_join() != o.is_join() || op() != o.op()) return false;
    if (!is_join()) return table() == o.table();
    return outer().same_structure(o.outer()) && inner().same_structure(o.inner());
}

std::string Plan::to_string() const {
    if (!node_) return "<empty>";
    if (!is_join()) return std::to_string(table()) + "/" + std::to_string(op());
    return "(" + outer().to_string() + " *" + std::to_string(op()) + " " + inner().to_string() + ")";
}

bool Archive::accepts(const CostVector &cost, OutputFormat format) const {
    for (const auto &p : plans_)
        if (p.format() == format && weakly_dominates(p.cost(), cost)) return false;
    return true;
}

bool Archive::insert(const Plan &plan) {
    if (!accepts(plan.cost(), plan.format())) return false;
    std::erase_if(plans_, [&](const Plan &p) {
        return p.format() == plan.format() && weakly_dominates(plan.cost(), p.cost());
    });
    plans_.push_back(plan);
    return true;
}

std::vector<CostVector> Archive::costs() const {
    std::vector<CostVector> out;
    out.reserve(plans_.size());
    for (const auto &p : plans_) out.push_back(p.cost());
    return out;
}

void Archive::merge(const Archive &other) {
    for (const auto &p : other.plans_) insert(p);
}

} // namespace rmq
