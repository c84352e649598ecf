#include "rmq/baselines/exhaustive.hpp"

#include <stdexcept>
#include <unordered_map>

namespace rmq {

double bushy_plan_count(std::size_t tables, std::size_t scan_ops, std::size_t join_ops) {
    double count = 1.0;
    for (std::size_t i = 2; i <= tables; ++i) count *= static_cast<double>(i);
    // Catalan(n-1) = (2(n-1))! / (n! (n-1)!)
    double catalan = 1.0;
    for (std::size_t k = 0; k + 1 < tables; ++k) catalan = catalan * 2.0 * (2.0 * k + 1.0) / (k + 2.0);
    count *= catalan;
    for (std::size_t i = 0; i < tables; ++i) count *= static_cast<double>(scan_ops);
    for (std::size_t i = 0; i + 1 < tables; ++i) count *= static_cast<double>(join_ops);
    return count;
}

namespace {

class FullEnumerator {
  public:
    explicit FullEnumerator(const CostModel &model) : model_(model) {}

    Archive run() {
        Archive result;
        TableSet all = model_.query().tables();
        if (all.size() == 1) {
            for (const auto &p : plans(all)) result.insert(p);
            return result;
        }
        double card = model_.cardinality(all);
        for (TableSet a = all.next_submask(all); !a.empty(); a = a.next_submask(all)) {
            const auto &outers = plans(a);
            const auto &inners = plans(all - a);
            for (const auto &o : outers)
                for (const auto &i : inners)
                    for (OperatorId op = 0; op < model_.join_op_count(); ++op) {
                        CostVector cost = model_.join_cost(o, i, op, card);
                        OutputFormat f = model_.join_format(op);
                        if (result.accepts(cost, f)) result.insert(Plan::make_join(o, i, op, card, f, cost));
                    }
        }
        return result;
    }

  private:
    /// Every plan joining exactly `s`.
    const std::vector<Plan> &plans(TableSet s) {
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        std::vector<Plan> out;
        if (s.size() == 1) {
            for (OperatorId op = 0; op < model_.scan_op_count(); ++op) out.push_back(model_.scan(s.lowest(), op));
        } else {
            double card = model_.cardinality(s);
            for (TableSet a = s.next_submask(s); !a.empty(); a = a.next_submask(s)) {
                const auto &outers = plans(a);
                const auto &inners = plans(s - a);
                for (const auto &o : outers)
                    for (const auto &i : inners)
                        for (OperatorId op = 0; op < model_.join_op_count(); ++op)
                            out.push_back(model_.join(o, i, op, card));
            }
        }
        return memo_.emplace(s, std::move(out)).first->second;
    }

    const CostModel &model_;
    std::unordered_map<TableSet, std::vector<Plan>, TableSetHash> memo_;
};

class JoinTreeEnumerator {
  public:
    explicit JoinTreeEnumerator(const CostModel &model) : model_(model) {}

    Archive run() {
        TableSet all = model_.query().tables();
        if (all.size() == 1) return trees(all).front();
        Archive result;
        combine_all(all, result);
        return result;
    }

  private:
    /// Calls combine for every join tree over `s` (root split × subtree pair),
    /// offering its operator alternatives to `sink`.
    template <typename Sink>
    void for_each_tree(TableSet s, Sink &&sink) {
        double card = model_.cardinality(s);
        for (TableSet a = s.next_submask(s); !a.empty(); a = a.next_submask(s)) {
            const auto &outer_trees = trees(a);
            const auto &inner_trees = trees(s - a);
            for (const auto &ot : outer_trees)
                for (const auto &it : inner_trees) sink(ot, it, card);
        }
    }

    void offer(Archive &into, const Archive &ot, const Archive &it, double card) {
        for (const auto &o : ot.plans())
            for (const auto &i : it.plans())
                for (OperatorId op = 0; op < model_.join_op_count(); ++op) {
                    CostVector cost = model_.join_cost(o, i, op, card);
                    OutputFormat f = model_.join_format(op);
                    if (into.accepts(cost, f)) into.insert(Plan::make_join(o, i, op, card, f, cost));
                }
    }

    void combine_all(TableSet s, Archive &result) {
        for_each_tree(s, [&](const Archive &ot, const Archive &it, double card) { offer(result, ot, it, card); });
    }

    /// One operator frontier per join tree over `s`.
    const std::vector<Archive> &trees(TableSet s) {
        auto found = memo_.find(s);
        if (found != memo_.end()) return found->second;
        std::vector<Archive> out;
        if (s.size() == 1) {
            Archive leaf;
            for (OperatorId op = 0; op < model_.scan_op_count(); ++op) leaf.insert(model_.scan(s.lowest(), op));
            out.push_back(std::move(leaf));
        } else {
            for_each_tree(s, [&](const Archive &ot, const Archive &it, double card) {
                Archive tree;
                offer(tree, ot, it, card);
                out.push_back(std::move(tree));
            });
        }
        return memo_.emplace(s, std::move(out)).first->second;
    }

    const CostModel &model_;
    std::unordered_map<TableSet, std::vector<Archive>, TableSetHash> memo_;
};

} // namespace

Archive exhaustive_frontier(const CostModel &model, EnumerationMode mode) {
    const std::size_t n = model.table_count();
    if (n > kExhaustiveMaxTables)
        throw std::length_error("exhaustive enumeration supports at most " + std::to_string(kExhaustiveMaxTables) +
                                " tables, got " + std::to_string(n));
    if (mode == EnumerationMode::kAuto)
        mode = bushy_plan_count(n, model.scan_op_count(), model.join_op_count()) <= kFullEnumerationLimit
                   ? EnumerationMode::kFull
                   : EnumerationMode::kPerJoinTree;
    if (mode == EnumerationMode::kFull) return FullEnumerator(model).run();
    return JoinTreeEnumerator(model).run();
}

} // namespace rmq
