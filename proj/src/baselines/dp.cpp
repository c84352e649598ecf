#include "rmq/baselines/dp.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rmq/optimizer/frontier.hpp"

namespace rmq {

double dp_level_alpha(double alpha, std::size_t tables) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("approximation factor must be >= 1");
    if (tables <= 1 || std::isinf(alpha)) return alpha;
    return std::pow(alpha, 1.0 / static_cast<double>(tables - 1));
}

Archive dp_frontier(const CostModel &model, double alpha, const BudgetClock *clock) {
    const std::size_t n = model.table_count();
    const double level_alpha = dp_level_alpha(alpha, n);
    // Base tables are pruned exactly so that the compounded error over the
    // n-1 join levels stays within alpha.
    const double scan_alpha = (n == 1 || std::isinf(alpha)) ? alpha : 1.0;
    auto timed_out = [&] { return clock != nullptr && clock->out_of_time(); };

    PlanCache table;
    for (TableId t = 0; t < n; ++t)
        for (OperatorId op = 0; op < model.scan_op_count(); ++op) table.offer(model.scan(t, op), scan_alpha);

    std::vector<TableId> idx;
    for (std::size_t k = 2; k <= n; ++k) {
        // lexicographic k-combinations of {0..n-1}
        idx.resize(k);
        std::iota(idx.begin(), idx.end(), TableId{0});
        for (;;) {
            TableSet s;
            for (auto t : idx) s.insert(t);
            const double card = model.cardinality(s);
            for (TableSet a = s.next_submask(s); !a.empty(); a = a.next_submask(s)) {
                if (timed_out()) return {};
                std::span<const Plan> outers = table.at(a);
                std::span<const Plan> inners = table.at(s - a);
                for (const auto &o : outers)
                    for (const auto &i : inners)
                        for (OperatorId op = 0; op < model.join_op_count(); ++op) {
                            CostVector cost = model.join_cost(o, i, op, card);
                            OutputFormat f = model.join_format(op);
                            table.offer(s, cost, f, level_alpha,
                                        [&] { return Plan::make_join(o, i, op, card, f, cost); });
                        }
            }
            // advance combination
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < k; ++j) idx[j] = static_cast<TableId>(idx[j - 1] + 1);
        }
    }

    Archive result;
    for (const auto &p : table.at(model.query().tables())) result.insert(p);
    return result;
}

} // namespace rmq
