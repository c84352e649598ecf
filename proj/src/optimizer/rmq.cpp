#include "rmq/optimizer/rmq.hpp"

namespace rmq {

RmqOptimizer::RmqOptimizer(const CostModel &model, std::uint64_t seed, RmqOptions options)
    : model_(model), options_(std::move(options)), rng_(seed) {
    cache_.set_plan_limit(options_.max_cached_plans);
}

void RmqOptimizer::iterate() {
    Plan plan = random_plan(model_, rng_);
    ClimbResult climbed = pareto_climb(model_, std::move(plan));
    last_path_length_ = climbed.path_length;
    approximate_frontiers(model_, climbed.plan, cache_, current_alpha());
    ++iteration_;
}

Archive RmqOptimizer::result() const {
    Archive a;
    for (const auto &p : frontier()) a.insert(p);
    return a;
}

Archive rmq_optimize(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink,
                     RmqOptions options) {
    BudgetClock clock(budget);
    RmqOptimizer opt(model, seed, std::move(options));
    while (!clock.exhausted(opt.iterations())) {
        opt.iterate();
        if (sink) sink(Progress{clock.elapsed_ms(), opt.iterations(), opt.frontier()});
    }
    return opt.result();
}

} // namespace rmq
