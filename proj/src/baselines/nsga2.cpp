#include "rmq/baselines/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rmq/core/dominance.hpp"
#include "rmq/optimizer/random_plan.hpp"

namespace rmq {

OrdinalEncoding::OrdinalEncoding(std::size_t tables, std::size_t scan_ops, std::size_t join_ops)
    : n_(tables), scans_(scan_ops), joins_(join_ops) {
    if (n_ == 0 || scans_ == 0 || joins_ == 0) throw std::invalid_argument("empty ordinal encoding");
}

std::uint16_t OrdinalEncoding::range(std::size_t g) const {
    if (g + 1 < n_) return static_cast<std::uint16_t>(n_ - g);
    if (g < 2 * n_ - 1) return static_cast<std::uint16_t>(scans_);
    return static_cast<std::uint16_t>(joins_);
}

bool OrdinalEncoding::valid(std::span<const std::uint16_t> genes) const {
    if (genes.size() != gene_count()) return false;
    for (std::size_t g = 0; g < genes.size(); ++g)
        if (genes[g] >= range(g)) return false;
    return true;
}

std::vector<std::uint16_t> OrdinalEncoding::random(std::mt19937_64 &rng) const {
    std::vector<std::uint16_t> genes(gene_count());
    for (std::size_t g = 0; g < genes.size(); ++g)
        genes[g] = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, range(g) - 1)(rng));
    return genes;
}

Plan OrdinalEncoding::decode(const CostModel &model, std::span<const std::uint16_t> genes) const {
    std::vector<TableId> remaining(n_);
    std::iota(remaining.begin(), remaining.end(), TableId{0});
    auto scan = [&](TableId t) { return model.scan(t, genes[n_ - 1 + t]); };
    auto take = [&](std::size_t k) {
        std::size_t pos = k + 1 < n_ ? genes[k] : 0;
        TableId t = remaining[pos];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
        return t;
    };
    Plan plan = scan(take(0));
    for (std::size_t k = 1; k < n_; ++k) plan = model.join(plan, scan(take(k)), genes[2 * n_ - 1 + (k - 1)]);
    return plan;
}

std::vector<std::size_t> non_dominated_ranks(std::span<const CostVector> costs) {
    const std::size_t n = costs.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> counter(n, 0);
    std::vector<std::size_t> rank(n, 0);
    std::vector<std::size_t> front;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            if (strictly_dominates(costs[p], costs[q]))
                dominated[p].push_back(q);
            else if (strictly_dominates(costs[q], costs[p]))
                ++counter[p];
        }
        if (counter[p] == 0) front.push_back(p);
    }
    std::size_t r = 0;
    while (!front.empty()) {
        std::vector<std::size_t> next;
        for (auto p : front) {
            rank[p] = r;
            for (auto q : dominated[p])
                if (--counter[q] == 0) next.push_back(q);
        }
        front = std::move(next);
        ++r;
    }
    return rank;
}

std::vector<double> crowding_distances(std::span<const CostVector> costs, std::span<const std::size_t> front) {
    const std::size_t m = front.size();
    std::vector<double> distance(m, 0.0);
    if (m == 0) return distance;
    const std::size_t l = costs[front[0]].size();
    std::vector<std::size_t> order(m);
    for (std::size_t k = 0; k < l; ++k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return costs[front[a]][k] < costs[front[b]][k]; });
        const double lo = costs[front[order.front()]][k];
        const double hi = costs[front[order.back()]][k];
        distance[order.front()] = distance[order.back()] = std::numeric_limits<double>::infinity();
        if (hi <= lo) continue;
        for (std::size_t i = 1; i + 1 < m; ++i)
            distance[order[i]] += (costs[front[order[i + 1]]][k] - costs[front[order[i - 1]]][k]) / (hi - lo);
    }
    return distance;
}

namespace {

class Nsga2 {
  public:
    Nsga2(const CostModel &model, std::uint64_t seed, const Nsga2Params &params)
        : model_(model), params_(params), encoding_(model.table_count(), model.scan_op_count(), model.join_op_count()),
          rng_(seed) {
        if (params_.population < 2) throw std::invalid_argument("NSGA-II needs a population of at least 2");
    }

    /// Returns false if `stop` fired before the population was complete.
    template <typename Stop>
    bool initialize(Stop &&stop) {
        while (population_.size() < params_.population) {
            if (stop()) return false;
            population_.push_back(evaluate(encoding_.random(rng_)));
        }
        assign_rank_and_crowding(population_);
        return true;
    }

    template <typename Stop>
    bool generation(Stop &&stop) {
        std::vector<Nsga2Individual> offspring;
        offspring.reserve(params_.population);
        const std::size_t genes = encoding_.gene_count();
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (offspring.size() < params_.population) {
            auto a = tournament().genes;
            auto b = tournament().genes;
            if (genes >= 2 && unit(rng_) < params_.crossover_probability) {
                std::size_t cut = std::uniform_int_distribution<std::size_t>(1, genes - 1)(rng_);
                std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(cut), a.end(),
                                 b.begin() + static_cast<std::ptrdiff_t>(cut));
            }
            for (auto *child : {&a, &b}) {
                if (offspring.size() >= params_.population) break;
                if (stop()) return false;
                mutate(*child);
                offspring.push_back(evaluate(std::move(*child)));
            }
        }
        select(std::move(offspring));
        return true;
    }

    const Archive &archive() const { return archive_; }
    const std::vector<Nsga2Individual> &population() const { return population_; }
    std::size_t evaluations() const { return evaluations_; }

  private:
    Nsga2Individual evaluate(std::vector<std::uint16_t> genes) {
        Nsga2Individual ind;
        ind.decoded = encoding_.decode(model_, genes);
        ind.genes = std::move(genes);
        archive_.insert(ind.decoded);
        ++evaluations_;
        return ind;
    }

    void mutate(std::vector<std::uint16_t> &genes) {
        const double p = 1.0 / static_cast<double>(genes.size());
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::size_t g = 0; g < genes.size(); ++g)
            if (unit(rng_) < p)
                genes[g] = static_cast<std::uint16_t>(std::uniform_int_distribution<int>(0, encoding_.range(g) - 1)(rng_));
    }

    /// Crowded-comparison binary tournament.
    const Nsga2Individual &tournament() {
        std::uniform_int_distribution<std::size_t> pick(0, population_.size() - 1);
        const auto &x = population_[pick(rng_)];
        const auto &y = population_[pick(rng_)];
        if (x.rank != y.rank) return x.rank < y.rank ? x : y;
        return y.crowding > x.crowding ? y : x;
    }

    static void assign_rank_and_crowding(std::vector<Nsga2Individual> &pop) {
        std::vector<CostVector> costs;
        costs.reserve(pop.size());
        for (const auto &ind : pop) costs.push_back(ind.decoded.cost());
        auto ranks = non_dominated_ranks(costs);
        std::size_t max_rank = 0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            pop[i].rank = ranks[i];
            max_rank = std::max(max_rank, ranks[i]);
        }
        std::vector<std::vector<std::size_t>> fronts(max_rank + 1);
        for (std::size_t i = 0; i < pop.size(); ++i) fronts[ranks[i]].push_back(i);
        for (const auto &front : fronts) {
            auto d = crowding_distances(costs, front);
            for (std::size_t j = 0; j < front.size(); ++j) pop[front[j]].crowding = d[j];
        }
    }

    /// Environmental selection over parents ∪ offspring.
    void select(std::vector<Nsga2Individual> offspring) {
        std::vector<Nsga2Individual> combined = std::move(population_);
        for (auto &o : offspring) combined.push_back(std::move(o));
        assign_rank_and_crowding(combined);
        std::vector<std::size_t> order(combined.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (combined[a].rank != combined[b].rank) return combined[a].rank < combined[b].rank;
            return combined[a].crowding > combined[b].crowding;
        });
        population_.clear();
        for (std::size_t i = 0; i < params_.population; ++i) population_.push_back(std::move(combined[order[i]]));
    }

    const CostModel &model_;
    Nsga2Params params_;
    OrdinalEncoding encoding_;
    Rng rng_;
    std::vector<Nsga2Individual> population_;
    Archive archive_;
    std::size_t evaluations_ = 0;
};

} // namespace

Archive run_nsga2(const CostModel &model, const Budget &budget, std::uint64_t seed, const ProgressSink &sink,
                  const Nsga2Params &params) {
    BudgetClock clock(budget);
    Nsga2 ga(model, seed, params);
    if (clock.exhausted(0)) return {};
    auto stop = [&] { return clock.out_of_time(); };
    std::uint64_t generations = 0;
    if (ga.initialize(stop)) {
        while (!clock.exhausted(generations)) {
            bool complete = ga.generation(stop);
            ++generations;
            if (sink) sink(Progress{clock.elapsed_ms(), generations, ga.archive().plans()});
            if (!complete) break;
        }
    }
    return ga.archive();
}

std::vector<Nsga2Individual> nsga2_population(const CostModel &model, std::uint64_t seed, std::size_t generations,
                                              const Nsga2Params &params, std::size_t *evaluations) {
    Nsga2 ga(model, seed, params);
    auto never = [] { return false; };
    ga.initialize(never);
    for (std::size_t g = 0; g < generations; ++g) ga.generation(never);
    if (evaluations) *evaluations = ga.evaluations();
    return ga.population();
}

} // namespace rmq
