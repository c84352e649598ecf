#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include <unistd.h>

#include "rmq/baselines/exhaustive.hpp"
#include "rmq/core/dominance.hpp"
#include "rmq/harness/algorithms.hpp"
#include "rmq/harness/config.hpp"
#include "rmq/harness/epsilon.hpp"
#include "rmq/harness/experiment.hpp"
#include "rmq/harness/stats.hpp"
#include "support.hpp"

using namespace rmq;

namespace {

double brute_epsilon(const std::vector<CostVector> &cand, const std::vector<CostVector> &ref) {
    // bisection over the covering predicate
    auto covers = [&](double a) {
        for (const auto &r : ref) {
            bool ok = false;
            for (const auto &c : cand) {
                bool all = true;
                for (std::size_t k = 0; k < r.size(); ++k) all &= c[k] <= a * r[k];
                ok |= all;
            }
            if (!ok) return false;
        }
        return true;
    };
    double lo = 1e-6, hi = 1e6;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        (covers(mid) ? hi : lo) = mid;
    }
    return hi;
}

Plan leaf(CostVector c) { return Plan::make_scan(0, 0, 1, OutputFormat::kPipelined, c); }

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("rmq_test_" + std::to_string(::getpid()) + "_" + name);
}

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.tables = 6;
    cfg.metrics = 2;
    cfg.algorithms = parse_algorithms("RMQ,II,SA,2P,NSGA2,DP(2)");
    cfg.budget = Budget::iterations(12);
    cfg.sample_interval = 3;
    cfg.seeds = {1, 2, 3};
    return cfg;
}

} // namespace

TEST_CASE("epsilon indicator examples") {
    std::vector<CostVector> x = {{1, 4}, {4, 1}, {2, 2}};
    CHECK(epsilon_indicator(x, x) == 1.0);
    std::vector<CostVector> c1 = {{2, 2}}, r1 = {{1, 1}};
    CHECK(epsilon_indicator(c1, r1) == 2.0);
    std::vector<CostVector> c2 = {{1, 4}, {4, 1}};
    CHECK(epsilon_indicator(c2, x) == 2.0);
    CHECK(std::isinf(epsilon_indicator({}, x)));
    CHECK_THROWS_AS(epsilon_indicator(x, {}), std::invalid_argument);
}

TEST_CASE("epsilon indicator properties") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 300; ++round) {
        std::size_t l = 1 + round % 3;
        std::vector<CostVector> cand, ref;
        for (int i = 0; i < 1 + round % 7; ++i) cand.push_back(test::random_cost(rng, l, 1, 20));
        for (int i = 0; i < 1 + round % 5; ++i) ref.push_back(test::random_cost(rng, l, 1, 20));
        CHECK(epsilon_indicator(cand, cand) == 1.0);
        double e = epsilon_indicator(cand, ref);
        CHECK(e == doctest::Approx(brute_epsilon(cand, ref)).epsilon(1e-9));

        auto more = cand;
        more.push_back(test::random_cost(rng, l, 1, 20));
        CHECK(epsilon_indicator(more, ref) <= e);
        auto bigger = ref;
        bigger.push_back(test::random_cost(rng, l, 1, 20));
        CHECK(epsilon_indicator(cand, bigger) >= e);
    }
}

TEST_CASE("union reference") {
    CostModel m = test::random_model(4, 1, 2);
    Archive a;
    a.insert(leaf({1, 4}));
    a.insert(leaf({4, 1}));
    auto single = build_reference(m, {a}, ReferenceMode::kUnion);
    CHECK(single == test::cost_set(a));

    Archive b;
    b.insert(leaf({2, 2}));
    b.insert(leaf({1, 5}));
    Archive c;
    c.insert(leaf({1, 4}));
    auto ref = build_reference(m, {a, b, c}, ReferenceMode::kUnion);
    CHECK(ref == std::vector<CostVector>{{1, 4}, {2, 2}, {4, 1}});
    for (const auto &x : ref)
        for (const auto &y : ref)
            if (!(x == y)) CHECK_FALSE(weakly_dominates(x, y));
}

TEST_CASE("exact reference") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CostModel m = test::random_model(4, seed, 3, Topology::kStar);
        auto ref = build_reference(m, {}, ReferenceMode::kExact);
        CHECK(epsilon_indicator(exhaustive_frontier(m).costs(), ref) == 1.0);
        CHECK(epsilon_indicator(ref, exhaustive_frontier(m).costs()) <= 1.01);
    }
    CHECK_THROWS_AS(build_reference(test::random_model(11, 1), {}, ReferenceMode::kExact), std::length_error);
}

TEST_CASE("algorithm names") {
    CHECK(parse_algorithm("rmq").name() == "RMQ");
    CHECK(parse_algorithm("NSGA-II").kind == AlgorithmKind::kNsga2);
    CHECK(parse_algorithm("dp:2") == AlgorithmSpec{AlgorithmKind::kDp, 2.0});
    CHECK(parse_algorithm("DP(1.01)").name() == "DP(1.01)");
    CHECK(parse_algorithm("dp(inf)").name() == "DP(inf)");
    CHECK_THROWS_AS(parse_algorithm("dp(0.5)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algorithm("greedy"), std::invalid_argument);
    auto list = parse_algorithms("RMQ, II,DP(2) dp:inf");
    REQUIRE(list.size() == 4);
    CHECK(list[3].name() == "DP(inf)");
}

TEST_CASE("metric selection") {
    CHECK(select_metrics(3, 5).size() == 3);
    std::array<int, 3> hits{};
    for (std::uint64_t s = 0; s < 3000; ++s) {
        auto m = select_metrics(1, s);
        REQUIRE(m.size() == 1);
        ++hits[static_cast<int>(m[0])];
        auto two = select_metrics(2, s);
        REQUIRE(two.size() == 2);
        CHECK(two[0] < two[1]);
    }
    for (int h : hits) CHECK(std::abs(h - 1000) < 120);
    CHECK(select_metrics(2, 9) == select_metrics(2, 9));
}

TEST_CASE("sampler grid") {
    Sampler s(Budget::iterations(10), 3);
    Archive none;
    std::vector<Plan> plans = {leaf({5, 5})};
    s.observe({0, 1, plans});
    s.observe({0, 2, plans});
    plans = {leaf({4, 4})};
    s.observe({0, 3, plans});
    s.observe({0, 4, plans});
    plans = {leaf({1, 1})};
    s.observe({0, 7, plans});
    Archive final_result;
    final_result.insert(leaf({0.5, 0.5}));
    s.finish(final_result, 7);
    const auto &snaps = s.snapshots();
    REQUIRE(snaps.size() == 3);
    CHECK(snaps[0].key == 3);
    CHECK(snaps[0].costs == std::vector<CostVector>{{4, 4}});
    CHECK(snaps[1].key == 6);
    CHECK(snaps[1].costs == std::vector<CostVector>{{1, 1}});
    CHECK(snaps[2].key == 9);
    CHECK(snaps[2].costs == std::vector<CostVector>{{0.5, 0.5}});

    Sampler silent(Budget::millis(100), 25);
    silent.finish(final_result, 60);
    REQUIRE(silent.snapshots().size() == 4);
    CHECK(silent.snapshots()[1].costs.empty());
    CHECK(silent.snapshots()[2].costs.size() == 1);
}

TEST_CASE("experiment samples, monotonicity and determinism") {
    ExperimentConfig cfg = small_config();
    ExperimentResult r = run_experiment(cfg);
    CHECK(r.samples.size() == cfg.seeds.size() * cfg.algorithms.size() * 4);
    std::map<std::pair<std::string, std::uint64_t>, std::vector<double>> series;
    for (const auto &s : r.samples) {
        series[{s.algorithm, s.seed}].push_back(s.alpha_error);
        CHECK(s.alpha_error >= 1.0);
    }
    for (const auto &[cell, values] : series) {
        CHECK(values.size() == 4);
        for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] <= values[i - 1]);
    }
    CHECK(r.medians.size() == cfg.algorithms.size() * 4);

    ExperimentResult again = run_experiment(cfg);
    CHECK(samples_to_csv(again.samples) == samples_to_csv(r.samples));
    cfg.jobs = 3;
    CHECK(samples_to_csv(run_experiment(cfg).samples) == samples_to_csv(r.samples));
}

TEST_CASE("experiment with an exact reference") {
    ExperimentConfig cfg = small_config();
    cfg.reference = ReferenceMode::kExact;
    cfg.algorithms = parse_algorithms("RMQ,DP(inf)");
    cfg.budget = Budget::iterations(10000);
    cfg.sample_interval = 2500;
    auto r = run_experiment(cfg);
    for (const auto &s : r.samples)
        if (s.algorithm == "RMQ" && s.elapsed_ms == 10000) CHECK(s.alpha_error <= 1.05);
}

TEST_CASE("timed experiment sample counts") {
    ExperimentConfig cfg = small_config();
    cfg.budget = Budget::millis(120);
    cfg.sample_interval = 30;
    cfg.seeds = {4};
    auto r = run_experiment(cfg);
    std::map<std::string, int> per_algo;
    for (const auto &s : r.samples) ++per_algo[s.algorithm];
    for (const auto &[algo, count] : per_algo) {
        CHECK(count >= 3);
        CHECK(count <= 5);
    }
}

TEST_CASE("csv round trip") {
    std::vector<SamplePoint> rows = {{"RMQ", 1, 100, 1.0},
                                     {"DP(2)", 18446744073709551615ULL, 0.1 + 0.2, 1.0000000000000002},
                                     {"SA", 3, 300, INFINITY},
                                     {"NSGA2", 4, 1e-300, 123456789.123456789}};
    std::string csv = samples_to_csv(rows, "line one\nline two");
    CHECK(csv.rfind("# line one\n# line two\nalgorithm,seed,elapsed_ms,alpha_error\n", 0) == 0);
    CHECK(csv.find(",inf\n") != std::string::npos);
    CHECK(samples_from_csv(csv) == rows);
    CHECK(samples_from_csv(samples_to_csv({})).empty());
    CHECK_THROWS(samples_from_csv("algorithm,seed,elapsed_ms,alpha_error\nRMQ,1,2\n"));
    CHECK_THROWS(samples_from_csv("bad header\n"));
    CHECK_THROWS(samples_from_csv("algorithm,seed,elapsed_ms,alpha_error\nRMQ,x,2,3\n"));

    std::vector<MedianPoint> meds = {{"RMQ", 100, 1.5}};
    CHECK(medians_to_csv(meds) == "algorithm,elapsed_ms,median_alpha\nRMQ,100,1.5\n");
}

TEST_CASE("median aggregation") {
    std::vector<SamplePoint> rows = {{"A", 1, 10, 1.0}, {"A", 2, 10, 3.0}, {"A", 3, 10, INFINITY},
                                     {"A", 1, 20, 1.0}, {"A", 2, 20, 2.0}, {"B", 1, 10, 4.0},
                                     {"B", 2, 10, 6.0}};
    auto m = median_over_seeds(rows);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == MedianPoint{"A", 10, 3.0});
    CHECK(m[1] == MedianPoint{"A", 20, 1.5});
    CHECK(m[2] == MedianPoint{"B", 10, 5.0});
    CHECK(median({3, 1, 2}) == 2);
    CHECK_THROWS(median({}));
}

TEST_CASE("output paths and files") {
    CHECK(median_path_for("out.csv") == "out_median.csv");
    CHECK(median_path_for("dir.v2/results") == "dir.v2/results_median.csv");
    auto path = temp_path("exp.csv");
    ExperimentConfig cfg = small_config();
    cfg.output_path = path.string();
    cfg.seeds = {1};
    auto result = run_experiment(cfg);
    write_experiment(cfg, result);
    std::string text = read_file(path.string());
    CHECK(text.find("# [query]") != std::string::npos);
    CHECK(samples_from_csv(text) == result.samples);
    CHECK(std::filesystem::exists(median_path_for(path.string())));
    std::filesystem::remove(path);
    std::filesystem::remove(median_path_for(path.string()));
    CHECK_THROWS_WITH_AS(write_file("/nonexistent-dir/x.csv", "x"), doctest::Contains("/nonexistent-dir/x.csv"),
                         std::runtime_error);
}

TEST_CASE("config parsing") {
    std::string text = R"(# benchmark
[query]
tables = 12
topology = star
selectivity = minmax

[experiment]
metrics = 2
algorithms = RMQ, DP(inf)
budget_iters = 40
sample_iters = 10
seeds = 1-3,7
reference = union
output = out.csv
jobs = 2
)";
    ExperimentConfig cfg = parse_config(text);
    CHECK(cfg.tables == 12);
    CHECK(cfg.topology == Topology::kStar);
    CHECK(cfg.selectivity == SelectivityMode::kMinMax);
    CHECK(cfg.metrics == 2);
    CHECK(cfg.algorithms.size() == 2);
    CHECK(cfg.budget.is_iterations());
    CHECK(cfg.budget.iteration_limit() == 40);
    CHECK(cfg.sample_interval == 10);
    CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3, 7});
    CHECK(cfg.output_path == "out.csv");
    CHECK(cfg.jobs == 2);
    CHECK(cfg.catalog.join_ops().size() == 3);

    ExperimentConfig back = parse_config(cfg.to_text());
    CHECK(back.to_text() == cfg.to_text());
    ExperimentConfig defaults;
    CHECK(parse_config(defaults.to_text()).to_text() == defaults.to_text());
}

TEST_CASE("config with a custom catalog") {
    std::string text = R"([query]
tables = 4
[experiment]
budget_ms = 50
sample_ms = 10
[scan full]
format = pipelined
time = card:1
buffer = 1
[join hash]
format = materialized
time = outer:1 inner:1 out:1
buffer = outer:1
disc = 0
)";
    ExperimentConfig cfg = parse_config(text);
    REQUIRE(cfg.catalog.scan_ops().size() == 1);
    REQUIRE(cfg.catalog.join_ops().size() == 1);
    CHECK(cfg.catalog.join_ops()[0].format == OutputFormat::kMaterialized);
    CHECK(cfg.catalog.join_ops()[0].name == "hash");
    CHECK_FALSE(cfg.budget.is_iterations());
    CHECK(cfg.sample_interval == 10);
    CHECK(parse_config(cfg.to_text()).to_text() == cfg.to_text());
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("[query]\ntables = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[query]\ntables = x\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[query]\ntopology = tree\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[query]\ntables = 2\ntopology = cycle\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nmetrics = 4\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nalgorithms = RMQ,RMQ\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nalgorithms = foo\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nbudget_ms = 10\nbudget_iters = 5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nbudget_iters = 5\nsample_ms = 5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nbudget_ms = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nseeds = 5-1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[query]\ntables = 11\n[experiment]\nreference = exact\n"), ConfigError);
    CHECK_NOTHROW(parse_config("[query]\ntables = 10\n[experiment]\nreference = exact\n"));
    CHECK_THROWS_AS(parse_config("[bogus]\nx = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[query]\ncolor = red\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[scan s]\ntime = card:1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[scan s]\ntime = outer:1\n[join j]\ntime = out:1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[query\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), ConfigError);
}

TEST_CASE("seed lists") {
    CHECK(parse_seeds("1-5") == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(parse_seeds("4, 2,9") == std::vector<std::uint64_t>{4, 2, 9});
    CHECK(parse_seeds("1-2,10-11") == std::vector<std::uint64_t>{1, 2, 10, 11});
    CHECK_THROWS_AS(parse_seeds(""), ConfigError);
    CHECK_THROWS_AS(parse_seeds("a"), ConfigError);
    CHECK(ExperimentConfig::default_seeds().size() == 20);
}

TEST_CASE("every algorithm is deterministic under iteration budgets") {
    CostModel m = test::random_model(9, 21, 3, Topology::kCycle);
    for (const char *name : {"RMQ", "II", "SA", "2P", "NSGA2", "DP(2)", "DP(inf)", "DP(1)"}) {
        INFO(name);
        AlgorithmSpec spec = parse_algorithm(name);
        Archive a = run_algorithm(spec, m, Budget::iterations(25), 8);
        Archive b = run_algorithm(spec, m, Budget::iterations(25), 8);
        CHECK_FALSE(a.empty());
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.plans()[i].to_string() == b.plans()[i].to_string());
            CHECK(a.plans()[i].cost() == b.plans()[i].cost());
        }
    }
}

TEST_CASE("climb statistics") {
    StatsConfig cfg;
    cfg.catalog = OperatorCatalog({test::make_op("scan", "card:1")}, OperatorCatalog::default_catalog().join_ops());
    cfg.tables = {1, 5, 20};
    cfg.seeds = {1, 2, 3, 4, 5};
    cfg.rmq_budget = Budget::iterations(5);
    auto rows = climb_stats(cfg);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].median_path_length == 0);
    for (std::size_t len : rows[0].path_lengths) CHECK(len == 0);
    CHECK(rows[0].median_pareto_plans == 1);
    for (const auto &row : rows) {
        CHECK(row.path_lengths.size() == 5);
        CHECK(row.median_path_length == std::floor(row.median_path_length * 2) / 2);
        CHECK(row.median_pareto_plans >= 1);
    }
    cfg.rmq_budget = Budget::iterations(0);
    CHECK(climb_stats(cfg)[2].median_pareto_plans == 0);

    // the default catalog has a dominated scan operator, so one step may be needed
    cfg.catalog = OperatorCatalog::default_catalog();
    auto default_rows = climb_stats(cfg);
    for (std::size_t len : default_rows[0].path_lengths) CHECK(len <= 1);
}
