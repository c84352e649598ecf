// rmq_lab: benchmark driver for multi-objective query optimizers.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>

#include "rmq/baselines/dp.hpp"
#include "rmq/baselines/exhaustive.hpp"
#include "rmq/harness/config.hpp"
#include "rmq/harness/experiment.hpp"
#include "rmq/harness/stats.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct RunFlags {
    std::string config;
    std::size_t tables = 0;
    std::string topology, selectivity, algos, seeds, reference, out;
    std::size_t metrics = 0;
    double budget_ms = 0, sample_ms = 0;
    std::uint64_t budget_iters = 0, sample_iters = 0;
    std::size_t jobs = 0;
    bool quiet = false;
};

rmq::ExperimentConfig resolve(const RunFlags &f, const CLI::App &cmd) {
    rmq::ExperimentConfig cfg = f.config.empty() ? rmq::ExperimentConfig{} : rmq::load_config(f.config);
    auto given = [&](const char *name) { return cmd.count(name) > 0; };
    try {
        if (given("--tables")) cfg.tables = f.tables;
        if (given("--topology")) cfg.topology = rmq::parse_topology(f.topology);
        if (given("--selectivity")) cfg.selectivity = rmq::parse_selectivity_mode(f.selectivity);
        if (given("--metrics")) cfg.metrics = f.metrics;
        if (given("--algos")) cfg.algorithms = rmq::parse_algorithms(f.algos);
        if (given("--seeds")) cfg.seeds = rmq::parse_seeds(f.seeds);
        if (given("--reference")) {
            if (f.reference == "union") cfg.reference = rmq::ReferenceMode::kUnion;
            else if (f.reference == "exact") cfg.reference = rmq::ReferenceMode::kExact;
            else throw rmq::ConfigError("--reference must be union or exact");
        }
        if (given("--out")) cfg.output_path = f.out;
        if (given("--jobs")) cfg.jobs = f.jobs;
    } catch (const std::invalid_argument &e) {
        throw rmq::ConfigError(e.what());
    }
    if (given("--budget-ms") && given("--budget-iters")) throw rmq::ConfigError("--budget-ms and --budget-iters are exclusive");
    if (given("--sample-ms") && given("--sample-iters")) throw rmq::ConfigError("--sample-ms and --sample-iters are exclusive");
    if (given("--budget-ms")) {
        cfg.budget = rmq::Budget::millis(f.budget_ms);
        if (!given("--sample-ms")) cfg.sample_interval = std::min(cfg.sample_interval, f.budget_ms);
    }
    if (given("--budget-iters")) {
        cfg.budget = rmq::Budget::iterations(f.budget_iters);
        if (!given("--sample-iters")) cfg.sample_interval = 1;
    }
    if (given("--sample-ms")) {
        if (cfg.budget.is_iterations()) throw rmq::ConfigError("iteration budgets sample with --sample-iters");
        cfg.sample_interval = f.sample_ms;
    }
    if (given("--sample-iters")) {
        if (!cfg.budget.is_iterations()) throw rmq::ConfigError("time budgets sample with --sample-ms");
        cfg.sample_interval = static_cast<double>(f.sample_iters);
    }
    cfg.validate();
    return cfg;
}

void print_frontier(const rmq::Archive &archive) {
    std::printf("cost,format,plan\n");
    for (const rmq::Plan &p : archive.plans()) {
        std::string cost;
        for (std::size_t k = 0; k < p.cost().size(); ++k) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%s%.17g", k ? " " : "", p.cost()[k]);
            cost += buf;
        }
        std::printf("%s,%s,%s\n", cost.c_str(), rmq::format_name(p.format()), p.to_string().c_str());
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multi-objective query optimization lab"};
    app.require_subcommand(1);

    RunFlags rf;
    auto *run = app.add_subcommand("run", "Run a benchmark experiment and write CSV results");
    run->add_option("--config", rf.config, "INI config file; flags override it");
    run->add_option("--tables", rf.tables, "Tables per query");
    run->add_option("--topology", rf.topology, "chain, cycle or star");
    run->add_option("--selectivity", rf.selectivity, "steinbrunn or minmax");
    run->add_option("--metrics", rf.metrics, "Number of cost metrics (1-3)");
    run->add_option("--algos", rf.algos, "Comma separated: RMQ,II,SA,2P,NSGA2,DP(2),DP(inf)");
    run->add_option("--budget-ms", rf.budget_ms, "Time budget per run in milliseconds");
    run->add_option("--budget-iters", rf.budget_iters, "Iteration budget per run (deterministic)");
    run->add_option("--sample-ms", rf.sample_ms, "Sampling interval in milliseconds");
    run->add_option("--sample-iters", rf.sample_iters, "Sampling interval in iterations");
    run->add_option("--seeds", rf.seeds, "Seed list, e.g. 1-20 or 1,4,9");
    run->add_option("--reference", rf.reference, "union or exact");
    run->add_option("--out", rf.out, "Output CSV path");
    run->add_option("--jobs", rf.jobs, "Worker threads");
    run->add_flag("--quiet", rf.quiet, "No summary on stdout");

    std::vector<std::size_t> st_tables;
    std::string st_topology = "chain", st_selectivity = "steinbrunn", st_seeds = "1-20";
    std::size_t st_metrics = 3;
    std::uint64_t st_iters = 20;
    auto *stats = app.add_subcommand("stats", "Climb path length and Pareto set size per table count");
    stats->add_option("--tables", st_tables, "Table counts")->delimiter(',');
    stats->add_option("--topology", st_topology, "chain, cycle or star");
    stats->add_option("--selectivity", st_selectivity, "steinbrunn or minmax");
    stats->add_option("--metrics", st_metrics, "Number of cost metrics (1-3)");
    stats->add_option("--seeds", st_seeds, "Seed list");
    stats->add_option("--rmq-iters", st_iters, "RMQ iterations for the Pareto set size (0 skips)");

    std::size_t or_tables = 5, or_metrics = 3;
    std::uint64_t or_seed = 1;
    std::string or_topology = "chain", or_selectivity = "steinbrunn", or_method = "dp";
    double or_alpha = 1.0;
    auto *oracle = app.add_subcommand("oracle", "Dump the exact or DP frontier of one test case");
    oracle->add_option("--tables", or_tables, "Tables");
    oracle->add_option("--topology", or_topology, "chain, cycle or star");
    oracle->add_option("--selectivity", or_selectivity, "steinbrunn or minmax");
    oracle->add_option("--metrics", or_metrics, "Number of cost metrics (1-3)");
    oracle->add_option("--seed", or_seed, "Test case seed");
    oracle->add_option("--method", or_method, "exhaustive or dp");
    oracle->add_option("--alpha", or_alpha, "DP approximation factor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    rmq::ExperimentConfig cfg;
    rmq::StatsConfig scfg;
    try {
        if (*run) {
            cfg = resolve(rf, *run);
        } else if (*stats) {
            if (!st_tables.empty()) scfg.tables = st_tables;
            scfg.topology = rmq::parse_topology(st_topology);
            scfg.selectivity = rmq::parse_selectivity_mode(st_selectivity);
            if (st_metrics < 1 || st_metrics > 3) throw rmq::ConfigError("metrics must be 1, 2 or 3");
            scfg.metrics = st_metrics;
            scfg.seeds = rmq::parse_seeds(st_seeds);
            scfg.rmq_budget = rmq::Budget::iterations(st_iters);
        } else {
            cfg.tables = or_tables;
            cfg.topology = rmq::parse_topology(or_topology);
            cfg.selectivity = rmq::parse_selectivity_mode(or_selectivity);
            cfg.metrics = or_metrics;
            if (or_method != "dp" && or_method != "exhaustive") throw rmq::ConfigError("--method must be dp or exhaustive");
            if (!(or_alpha >= 1.0)) throw rmq::ConfigError("--alpha must be >= 1");
            cfg.validate();
        }
    } catch (const rmq::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (*run) {
            rmq::ExperimentResult result = rmq::run_experiment(cfg);
            rmq::write_experiment(cfg, result);
            if (!rf.quiet) {
                std::printf("wrote %s and %s\n", cfg.output_path.c_str(), rmq::median_path_for(cfg.output_path).c_str());
                std::printf("algorithm,final_median_alpha\n");
                for (const auto &a : cfg.algorithms) {
                    double last = 0;
                    for (const auto &m : result.medians)
                        if (m.algorithm == a.name()) last = m.median_alpha;
                    std::printf("%s,%.6g\n", a.name().c_str(), last);
                }
            }
        } else if (*stats) {
            std::printf("tables,median_path_length,median_pareto_plans\n");
            for (const auto &row : rmq::climb_stats(scfg))
                std::printf("%zu,%g,%g\n", row.tables, row.median_path_length, row.median_pareto_plans);
        } else {
            rmq::CostModel model = rmq::make_test_case(cfg, or_seed);
            print_frontier(or_method == "dp" ? rmq::dp_frontier(model, or_alpha) : rmq::exhaustive_frontier(model));
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
