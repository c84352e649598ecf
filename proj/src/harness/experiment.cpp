#include "rmq/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rmq/baselines/dp.hpp"
#include "rmq/core/dominance.hpp"
#include "rmq/harness/epsilon.hpp"

namespace rmq {

Sampler::Sampler(const Budget &budget, double interval)
    : iterations_(budget.is_iterations()), interval_(interval),
      limit_(budget.is_iterations() ? static_cast<double>(budget.iteration_limit()) : budget.millis_limit()),
      next_(interval) {
    if (!(interval > 0.0)) throw std::invalid_argument("sample interval must be positive");
}

void Sampler::record_until(double key, std::span<const Plan> plans) {
    if (next_ > key || next_ > limit_ + 1e-9) return;
    std::vector<CostVector> costs;
    costs.reserve(plans.size());
    for (const Plan &p : plans) costs.push_back(p.cost());
    while (next_ <= key && next_ <= limit_ + 1e-9) {
        snapshots_.push_back({next_, costs});
        next_ = interval_ * static_cast<double>(snapshots_.size() + 1);
    }
    last_ = std::move(costs);
}

void Sampler::observe(const Progress &progress) {
    double key = iterations_ ? static_cast<double>(progress.iteration) : progress.elapsed_ms;
    last_key_ = key;
    record_until(key, progress.plans);
}

void Sampler::finish(const Archive &final_result, double end_key) {
    std::vector<CostVector> final_costs = final_result.costs();
    while (next_ <= limit_ + 1e-9) {
        snapshots_.push_back({next_, next_ < end_key ? last_ : final_costs});
        next_ = interval_ * static_cast<double>(snapshots_.size() + 1);
    }
}

std::vector<Metric> select_metrics(std::size_t count, std::uint64_t seed) {
    if (count < 1 || count > kMetricCount) throw std::invalid_argument("metric count must be 1, 2 or 3");
    std::array<Metric, kMetricCount> all = {Metric::kTime, Metric::kBuffer, Metric::kDisc};
    if (count == kMetricCount) return {all.begin(), all.end()};
    std::mt19937_64 rng(seed ^ 0x6d657472696373ULL);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Metric> out(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
    std::sort(out.begin(), out.end());
    return out;
}

CostModel make_test_case(const ExperimentConfig &cfg, std::uint64_t seed) {
    GenSpec spec;
    spec.tables = cfg.tables;
    spec.topology = cfg.topology;
    spec.selectivity = cfg.selectivity;
    spec.seed = seed;
    return CostModel(generate_query(spec), cfg.catalog, select_metrics(cfg.metrics, seed));
}

namespace {

std::vector<CostVector> strict_prune(std::vector<CostVector> all) {
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<CostVector> out;
    for (const CostVector &c : all) {
        bool dominated = false;
        for (const CostVector &o : all)
            if (strictly_dominates(o, c)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(c);
    }
    return out;
}

std::uint64_t run_seed(std::uint64_t seed, const std::string &algorithm) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : algorithm) h = (h ^ c) * 1099511628211ULL;
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h | 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string &s, std::size_t line) {
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || std::isnan(v))
        throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

std::string comment_block(const std::string &comment) {
    std::string out;
    std::istringstream in(comment);
    std::string line;
    while (std::getline(in, line)) out += "# " + line + "\n";
    return out;
}

struct Cell {
    std::size_t seed_index;
    std::size_t algorithm_index;
    Archive final_result;
    std::vector<Sampler::Snapshot> snapshots;
};

} // namespace

std::vector<CostVector> build_reference(const CostModel &model, const std::vector<Archive> &runs, ReferenceMode mode) {
    if (mode == ReferenceMode::kExact) {
        if (model.table_count() > kExactReferenceMaxTables)
            throw std::length_error("exact reference limited to " + std::to_string(kExactReferenceMaxTables) + " tables");
        return strict_prune(dp_frontier(model, 1.01).costs());
    }
    std::vector<CostVector> all;
    for (const Archive &a : runs)
        for (const Plan &p : a.plans()) all.push_back(p.cost());
    return strict_prune(std::move(all));
}

std::vector<MedianPoint> median_over_seeds(const std::vector<SamplePoint> &samples) {
    std::map<std::pair<std::string, double>, std::vector<double>> groups;
    std::vector<std::string> order;
    for (const SamplePoint &s : samples) {
        if (std::find(order.begin(), order.end(), s.algorithm) == order.end()) order.push_back(s.algorithm);
        groups[{s.algorithm, s.elapsed_ms}].push_back(s.alpha_error);
    }
    std::vector<MedianPoint> out;
    for (const std::string &algo : order)
        for (auto &[key, values] : groups)
            if (key.first == algo) {
                std::sort(values.begin(), values.end());
                std::size_t m = values.size() / 2;
                double med = values.size() % 2 ? values[m] : (values[m - 1] + values[m]) / 2.0;
                out.push_back({algo, key.second, med});
            }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<CostModel> models;
    models.reserve(cfg.seeds.size());
    for (std::uint64_t seed : cfg.seeds) models.push_back(make_test_case(cfg, seed));

    std::vector<Cell> cells;
    for (std::size_t s = 0; s < cfg.seeds.size(); ++s)
        for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) cells.push_back({s, a, {}, {}});

    auto run_cell = [&](Cell &cell) {
        const AlgorithmSpec &algo = cfg.algorithms[cell.algorithm_index];
        Sampler sampler(cfg.budget, cfg.sample_interval);
        BudgetClock clock(cfg.budget);
        std::uint64_t last_iteration = 0;
        ProgressSink sink = [&](const Progress &p) {
            last_iteration = p.iteration;
            sampler.observe(p);
        };
        cell.final_result = run_algorithm(algo, models[cell.seed_index], cfg.budget,
                                          run_seed(cfg.seeds[cell.seed_index], algo.name()), sink);
        double end_key = cfg.budget.is_iterations() ? static_cast<double>(last_iteration) : clock.elapsed_ms();
        sampler.finish(cell.final_result, end_key);
        cell.snapshots = sampler.snapshots();
    };

    if (cfg.jobs <= 1) {
        for (Cell &c : cells) run_cell(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        for (std::size_t t = 0; t < std::min(cfg.jobs, cells.size()); ++t)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) {
                    try {
                        run_cell(cells[i]);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
        for (auto &w : workers) w.join();
        if (error) std::rethrow_exception(error);
    }

    ExperimentResult result;
    for (std::size_t s = 0; s < cfg.seeds.size(); ++s) {
        std::vector<Archive> finals;
        for (const Cell &c : cells)
            if (c.seed_index == s) finals.push_back(c.final_result);
        std::vector<CostVector> reference = build_reference(models[s], finals, cfg.reference);
        if (reference.empty()) throw std::runtime_error("seed " + std::to_string(cfg.seeds[s]) + ": empty reference frontier");
        for (const Cell &c : cells) {
            if (c.seed_index != s) continue;
            std::string name = cfg.algorithms[c.algorithm_index].name();
            result.final_sizes[{name, cfg.seeds[s]}] = c.final_result.size();
            for (const auto &snap : c.snapshots)
                result.samples.push_back({name, cfg.seeds[s], snap.key, epsilon_indicator(snap.costs, reference)});
        }
    }
    result.medians = median_over_seeds(result.samples);
    return result;
}

std::string samples_to_csv(const std::vector<SamplePoint> &samples, const std::string &comment) {
    std::string out = comment_block(comment);
    out += "algorithm,seed,elapsed_ms,alpha_error\n";
    for (const SamplePoint &s : samples)
        out += s.algorithm + ',' + std::to_string(s.seed) + ',' + format_number(s.elapsed_ms) + ',' +
               format_number(s.alpha_error) + '\n';
    return out;
}

std::vector<SamplePoint> samples_from_csv(const std::string &text) {
    std::vector<SamplePoint> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != "algorithm,seed,elapsed_ms,alpha_error")
                throw std::runtime_error("csv line " + std::to_string(number) + ": unexpected header '" + line + "'");
            header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (fields.size() != 4) throw std::runtime_error("csv line " + std::to_string(number) + ": expected 4 fields");
        SamplePoint p;
        p.algorithm = fields[0];
        char *end = nullptr;
        p.seed = std::strtoull(fields[1].c_str(), &end, 10);
        if (fields[1].empty() || *end != '\0')
            throw std::runtime_error("csv line " + std::to_string(number) + ": bad seed '" + fields[1] + "'");
        p.elapsed_ms = parse_number(fields[2], number);
        p.alpha_error = parse_number(fields[3], number);
        out.push_back(std::move(p));
    }
    if (!header) throw std::runtime_error("csv: missing header");
    return out;
}

std::string medians_to_csv(const std::vector<MedianPoint> &medians, const std::string &comment) {
    std::string out = comment_block(comment);
    out += "algorithm,elapsed_ms,median_alpha\n";
    for (const MedianPoint &m : medians)
        out += m.algorithm + ',' + format_number(m.elapsed_ms) + ',' + format_number(m.median_alpha) + '\n';
    return out;
}

std::string median_path_for(const std::string &output_path) {
    auto slash = output_path.find_last_of('/');
    auto dot = output_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return output_path + "_median.csv";
    return output_path.substr(0, dot) + "_median" + output_path.substr(dot);
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_experiment(const ExperimentConfig &cfg, const ExperimentResult &result) {
    std::string header = cfg.to_text();
    write_file(cfg.output_path, samples_to_csv(result.samples, header));
    write_file(median_path_for(cfg.output_path), medians_to_csv(result.medians, header));
}

} // namespace rmq
