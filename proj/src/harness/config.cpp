#include "rmq/harness/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace rmq {

namespace pt = boost::property_tree;

const char *reference_mode_name(ReferenceMode m) { return m == ReferenceMode::kUnion ? "union" : "exact"; }

std::vector<std::uint64_t> ExperimentConfig::default_seeds() {
    std::vector<std::uint64_t> s;
    for (std::uint64_t i = 1; i <= 20; ++i) s.push_back(i);
    return s;
}

void ExperimentConfig::validate() const {
    if (tables == 0 || tables > TableSet::kMaxTables) throw ConfigError("tables must be in [1, 128]");
    if (topology == Topology::kCustom) throw ConfigError("topology must be chain, cycle or star");
    if (topology == Topology::kCycle && tables < 3) throw ConfigError("cycle topology needs at least 3 tables");
    if (metrics < 1 || metrics > kMetricCount) throw ConfigError("metrics must be 1, 2 or 3");
    if (algorithms.empty()) throw ConfigError("no algorithms selected");
    std::set<std::string> names;
    for (const auto &a : algorithms)
        if (!names.insert(a.name()).second) throw ConfigError("algorithm listed twice: " + a.name());
    if (budget.is_zero()) throw ConfigError("budget must be positive");
    if (!(sample_interval > 0.0) || !std::isfinite(sample_interval)) throw ConfigError("sample interval must be positive");
    if (budget.is_iterations() && sample_interval != std::floor(sample_interval))
        throw ConfigError("iteration sample interval must be an integer");
    if (seeds.empty()) throw ConfigError("no seeds given");
    if (reference == ReferenceMode::kExact && tables > kExactReferenceMaxTables)
        throw ConfigError("exact reference supports at most " + std::to_string(kExactReferenceMaxTables) + " tables");
    if (jobs == 0) throw ConfigError("jobs must be at least 1");
    if (output_path.empty()) throw ConfigError("empty output path");
}

namespace {

std::string seeds_text(const std::vector<std::uint64_t> &seeds) {
    std::string out;
    for (std::size_t i = 0; i < seeds.size();) {
        std::size_t j = i;
        while (j + 1 < seeds.size() && seeds[j + 1] == seeds[j] + 1) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(seeds[i]);
        if (j > i) out += '-' + std::to_string(seeds[j]);
        i = j + 1;
    }
    return out;
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

template <class T> T parse_uint(const std::string &key, const std::string &value) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("'" + key + "' expects a nonnegative integer, got '" + value + "'");
    return static_cast<T>(v);
}

double parse_double(const std::string &key, const std::string &value) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(v))
        throw ConfigError("'" + key + "' expects a number, got '" + value + "'");
    return v;
}

OperatorDescriptor parse_operator(const std::string &name, const pt::ptree &section) {
    OperatorDescriptor d;
    d.name = name;
    for (const auto &[key, node] : section) {
        const std::string value = node.data();
        try {
            if (key == "format") {
                if (value == "pipelined") d.format = OutputFormat::kPipelined;
                else if (value == "materialized") d.format = OutputFormat::kMaterialized;
                else throw ConfigError("format must be pipelined or materialized");
            } else if (key == "time") {
                d.formulas[0] = CostFormula::parse(value);
            } else if (key == "buffer") {
                d.formulas[1] = CostFormula::parse(value);
            } else if (key == "disc") {
                d.formulas[2] = CostFormula::parse(value);
            } else {
                throw ConfigError("unknown key");
            }
        } catch (const std::exception &e) {
            throw ConfigError("operator '" + name + "', key '" + key + "': " + e.what());
        }
    }
    return d;
}

} // namespace

std::vector<std::uint64_t> parse_seeds(const std::string &text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::string p;
        for (char c : part)
            if (c != ' ' && c != '\t') p += c;
        if (p.empty()) continue;
        auto dash = p.find('-');
        if (dash == std::string::npos) {
            out.push_back(parse_uint<std::uint64_t>("seeds", p));
            continue;
        }
        auto lo = parse_uint<std::uint64_t>("seeds", p.substr(0, dash));
        auto hi = parse_uint<std::uint64_t>("seeds", p.substr(dash + 1));
        if (hi < lo) throw ConfigError("descending seed range '" + p + "'");
        if (hi - lo > 1'000'000) throw ConfigError("seed range too large '" + p + "'");
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
    }
    if (out.empty()) throw ConfigError("empty seed list '" + text + "'");
    return out;
}

std::string ExperimentConfig::to_text() const {
    std::ostringstream os;
    os << "[query]\n"
       << "tables = " << tables << "\n"
       << "topology = " << topology_name(topology) << "\n"
       << "selectivity = " << selectivity_mode_name(selectivity) << "\n"
       << "\n[experiment]\n"
       << "metrics = " << metrics << "\n"
       << "algorithms = ";
    for (std::size_t i = 0; i < algorithms.size(); ++i) os << (i ? "," : "") << algorithms[i].name();
    os << "\n";
    if (budget.is_iterations())
        os << "budget_iters = " << budget.iteration_limit() << "\nsample_iters = " << num(sample_interval) << "\n";
    else
        os << "budget_ms = " << num(budget.millis_limit()) << "\nsample_ms = " << num(sample_interval) << "\n";
    os << "seeds = " << seeds_text(seeds) << "\n"
       << "reference = " << reference_mode_name(reference) << "\n"
       << "output = " << output_path << "\n"
       << "jobs = " << jobs << "\n";
    auto ops = [&](const char *kind, const std::vector<OperatorDescriptor> &list) {
        for (const auto &d : list) {
            os << "\n[" << kind << ' ' << d.name << "]\n"
               << "format = " << format_name(d.format) << "\n"
               << "time = " << d.formulas[0].to_string() << "\n"
               << "buffer = " << d.formulas[1].to_string() << "\n"
               << "disc = " << d.formulas[2].to_string() << "\n";
        }
    };
    ops("scan", catalog.scan_ops());
    ops("join", catalog.join_ops());
    return os.str();
}

ExperimentConfig parse_config(const std::string &text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(std::string("config syntax: ") + e.what());
    }

    ExperimentConfig cfg;
    std::vector<OperatorDescriptor> scans, joins;
    bool budget_ms = false, budget_iters = false, sample_ms = false, sample_iters = false;
    double budget_ms_value = 0, sample_value = cfg.sample_interval;
    std::uint64_t budget_iters_value = 0;

    for (const auto &[section, body] : tree) {
        if (!body.data().empty()) throw ConfigError("key '" + section + "' outside a section");
        if (section == "query") {
            for (const auto &[key, node] : body) {
                const std::string v = node.data();
                try {
                    if (key == "tables") cfg.tables = parse_uint<std::size_t>(key, v);
                    else if (key == "topology") cfg.topology = parse_topology(v);
                    else if (key == "selectivity") cfg.selectivity = parse_selectivity_mode(v);
                    else throw ConfigError("unknown key '" + key + "' in [query]");
                } catch (const std::invalid_argument &e) {
                    throw ConfigError("[query] " + key + ": " + e.what());
                }
            }
        } else if (section == "experiment") {
            for (const auto &[key, node] : body) {
                const std::string v = node.data();
                try {
                    if (key == "metrics") cfg.metrics = parse_uint<std::size_t>(key, v);
                    else if (key == "algorithms") cfg.algorithms = parse_algorithms(v);
                    else if (key == "budget_ms") budget_ms = true, budget_ms_value = parse_double(key, v);
                    else if (key == "budget_iters") budget_iters = true, budget_iters_value = parse_uint<std::uint64_t>(key, v);
                    else if (key == "sample_ms") sample_ms = true, sample_value = parse_double(key, v);
                    else if (key == "sample_iters") sample_iters = true, sample_value = parse_double(key, v);
                    else if (key == "seeds") cfg.seeds = parse_seeds(v);
                    else if (key == "reference") {
                        if (v == "union") cfg.reference = ReferenceMode::kUnion;
                        else if (v == "exact") cfg.reference = ReferenceMode::kExact;
                        else throw ConfigError("reference must be union or exact");
                    } else if (key == "output") cfg.output_path = v;
                    else if (key == "jobs") cfg.jobs = parse_uint<std::size_t>(key, v);
                    else throw ConfigError("unknown key '" + key + "' in [experiment]");
                } catch (const std::invalid_argument &e) {
                    throw ConfigError("[experiment] " + key + ": " + e.what());
                }
            }
        } else if (section.rfind("scan ", 0) == 0) {
            scans.push_back(parse_operator(section.substr(5), body));
        } else if (section.rfind("join ", 0) == 0) {
            joins.push_back(parse_operator(section.substr(5), body));
        } else {
            throw ConfigError("unknown section [" + section + "]");
        }
    }

    if (budget_ms && budget_iters) throw ConfigError("budget_ms and budget_iters are exclusive");
    if (sample_ms && sample_iters) throw ConfigError("sample_ms and sample_iters are exclusive");
    if (budget_iters) {
        if (sample_ms) throw ConfigError("iteration budgets sample with sample_iters");
        cfg.budget = Budget::iterations(budget_iters_value);
        cfg.sample_interval = sample_iters ? sample_value : 1.0;
    } else {
        if (sample_iters) throw ConfigError("time budgets sample with sample_ms");
        if (budget_ms) cfg.budget = Budget::millis(budget_ms_value);
        cfg.sample_interval = sample_value;
    }
    if (!scans.empty() || !joins.empty()) {
        if (scans.empty() || joins.empty()) throw ConfigError("a custom catalog needs scan and join sections");
        try {
            cfg.catalog = OperatorCatalog(std::move(scans), std::move(joins));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("catalog: ") + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const ConfigError &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace rmq
