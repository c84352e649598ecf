#include "rmq/harness/algorithms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "rmq/baselines/dp.hpp"
#include "rmq/baselines/local_search.hpp"
#include "rmq/baselines/nsga2.hpp"
#include "rmq/optimizer/rmq.hpp"

namespace rmq {

std::string AlgorithmSpec::name() const {
    switch (kind) {
    case AlgorithmKind::kRmq: return "RMQ";
    case AlgorithmKind::kIi: return "II";
    case AlgorithmKind::kSa: return "SA";
    case AlgorithmKind::kTwoPhase: return "2P";
    case AlgorithmKind::kNsga2: return "NSGA2";
    case AlgorithmKind::kDp: break;
    }
    if (std::isinf(alpha)) return "DP(inf)";
    char buf[64];
    std::snprintf(buf, sizeof buf, "DP(%g)", alpha);
    return buf;
}

namespace {

std::string normalize(const std::string &text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

double parse_alpha(const std::string &text, const std::string &original) {
    char *end = nullptr;
    double a = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || std::isnan(a) || a < 1.0)
        throw std::invalid_argument("invalid DP alpha in '" + original + "' (need a number >= 1 or inf)");
    return a;
}

} // namespace

AlgorithmSpec parse_algorithm(const std::string &text) {
    std::string s = normalize(text);
    if (s == "rmq") return {AlgorithmKind::kRmq};
    if (s == "ii") return {AlgorithmKind::kIi};
    if (s == "sa") return {AlgorithmKind::kSa};
    if (s == "2p" || s == "2po") return {AlgorithmKind::kTwoPhase};
    if (s == "nsga2" || s == "nsga-ii" || s == "nsgaii") return {AlgorithmKind::kNsga2};
    if (s.rfind("dp", 0) == 0) {
        std::string rest = s.substr(2);
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') return {AlgorithmKind::kDp, parse_alpha(rest.substr(1, rest.size() - 2), text)};
        if (!rest.empty() && rest.front() == ':') return {AlgorithmKind::kDp, parse_alpha(rest.substr(1), text)};
    }
    throw std::invalid_argument("unknown algorithm '" + text + "'");
}

std::vector<AlgorithmSpec> parse_algorithms(const std::string &text) {
    std::vector<AlgorithmSpec> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) out.push_back(parse_algorithm(token));
        token.clear();
    };
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || std::isspace(static_cast<unsigned char>(c))))
            flush();
        else
            token += c;
    }
    flush();
    if (out.empty()) throw std::invalid_argument("empty algorithm list");
    return out;
}

Archive run_algorithm(const AlgorithmSpec &spec, const CostModel &model, const Budget &budget, std::uint64_t seed,
                      const ProgressSink &sink) {
    switch (spec.kind) {
    case AlgorithmKind::kRmq: return rmq_optimize(model, budget, seed, sink);
    case AlgorithmKind::kIi: return run_ii(model, budget, seed, sink);
    case AlgorithmKind::kSa: return run_sa(model, budget, seed, sink);
    case AlgorithmKind::kTwoPhase: return run_2p(model, budget, seed, sink);
    case AlgorithmKind::kNsga2: return run_nsga2(model, budget, seed, sink);
    case AlgorithmKind::kDp: {
        if (budget.is_iterations()) return dp_frontier(model, spec.alpha);
        BudgetClock clock(budget);
        return dp_frontier(model, spec.alpha, &clock);
    }
    }
    throw std::logic_error("unhandled algorithm kind");
}

} // namespace rmq
