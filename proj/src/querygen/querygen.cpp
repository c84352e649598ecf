#include "rmq/querygen/querygen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmq {

const char *selectivity_mode_name(SelectivityMode m) {
    return m == SelectivityMode::kSteinbrunn ? "steinbrunn" : "minmax";
}

SelectivityMode parse_selectivity_mode(const std::string &name) {
    if (name == "steinbrunn") return SelectivityMode::kSteinbrunn;
    if (name == "minmax") return SelectivityMode::kMinMax;
    throw std::invalid_argument("unknown selectivity mode '" + name + "'");
}

double sample_cardinality(Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double u = unit(rng);
    std::size_t s = 0;
    double acc = kCardinalityStrata[0].probability;
    while (s + 1 < kCardinalityStrata.size() && u >= acc) acc += kCardinalityStrata[++s].probability;
    const auto &stratum = kCardinalityStrata[s];
    auto lo = static_cast<std::int64_t>(stratum.low);
    auto hi = static_cast<std::int64_t>(stratum.high) - (s + 1 < kCardinalityStrata.size() ? 1 : 0);
    return static_cast<double>(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
}

double sample_selectivity_steinbrunn(Rng &rng) {
    std::uniform_real_distribution<double> exponent(-4.0, 0.0);
    return std::pow(10.0, exponent(rng));
}

double sample_selectivity_minmax(double card_a, double card_b, Rng &rng) {
    double lo = std::min(card_a, card_b);
    double hi = std::max(card_a, card_b);
    double target = lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng);
    double sel = target / (card_a * card_b);
    return std::clamp(sel, std::numeric_limits<double>::min(), 1.0);
}

QueryInstance generate_query(const GenSpec &spec) {
    const std::size_t n = spec.tables;
    if (n == 0) throw std::invalid_argument("query needs at least one table");
    if (n > TableSet::kMaxTables) throw std::invalid_argument("query exceeds 128 tables");
    if (spec.topology == Topology::kCycle && n < 3) throw std::invalid_argument("cycle topology needs n >= 3");
    if (spec.topology == Topology::kCustom) throw std::invalid_argument("cannot generate a custom topology");

    Rng rng(spec.seed);
    std::vector<double> cards(n);
    for (auto &c : cards) c = sample_cardinality(rng);

    std::vector<JoinEdge> edges;
    auto add = [&](std::size_t a, std::size_t b) {
        JoinEdge e{static_cast<TableId>(a), static_cast<TableId>(b), 1.0};
        e.selectivity = spec.selectivity == SelectivityMode::kSteinbrunn
                            ? sample_selectivity_steinbrunn(rng)
                            : sample_selectivity_minmax(cards[a], cards[b], rng);
        edges.push_back(e);
    };
    switch (spec.topology) {
    case Topology::kChain:
        for (std::size_t i = 0; i + 1 < n; ++i) add(i, i + 1);
        break;
    case Topology::kCycle:
        for (std::size_t i = 0; i + 1 < n; ++i) add(i, i + 1);
        add(n - 1, 0);
        break;
    case Topology::kStar:
        for (std::size_t i = 1; i < n; ++i) add(0, i);
        break;
    case Topology::kCustom: break;
    }
    return QueryInstance(std::move(cards), std::move(edges), spec.topology);
}

} // namespace rmq
