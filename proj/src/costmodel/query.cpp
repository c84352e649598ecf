#include "rmq/costmodel/query.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace rmq {

const char *topology_name(Topology t) {
    switch (t) {
    case Topology::kChain: return "chain";
    case Topology::kCycle: return "cycle";
    case Topology::kStar: return "star";
    case Topology::kCustom: return "custom";
    }
    return "?";
}

Topology parse_topology(const std::string &name) {
    if (name == "chain") return Topology::kChain;
    if (name == "cycle") return Topology::kCycle;
    if (name == "star") return Topology::kStar;
    if (name == "custom") return Topology::kCustom;
    throw std::invalid_argument("unknown topology '" + name + "'");
}

namespace {

using EdgeKey = std::pair<TableId, TableId>;

EdgeKey key(TableId a, TableId b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::set<EdgeKey> expected_edges(Topology topology, std::size_t n) {
    std::set<EdgeKey> out;
    switch (topology) {
    case Topology::kChain:
        for (std::size_t i = 0; i + 1 < n; ++i) out.insert(key(TableId(i), TableId(i + 1)));
        break;
    case Topology::kCycle:
        for (std::size_t i = 0; i + 1 < n; ++i) out.insert(key(TableId(i), TableId(i + 1)));
        out.insert(key(TableId(n - 1), 0));
        break;
    case Topology::kStar:
        for (std::size_t i = 1; i < n; ++i) out.insert(key(0, TableId(i)));
        break;
    case Topology::kCustom: break;
    }
    return out;
}

} // namespace

QueryInstance::QueryInstance(std::vector<double> cards, std::vector<JoinEdge> edges, Topology topology)
    : cards_(std::move(cards)), edges_(std::move(edges)), topology_(topology) {
    const std::size_t n = cards_.size();
    if (n == 0) throw std::invalid_argument("query needs at least one table");
    if (n > TableSet::kMaxTables) throw std::invalid_argument("query exceeds 128 tables");
    for (double c : cards_)
        if (!(c >= 1.0) || !std::isfinite(c)) throw std::invalid_argument("table cardinality must be finite and >= 1");
    if (topology_ == Topology::kCycle && n < 3) throw std::invalid_argument("cycle topology needs n >= 3");

    std::set<EdgeKey> seen;
    for (const auto &e : edges_) {
        if (e.a == e.b || e.a >= n || e.b >= n) throw std::invalid_argument("invalid join edge endpoints");
        if (!(e.selectivity > 0.0 && e.selectivity <= 1.0))
            throw std::invalid_argument("selectivity must lie in (0,1]");
        if (!seen.insert(key(e.a, e.b)).second) throw std::invalid_argument("duplicate join edge");
    }
    if (topology_ != Topology::kCustom && seen != expected_edges(topology_, n))
        throw std::invalid_argument(std::string("edges do not form a ") + topology_name(topology_));

    lower_.resize(n);
    for (const auto &e : edges_) {
        auto [lo, hi] = key(e.a, e.b);
        lower_[hi].emplace_back(lo, e.selectivity);
    }
    for (auto &adj : lower_) std::sort(adj.begin(), adj.end());
}

double QueryInstance::max_card() const { return *std::max_element(cards_.begin(), cards_.end()); }

bool QueryInstance::operator==(const QueryInstance &o) const {
    if (cards_ != o.cards_ || topology_ != o.topology_ || edges_.size() != o.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto &x = edges_[i];
        const auto &y = o.edges_[i];
        if (x.a != y.a || x.b != y.b || x.selectivity != y.selectivity) return false;
    }
    return true;
}

double cardinality(const QueryInstance &q, TableSet s) {
    if (s.empty()) throw std::invalid_argument("cardinality of empty table set");
    if (!s.is_subset_of(q.tables())) throw std::invalid_argument("table set exceeds query tables");
    // Selectivities are applied as soon as both endpoints are present, which
    // keeps intermediate products close to the final magnitude.
    double card = 1.0;
    s.for_each([&](TableId t) {
        card *= q.card(t);
        for (const auto &[u, sel] : q.lower_neighbors(t))
            if (s.contains(u)) card *= sel;
    });
    return std::min(card, kValueCeiling);
}

} // namespace rmq
