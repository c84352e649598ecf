#include "rmq/costmodel/catalog.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmq {

namespace {

constexpr std::array<const char *, kCostTermCount> kTermNames = {
    "const", "card", "outer", "inner", "out", "outer*inner", "outer_log", "inner_log"};

double parse_number(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw std::invalid_argument("bad number '" + std::string(s) + "' in cost formula");
    return v;
}

} // namespace

const char *cost_term_name(CostTerm t) { return kTermNames[static_cast<std::size_t>(t)]; }

CostFormula &CostFormula::add(CostTerm term, double coefficient) {
    coef_[static_cast<std::size_t>(term)] += coefficient;
    return *this;
}

double CostFormula::evaluate(const CostInputs &in) const {
    double v = 0.0;
    auto term = [&](CostTerm t, auto value) {
        double c = coef_[static_cast<std::size_t>(t)];
        if (c != 0.0) v += c * value();
    };
    term(CostTerm::kConst, [] { return 1.0; });
    term(CostTerm::kCard, [&] { return in.card; });
    term(CostTerm::kOuter, [&] { return in.outer; });
    term(CostTerm::kInner, [&] { return in.inner; });
    term(CostTerm::kOut, [&] { return in.out; });
    term(CostTerm::kOuterTimesInner, [&] { return in.outer * in.inner; });
    term(CostTerm::kOuterLogOuter, [&] { return in.outer * std::log2(1.0 + in.outer); });
    term(CostTerm::kInnerLogInner, [&] { return in.inner * std::log2(1.0 + in.inner); });
    return v;
}

CostFormula CostFormula::parse(std::string_view text) {
    CostFormula f;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '+')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '+') ++end;
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;

        auto colon = tok.find(':');
        if (colon == std::string_view::npos) {
            f.add(CostTerm::kConst, parse_number(tok));
            continue;
        }
        std::string_view name = tok.substr(0, colon);
        double c = parse_number(tok.substr(colon + 1));
        bool found = false;
        for (std::size_t t = 0; t < kCostTermCount; ++t) {
            if (name == kTermNames[t]) {
                f.add(static_cast<CostTerm>(t), c);
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown cost term '" + std::string(name) + "'");
    }
    for (double c : f.coef_)
        if (c < 0.0) throw std::invalid_argument("cost formula coefficients must be nonnegative");
    return f;
}

std::string CostFormula::to_string() const {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (std::size_t t = 0; t < kCostTermCount; ++t) {
        if (coef_[t] == 0.0) continue;
        if (!first) os << ' ';
        os << kTermNames[t] << ':' << coef_[t];
        first = false;
    }
    if (first) os << "const:0";
    return os.str();
}

bool CostFormula::uses_join_terms() const {
    for (auto t : {CostTerm::kOuter, CostTerm::kInner, CostTerm::kOuterTimesInner, CostTerm::kOuterLogOuter,
                   CostTerm::kInnerLogInner})
        if (coefficient(t) != 0.0) return true;
    return false;
}

OperatorCatalog::OperatorCatalog(std::vector<OperatorDescriptor> scans, std::vector<OperatorDescriptor> joins)
    : scans_(std::move(scans)), joins_(std::move(joins)) {
    if (scans_.empty() || joins_.empty())
        throw std::invalid_argument("catalog needs at least one scan and one join operator");
    for (const auto &d : scans_)
        for (const auto &f : d.formulas)
            if (f.uses_join_terms())
                throw std::invalid_argument("scan operator '" + d.name + "' references join inputs");
}

namespace {

OperatorDescriptor op(std::string name, CostFormula time, CostFormula buffer, CostFormula disc) {
    OperatorDescriptor d;
    d.name = std::move(name);
    d.formulas = {time, buffer, disc};
    return d;
}

CostFormula terms(std::initializer_list<std::pair<CostTerm, double>> list) {
    CostFormula f;
    for (auto [t, c] : list) f.add(t, c);
    return f;
}

} // namespace

OperatorCatalog OperatorCatalog::default_catalog() {
    using T = CostTerm;
    std::vector<OperatorDescriptor> scans = {
        op("seq_scan", terms({{T::kCard, 1.0}}), terms({{T::kConst, 1.0}}), {}),
        op("sample_scan", terms({{T::kCard, 0.1}}), terms({{T::kConst, 1.0}}), {}),
    };
    std::vector<OperatorDescriptor> joins = {
        op("nested_loop", terms({{T::kOuterTimesInner, 1e-3}, {T::kOut, 1.0}}), terms({{T::kConst, 2.0}}), {}),
        op("hash", terms({{T::kOuter, 1.0}, {T::kInner, 1.0}, {T::kOut, 1.0}}), terms({{T::kOuter, 1.0}}), {}),
        op("sort_merge", terms({{T::kOuterLogOuter, 1.0}, {T::kInnerLogInner, 1.0}, {T::kOut, 1.0}}),
           terms({{T::kConst, 64.0}}), terms({{T::kOuter, 1.0}, {T::kInner, 1.0}})),
    };
    return OperatorCatalog(std::move(scans), std::move(joins));
}

OperatorCatalog OperatorCatalog::materialized_sort_merge_catalog() {
    auto c = default_catalog();
    auto joins = c.join_ops();
    joins[2].format = OutputFormat::kMaterialized;
    return OperatorCatalog(c.scan_ops(), std::move(joins));
}

} // namespace rmq
