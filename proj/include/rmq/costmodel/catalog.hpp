#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rmq/core/cost_vector.hpp"
#include "rmq/core/plan.hpp"

namespace rmq {

/// Input quantities a local cost formula can reference.
enum class CostTerm : std::uint8_t {
    kConst,           // 1
    kCard,            // |t|, scanned table
    kOuter,           // |outer|
    kInner,           // |inner|
    kOut,             // |out|
    kOuterTimesInner, // |outer|·|inner|
    kOuterLogOuter,   // |outer|·log2(1+|outer|)
    kInnerLogInner,   // |inner|·log2(1+|inner|)
};
inline constexpr std::size_t kCostTermCount = 8;

const char *cost_term_name(CostTerm t);

struct CostInputs {
    double card = 0.0;
    double outer = 0.0;
    double inner = 0.0;
    double out = 0.0;
};

/// Linear combination of cost terms.
class CostFormula {
  public:
    CostFormula() = default;

    CostFormula &add(CostTerm term, double coefficient);
    double coefficient(CostTerm term) const { return coef_[static_cast<std::size_t>(term)]; }

    /// Terms with a zero coefficient are skipped, so 0·∞ never occurs.
    double evaluate(const CostInputs &in) const;

    /// Parses "outer:1 inner:1 out:1"; a bare number is a constant.
    /// Throws std::invalid_argument.
    static CostFormula parse(std::string_view text);
    std::string to_string() const;

    bool uses_join_terms() const;

  private:
    std::array<double, kCostTermCount> coef_{};
};

struct OperatorDescriptor {
    std::string name;
    OutputFormat format = OutputFormat::kPipelined;
    /// Indexed by Metric.
    std::array<CostFormula, kMetricCount> formulas;
};

class OperatorCatalog {
  public:
    /// Throws std::invalid_argument if either list is empty or a scan formula
    /// references join inputs.
    OperatorCatalog(std::vector<OperatorDescriptor> scans, std::vector<OperatorDescriptor> joins);

    /// seq_scan, sample_scan; nested_loop, hash, sort_merge.  All pipelined.
    static OperatorCatalog default_catalog();
    /// Default catalog with sort_merge producing materialized output.
    static OperatorCatalog materialized_sort_merge_catalog();

    const std::vector<OperatorDescriptor> &scan_ops() const { return scans_; }
    const std::vector<OperatorDescriptor> &join_ops() const { return joins_; }
    /// Maximum number of implementations per operator.
    std::size_t max_implementations() const { return std::max(scans_.size(), joins_.size()); }

  private:
    std::vector<OperatorDescriptor> scans_;
    std::vector<OperatorDescriptor> joins_;
};

} // namespace rmq
