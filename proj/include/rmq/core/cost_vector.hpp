#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace rmq {

/// Cost metrics known to the default cost model.
enum class Metric : std::uint8_t { kTime = 0, kBuffer = 1, kDisc = 2 };

inline constexpr std::size_t kMetricCount = 3;

const char *metric_name(Metric m);

/// Fixed-capacity vector of per-metric plan costs.  Components are finite and
/// nonnegative; the length is the experiment's metric count.
class CostVector {
  public:
    static constexpr std::size_t kMaxMetrics = kMetricCount;

    constexpr CostVector() = default;
    constexpr explicit CostVector(std::size_t size, double fill = 0.0) : size_(static_cast<std::uint8_t>(size)) {
        assert(size <= kMaxMetrics);
        for (std::size_t k = 0; k < size; ++k) values_[k] = fill;
    }
    constexpr CostVector(std::initializer_list<double> values) : size_(static_cast<std::uint8_t>(values.size())) {
        assert(values.size() <= kMaxMetrics);
        std::size_t k = 0;
        for (double v : values) values_[k++] = v;
    }

    constexpr std::size_t size() const { return size_; }
    constexpr double operator[](std::size_t k) const { return values_[k]; }
    constexpr double &operator[](std::size_t k) { return values_[k]; }

    constexpr const double *begin() const { return values_.data(); }
    constexpr const double *end() const { return values_.data() + size_; }

    constexpr bool operator==(const CostVector &o) const {
        if (size_ != o.size_) return false;
        for (std::size_t k = 0; k < size_; ++k)
            if (values_[k] != o.values_[k]) return false;
        return true;
    }

    /// Lexicographic order, used to canonicalize cost sets.
    constexpr bool operator<(const CostVector &o) const {
        for (std::size_t k = 0; k < size_ && k < o.size_; ++k) {
            if (values_[k] < o.values_[k]) return true;
            if (o.values_[k] < values_[k]) return false;
        }
        return size_ < o.size_;
    }

    std::string to_string() const;

  private:
    std::array<double, kMaxMetrics> values_{};
    std::uint8_t size_ = 0;
};

} // namespace rmq
