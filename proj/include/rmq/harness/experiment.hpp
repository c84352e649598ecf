#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rmq/core/archive.hpp"
#include "rmq/harness/config.hpp"

namespace rmq {

/// One measurement of one (algorithm, seed) run.
struct SamplePoint {
    std::string algorithm;
    std::uint64_t seed = 0;
    /// Grid position: milliseconds, or iterations for iteration budgets.
    double elapsed_ms = 0.0;
    /// +∞ while no plan is known.
    double alpha_error = 0.0;
    bool operator==(const SamplePoint &) const = default;
};

struct MedianPoint {
    std::string algorithm;
    double elapsed_ms = 0.0;
    double median_alpha = 0.0;
    bool operator==(const MedianPoint &) const = default;
};

/// Records cost-vector snapshots of a run on a regular grid.  A grid point
/// takes the first state reported at or after it; points after the last
/// report carry that state forward and points after the run ended take the
/// final result.
class Sampler {
  public:
    Sampler(const Budget &budget, double interval);

    void observe(const Progress &progress);
    /// `end_key`: elapsed ms (or iterations) at which the run returned.
    void finish(const Archive &final_result, double end_key);

    struct Snapshot {
        double key;
        std::vector<CostVector> costs;
    };
    const std::vector<Snapshot> &snapshots() const { return snapshots_; }

  private:
    void record_until(double key, std::span<const Plan> plans);

    bool iterations_;
    double interval_;
    double limit_;
    double next_;
    double last_key_ = 0.0;
    std::vector<CostVector> last_;
    std::vector<Snapshot> snapshots_;
};

/// Uniformly random metric subset of size `count`, in metric order.
std::vector<Metric> select_metrics(std::size_t count, std::uint64_t seed);

/// Builds the cost model of one test case.
CostModel make_test_case(const ExperimentConfig &cfg, std::uint64_t seed);

/// UNION: strict-dominance pruned union of the final archives.  EXACT:
/// DP(1.01) cost set; throws std::length_error above
/// kExactReferenceMaxTables tables.
std::vector<CostVector> build_reference(const CostModel &model, const std::vector<Archive> &runs, ReferenceMode mode);

struct ExperimentResult {
    std::vector<SamplePoint> samples;
    std::vector<MedianPoint> medians;
    /// Final archive size per (algorithm, seed).
    std::map<std::pair<std::string, std::uint64_t>, std::size_t> final_sizes;
};

/// Runs every (seed, algorithm) cell, measures alpha_error against the
/// per-seed reference and aggregates medians over seeds per grid point.
ExperimentResult run_experiment(const ExperimentConfig &cfg);

std::vector<MedianPoint> median_over_seeds(const std::vector<SamplePoint> &samples);

/// CSV with header `algorithm,seed,elapsed_ms,alpha_error`; `comment` lines
/// are written first, each prefixed with "# ".  +∞ is written as `inf`.
std::string samples_to_csv(const std::vector<SamplePoint> &samples, const std::string &comment = {});
/// Inverse of samples_to_csv; comment lines are skipped.  Throws
/// std::runtime_error on malformed input.
std::vector<SamplePoint> samples_from_csv(const std::string &text);

/// CSV with header `algorithm,elapsed_ms,median_alpha`.
std::string medians_to_csv(const std::vector<MedianPoint> &medians, const std::string &comment = {});

/// "out.csv" -> "out_median.csv".
std::string median_path_for(const std::string &output_path);

/// Writes both CSV files; throws std::runtime_error naming the path.
void write_experiment(const ExperimentConfig &cfg, const ExperimentResult &result);

void write_file(const std::string &path, const std::string &content);
std::string read_file(const std::string &path);

} // namespace rmq
