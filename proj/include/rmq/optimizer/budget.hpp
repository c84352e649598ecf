#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>

#include "rmq/core/plan.hpp"

namespace rmq {

/// Optimization budget: either a wall-clock limit or an exact number of
/// algorithm iterations (deterministic runs).
class Budget {
  public:
    enum class Kind { kIterations, kMillis };

    static Budget iterations(std::uint64_t count) { return Budget(Kind::kIterations, count, 0.0); }
    static Budget millis(double ms) { return Budget(Kind::kMillis, 0, ms); }

    Kind kind() const { return kind_; }
    bool is_iterations() const { return kind_ == Kind::kIterations; }
    std::uint64_t iteration_limit() const { return iterations_; }
    double millis_limit() const { return millis_; }
    bool is_zero() const { return is_iterations() ? iterations_ == 0 : millis_ <= 0.0; }

  private:
    Budget(Kind kind, std::uint64_t it, double ms) : kind_(kind), iterations_(it), millis_(ms) {}

    Kind kind_;
    std::uint64_t iterations_;
    double millis_;
};

/// Tracks consumption of a Budget from construction time on.
class BudgetClock {
  public:
    explicit BudgetClock(const Budget &budget) : budget_(budget), start_(Clock::now()) {}

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }
    /// True once `done` iterations exhaust an iteration budget, or the time
    /// limit has passed.
    bool exhausted(std::uint64_t done) const {
        if (budget_.is_iterations()) return done >= budget_.iteration_limit();
        return elapsed_ms() >= budget_.millis_limit();
    }
    /// Time check for long-running inner loops; never fires for iteration budgets.
    bool out_of_time() const { return !budget_.is_iterations() && elapsed_ms() >= budget_.millis_limit(); }

    const Budget &budget() const { return budget_; }

  private:
    using Clock = std::chrono::steady_clock;
    Budget budget_;
    Clock::time_point start_;
};

/// Reported after every iteration.  `plans` views the algorithm's current
/// result set and is only valid during the callback.
struct Progress {
    double elapsed_ms = 0.0;
    std::uint64_t iteration = 0;
    std::span<const Plan> plans;
};

using ProgressSink = std::function<void(const Progress &)>;

} // namespace rmq
