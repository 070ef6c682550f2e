#pragma once

#include "lmoam/reference_front.hpp"
#include "lmoam/types.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lmoam {

struct Checkpoint {
    std::size_t evaluations = 0;
    double igd = 0.0;          // NaN when no reference front was supplied
    double elapsed_ms = 0.0;   // optimizer time only; indicator time excluded
};

/// Append-only convergence log of one seeded run.
struct RunRecord {
    std::vector<Checkpoint> checkpoints;
    std::size_t total_evaluations = 0;
    double wall_time_ms = 0.0;

    /// Deterministic text form (no timing), for byte comparisons.
    std::string canonical() const;
};

/// Records a checkpoint each time the evaluation count reaches a multiple of
/// `interval` (and at budget exhaustion), so a full run logs
/// ceil(budget / interval) rows. The IGD of the nondominated part of the
/// supplied snapshot is logged against the reference front when one is set.
class ProgressMonitor {
public:
    using Snapshot = std::function<std::vector<ObjectiveVector>()>;

    ProgressMonitor(std::size_t budget, std::size_t interval, const lsmop::ReferenceFront* reference);

    /// Starts the optimizer clock.
    void start();

    /// Called after every evaluation batch. `snapshot` is only invoked when a
    /// checkpoint is due.
    void observe(std::size_t evaluations, const Snapshot& snapshot);

    /// Closes the log; any checkpoint still pending is written at the final count.
    RunRecord finish(std::size_t evaluations, const Snapshot& snapshot);

    double elapsed_ms() const;

private:
    void log(std::size_t evaluations, const Snapshot& snapshot);

    using Clock = std::chrono::steady_clock;

    std::size_t budget_;
    std::size_t interval_;
    const lsmop::ReferenceFront* reference_;
    std::size_t next_target_;
    std::size_t logged_targets_ = 0;
    std::size_t total_targets_;
    Clock::time_point started_{};
    Clock::duration paused_{};
    RunRecord record_;
};

/// IGD of the nondominated subset of `objectives`.
double front_igd(const std::vector<ObjectiveVector>& objectives, const lsmop::ReferenceFront& reference);

} // namespace lmoam
