#include "lmoam/run_record.hpp"

#include "lmoam/indicators.hpp"
#include "lmoam/sorting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace lmoam {

std::string RunRecord::canonical() const
{
    std::string out = "total_evaluations=" + std::to_string(total_evaluations) + "\n";
    char buf[96];
    for (const auto& c : checkpoints) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", c.evaluations, c.igd);
        out += buf;
    }
    return out;
}

double front_igd(const std::vector<ObjectiveVector>& objectives, const lsmop::ReferenceFront& reference)
{
    if (objectives.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const auto nd = ea::nondominated_indices(objectives);
    std::vector<ObjectiveVector> front;
    front.reserve(nd.size());
    for (auto i : nd) {
        front.push_back(objectives[i]);
    }
    return indicators::igd(front, reference);
}

ProgressMonitor::ProgressMonitor(std::size_t budget, std::size_t interval, const lsmop::ReferenceFront* reference)
    : budget_(budget), interval_(interval), reference_(reference)
{
    if (interval_ == 0) {
        throw std::invalid_argument("ProgressMonitor: checkpoint interval must be positive");
    }
    next_target_ = std::min(interval_, budget_);
    total_targets_ = (budget_ + interval_ - 1) / interval_;
}

void ProgressMonitor::start()
{
    started_ = Clock::now();
    paused_ = Clock::duration::zero();
}

double ProgressMonitor::elapsed_ms() const
{
    const auto active = Clock::now() - started_ - paused_;
    return std::chrono::duration<double, std::milli>(active).count();
}

void ProgressMonitor::log(std::size_t evaluations, const Snapshot& snapshot)
{
    const auto t0 = Clock::now();
    Checkpoint c;
    c.evaluations = evaluations;
    c.elapsed_ms = std::chrono::duration<double, std::milli>(t0 - started_ - paused_).count();
    c.igd = reference_ ? front_igd(snapshot(), *reference_) : std::numeric_limits<double>::quiet_NaN();
    record_.checkpoints.push_back(c);
    paused_ += Clock::now() - t0;
}

void ProgressMonitor::observe(std::size_t evaluations, const Snapshot& snapshot)
{
    // A batch that crosses several targets logs one row per target.
    while (logged_targets_ < total_targets_ && evaluations >= next_target_) {
        log(evaluations, snapshot);
        ++logged_targets_;
        next_target_ = std::min(next_target_ + interval_, budget_);
    }
}

RunRecord ProgressMonitor::finish(std::size_t evaluations, const Snapshot& snapshot)
{
    observe(evaluations, snapshot);
    while (logged_targets_ < total_targets_) {
        log(evaluations, snapshot);
        ++logged_targets_;
    }
    record_.total_evaluations = evaluations;
    record_.wall_time_ms = elapsed_ms();
    return std::move(record_);
}

} // namespace lmoam
