#pragma once
// Full-budget runs (n = 300, 100000 evaluations, m = 3) cached by cell and
// shared between the checks of one process.

#include "lmoam/harness/csv.hpp"
#include "lmoam/harness/experiment.hpp"
#include "lmoam/reference_front.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lmoam::acceptance {

namespace fs = std::filesystem;

inline const std::vector<std::uint64_t> kSeeds = {1, 2, 3, 4, 5};

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

class RunCache {
public:
    explicit RunCache(fs::path out) : out_(std::move(out)) { fs::create_directories(out_ / "convergence"); }

    const harness::CellOutcome& get(const std::string& alg, int id, std::size_t d, std::uint64_t seed)
    {
        const harness::Cell cell{alg, {id, 3, d}, seed};
        auto it = runs_.find(cell.id());
        if (it != runs_.end()) return it->second;
        auto key = std::make_pair(id, std::size_t{3});
        if (!fronts_.count(key)) {
            fronts_.emplace(key, harness::reference_front_for(id, 3, lsmop::kDefaultReferencePoints));
        }
        harness::ExperimentConfig cfg;  // default LmoamConfig: n = 300, budget = 100000
        auto outcome = harness::run_cell(cell, cfg, fronts_.at(key));
        harness::atomic_write(out_ / "convergence" / (cell.id() + ".csv"),
                              harness::format_convergence(outcome.record));
        std::fprintf(stderr, "  ran %s: igd %s hv %s %.1f s\n", cell.id().c_str(), sci(outcome.row.final_igd).c_str(),
                     sci(outcome.row.final_hv).c_str(), outcome.row.wall_time_ms / 1000.0);
        return runs_.emplace(cell.id(), std::move(outcome)).first->second;
    }

    std::vector<double> metric(const std::string& alg, int id, std::size_t d,
                               const std::function<double(const harness::CellOutcome&)>& f)
    {
        std::vector<double> v;
        for (auto s : kSeeds) v.push_back(f(get(alg, id, d, s)));
        return v;
    }

private:
    fs::path out_;
    std::map<std::string, harness::CellOutcome> runs_;
    std::map<std::pair<int, std::size_t>, lsmop::ReferenceFront> fronts_;
};

} // namespace lmoam::acceptance
