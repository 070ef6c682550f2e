#pragma once

#include "lmoam/harness/config.hpp"
#include "lmoam/reference_front.hpp"
#include "lmoam/run_record.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace lmoam::harness {

struct ResultRow {
    std::string algorithm;
    int problem = 1;  // LSMOP id; written as "LSMOP<id>"
    std::size_t m = 0;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    std::size_t total_evaluations = 0;
    double final_igd = 0.0;
    double final_hv = 0.0;
    double wall_time_ms = 0.0;
};

inline constexpr const char* kResultHeader =
    "algorithm,problem,m,d,seed,total_evaluations,final_igd,final_hv,wall_time_ms";
inline constexpr const char* kConvergenceHeader = "evaluations,igd,elapsed_ms";

/// `canonical` writes the timing field as zero.
std::string format_row(const ResultRow& row, bool canonical = false);
/// Throws MissingData on a malformed row.
ResultRow parse_row(const std::vector<std::string>& cells);

/// Reads results.csv (or any file with that header).
std::vector<ResultRow> read_results(const std::filesystem::path& path);

struct Cell {
    std::string algorithm;
    ProblemSpec problem;
    std::uint64_t seed = 0;

    /// File stem, e.g. lmoam_LSMOP3_m3_d500_s2.
    std::string id() const;
};

/// Problems outermost, then algorithms in configured order, then seeds.
std::vector<Cell> cells(const ExperimentConfig& cfg);

/// Reference front used by the harness for LSMOP`id` with m objectives; its
/// sampling seed depends on (id, m) only.
lsmop::ReferenceFront reference_front_for(int id, std::size_t m, std::size_t points);

struct CellOutcome {
    ResultRow row;
    RunRecord record;
};

/// Runs one cell. Final IGD and HV are taken over the nondominated part of the
/// final population.
CellOutcome run_cell(const Cell& cell, const ExperimentConfig& cfg, const lsmop::ReferenceFront& reference);

std::string format_convergence(const RunRecord& record, bool canonical = false);

struct RunOptions {
    bool canonical = false;
    std::ostream* log = nullptr;  // one line per finished cell when set
};

struct RunReport {
    std::size_t computed = 0;
    std::size_t skipped = 0;
    std::filesystem::path results;
};

/// Executes every missing cell of the matrix with up to cfg.workers threads.
///
/// Layout under the output directory: manifest.txt (settings and versions),
/// runs/<cell>.csv (one result row), convergence/<cell>.csv and the assembled
/// results.csv in cell order. Cells whose row file already exists are reused,
/// so an interrupted run resumes where it stopped. Throws ConfigError before
/// any run when the configuration is invalid, the directory is unwritable or it
/// holds results from different settings.
RunReport run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

} // namespace lmoam::harness
