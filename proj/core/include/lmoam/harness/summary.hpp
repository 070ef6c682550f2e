#pragma once

#include "lmoam/harness/experiment.hpp"
#include "lmoam/harness/wilcoxon.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace lmoam::harness {

struct ComparisonCell {
    bool present = false;
    double median_value = 0.0;
    std::string symbol;  // "+", "-", "=" versus lmoam; empty when not compared
    bool best_flag = false;
};

struct SummaryRow {
    ProblemSpec problem;
    std::vector<ComparisonCell> cells;  // one per algorithm in `algorithms` order
};

struct SummaryTable {
    std::string metric;                   // "igd" or "hv"
    std::vector<std::string> algorithms;  // lmoam last
    std::vector<SummaryRow> rows;
    bool complete = true;

    /// Counts of +, -, = per algorithm column.
    std::vector<std::array<std::size_t, 3>> tally() const;
    std::string to_csv() const;
};

/// Column order: other algorithms alphabetically, lmoam last.
std::vector<std::string> algorithm_order(const std::vector<ResultRow>& rows);

double median(std::vector<double> v);

/// Builds the comparison table for one metric. Every algorithm is compared
/// with lmoam by the rank-sum test when both samples exist and are of equal
/// size; with a single algorithm no symbols are attached.
SummaryTable comparison_table(const std::vector<ResultRow>& rows, const std::string& metric, double alpha);

struct SummaryReport {
    bool complete = true;  // no absent cells, every convergence log found
    std::vector<std::string> problems;  // human-readable notes about gaps
};

/// Reads results.csv (and convergence/) under `dir` and writes igd_table.csv,
/// hv_table.csv, runtime_table.csv and convergence_summary.csv there. The
/// significance level comes from manifest.txt when present, else 0.05.
/// Throws MissingData when results.csv is absent.
SummaryReport summarize(const std::filesystem::path& dir);

} // namespace lmoam::harness
