#pragma once

#include "lmoam/optimizer.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lmoam::harness {

struct ProblemSpec {
    int id = 1;
    std::size_t m = 3;
    std::size_t d = 100;

    auto operator<=>(const ProblemSpec&) const = default;
};

/// One experiment matrix: problems x algorithms x seeds. NSGA-II shares the
/// population size, budget, variation and checkpoint settings of `lmoam`.
struct ExperimentConfig {
    std::vector<ProblemSpec> problems;
    std::vector<std::string> algorithms;  // subset of {"lmoam", "nsga2"}
    std::vector<std::uint64_t> seeds;
    LmoamConfig lmoam;
    std::filesystem::path output_directory = "results";
    double significance_level = 0.05;
    std::size_t workers = 1;
    std::size_t reference_points = lsmop::kDefaultReferencePoints;

    /// Throws ConfigError.
    void validate() const;
};

/// Built-in matrices: "paper-desk" (LSMOP1-9, d in {100, 500}, 5 seeds) and
/// "paper-full" (d in {100, 500, 1000, 5000}, 20 seeds), both with m = 3.
ExperimentConfig preset(const std::string& name);

/// Parses an INI file (`[section]` headers, `key = value` lines, `;` or `#`
/// comments). Relative output directories resolve against the file's folder.
/// Unknown sections or keys are rejected. Throws ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = ".");

/// Deterministic text listing every setting that influences results.
std::string describe(const ExperimentConfig& cfg);

} // namespace lmoam::harness
