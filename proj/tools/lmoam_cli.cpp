// Command-line front end: run experiment matrices, summarize them, score
// fronts and sample reference fronts.

#include "lmoam/harness/config.hpp"
#include "lmoam/harness/csv.hpp"
#include "lmoam/harness/experiment.hpp"
#include "lmoam/harness/summary.hpp"
#include "lmoam/indicators.hpp"
#include "lmoam/reference_front.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kMissingData = 2;

int run(const std::string& config_path, bool canonical, const std::string& output, std::size_t workers,
        bool quiet)
{
    auto cfg = lmoam::harness::load_config(config_path);
    if (!output.empty()) {
        cfg.output_directory = output;
    }
    if (workers > 0) {
        cfg.workers = workers;
    }
    lmoam::harness::RunOptions opts;
    opts.canonical = canonical;
    opts.log = quiet ? nullptr : &std::cerr;
    const auto report = lmoam::harness::run_experiment(cfg, opts);
    std::cout << "computed " << report.computed << " cells, reused " << report.skipped << ", wrote "
              << report.results.string() << "\n";
    return kOk;
}

int summarize(const std::string& dir)
{
    const auto report = lmoam::harness::summarize(dir);
    for (const auto& p : report.problems) {
        std::cerr << "warning: " << p << "\n";
    }
    std::cout << "wrote igd_table.csv, hv_table.csv, runtime_table.csv, convergence_summary.csv in " << dir
              << "\n";
    return report.complete ? kOk : kMissingData;
}

int indicators(const std::string& front_path, const std::string& reference_path)
{
    std::vector<lmoam::ObjectiveVector> front, reference;
    try {
        front = lmoam::lsmop::read_front_csv(front_path);
        reference = lmoam::lsmop::read_front_csv(reference_path);
    } catch (const std::exception& e) {
        throw lmoam::harness::MissingData(e.what());
    }
    if (front.empty() || reference.empty()) {
        throw lmoam::harness::MissingData("front or reference file has no points");
    }
    std::cout << "indicator,value,front_size,reference\n";
    std::cout << "IGD," << lmoam::harness::format_real(lmoam::indicators::igd(front, reference)) << ","
              << front.size() << "," << reference_path << "\n";
    const auto m = reference.front().size();
    if (m == 2 || m == 3) {
        std::cout << "HV," << lmoam::harness::format_real(lmoam::indicators::normalized_hv(front, reference))
                  << "," << front.size() << "," << reference_path << "\n";
    }
    return kOk;
}

int fronts(int problem, std::size_t m, std::size_t points, const std::string& out, std::uint64_t seed,
           bool seeded)
{
    const auto front = seeded ? [&] {
        lmoam::RngStream rng(seed);
        return lmoam::lsmop::sample_reference_front(problem, m, points, rng);
    }()
                              : lmoam::harness::reference_front_for(problem, m, points);
    lmoam::lsmop::write_front_csv(out, front.points);
    std::cout << "wrote " << front.points.size() << " points (" << front.descriptor << ") to " << out << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"LSMOP experiments with the LMOAM optimizer and an NSGA-II baseline"};
    app.require_subcommand(1);

    std::string config_path, output;
    std::size_t workers = 0;
    bool canonical = false, quiet = false;
    auto* run_cmd = app.add_subcommand("run", "run every missing cell of an experiment matrix");
    run_cmd->add_option("config", config_path, "INI experiment file")->required();
    run_cmd->add_flag("--canonical", canonical, "write timing fields as zero for byte comparisons");
    run_cmd->add_option("--output", output, "output directory (overrides the config)")->envname("LMOAM_OUTPUT_DIR");
    run_cmd->add_option("--workers", workers, "concurrent cells (overrides the config)")
        ->envname("LMOAM_WORKERS")
        ->check(CLI::PositiveNumber);
    run_cmd->add_flag("--quiet", quiet, "no per-cell progress on stderr");

    std::string dir;
    auto* sum_cmd = app.add_subcommand("summarize", "comparison tables and convergence aggregates");
    sum_cmd->add_option("dir", dir, "experiment output directory")->required();

    std::string front_path, reference_path;
    auto* ind_cmd = app.add_subcommand("indicators", "IGD and normalized HV of a front file");
    ind_cmd->add_option("--front", front_path, "front CSV")->required();
    ind_cmd->add_option("--reference", reference_path, "reference front CSV")->required();

    int problem = 1;
    std::size_t m = 3, points = lmoam::lsmop::kDefaultReferencePoints;
    std::string out;
    std::uint64_t seed = 0;
    auto* fr_cmd = app.add_subcommand("fronts", "sample a reference front");
    fr_cmd->add_option("--problem", problem, "LSMOP id (1-9)")->required()->check(CLI::Range(1, 9));
    fr_cmd->add_option("--m", m, "objectives")->required();
    fr_cmd->add_option("--points", points, "number of points")->required();
    fr_cmd->add_option("--out", out, "output CSV")->required();
    auto* seed_opt = fr_cmd->add_option("--seed", seed, "sampling seed (default: the harness seed)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfigError;
    }

    try {
        if (*run_cmd) return run(config_path, canonical, output, workers, quiet);
        if (*sum_cmd) return summarize(dir);
        if (*ind_cmd) return indicators(front_path, reference_path);
        if (*fr_cmd) return fronts(problem, m, points, out, seed, seed_opt->count() > 0);
    } catch (const lmoam::harness::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const lmoam::harness::MissingData& e) {
        std::cerr << "missing data: " << e.what() << "\n";
        return kMissingData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kOk;
}
