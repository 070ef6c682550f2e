#include "lmoam/harness/experiment.hpp"

#include "lmoam/harness/csv.hpp"
#include "lmoam/indicators.hpp"
#include "lmoam/lsmop.hpp"
#include "lmoam/nsga2.hpp"
#include "lmoam/optimizer.hpp"
#include "lmoam/sorting.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace lmoam::harness {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSettingsMarker = "[settings]\n";

template <class T>
T to_unsigned(const std::string& s)
{
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw MissingData("malformed integer '" + s + "' in results");
    }
    if (pos != s.size()) {
        throw MissingData("malformed integer '" + s + "' in results");
    }
    return static_cast<T>(v);
}

double to_real(const std::string& s)
{
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw MissingData("malformed number '" + s + "' in results");
    }
    if (pos != s.size()) {
        throw MissingData("malformed number '" + s + "' in results");
    }
    return v;
}

std::string manifest_text(const ExperimentConfig& cfg)
{
    std::string out = "lmoam " LMOAM_VERSION_STRING "\n";
#if defined(__VERSION__)
    out += "compiler " __VERSION__ "\n";
#endif
    out += "cplusplus " + std::to_string(__cplusplus) + "\n";
    out += kSettingsMarker;
    out += describe(cfg);
    return out;
}

std::string settings_of(const std::string& manifest)
{
    auto pos = manifest.find(kSettingsMarker);
    return pos == std::string::npos ? std::string() : manifest.substr(pos);
}

void prepare_directory(const ExperimentConfig& cfg)
{
    const auto& dir = cfg.output_directory;
    try {
        fs::create_directories(dir / "runs");
        fs::create_directories(dir / "convergence");
        const auto probe = dir / ".write_probe";
        atomic_write(probe, "ok\n");
        fs::remove(probe);
    } catch (const std::exception& e) {
        throw ConfigError("output directory " + dir.string() + " is not writable: " + e.what());
    }
    const auto manifest = manifest_text(cfg);
    const auto path = dir / "manifest.txt";
    if (fs::exists(path)) {
        if (settings_of(read_file(path)) != settings_of(manifest)) {
            throw ConfigError("output directory " + dir.string() +
                              " holds results from different settings; choose another directory");
        }
    }
    try {
        atomic_write(path, manifest);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

} // namespace

std::string format_row(const ResultRow& r, bool canonical)
{
    return join({r.algorithm, "LSMOP" + std::to_string(r.problem), std::to_string(r.m), std::to_string(r.d),
                 std::to_string(r.seed), std::to_string(r.total_evaluations), format_real(r.final_igd),
                 format_real(r.final_hv), format_real(canonical ? 0.0 : r.wall_time_ms)});
}

ResultRow parse_row(const std::vector<std::string>& c)
{
    if (c.size() != 9) {
        throw MissingData("result row has " + std::to_string(c.size()) + " fields, expected 9");
    }
    ResultRow r;
    r.algorithm = c[0];
    if (c[1].rfind("LSMOP", 0) != 0) {
        throw MissingData("malformed problem name '" + c[1] + "'");
    }
    r.problem = to_unsigned<int>(c[1].substr(5));
    r.m = to_unsigned<std::size_t>(c[2]);
    r.d = to_unsigned<std::size_t>(c[3]);
    r.seed = to_unsigned<std::uint64_t>(c[4]);
    r.total_evaluations = to_unsigned<std::size_t>(c[5]);
    r.final_igd = to_real(c[6]);
    r.final_hv = to_real(c[7]);
    r.wall_time_ms = to_real(c[8]);
    return r;
}

std::vector<ResultRow> read_results(const fs::path& path)
{
    const auto table = read_csv(path);
    if (join(table.header) != kResultHeader) {
        throw MissingData(path.string() + " does not have the result header");
    }
    std::vector<ResultRow> rows;
    rows.reserve(table.rows.size());
    for (const auto& cells : table.rows) {
        rows.push_back(parse_row(cells));
    }
    return rows;
}

std::string Cell::id() const
{
    return algorithm + "_LSMOP" + std::to_string(problem.id) + "_m" + std::to_string(problem.m) + "_d" +
           std::to_string(problem.d) + "_s" + std::to_string(seed);
}

std::vector<Cell> cells(const ExperimentConfig& cfg)
{
    std::vector<Cell> out;
    for (const auto& p : cfg.problems) {
        for (const auto& a : cfg.algorithms) {
            for (auto s : cfg.seeds) {
                out.push_back({a, p, s});
            }
        }
    }
    return out;
}

lsmop::ReferenceFront reference_front_for(int id, std::size_t m, std::size_t points)
{
    RngStream rng(mix_seed(static_cast<std::uint64_t>(id) * 1000 + m));
    return lsmop::sample_reference_front(id, m, points, rng);
}

CellOutcome run_cell(const Cell& cell, const ExperimentConfig& cfg, const lsmop::ReferenceFront& reference)
{
    const auto problem = lsmop::make_problem(cell.problem.id, cell.problem.m, cell.problem.d);
    CellOutcome out;
    Population final_pop(problem->bounds());
    if (cell.algorithm == "lmoam") {
        auto res = run_lmoam(*problem, cfg.lmoam, cell.seed, &reference);
        final_pop = std::move(res.population);
        out.record = std::move(res.record);
    } else if (cell.algorithm == "nsga2") {
        const ea::Nsga2Config nc{cfg.lmoam.population_size, cfg.lmoam.total_budget, cfg.lmoam.variation,
                                 cfg.lmoam.checkpoint_interval};
        auto res = ea::nsga2_run(*problem, nc, cell.seed, &reference);
        final_pop = std::move(res.population);
        out.record = std::move(res.record);
    } else {
        throw ConfigError("unknown algorithm '" + cell.algorithm + "'");
    }

    const auto objs = final_pop.objectives();
    std::vector<ObjectiveVector> front;
    for (auto i : ea::nondominated_indices(objs)) {
        front.push_back(objs[i]);
    }
    auto& r = out.row;
    r.algorithm = cell.algorithm;
    r.problem = cell.problem.id;
    r.m = cell.problem.m;
    r.d = cell.problem.d;
    r.seed = cell.seed;
    r.total_evaluations = out.record.total_evaluations;
    r.final_igd = indicators::igd(front, reference);
    r.final_hv = indicators::normalized_hv(front, reference);
    r.wall_time_ms = out.record.wall_time_ms;
    return out;
}

std::string format_convergence(const RunRecord& record, bool canonical)
{
    std::string out = std::string(kConvergenceHeader) + "\n";
    for (const auto& c : record.checkpoints) {
        out += std::to_string(c.evaluations) + "," + format_real(c.igd) + "," +
               format_real(canonical ? 0.0 : c.elapsed_ms) + "\n";
    }
    return out;
}

RunReport run_experiment(const ExperimentConfig& cfg, const RunOptions& options)
{
    cfg.validate();
    prepare_directory(cfg);
    const auto& dir = cfg.output_directory;

    const auto all = cells(cfg);
    std::vector<const Cell*> pending;
    for (const auto& c : all) {
        if (!fs::exists(dir / "runs" / (c.id() + ".csv"))) {
            pending.push_back(&c);
        }
    }

    std::map<std::pair<int, std::size_t>, lsmop::ReferenceFront> fronts;
    for (const auto* c : pending) {
        auto key = std::make_pair(c->problem.id, c->problem.m);
        if (!fronts.count(key)) {
            fronts.emplace(key, reference_front_for(key.first, key.second, cfg.reference_points));
        }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex mu;
    auto worker = [&] {
        while (!failed) {
            const auto i = next++;
            if (i >= pending.size()) {
                return;
            }
            const auto& cell = *pending[i];
            try {
                const auto& ref = fronts.at({cell.problem.id, cell.problem.m});
                const auto out = run_cell(cell, cfg, ref);
                // Convergence before row: a row file marks the cell complete.
                atomic_write(dir / "convergence" / (cell.id() + ".csv"),
                             format_convergence(out.record, options.canonical));
                atomic_write(dir / "runs" / (cell.id() + ".csv"),
                             std::string(kResultHeader) + "\n" + format_row(out.row, options.canonical) + "\n");
                if (options.log) {
                    std::lock_guard lock(mu);
                    *options.log << cell.id() << " igd=" << format_real(out.row.final_igd)
                                 << " hv=" << format_real(out.row.final_hv) << " evaluations="
                                 << out.row.total_evaluations << "\n";
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    const std::size_t threads = std::min(cfg.workers, pending.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    std::string results = std::string(kResultHeader) + "\n";
    for (const auto& c : all) {
        const auto table = read_csv(dir / "runs" / (c.id() + ".csv"));
        if (table.rows.size() != 1) {
            throw MissingData("row file for " + c.id() + " is malformed");
        }
        results += join(table.rows.front()) + "\n";
    }
    RunReport report;
    report.computed = pending.size();
    report.skipped = all.size() - pending.size();
    report.results = dir / "results.csv";
    atomic_write(report.results, results);
    return report;
}

} // namespace lmoam::harness
