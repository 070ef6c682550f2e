#include "lmoam/harness/summary.hpp"

#include "lmoam/harness/csv.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace lmoam::harness {

namespace fs = std::filesystem;

namespace {

using Key = std::tuple<int, std::size_t, std::size_t>;

Key key_of(const ResultRow& r)
{
    return {r.problem, r.m, r.d};
}

double metric_of(const ResultRow& r, const std::string& metric)
{
    return metric == "igd" ? r.final_igd : metric == "hv" ? r.final_hv : r.wall_time_ms;
}

std::map<Key, std::map<std::string, std::vector<const ResultRow*>>> group(const std::vector<ResultRow>& rows)
{
    std::map<Key, std::map<std::string, std::vector<const ResultRow*>>> g;
    for (const auto& r : rows) {
        g[key_of(r)][r.algorithm].push_back(&r);
    }
    for (auto& [k, by_alg] : g) {
        for (auto& [a, v] : by_alg) {
            std::sort(v.begin(), v.end(), [](const ResultRow* x, const ResultRow* y) { return x->seed < y->seed; });
        }
    }
    return g;
}

double read_alpha(const fs::path& dir)
{
    const auto path = dir / "manifest.txt";
    if (!fs::exists(path)) {
        return 0.05;
    }
    std::istringstream in(read_file(path));
    std::string line;
    const std::string prefix = "significance_level = ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) {
            return std::stod(line.substr(prefix.size()));
        }
    }
    return 0.05;
}

std::string problem_cells(const Key& k)
{
    return "LSMOP" + std::to_string(std::get<0>(k)) + "," + std::to_string(std::get<1>(k)) + "," +
           std::to_string(std::get<2>(k));
}

} // namespace

double median(std::vector<double> v)
{
    if (v.empty()) {
        throw std::invalid_argument("median of an empty sample");
    }
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<std::string> algorithm_order(const std::vector<ResultRow>& rows)
{
    std::set<std::string> names;
    for (const auto& r : rows) {
        names.insert(r.algorithm);
    }
    std::vector<std::string> out;
    for (const auto& n : names) {
        if (n != "lmoam") {
            out.push_back(n);
        }
    }
    if (names.count("lmoam")) {
        out.push_back("lmoam");
    }
    return out;
}

std::vector<std::array<std::size_t, 3>> SummaryTable::tally() const
{
    std::vector<std::array<std::size_t, 3>> t(algorithms.size(), {0, 0, 0});
    for (const auto& row : rows) {
        for (std::size_t a = 0; a < row.cells.size(); ++a) {
            const auto& s = row.cells[a].symbol;
            if (s == "+") ++t[a][0];
            if (s == "-") ++t[a][1];
            if (s == "=") ++t[a][2];
        }
    }
    return t;
}

std::string SummaryTable::to_csv() const
{
    std::vector<std::string> header = {"problem", "m", "d"};
    header.insert(header.end(), algorithms.begin(), algorithms.end());
    header.push_back("best");
    std::string out = join(header) + "\n";
    for (const auto& row : rows) {
        std::string line = problem_cells({row.problem.id, row.problem.m, row.problem.d});
        std::string best;
        for (std::size_t a = 0; a < row.cells.size(); ++a) {
            const auto& c = row.cells[a];
            line += ",";
            if (!c.present) {
                line += "absent";
                continue;
            }
            line += format_real(c.median_value);
            if (!c.symbol.empty()) {
                line += "(" + c.symbol + ")";
            }
            if (c.best_flag) {
                best = algorithms[a];
            }
        }
        out += line + "," + best + "\n";
    }
    std::string tally_line = "(+/-/=),,";
    bool symbols = false;
    for (const auto& row : rows) {
        for (const auto& c : row.cells) {
            symbols = symbols || !c.symbol.empty();
        }
    }
    for (const auto& t : tally()) {
        tally_line += ",";
        if (symbols) {
            tally_line += std::to_string(t[0]) + "/" + std::to_string(t[1]) + "/" + std::to_string(t[2]);
        }
    }
    out += tally_line + ",\n";
    return out;
}

SummaryTable comparison_table(const std::vector<ResultRow>& rows, const std::string& metric, double alpha)
{
    if (metric != "igd" && metric != "hv") {
        throw std::invalid_argument("metric must be igd or hv");
    }
    SummaryTable table;
    table.metric = metric;
    table.algorithms = algorithm_order(rows);
    const auto direction = metric == "igd" ? Direction::lower_is_better : Direction::higher_is_better;
    const bool compare = table.algorithms.size() > 1 && table.algorithms.back() == "lmoam";

    for (const auto& [key, by_alg] : group(rows)) {
        SummaryRow row;
        row.problem = {std::get<0>(key), std::get<1>(key), std::get<2>(key)};
        std::vector<std::vector<double>> samples(table.algorithms.size());
        for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
            ComparisonCell cell;
            auto it = by_alg.find(table.algorithms[a]);
            if (it != by_alg.end()) {
                for (const auto* r : it->second) {
                    samples[a].push_back(metric_of(*r, metric));
                }
                cell.present = true;
                cell.median_value = median(samples[a]);
            } else {
                table.complete = false;
            }
            row.cells.push_back(cell);
        }
        if (compare) {
            const std::size_t ref = table.algorithms.size() - 1;
            for (std::size_t a = 0; a < row.cells.size(); ++a) {
                if (!row.cells[a].present || !row.cells[ref].present) {
                    continue;
                }
                if (a == ref) {
                    row.cells[a].symbol = "=";
                } else if (samples[a].size() == samples[ref].size()) {
                    row.cells[a].symbol = wilcoxon_rank_sum(samples[a], samples[ref], alpha, direction);
                } else {
                    table.complete = false;
                }
            }
        }
        std::size_t best = row.cells.size();
        for (std::size_t a = 0; a < row.cells.size(); ++a) {
            if (!row.cells[a].present) continue;
            if (best == row.cells.size()) {
                best = a;
                continue;
            }
            const double v = row.cells[a].median_value, b = row.cells[best].median_value;
            if (direction == Direction::lower_is_better ? v < b : v > b) {
                best = a;
            }
        }
        if (best < row.cells.size()) {
            row.cells[best].best_flag = true;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

SummaryReport summarize(const fs::path& dir)
{
    const auto results_path = dir / "results.csv";
    if (!fs::exists(results_path)) {
        throw MissingData("no results.csv in " + dir.string());
    }
    const auto rows = read_results(results_path);
    if (rows.empty()) {
        throw MissingData(results_path.string() + " has no data rows");
    }
    const double alpha = read_alpha(dir);
    SummaryReport report;

    for (const std::string metric : {"igd", "hv"}) {
        const auto table = comparison_table(rows, metric, alpha);
        if (!table.complete) {
            report.complete = false;
        }
        atomic_write(dir / (metric + "_table.csv"), table.to_csv());
    }
    if (!report.complete) {
        report.problems.push_back("comparison tables contain absent cells or unequal sample sizes");
    }

    const auto algs = algorithm_order(rows);
    const auto groups = group(rows);

    // Median wall time per cell.
    {
        std::vector<std::string> header = {"problem", "m", "d"};
        header.insert(header.end(), algs.begin(), algs.end());
        std::string out = join(header) + "\n";
        for (const auto& [key, by_alg] : groups) {
            out += problem_cells(key);
            for (const auto& a : algs) {
                out += ",";
                auto it = by_alg.find(a);
                if (it == by_alg.end()) {
                    out += "absent";
                    continue;
                }
                std::vector<double> t;
                for (const auto* r : it->second) t.push_back(r->wall_time_ms);
                out += format_real(median(t));
            }
            out += "\n";
        }
        atomic_write(dir / "runtime_table.csv", out);
    }

    // Median convergence curve per (algorithm, problem): row i of every seed's log.
    {
        std::string out = "algorithm,problem,m,d,evaluations,median_igd,median_elapsed_ms\n";
        for (const auto& [key, by_alg] : groups) {
            for (const auto& a : algs) {
                auto it = by_alg.find(a);
                if (it == by_alg.end()) continue;
                std::vector<std::vector<std::array<double, 3>>> logs;
                for (const auto* r : it->second) {
                    const Cell cell{r->algorithm, {r->problem, r->m, r->d}, r->seed};
                    const auto path = dir / "convergence" / (cell.id() + ".csv");
                    if (!fs::exists(path)) {
                        report.complete = false;
                        report.problems.push_back("missing convergence log " + path.string());
                        continue;
                    }
                    const auto t = read_csv(path);
                    std::vector<std::array<double, 3>> log;
                    for (const auto& c : t.rows) {
                        if (c.size() != 3) throw MissingData("malformed convergence log " + path.string());
                        log.push_back({std::stod(c[0]), std::stod(c[1]), std::stod(c[2])});
                    }
                    logs.push_back(std::move(log));
                }
                if (logs.empty()) continue;
                std::size_t len = logs.front().size();
                for (const auto& l : logs) len = std::min(len, l.size());
                for (std::size_t i = 0; i < len; ++i) {
                    std::vector<double> e, g, ms;
                    for (const auto& l : logs) {
                        e.push_back(l[i][0]);
                        g.push_back(l[i][1]);
                        ms.push_back(l[i][2]);
                    }
                    out += a + "," + problem_cells(key) + "," + std::to_string(static_cast<std::size_t>(median(e))) +
                           "," + format_real(median(g)) + "," + format_real(median(ms)) + "\n";
                }
            }
        }
        atomic_write(dir / "convergence_summary.csv", out);
    }
    return report;
}

} // namespace lmoam::harness
