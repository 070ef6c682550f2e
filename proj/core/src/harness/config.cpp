#include "lmoam/harness/config.hpp"

#include "lmoam/harness/csv.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace lmoam::harness {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string s)
{
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text)
{
    T v{};
    auto s = trim(text);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("invalid value for '" + key + "': '" + text + "'");
    }
    return v;
}

double parse_real(const std::string& key, const std::string& text)
{
    // from_chars for double is missing on some standard libraries.
    auto s = trim(text);
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("invalid value for '" + key + "': '" + text + "'");
    }
    if (pos != s.size()) {
        throw ConfigError("invalid value for '" + key + "': '" + text + "'");
    }
    return v;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text)
{
    std::vector<T> out;
    for (const auto& item : split_list(text)) {
        out.push_back(parse_number<T>(key, item));
    }
    return out;
}

std::string strip_comment(const std::string& v)
{
    auto pos = v.find_first_of(";#");
    return trim(pos == std::string::npos ? v : v.substr(0, pos));
}

const std::map<std::string, std::set<std::string>>& schema()
{
    static const std::map<std::string, std::set<std::string>> s = {
        {"experiment",
         {"preset", "problems", "objectives", "dimensions", "algorithms", "seeds", "base_seed", "seed_list",
          "output_directory", "significance_level", "workers", "reference_points"}},
        {"lmoam",
         {"population_size", "total_budget", "inner_budget_fraction", "query_dimension", "query_count",
          "checkpoint_interval"}},
        {"variation",
         {"crossover_probability", "crossover_distribution_index", "mutation_probability",
          "mutation_distribution_index"}},
    };
    return s;
}

std::vector<ProblemSpec> matrix(const std::vector<int>& ids, const std::vector<std::size_t>& ms,
                                const std::vector<std::size_t>& ds)
{
    std::vector<ProblemSpec> out;
    for (int id : ids) {
        for (auto m : ms) {
            for (auto d : ds) {
                out.push_back({id, m, d});
            }
        }
    }
    return out;
}

std::vector<std::uint64_t> consecutive(std::uint64_t base, std::size_t count)
{
    std::vector<std::uint64_t> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = base + i;
    }
    return out;
}

} // namespace

void ExperimentConfig::validate() const
{
    if (problems.empty()) {
        throw ConfigError("no problems configured");
    }
    if (algorithms.empty()) {
        throw ConfigError("no algorithms configured");
    }
    if (seeds.empty()) {
        throw ConfigError("no seeds configured");
    }
    for (const auto& a : algorithms) {
        if (a != "lmoam" && a != "nsga2") {
            throw ConfigError("unknown algorithm '" + a + "' (expected lmoam or nsga2)");
        }
    }
    if (std::set<std::string>(algorithms.begin(), algorithms.end()).size() != algorithms.size()) {
        throw ConfigError("duplicate algorithm");
    }
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) {
        throw ConfigError("duplicate seed");
    }
    if (std::set<ProblemSpec>(problems.begin(), problems.end()).size() != problems.size()) {
        throw ConfigError("duplicate problem");
    }
    for (const auto& p : problems) {
        if (p.id < 1 || p.id > 9) {
            throw ConfigError("LSMOP id must be in 1..9, got " + std::to_string(p.id));
        }
        if (p.m < 2 || p.d <= p.m) {
            throw ConfigError("unsupported problem LSMOP" + std::to_string(p.id) + " m=" + std::to_string(p.m) +
                              " d=" + std::to_string(p.d));
        }
        if (p.m > 3) {
            throw ConfigError("hypervolume is implemented for m <= 3 only");
        }
        if (reference_points < p.m) {
            throw ConfigError("reference_points must be at least m");
        }
    }
    if (!(significance_level > 0.0 && significance_level < 1.0)) {
        throw ConfigError("significance_level must lie in (0, 1)");
    }
    if (workers == 0) {
        throw ConfigError("workers must be at least 1");
    }
    if (output_directory.empty()) {
        throw ConfigError("output_directory is empty");
    }
    try {
        lmoam.validate();
        if (std::find(algorithms.begin(), algorithms.end(), "nsga2") != algorithms.end()) {
            ea::Nsga2Config{lmoam.population_size, lmoam.total_budget, lmoam.variation, lmoam.checkpoint_interval}
                .validate();
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

ExperimentConfig preset(const std::string& name)
{
    ExperimentConfig cfg;
    cfg.algorithms = {"nsga2", "lmoam"};
    const std::vector<int> ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    if (name == "paper-desk") {
        cfg.problems = matrix(ids, {3}, {100, 500});
        cfg.seeds = consecutive(1, 5);
    } else if (name == "paper-full") {
        cfg.problems = matrix(ids, {3}, {100, 500, 1000, 5000});
        cfg.seeds = consecutive(1, 20);
    } else {
        throw ConfigError("unknown preset '" + name + "' (expected paper-desk or paper-full)");
    }
    return cfg;
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir)
{
    pt::ptree tree;
    try {
        std::istringstream in(text);
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.message() + " (line " + std::to_string(e.line()) +
                          ")");
    }

    std::map<std::string, std::map<std::string, std::string>> kv;
    for (const auto& [section, body] : tree) {
        auto known = schema().find(section);
        if (known == schema().end() || body.data().size() > 0) {
            throw ConfigError("unknown section or top-level key '" + section + "'");
        }
        for (const auto& [key, value] : body) {
            if (!known->second.count(key)) {
                throw ConfigError("unknown key '" + key + "' in [" + section + "]");
            }
            kv[section][key] = strip_comment(value.data());
        }
    }
    auto get = [&](const std::string& s, const std::string& k) -> const std::string* {
        auto si = kv.find(s);
        if (si == kv.end()) {
            return nullptr;
        }
        auto ki = si->second.find(k);
        return ki == si->second.end() ? nullptr : &ki->second;
    };

    ExperimentConfig cfg = preset("paper-desk");
    if (auto v = get("experiment", "preset")) {
        cfg = preset(*v);
    }

    // Problem matrix: any of ids / objectives / dimensions overrides the preset axis.
    std::vector<int> ids;
    std::vector<std::size_t> ms, ds;
    for (const auto& p : cfg.problems) {
        if (std::find(ids.begin(), ids.end(), p.id) == ids.end()) ids.push_back(p.id);
        if (std::find(ms.begin(), ms.end(), p.m) == ms.end()) ms.push_back(p.m);
        if (std::find(ds.begin(), ds.end(), p.d) == ds.end()) ds.push_back(p.d);
    }
    if (auto v = get("experiment", "problems")) {
        ids.clear();
        for (auto item : split_list(*v)) {
            if (item.rfind("LSMOP", 0) == 0 || item.rfind("lsmop", 0) == 0) {
                item = item.substr(5);
            }
            ids.push_back(parse_number<int>("problems", item));
        }
    }
    if (auto v = get("experiment", "objectives")) ms = parse_list<std::size_t>("objectives", *v);
    if (auto v = get("experiment", "dimensions")) ds = parse_list<std::size_t>("dimensions", *v);
    cfg.problems = matrix(ids, ms, ds);

    if (auto v = get("experiment", "algorithms")) cfg.algorithms = split_list(*v);

    if (get("experiment", "seed_list") && (get("experiment", "seeds") || get("experiment", "base_seed"))) {
        throw ConfigError("seed_list cannot be combined with seeds/base_seed");
    }
    if (auto v = get("experiment", "seed_list")) {
        cfg.seeds = parse_list<std::uint64_t>("seed_list", *v);
    } else if (get("experiment", "seeds") || get("experiment", "base_seed")) {
        std::size_t count = cfg.seeds.size();
        std::uint64_t base = 1;
        if (auto s = get("experiment", "seeds")) count = parse_number<std::size_t>("seeds", *s);
        if (auto s = get("experiment", "base_seed")) base = parse_number<std::uint64_t>("base_seed", *s);
        cfg.seeds = consecutive(base, count);
    }

    if (auto v = get("experiment", "output_directory")) {
        std::filesystem::path p = *v;
        cfg.output_directory = p.is_absolute() ? p : base_dir / p;
    } else {
        cfg.output_directory = base_dir / "results";
    }
    if (auto v = get("experiment", "significance_level"))
        cfg.significance_level = parse_real("significance_level", *v);
    if (auto v = get("experiment", "workers")) cfg.workers = parse_number<std::size_t>("workers", *v);
    if (auto v = get("experiment", "reference_points"))
        cfg.reference_points = parse_number<std::size_t>("reference_points", *v);

    auto& l = cfg.lmoam;
    if (auto v = get("lmoam", "population_size")) l.population_size = parse_number<std::size_t>("population_size", *v);
    if (auto v = get("lmoam", "total_budget")) l.total_budget = parse_number<std::size_t>("total_budget", *v);
    if (auto v = get("lmoam", "inner_budget_fraction"))
        l.inner_budget_fraction = parse_real("inner_budget_fraction", *v);
    if (auto v = get("lmoam", "query_dimension")) l.query_dimension = parse_number<std::size_t>("query_dimension", *v);
    if (auto v = get("lmoam", "query_count")) l.query_count = parse_number<std::size_t>("query_count", *v);
    if (auto v = get("lmoam", "checkpoint_interval"))
        l.checkpoint_interval = parse_number<std::size_t>("checkpoint_interval", *v);

    auto& var = l.variation;
    if (auto v = get("variation", "crossover_probability"))
        var.crossover_probability = parse_real("crossover_probability", *v);
    if (auto v = get("variation", "crossover_distribution_index"))
        var.crossover_distribution_index = parse_real("crossover_distribution_index", *v);
    if (auto v = get("variation", "mutation_probability")) {
        if (*v == "auto") {
            var.mutation_probability.reset();
        } else {
            var.mutation_probability = parse_real("mutation_probability", *v);
        }
    }
    if (auto v = get("variation", "mutation_distribution_index"))
        var.mutation_distribution_index = parse_real("mutation_distribution_index", *v);

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::string text;
    try {
        text = read_file(path);
    } catch (const MissingData&) {
        throw ConfigError("cannot read config file " + path.string());
    }
    auto dir = path.parent_path();
    return parse_config(text, dir.empty() ? std::filesystem::path(".") : dir);
}

std::string describe(const ExperimentConfig& cfg)
{
    std::ostringstream out;
    out.precision(17);
    out << "problems =";
    for (std::size_t i = 0; i < cfg.problems.size(); ++i) {
        const auto& p = cfg.problems[i];
        out << (i ? ", " : " ") << "LSMOP" << p.id << "/m" << p.m << "/d" << p.d;
    }
    out << "\nalgorithms = " << join(cfg.algorithms, ',') << "\nseeds =";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        out << (i ? ", " : " ") << cfg.seeds[i];
    }
    const auto& l = cfg.lmoam;
    const auto& v = l.variation;
    out << "\nreference_points = " << cfg.reference_points << "\nsignificance_level = " << cfg.significance_level
        << "\npopulation_size = " << l.population_size << "\ntotal_budget = " << l.total_budget
        << "\ninner_budget_fraction = " << l.inner_budget_fraction << "\nquery_dimension = " << l.query_dimension
        << "\nquery_count = " << l.query_count << "\ncheckpoint_interval = " << l.checkpoint_interval
        << "\ncrossover_probability = " << v.crossover_probability
        << "\ncrossover_distribution_index = " << v.crossover_distribution_index << "\nmutation_probability = ";
    if (v.mutation_probability) {
        out << *v.mutation_probability;
    } else {
        out << "auto";
    }
    out << "\nmutation_distribution_index = " << v.mutation_distribution_index << "\n";
    return out.str();
}

} // namespace lmoam::harness
