#pragma once

#include "lmoam/attention.hpp"
#include "lmoam/evaluation.hpp"
#include "lmoam/nsga2.hpp"
#include "lmoam/problem.hpp"
#include "lmoam/reference_front.hpp"
#include "lmoam/run_record.hpp"
#include "lmoam/variation.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lmoam {

struct LmoamConfig {
    std::size_t population_size = 300;     // n
    std::size_t total_budget = 100000;     // e
    double inner_budget_fraction = 0.05;   // evaluations per tranche = fraction * e
    std::size_t query_dimension = 5;       // k
    std::size_t query_count = 20;          // g
    ea::VariationConfig variation;
    std::size_t checkpoint_interval = 1000;

    /// Throws std::invalid_argument on out-of-range settings, including a
    /// budget smaller than the population.
    void validate() const;

    /// Evaluations per inner (and per outer) tranche, at least 1.
    std::size_t tranche() const;
};

/// One generation of the query search: each query paired with the solution it
/// produced; queries[i].fitness == solutions[i].objective. `survivors` is the
/// query population kept for the next generation.
struct QueryGeneration {
    std::vector<attention::Query> queries;
    std::vector<Individual> solutions;
    std::vector<attention::Query> survivors;
};

/// Evaluation split of a run; the three parts sum to the total.
struct EvaluationLedger {
    std::size_t initialization = 0;
    std::size_t inner = 0;
    std::size_t outer = 0;

    std::size_t total() const noexcept { return initialization + inner + outer; }
};

struct LmoamResult {
    Population population;
    RunRecord record;
    EvaluationLedger ledger;
};

/// State of one outer iteration, reported after its outer tranche.
struct OuterIteration {
    std::size_t index = 0;
    DecisionVector value;
    attention::KeyMatrix key{{}, 1};
    std::vector<attention::Query> initial_queries;
    std::vector<QueryGeneration> generations;
};

using IterationObserver = std::function<void(const OuterIteration&)>;

/// Evolves the queries against the fixed Value individual until `tranche`
/// evaluations (or the remaining budget) are spent.
///
/// Every generation applies each query to the Value individual and evaluates
/// the result once; the query inherits that objective vector as its fitness.
/// The next generation comes from binary tournament, SBX and polynomial
/// mutation in query space, and parents plus offspring are truncated back to
/// g by nondominated sorting and crowding. Query space is the box
/// [min(0, 2 min w), 2 max(1, max w)] per component over the initial queries.
/// `context` (may be null) is added to checkpoint snapshots.
std::vector<QueryGeneration> inner_query_search(std::vector<attention::Query> queries,
                                                const attention::KeyMatrix& key, std::span<const double> value,
                                                const Problem& problem, EvaluationCounter& counter,
                                                std::size_t tranche, const ea::VariationConfig& variation,
                                                RngStream& rng, ProgressMonitor* monitor = nullptr,
                                                const Population* context = nullptr);

/// Full attention-guided optimizer.
///
/// After a random initial population, each outer iteration picks the Value
/// individual, builds the Key from the population's per-variable variance,
/// initialises g queries, runs one inner tranche of query search, merges
/// every generated solution into the population, truncates back to n and
/// runs one tranche of NSGA-II. The budget is spent exactly.
LmoamResult run_lmoam(const Problem& problem, const LmoamConfig& cfg, std::uint64_t seed,
                      const lsmop::ReferenceFront* reference = nullptr, const IterationObserver& observer = {});

} // namespace lmoam
