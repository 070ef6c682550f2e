#include "lmoam/optimizer.hpp"

#include "lmoam/selection.hpp"
#include "lmoam/sorting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmoam {

void LmoamConfig::validate() const
{
    if (population_size < 2) {
        throw std::invalid_argument("population_size must be at least 2");
    }
    if (total_budget < population_size) {
        throw std::invalid_argument("total_budget is smaller than population_size");
    }
    if (!(inner_budget_fraction > 0.0 && inner_budget_fraction < 1.0)) {
        throw std::invalid_argument("inner_budget_fraction must be in (0,1)");
    }
    if (query_dimension < 1) {
        throw std::invalid_argument("query_dimension must be at least 1");
    }
    if (query_count < 2) {
        throw std::invalid_argument("query_count must be at least 2");
    }
    if (checkpoint_interval == 0) {
        throw std::invalid_argument("checkpoint_interval must be positive");
    }
    variation.validate();
}

std::size_t LmoamConfig::tranche() const
{
    const double t = std::round(inner_budget_fraction * static_cast<double>(total_budget));
    return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

namespace {

std::shared_ptr<const Bounds> query_space(const std::vector<attention::Query>& queries, std::size_t k)
{
    std::vector<double> lower(k, 0.0);
    std::vector<double> upper(k, 2.0);
    for (const auto& q : queries) {
        for (std::size_t j = 0; j < k; ++j) {
            lower[j] = std::min(lower[j], 2.0 * q.weights[j]);
            upper[j] = std::max(upper[j], 2.0 * q.weights[j]);
        }
    }
    return std::make_shared<const Bounds>(std::move(lower), std::move(upper));
}

} // namespace

std::vector<QueryGeneration> inner_query_search(std::vector<attention::Query> queries,
                                                const attention::KeyMatrix& key, std::span<const double> value,
                                                const Problem& problem, EvaluationCounter& counter,
                                                std::size_t tranche, const ea::VariationConfig& variation,
                                                RngStream& rng, ProgressMonitor* monitor, const Population* context)
{
    std::vector<QueryGeneration> history;
    if (queries.empty()) {
        return history;
    }
    const std::size_t g = queries.size();
    const std::size_t k = key.buckets();
    const std::size_t allowed = std::min(tranche, counter.remaining());
    const auto& bounds = *problem.bounds();

    // Queries live in a population of their own so the EA kernel applies
    // unchanged; `elite` keeps the solution belonging to each query.
    Population qpop(query_space(queries, k));
    std::vector<Individual> elite;

    auto snapshot = [&] {
        std::vector<ObjectiveVector> objs = context ? context->objectives() : std::vector<ObjectiveVector>{};
        for (const auto& s : elite) {
            objs.push_back(*s.objective);
        }
        return objs;
    };

    auto evaluate_generation = [&](std::vector<std::vector<double>> weights) {
        QueryGeneration gen;
        for (auto& w : weights) {
            Individual solution(attention::apply_attention(w, key, value, bounds));
            counter.evaluate(problem, solution);
            gen.queries.push_back({std::move(w), solution.objective});
            gen.solutions.push_back(std::move(solution));
        }
        return gen;
    };

    std::vector<std::vector<double>> first;
    for (std::size_t i = 0; i < std::min(g, allowed); ++i) {
        first.push_back(std::move(queries[i].weights));
    }
    std::size_t spent = first.size();
    history.push_back(evaluate_generation(std::move(first)));
    for (std::size_t i = 0; i < history.back().queries.size(); ++i) {
        Individual q(history.back().queries[i].weights);
        q.objective = history.back().queries[i].fitness;
        qpop.push_back(std::move(q));
        elite.push_back(history.back().solutions[i]);
    }
    ea::assign_rank_and_crowding(qpop);
    history.back().survivors = history.back().queries;
    if (monitor) {
        monitor->observe(counter.used(), snapshot);
    }

    while (spent < allowed) {
        const std::size_t count = std::min(g, allowed - spent);
        Population offspring = ea::make_offspring(qpop, count, variation, rng);
        std::vector<std::vector<double>> weights;
        weights.reserve(count);
        for (auto& o : offspring) {
            weights.push_back(std::move(o.decision));
        }
        history.push_back(evaluate_generation(std::move(weights)));
        spent += count;
        auto& gen = history.back();

        // Elitist truncation of parents + offspring back to g.
        std::vector<Individual> merged_queries(qpop.begin(), qpop.end());
        std::vector<Individual> merged_elite = elite;
        for (std::size_t i = 0; i < gen.queries.size(); ++i) {
            Individual q(gen.queries[i].weights);
            q.objective = gen.queries[i].fitness;
            merged_queries.push_back(std::move(q));
            merged_elite.push_back(gen.solutions[i]);
        }
        std::vector<ObjectiveVector> objs;
        objs.reserve(merged_queries.size());
        for (const auto& q : merged_queries) {
            objs.push_back(*q.objective);
        }
        const auto sel = ea::select_survivors(objs, g);
        Population next(qpop.bounds_ptr());
        elite.clear();
        for (std::size_t s = 0; s < sel.indices.size(); ++s) {
            Individual q = std::move(merged_queries[sel.indices[s]]);
            q.rank = sel.ranks[s];
            q.crowding = sel.crowding[s];
            next.push_back(std::move(q));
            elite.push_back(std::move(merged_elite[sel.indices[s]]));
        }
        qpop = std::move(next);
        for (const auto& q : qpop) {
            history.back().survivors.push_back({q.decision, q.objective});
        }
        if (monitor) {
            monitor->observe(counter.used(), snapshot);
        }
    }
    return history;
}

LmoamResult run_lmoam(const Problem& problem, const LmoamConfig& cfg, std::uint64_t seed,
                      const lsmop::ReferenceFront* reference, const IterationObserver& observer)
{
    cfg.validate();
    const std::size_t n = cfg.population_size;
    const std::size_t tranche = cfg.tranche();

    RngStream rng(seed);
    EvaluationCounter counter(cfg.total_budget);
    ProgressMonitor monitor(cfg.total_budget, cfg.checkpoint_interval, reference);
    EvaluationLedger ledger;
    monitor.start();

    Population pop = ea::random_population(problem, n, rng);
    ledger.initialization = counter.evaluate(problem, pop);
    monitor.observe(counter.used(), [&] { return pop.objectives(); });

    for (std::size_t iteration = 0; !counter.exhausted(); ++iteration) {
        ea::assign_rank_and_crowding(pop);
        const std::size_t value_index = attention::select_value(pop, rng);
        OuterIteration state;
        state.index = iteration;
        state.value = pop[value_index].decision;
        state.key = attention::build_key(attention::variance_vector(pop), cfg.query_dimension);
        state.initial_queries = attention::init_queries(pop, state.key, state.value, cfg.query_count, rng);

        std::size_t before = counter.used();
        state.generations = inner_query_search(state.initial_queries, state.key, state.value, problem, counter,
                                               tranche, cfg.variation, rng, &monitor, &pop);
        ledger.inner += counter.used() - before;

        for (const auto& gen : state.generations) {
            pop.append(gen.solutions);
        }
        pop = ea::environmental_selection(pop, n).population;

        if (!counter.exhausted()) {
            before = counter.used();
            ea::evolve(pop, problem, counter, tranche, cfg.variation, rng, &monitor);
            ledger.outer += counter.used() - before;
        }
        if (observer) {
            observer(state);
        }
    }

    ea::assign_rank_and_crowding(pop);
    auto record = monitor.finish(counter.used(), [&] { return pop.objectives(); });
    return {std::move(pop), std::move(record), ledger};
}

} // namespace lmoam
