#include "lmoam/nsga2.hpp"

#include "lmoam/selection.hpp"
#include "lmoam/sorting.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmoam::ea {

void Nsga2Config::validate() const
{
    if (population_size < 2 || population_size % 2 != 0) {
        throw std::invalid_argument("NSGA-II population size must be even and at least 2");
    }
    if (total_budget < population_size) {
        throw std::invalid_argument("NSGA-II budget is smaller than the population size");
    }
    if (checkpoint_interval == 0) {
        throw std::invalid_argument("checkpoint_interval must be positive");
    }
    variation.validate();
}

Population random_population(const Problem& problem, std::size_t n, RngStream& rng)
{
    Population pop(problem.bounds());
    for (std::size_t i = 0; i < n; ++i) {
        pop.push_back(Individual(random_point(pop.bounds(), rng)));
    }
    return pop;
}

Population make_offspring(const Population& pop, std::size_t count, const VariationConfig& cfg, RngStream& rng)
{
    Population offspring(pop.bounds_ptr());
    const auto& bounds = pop.bounds();
    while (offspring.size() < count) {
        const auto& p1 = pop[binary_tournament(pop, rng)].decision;
        const auto& p2 = pop[binary_tournament(pop, rng)].decision;
        auto [c1, c2] = sbx_crossover(p1, p2, cfg, bounds, rng);
        offspring.push_back(Individual(polynomial_mutation(c1, cfg, bounds, rng)));
        if (offspring.size() < count) {
            offspring.push_back(Individual(polynomial_mutation(c2, cfg, bounds, rng)));
        }
    }
    return offspring;
}

void evolve(Population& pop, const Problem& problem, EvaluationCounter& counter, std::size_t evaluations,
            const VariationConfig& cfg, RngStream& rng, ProgressMonitor* monitor)
{
    const std::size_t n = pop.size();
    std::size_t left = std::min(evaluations, counter.remaining());
    while (left > 0) {
        const std::size_t count = std::min(n, left);
        Population merged = make_offspring(pop, count, cfg, rng);
        counter.evaluate(problem, merged);
        left -= count;
        merged.append(pop);
        pop = environmental_selection(merged, n).population;
        if (monitor) {
            monitor->observe(counter.used(), [&] { return pop.objectives(); });
        }
    }
}

RunResult nsga2_run(const Problem& problem, const Nsga2Config& cfg, std::uint64_t seed,
                    const lsmop::ReferenceFront* reference)
{
    cfg.validate();
    RngStream rng(seed);
    EvaluationCounter counter(cfg.total_budget);
    ProgressMonitor monitor(cfg.total_budget, cfg.checkpoint_interval, reference);
    monitor.start();

    Population pop = random_population(problem, cfg.population_size, rng);
    counter.evaluate(problem, pop);
    assign_rank_and_crowding(pop);
    monitor.observe(counter.used(), [&] { return pop.objectives(); });

    evolve(pop, problem, counter, counter.remaining(), cfg.variation, rng, &monitor);

    auto record = monitor.finish(counter.used(), [&] { return pop.objectives(); });
    return {std::move(pop), std::move(record)};
}

} // namespace lmoam::ea
