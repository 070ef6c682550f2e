#pragma once

#include "lmoam/evaluation.hpp"
#include "lmoam/problem.hpp"
#include "lmoam/reference_front.hpp"
#include "lmoam/rng.hpp"
#include "lmoam/run_record.hpp"
#include "lmoam/variation.hpp"

#include <cstddef>
#include <cstdint>

namespace lmoam {

/// Final population and convergence log of one optimizer run.
struct RunResult {
    Population population;
    RunRecord record;
};

namespace ea {

struct Nsga2Config {
    std::size_t population_size = 300;
    std::size_t total_budget = 100000;
    VariationConfig variation;
    std::size_t checkpoint_interval = 1000;

    void validate() const;
};

/// n random points inside the bounds, unevaluated.
Population random_population(const Problem& problem, std::size_t n, RngStream& rng);

/// Offspring by binary tournament, SBX and polynomial mutation; `pop` must
/// carry rank and crowding. Returns exactly `count` unevaluated individuals.
Population make_offspring(const Population& pop, std::size_t count, const VariationConfig& cfg, RngStream& rng);

/// Generational NSGA-II on an evaluated, ranked population, spending exactly
/// min(evaluations, budget remaining) evaluations. The last generation is
/// shortened to fit. The population size is preserved.
void evolve(Population& pop, const Problem& problem, EvaluationCounter& counter, std::size_t evaluations,
            const VariationConfig& cfg, RngStream& rng, ProgressMonitor* monitor);

/// Complete NSGA-II baseline run. Throws std::invalid_argument for an odd
/// population size or a budget below the population size. `reference` feeds
/// the IGD column of the checkpoints and may be null.
RunResult nsga2_run(const Problem& problem, const Nsga2Config& cfg, std::uint64_t seed,
                    const lsmop::ReferenceFront* reference = nullptr);

} // namespace ea
} // namespace lmoam
