#pragma once

#include "lmoam/rng.hpp"
#include "lmoam/types.hpp"

#include <optional>
#include <span>
#include <utility>

namespace lmoam::ea {

/// Real-coded variation settings. A missing mutation probability means 1/d.
struct VariationConfig {
    double crossover_probability = 1.0;
    double crossover_distribution_index = 20.0;
    std::optional<double> mutation_probability;
    double mutation_distribution_index = 20.0;

    /// Throws std::invalid_argument when a probability is outside [0,1] or an
    /// index is not positive.
    void validate() const;
    double mutation_probability_for(std::size_t d) const;
};

/// Simulated binary crossover (bounded form, per-variable probability 1/2,
/// random child swap). Offspring are clamped into the bounds.
std::pair<DecisionVector, DecisionVector> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                                        const VariationConfig& cfg, const Bounds& bounds,
                                                        RngStream& rng);

/// Bounded polynomial mutation; each variable mutates with the configured
/// probability.
DecisionVector polynomial_mutation(std::span<const double> x, const VariationConfig& cfg, const Bounds& bounds,
                                   RngStream& rng);

} // namespace lmoam::ea
