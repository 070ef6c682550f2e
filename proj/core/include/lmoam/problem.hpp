#pragma once

#include "lmoam/types.hpp"

#include <memory>
#include <span>
#include <string>

namespace lmoam {

class EvaluationCounter;

/// Box-constrained multiobjective minimization problem.
///
/// Objective evaluation is private: the only way to evaluate a decision vector
/// is through an EvaluationCounter, which keeps budget accounting exact.
/// Implementations must be pure and deterministic.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::string name() const = 0;
    virtual std::size_t num_objectives() const noexcept = 0;
    virtual std::size_t num_variables() const noexcept = 0;

    /// Shared so populations can hold the bounds without copying them.
    virtual std::shared_ptr<const Bounds> bounds() const noexcept = 0;

private:
    friend class EvaluationCounter;
    virtual ObjectiveVector evaluate(std::span<const double> x) const = 0;
};

} // namespace lmoam
