#pragma once

#include "lmoam/problem.hpp"
#include "lmoam/types.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>

namespace lmoam {

/// Raised when an evaluation request does not fit in the remaining budget.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(std::size_t requested, std::size_t available);

    std::size_t requested() const noexcept { return requested_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t requested_;
    std::size_t available_;
};

/// Single owner of the function-evaluation budget for one run.
class EvaluationCounter {
public:
    explicit EvaluationCounter(std::size_t budget) : budget_(budget) {}

    std::size_t budget() const noexcept { return budget_; }
    std::size_t used() const noexcept { return used_; }
    std::size_t remaining() const noexcept { return budget_ - used_; }
    bool exhausted() const noexcept { return used_ >= budget_; }

    ObjectiveVector evaluate(const Problem& problem, std::span<const double> x);

    /// Evaluates one individual in place if it has no objective yet.
    void evaluate(const Problem& problem, Individual& ind);

    /// Evaluates every unevaluated member. Either all of them fit in the
    /// remaining budget or nothing is evaluated and BudgetExhausted is thrown.
    /// Returns the number of fresh evaluations.
    std::size_t evaluate(const Problem& problem, Population& pop);

private:
    void charge(std::size_t count);

    std::size_t budget_;
    std::size_t used_ = 0;
};

} // namespace lmoam
