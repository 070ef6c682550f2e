#include "lmoam/evaluation.hpp"

#include <string>

namespace lmoam {

BudgetExhausted::BudgetExhausted(std::size_t requested, std::size_t available)
    : std::runtime_error("evaluation budget exhausted: requested " + std::to_string(requested) + ", available "
                         + std::to_string(available)),
      requested_(requested), available_(available)
{
}

void EvaluationCounter::charge(std::size_t count)
{
    if (count > remaining()) {
        throw BudgetExhausted(count, remaining());
    }
    used_ += count;
}

ObjectiveVector EvaluationCounter::evaluate(const Problem& problem, std::span<const double> x)
{
    if (x.size() != problem.num_variables()) {
        throw std::invalid_argument("evaluate: decision vector has wrong dimension");
    }
    charge(1);
    return problem.evaluate(x);
}

void EvaluationCounter::evaluate(const Problem& problem, Individual& ind)
{
    if (ind.evaluated()) {
        return;
    }
    ind.objective = evaluate(problem, ind.decision);
}

std::size_t EvaluationCounter::evaluate(const Problem& problem, Population& pop)
{
    const std::size_t fresh = pop.count_unevaluated();
    if (fresh > remaining()) {
        throw BudgetExhausted(fresh, remaining());
    }
    for (auto& ind : pop) {
        evaluate(problem, ind);
    }
    return fresh;
}

} // namespace lmoam
