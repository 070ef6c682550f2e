#include "lmoam/types.hpp"

#include "lmoam/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lmoam {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.size() != upper_.size()) {
        throw std::invalid_argument("Bounds: lower and upper have different lengths");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) {
            throw std::invalid_argument("Bounds: lower >= upper for variable " + std::to_string(i));
        }
    }
}

bool Bounds::contains(std::span<const double> x) const
{
    if (x.size() != size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower_[i] || x[i] > upper_[i]) {
            return false;
        }
    }
    return true;
}

void Individual::invalidate() noexcept
{
    objective.reset();
    rank.reset();
    crowding.reset();
}

Population::Population(std::shared_ptr<const Bounds> bounds) : bounds_(std::move(bounds))
{
    if (!bounds_) {
        throw std::invalid_argument("Population: null bounds");
    }
}

Population::Population(std::shared_ptr<const Bounds> bounds, std::vector<Individual> members)
    : Population(std::move(bounds))
{
    members_ = std::move(members);
}

void Population::push_back(Individual ind)
{
    members_.push_back(std::move(ind));
}

void Population::append(const Population& other)
{
    append(std::span<const Individual>(other.members_));
}

void Population::append(std::span<const Individual> others)
{
    members_.insert(members_.end(), others.begin(), others.end());
}

bool Population::all_evaluated() const noexcept
{
    return count_unevaluated() == 0;
}

std::size_t Population::count_unevaluated() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(members_.begin(), members_.end(), [](const Individual& ind) { return !ind.evaluated(); }));
}

std::vector<ObjectiveVector> Population::objectives() const
{
    std::vector<ObjectiveVector> out;
    out.reserve(members_.size());
    for (const auto& ind : members_) {
        if (!ind.objective) {
            throw std::logic_error("Population::objectives: unevaluated individual");
        }
        out.push_back(*ind.objective);
    }
    return out;
}

Population Population::subset(std::span<const std::size_t> indices) const
{
    Population out(bounds_);
    out.members_.reserve(indices.size());
    for (auto i : indices) {
        out.members_.push_back(members_.at(i));
    }
    return out;
}

bool dominates(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: objective vectors of different length");
    }
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        if (a[i] < b[i]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

DecisionVector clamp(std::span<const double> x, const Bounds& bounds)
{
    DecisionVector out(x.begin(), x.end());
    clamp_in_place(out, bounds);
    return out;
}

void clamp_in_place(std::span<double> x, const Bounds& bounds)
{
    if (x.size() != bounds.size()) {
        throw std::invalid_argument("clamp: dimension mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], bounds.lower(i), bounds.upper(i));
    }
}

DecisionVector random_point(const Bounds& bounds, RngStream& rng)
{
    DecisionVector x(bounds.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.uniform(bounds.lower(i), bounds.upper(i));
    }
    return x;
}

} // namespace lmoam
