#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace lmoam {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Box constraints; lower[i] < upper[i] for every variable.
class Bounds {
public:
    Bounds(std::vector<double> lower, std::vector<double> upper);

    std::size_t size() const noexcept { return lower_.size(); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    bool contains(std::span<const double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// A decision vector with its (optional) cached evaluation.
///
/// `objective` is empty until the individual has been evaluated exactly once
/// through an EvaluationCounter. Rank and crowding are only meaningful for the
/// population they were computed in.
struct Individual {
    DecisionVector decision;
    std::optional<ObjectiveVector> objective;
    std::optional<std::size_t> rank;
    std::optional<double> crowding;

    Individual() = default;
    explicit Individual(DecisionVector x) : decision(std::move(x)) {}

    bool evaluated() const noexcept { return objective.has_value(); }

    /// Drops the cached objective, rank and crowding.
    void invalidate() noexcept;
};

/// Ordered multiset of individuals sharing one problem's bounds.
class Population {
public:
    explicit Population(std::shared_ptr<const Bounds> bounds);
    Population(std::shared_ptr<const Bounds> bounds, std::vector<Individual> members);

    const std::shared_ptr<const Bounds>& bounds_ptr() const noexcept { return bounds_; }
    const Bounds& bounds() const noexcept { return *bounds_; }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    Individual& operator[](std::size_t i) { return members_[i]; }
    const Individual& operator[](std::size_t i) const { return members_[i]; }

    auto begin() noexcept { return members_.begin(); }
    auto end() noexcept { return members_.end(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    std::vector<Individual>& members() noexcept { return members_; }
    const std::vector<Individual>& members() const noexcept { return members_; }

    void push_back(Individual ind);
    void append(const Population& other);
    void append(std::span<const Individual> others);

    bool all_evaluated() const noexcept;
    std::size_t count_unevaluated() const noexcept;

    /// Objective vectors of every member; throws if any member is unevaluated.
    std::vector<ObjectiveVector> objectives() const;

    /// Subset in the given index order.
    Population subset(std::span<const std::size_t> indices) const;

private:
    std::shared_ptr<const Bounds> bounds_;
    std::vector<Individual> members_;
};

/// Pareto dominance for minimization: a <= b everywhere and a < b somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Componentwise projection onto the box.
DecisionVector clamp(std::span<const double> x, const Bounds& bounds);
void clamp_in_place(std::span<double> x, const Bounds& bounds);

/// Uniform random point in the box.
class RngStream;
DecisionVector random_point(const Bounds& bounds, RngStream& rng);

} // namespace lmoam
