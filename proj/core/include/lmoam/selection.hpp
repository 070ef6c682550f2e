#pragma once

#include "lmoam/rng.hpp"
#include "lmoam/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lmoam::ea {

/// Survivors of (rank, crowding) truncation, with the rank and crowding each
/// survivor had in the full input set.
struct SurvivorSelection {
    std::vector<std::size_t> indices;
    std::vector<std::size_t> ranks;
    std::vector<double> crowding;
    bool underfilled = false;   // input was smaller than the target
};

/// NSGA-II survival: whole fronts in rank order, the splitting front truncated
/// by decreasing crowding distance (ties by lower index).
SurvivorSelection select_survivors(std::span<const ObjectiveVector> objectives, std::size_t target);

struct EnvironmentalSelection {
    Population population;
    bool underfilled = false;
};

/// Population wrapper around select_survivors; survivors carry rank and
/// crowding. A population smaller than the target is returned unchanged with
/// `underfilled` set.
EnvironmentalSelection environmental_selection(const Population& pop, std::size_t target);

/// Binary tournament on (rank ascending, crowding descending); members must
/// carry rank and crowding. Two contestants drawn with replacement; a full tie
/// goes to the first.
std::size_t binary_tournament(const Population& pop, RngStream& rng);

} // namespace lmoam::ea
