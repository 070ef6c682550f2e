#pragma once

#include "lmoam/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lmoam::ea {

/// Ranked nondominated fronts; front 0 is the nondominated set. Indices inside
/// each front are ascending.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;

    std::size_t rank_count() const noexcept { return fronts.size(); }
    /// Rank of every input index.
    std::vector<std::size_t> ranks(std::size_t n) const;
};

/// Deb's fast nondominated sort, O(m n^2). Throws on empty or ragged input.
FrontPartition nondominated_sort(std::span<const ObjectiveVector> objectives);

/// Indices of the nondominated members (front 0 only), ascending.
std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> objectives);

/// NSGA-II crowding distance of one front.
///
/// Fronts of at most two points are all boundary (+inf). Otherwise each
/// objective with nonzero range marks every point holding its minimum or
/// maximum value as boundary, and adds (next - prev) / range to the others,
/// where prev/next are the nearest strictly smaller/larger values. Objectives
/// with zero range contribute nothing. Defining neighbours by value rather
/// than by sorted position makes the result independent of input order.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

/// Sorts the population and stores rank and crowding on every member.
FrontPartition assign_rank_and_crowding(Population& pop);

} // namespace lmoam::ea
