#pragma once

#include "lmoam/reference_front.hpp"
#include "lmoam/types.hpp"

#include <span>
#include <string>

namespace lmoam::indicators {

struct IndicatorResult {
    std::string name;   // "IGD" or "HV"
    double value = 0.0;
    std::size_t front_size = 0;
    std::string reference_descriptor;
};

/// Mean Euclidean distance from each reference point to its nearest front point.
/// Throws std::invalid_argument on an empty set or an objective-count mismatch.
double igd(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference);
double igd(std::span<const ObjectiveVector> front, const lsmop::ReferenceFront& reference);

/// Exact hypervolume dominated by `front` and bounded by `reference_point`,
/// for m = 2 (sweep) or m = 3 (dimension sweep over f3 with a 2-D staircase).
/// Points not strictly better than the reference point in every objective
/// are discarded first; an empty remainder gives 0.
double hv(std::span<const ObjectiveVector> front, std::span<const double> reference_point);

/// Objectives rescaled per dimension by the reference front's ideal and nadir
/// points, then hv with reference point (1.1, ..., 1.1). Throws
/// std::invalid_argument naming the dimension when ideal == nadir.
double normalized_hv(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference);
double normalized_hv(std::span<const ObjectiveVector> front, const lsmop::ReferenceFront& reference);

inline constexpr double kNormalizedReference = 1.1;

} // namespace lmoam::indicators
