#pragma once

#include "lmoam/lsmop.hpp"
#include "lmoam/rng.hpp"
#include "lmoam/types.hpp"

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace lmoam::lsmop {

inline constexpr std::size_t kDefaultReferencePoints = 10000;

/// Sample of a problem's true Pareto front.
struct ReferenceFront {
    std::vector<ObjectiveVector> points;
    std::string descriptor;   // e.g. "LSMOP1/m3/n10000/seed0"

    std::size_t size() const noexcept { return points.size(); }
    std::size_t num_objectives() const noexcept { return points.empty() ? 0 : points.front().size(); }
};

/// Exactly n_points mutually nondominated points of the Pareto front.
///
/// A structured lattice is used first (Das-Dennis simplex lattice for the
/// linear and spherical fronts, a regular grid over the position variables for
/// the disconnected front); the points the lattice cannot provide are drawn
/// from the seeded stream. Throws std::invalid_argument if n_points < m.
ReferenceFront sample_reference_front(int id, std::size_t m, std::size_t n_points, RngStream& rng);

/// Number of points of the Das-Dennis lattice with `divisions` per axis.
std::size_t simplex_lattice_size(std::size_t m, std::size_t divisions);

/// Breakpoints [a0, a1] U [b0, b1] of x~(1 + sin(3 pi x)) restricted to its
/// nondominated part on [0,1], as used by the disconnected (LSMOP9) front.
std::array<double, 4> disconnected_intervals();

/// CSV with header f1..fm, one objective vector per line, 17 significant digits.
void write_front_csv(const std::filesystem::path& path, const std::vector<ObjectiveVector>& points);

/// Reads a CSV of objective vectors; a leading non-numeric header row is skipped.
/// Throws std::runtime_error on unreadable files or ragged rows.
std::vector<ObjectiveVector> read_front_csv(const std::filesystem::path& path);

} // namespace lmoam::lsmop
