#pragma once

#include <cstddef>
#include <cstdint>

#include "trajsmooth/model.hpp"

namespace trajsmooth {

/// Deterministic smooth test trajectories: perturbed helices advancing along
/// z, with per-trajectory radius, phase and pitch drawn from `seed`.
TrajectorySet make_synthetic_set(std::size_t trajectories, std::size_t points, std::uint64_t seed);

/// Uniformly random points in the unit cube (worst case for smoothing).
TrajectorySet make_random_set(std::size_t trajectories, std::size_t points, std::uint64_t seed);

}  // namespace trajsmooth
