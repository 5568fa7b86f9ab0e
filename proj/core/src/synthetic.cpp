#include "trajsmooth/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace trajsmooth {

TrajectorySet make_synthetic_set(std::size_t trajectories, std::size_t points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.2, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> pitch(0.01, 0.05);
  std::normal_distribution<double> jitter(0.0, 0.002);

  std::vector<Trajectory> raw(trajectories);
  for (std::size_t i = 0; i < trajectories; ++i) {
    const double r = radius(rng);
    const double phi = phase(rng);
    const double dz = pitch(rng);
    const double omega = 0.15 + 0.1 * r;
    raw[i].id = i;
    raw[i].points.reserve(points);
    for (std::size_t k = 0; k < points; ++k) {
      const double t = static_cast<double>(k);
      raw[i].points.push_back({r * std::cos(omega * t + phi) + jitter(rng),
                               r * std::sin(omega * t + phi) + jitter(rng), dz * t + jitter(rng)});
    }
  }
  return validate_set(std::move(raw));
}

TrajectorySet make_random_set(std::size_t trajectories, std::size_t points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Trajectory> raw(trajectories);
  for (std::size_t i = 0; i < trajectories; ++i) {
    raw[i].id = i;
    raw[i].points.reserve(points);
    for (std::size_t k = 0; k < points; ++k) {
      const double x = coord(rng);
      const double y = coord(rng);
      const double z = coord(rng);
      raw[i].points.push_back({x, y, z});
    }
  }
  return validate_set(std::move(raw));
}

}  // namespace trajsmooth
