#include "trajsmooth/model.hpp"

#include <cmath>
#include <string>

#include "trajsmooth/error.hpp"

namespace trajsmooth {

bool Point3::is_finite() const noexcept {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

TrajectorySet validate_set(std::vector<Trajectory> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::Empty, "trajectory set contains no trajectories");
  }
  const std::size_t s = raw.front().points.size();
  for (const auto& tr : raw) {
    if (tr.points.size() != s) {
      throw Error(ErrorCode::NonUniformLength,
                  "trajectory " + std::to_string(tr.id) + " has " +
                      std::to_string(tr.points.size()) + " points, expected " + std::to_string(s));
    }
  }
  if (s < 4) {
    throw Error(ErrorCode::TooShort,
                "trajectories need at least 4 points, got " + std::to_string(s));
  }
  for (const auto& tr : raw) {
    for (std::size_t i = 0; i < tr.points.size(); ++i) {
      if (!tr.points[i].is_finite()) {
        throw Error(ErrorCode::NonFinite, "trajectory " + std::to_string(tr.id) + " point " +
                                              std::to_string(i) + " is not finite");
      }
    }
  }
  return TrajectorySet(std::move(raw), s);
}

double value_at(const ScalarCubic& p, double t) noexcept {
  return ((p.a * t + p.b) * t + p.c) * t + p.d;
}

double slope_at(const ScalarCubic& p, double t) noexcept {
  return (3.0 * p.a * t + 2.0 * p.b) * t + p.c;
}

double curvature_at(const ScalarCubic& p, double t) noexcept {
  return 6.0 * p.a * t + 2.0 * p.b;
}

namespace {

template <typename F>
Point3 per_axis(const CubicCoeffs& p, double t, F f) noexcept {
  return {f(p.axis(0), t), f(p.axis(1), t), f(p.axis(2), t)};
}

}  // namespace

Point3 value_at(const CubicCoeffs& p, double t) noexcept {
  return per_axis(p, t, [](const ScalarCubic& s, double u) { return value_at(s, u); });
}

Point3 slope_at(const CubicCoeffs& p, double t) noexcept {
  return per_axis(p, t, [](const ScalarCubic& s, double u) { return slope_at(s, u); });
}

Point3 curvature_at(const CubicCoeffs& p, double t) noexcept {
  return per_axis(p, t, [](const ScalarCubic& s, double u) { return curvature_at(s, u); });
}

}  // namespace trajsmooth
