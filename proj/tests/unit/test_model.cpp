#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "trajsmooth/error.hpp"
#include "trajsmooth/model.hpp"

using namespace trajsmooth;

namespace {

Trajectory line_trajectory(std::uint64_t id, std::size_t n) {
  Trajectory t{id, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = static_cast<double>(i);
    t.points.push_back({v, 2.0 * v, -v});
  }
  return t;
}

ErrorCode code_of(std::vector<Trajectory> raw) {
  try {
    validate_set(std::move(raw));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected validate_set to throw");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validate_set accepts the minimal valid input") {
  const TrajectorySet set = validate_set(std::vector{line_trajectory(0, 4)});
  CHECK(set.trajectory_count() == 1);
  CHECK(set.points_per_trajectory() == 4);
}

TEST_CASE("validate_set rejects invariant violations") {
  CHECK(code_of({}) == ErrorCode::Empty);
  CHECK(code_of({line_trajectory(0, 4), line_trajectory(1, 7)}) == ErrorCode::NonUniformLength);
  CHECK(code_of({line_trajectory(0, 3)}) == ErrorCode::TooShort);

  auto bad = line_trajectory(0, 5);
  bad.points[2].y = std::numeric_limits<double>::quiet_NaN();
  CHECK(code_of({bad}) == ErrorCode::NonFinite);
  bad.points[2].y = std::numeric_limits<double>::infinity();
  CHECK(code_of({bad}) == ErrorCode::NonFinite);
}

TEST_CASE("validate_set is idempotent") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Trajectory> raw(1 + trial % 5);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      raw[i].id = i * 7;
      for (int k = 0; k < 4 + trial; ++k) raw[i].points.push_back({d(rng), d(rng), d(rng)});
    }
    const TrajectorySet once = validate_set(raw);
    const TrajectorySet twice = validate_set(once.trajectories());
    CHECK(once == twice);
  }
}

TEST_CASE("cubic helpers evaluate values and derivatives") {
  const ScalarCubic p{1.0, -2.0, 3.0, 4.0};
  CHECK(value_at(p, 0.0) == 4.0);
  CHECK(value_at(p, 1.0) == 6.0);
  CHECK(slope_at(p, 0.0) == 3.0);
  CHECK(slope_at(p, 1.0) == doctest::Approx(3.0 - 4.0 + 3.0));
  CHECK(curvature_at(p, 0.0) == -4.0);
  CHECK(curvature_at(p, 1.0) == 2.0);

  CubicCoeffs c;
  c.set_axis(1, p);
  CHECK(c.axis(1) == p);
  CHECK(value_at(c, 1.0) == Point3{0.0, 6.0, 0.0});
}
