#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "trajsmooth/bezier.hpp"
#include "trajsmooth/error.hpp"

using namespace trajsmooth;

namespace {

Point3 on_x(double v) { return {v, 0.0, 0.0}; }

BezierCubic scalar_bezier(double p1, double p2, double p3, double p4) {
  return to_power_basis(on_x(p1), on_x(p2), on_x(p3), on_x(p4));
}

}  // namespace

TEST_CASE("to_power_basis: degenerate polygon is constant") {
  const Point3 p{1.5, -2.0, 0.25};
  const BezierCubic bz = to_power_basis(p, p, p, p);
  CHECK(bz.A == Point3{});
  CHECK(bz.B == Point3{});
  CHECK(bz.C == Point3{});
  CHECK(bz.D == p);
}

TEST_CASE("to_power_basis: straight line and pure cube") {
  // Oracle first: the Bernstein forms of these polygons equal s and s^3 at
  // 1000 samples, which fixes the expected monomial coefficients.
  for (int i = 0; i <= 1000; ++i) {
    const double s = i / 1000.0;
    CHECK(oracle::bernstein({0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}, s) == doctest::Approx(s).epsilon(1e-14));
    CHECK(oracle::bernstein({0.0, 0.0, 0.0, 1.0}, s) == doctest::Approx(s * s * s).epsilon(1e-14));
  }

  const BezierCubic line = scalar_bezier(0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0);
  CHECK(line.A.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(line.B.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(line.C.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(line.D.x == 0.0);
  CHECK(eval(line, 0.25).x == doctest::Approx(0.25).epsilon(1e-15));

  const BezierCubic cube = scalar_bezier(0.0, 0.0, 0.0, 1.0);
  CHECK(cube.A.x == 1.0);
  CHECK(cube.B.x == 0.0);
  CHECK(cube.C.x == 0.0);
  CHECK(cube.D.x == 0.0);
}

TEST_CASE("eval: endpoints and domain") {
  std::mt19937_64 rng(11);
  const BezierCubic bz = to_power_basis(oracle::random_point(rng), oracle::random_point(rng),
                                        oracle::random_point(rng), oracle::random_point(rng));
  CHECK(eval(bz, 0.0) == bz.D);
  const Point3 sum = bz.A + bz.B + bz.C + bz.D;
  CHECK(eval(bz, 1.0).x == doctest::Approx(sum.x).epsilon(1e-15));
  CHECK_NOTHROW(eval(bz, 1.0 + 5e-13));
  CHECK_NOTHROW(eval(bz, -5e-13));
  CHECK_THROWS_AS(eval(bz, 1.0 + 1e-9), Error);
  CHECK_THROWS_AS(eval(bz, -0.1), Error);
}

TEST_CASE("derivatives_at_zero reads C and 2B") {
  const BezierCubic flat{};
  CHECK(derivatives_at_zero(flat).slope == Point3{});
  CHECK(derivatives_at_zero(flat).curvature == Point3{});

  const auto line = derivatives_at_zero(scalar_bezier(0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0));
  CHECK(line.slope.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(line.curvature.x == doctest::Approx(0.0).epsilon(1e-15));

  const auto cube = derivatives_at_zero(scalar_bezier(0.0, 0.0, 0.0, 1.0));
  CHECK(cube.slope.x == 0.0);
  CHECK(cube.curvature.x == 0.0);

  // Against finite differences of the Bernstein oracle at s = 0 (one-sided
  // via symmetric extension is not valid, so use a small interior offset).
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 4> p{};
    for (auto& v : p) v = std::uniform_real_distribution<double>(-1, 1)(rng);
    const auto d = derivatives_at_zero(scalar_bezier(p[0], p[1], p[2], p[3]));
    const double h = 1e-4;
    const auto f = [&](double s) { return oracle::bernstein(p, s); };
    const double slope_fd = (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
    const double curv_fd = (2.0 * f(0.0) - 5.0 * f(h) + 4.0 * f(2.0 * h) - f(3.0 * h)) / (h * h);
    CHECK(d.slope.x == doctest::Approx(slope_fd).epsilon(1e-6));
    CHECK(d.curvature.x == doctest::Approx(curv_fd).epsilon(1e-3));
  }
}

TEST_CASE("to_power_basis matches Bernstein evaluation on random polygons") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Point3, 4> p;
    for (auto& q : p) q = oracle::random_point(rng, -100.0, 100.0);
    const BezierCubic bz = to_power_basis(p[0], p[1], p[2], p[3]);
    double scale = 1.0;
    for (const auto& q : p) scale = std::max(scale, oracle::max_abs(q));
    for (int i = 0; i <= 999; ++i) {
      const double s = i / 999.0;
      const Point3 got = eval(bz, s);
      for (std::size_t a = 0; a < kAxes; ++a) {
        const double want = oracle::bernstein({p[0][a], p[1][a], p[2][a], p[3][a]}, s);
        REQUIRE(std::abs(got[a] - want) <= 1e-12 * (1.0 + scale));
      }
    }
    const Point3 end = eval(bz, 1.0);
    for (std::size_t a = 0; a < kAxes; ++a) {
      CHECK(std::abs(end[a] - p[3][a]) <= 1e-13 * (1.0 + scale));
    }
    CHECK(eval(bz, 0.0) == p[0]);
  }
}

TEST_CASE("to_power_basis commutes with translation and scaling") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Point3, 4> p;
    for (auto& q : p) q = oracle::random_point(rng);
    const Point3 shift = oracle::random_point(rng, -10.0, 10.0);
    const double lambda = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
    const BezierCubic base = to_power_basis(p[0], p[1], p[2], p[3]);
    const BezierCubic moved = to_power_basis(p[0] * lambda + shift, p[1] * lambda + shift,
                                             p[2] * lambda + shift, p[3] * lambda + shift);
    for (std::size_t a = 0; a < kAxes; ++a) {
      // Translation only affects the constant term; scaling scales everything.
      CHECK(moved.A[a] == doctest::Approx(lambda * base.A[a]).epsilon(1e-12).scale(10));
      CHECK(moved.B[a] == doctest::Approx(lambda * base.B[a]).epsilon(1e-12).scale(10));
      CHECK(moved.C[a] == doctest::Approx(lambda * base.C[a]).epsilon(1e-12).scale(10));
      CHECK(moved.D[a] == doctest::Approx(lambda * base.D[a] + shift[a]).epsilon(1e-12));
    }
  }
}

TEST_CASE("to_power_basis rejects non-finite input") {
  const Point3 nan{std::nan(""), 0.0, 0.0};
  CHECK_THROWS_AS(to_power_basis(nan, {}, {}, {}), Error);
}
