#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace trajsmooth {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](std::size_t axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
  double& operator[](std::size_t axis) { return axis == 0 ? x : (axis == 1 ? y : z); }

  bool is_finite() const noexcept;

  friend bool operator==(const Point3&, const Point3&) = default;

  Point3& operator+=(const Point3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Point3& operator-=(const Point3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Point3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

  friend Point3 operator+(Point3 a, const Point3& b) { return a += b; }
  friend Point3 operator-(Point3 a, const Point3& b) { return a -= b; }
  friend Point3 operator*(Point3 a, double s) { return a *= s; }
  friend Point3 operator*(double s, Point3 a) { return a *= s; }
};

inline constexpr std::size_t kAxes = 3;

struct Trajectory {
  std::uint64_t id = 0;
  std::vector<Point3> points;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// M trajectories sharing a point count S. Only obtainable through
/// validate_set(), so every instance satisfies S >= 4, M >= 1 and finite
/// coordinates.
class TrajectorySet {
 public:
  std::span<const Trajectory> trajectories() const { return trajectories_; }
  const Trajectory& operator[](std::size_t i) const { return trajectories_[i]; }
  std::size_t trajectory_count() const { return trajectories_.size(); }
  std::size_t points_per_trajectory() const { return points_per_trajectory_; }

  friend bool operator==(const TrajectorySet&, const TrajectorySet&) = default;

 private:
  friend TrajectorySet validate_set(std::vector<Trajectory> raw);

  TrajectorySet(std::vector<Trajectory> trajectories, std::size_t s)
      : trajectories_(std::move(trajectories)), points_per_trajectory_(s) {}

  std::vector<Trajectory> trajectories_;
  std::size_t points_per_trajectory_ = 0;
};

/// Throws Error with Empty, TooShort, NonUniformLength or NonFinite.
TrajectorySet validate_set(std::vector<Trajectory> raw);

inline TrajectorySet validate_set(std::span<const Trajectory> raw) {
  return validate_set(std::vector<Trajectory>(raw.begin(), raw.end()));
}

/// Scalar cubic a*t^3 + b*t^2 + c*t + d on t in [0, 1].
struct ScalarCubic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  friend bool operator==(const ScalarCubic&, const ScalarCubic&) = default;
};

/// Vector-valued cubic, one ScalarCubic per axis stored coefficient-major.
struct CubicCoeffs {
  Point3 a;
  Point3 b;
  Point3 c;
  Point3 d;

  ScalarCubic axis(std::size_t i) const { return {a[i], b[i], c[i], d[i]}; }
  void set_axis(std::size_t i, const ScalarCubic& s) {
    a[i] = s.a;
    b[i] = s.b;
    c[i] = s.c;
    d[i] = s.d;
  }
  bool is_finite() const noexcept {
    return a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite();
  }

  friend bool operator==(const CubicCoeffs&, const CubicCoeffs&) = default;
};

// Horner evaluation and derivatives; used by validation code and tests.
double value_at(const ScalarCubic& p, double t) noexcept;
double slope_at(const ScalarCubic& p, double t) noexcept;
double curvature_at(const ScalarCubic& p, double t) noexcept;
Point3 value_at(const CubicCoeffs& p, double t) noexcept;
Point3 slope_at(const CubicCoeffs& p, double t) noexcept;
Point3 curvature_at(const CubicCoeffs& p, double t) noexcept;

enum class SegmentKind { InGroup, Bridge };

struct SegmentSpec {
  std::uint64_t trajectory_id = 0;
  std::size_t group_index = 0;
  // 1..3 inside a group, 0 for a bridge between two disjoint groups.
  std::size_t segment_index = 1;
  std::size_t start_point_index = 0;
  std::size_t end_point_index = 1;
  SegmentKind kind = SegmentKind::InGroup;

  friend bool operator==(const SegmentSpec&, const SegmentSpec&) = default;
};

/// Floating-point multiply-add tally used for complexity checks.
struct OpCounter {
  std::uint64_t multiply_adds = 0;

  void add(std::uint64_t n) noexcept { multiply_adds += n; }
  OpCounter& operator+=(const OpCounter& o) noexcept {
    multiply_adds += o.multiply_adds;
    return *this;
  }
};

}  // namespace trajsmooth
