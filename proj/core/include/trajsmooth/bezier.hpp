#pragma once

#include "trajsmooth/model.hpp"

namespace trajsmooth {

/// Cubic Bezier of a four-point control polygon in power basis:
/// b(s) = A s^3 + B s^2 + C s + D, s in [0, 1].
struct BezierCubic {
  Point3 A;
  Point3 B;
  Point3 C;
  Point3 D;

  CubicCoeffs as_cubic() const { return {A, B, C, D}; }

  friend bool operator==(const BezierCubic&, const BezierCubic&) = default;
};

/// Bernstein-to-monomial conversion. Throws NonFinite on bad input.
BezierCubic to_power_basis(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4);

/// Horner evaluation; s may overshoot [0, 1] by at most 1e-12 (DomainError otherwise).
Point3 eval(const BezierCubic& bz, double s);

struct StartDerivatives {
  Point3 slope;      // b'(0) = C
  Point3 curvature;  // b''(0) = 2B
};

StartDerivatives derivatives_at_zero(const BezierCubic& bz) noexcept;

}  // namespace trajsmooth
