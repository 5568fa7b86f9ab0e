#include "trajsmooth/bezier.hpp"

#include <string>

#include "trajsmooth/error.hpp"

namespace trajsmooth {

BezierCubic to_power_basis(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4) {
  if (!p1.is_finite() || !p2.is_finite() || !p3.is_finite() || !p4.is_finite()) {
    throw Error(ErrorCode::NonFinite, "Bezier control point is not finite");
  }
  BezierCubic bz;
  for (std::size_t i = 0; i < kAxes; ++i) {
    bz.A[i] = -p1[i] + 3.0 * p2[i] - 3.0 * p3[i] + p4[i];
    bz.B[i] = 3.0 * p1[i] - 6.0 * p2[i] + 3.0 * p3[i];
    bz.C[i] = -3.0 * p1[i] + 3.0 * p2[i];
    bz.D[i] = p1[i];
  }
  return bz;
}

Point3 eval(const BezierCubic& bz, double s) {
  constexpr double kSlack = 1e-12;
  if (!(s >= -kSlack && s <= 1.0 + kSlack)) {
    throw Error(ErrorCode::DomainError, "Bezier parameter " + std::to_string(s) + " outside [0, 1]");
  }
  return value_at(bz.as_cubic(), s);
}

StartDerivatives derivatives_at_zero(const BezierCubic& bz) noexcept {
  return {bz.C, 2.0 * bz.B};
}

}  // namespace trajsmooth
