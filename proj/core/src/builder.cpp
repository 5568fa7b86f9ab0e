#include "trajsmooth/builder.hpp"

#include <cmath>
#include <string>

#include "trajsmooth/error.hpp"
#include "trajsmooth/evaluator.hpp"

namespace trajsmooth {

namespace {

// Nominal multiply-add counts per routine (all three axes).
constexpr std::uint64_t kBezierOps = 21;
constexpr std::uint64_t kBezierSeedOps = 9;
constexpr std::uint64_t kChainedSeedOps = 18;
constexpr std::uint64_t kBlockOps = 60;
constexpr std::uint64_t kBlendOps = 60;

void count(OpCounter* ops, std::uint64_t n) {
  if (ops != nullptr) {
    ops->add(n);
  }
}

Seed chained_seed(const CubicCoeffs& previous) {
  return {slope_at(previous, 1.0), curvature_at(previous, 1.0)};
}

}  // namespace

ScalarCubic apply_block(const Block4x5& block, std::span<const double, 5> input) noexcept {
  std::array<double, 4> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    double acc = block[r][0] * input[0];
    for (std::size_t c = 1; c < 5; ++c) {
      acc += block[r][c] * input[c];
    }
    out[r] = acc;
  }
  return {out[0], out[1], out[2], out[3]};
}

void BlendParams::validate() const {
  const auto in_open_unit = [](double w) { return w > 0.0 && w < 1.0; };
  if (!in_open_unit(alpha) || !in_open_unit(beta)) {
    throw Error(ErrorCode::InvalidArgument, "blend weights must lie in (0, 1), got alpha=" +
                                                std::to_string(alpha) +
                                                " beta=" + std::to_string(beta));
  }
}

bool BlendParams::interpolates_endpoints() const noexcept {
  return std::abs(alpha + beta - 1.0) <= 1e-15;
}

Seed compute_seed(const BezierCubic& group_bezier, const std::optional<CubicCoeffs>& previous,
                  SeedMode mode, std::size_t segment_index, double span) {
  if (mode == SeedMode::Chained) {
    if (previous) {
      return chained_seed(*previous);
    }
    if (segment_index > 1) {
      throw Error(ErrorCode::MissingPredecessor,
                  "chained segment " + std::to_string(segment_index) + " has no predecessor");
    }
  }
  const auto start = derivatives_at_zero(group_bezier);
  return {start.slope * span, start.curvature * (span * span)};
}

CubicCoeffs segment_coeffs(const Point3& start, const Point3& end, const Point3& slope,
                           const Point3& curvature, OpCounter* ops) {
  CubicCoeffs out;
  for (std::size_t i = 0; i < kAxes; ++i) {
    const std::array<double, 5> p{end[i], start[i], slope[i], curvature[i], 1.0};
    out.set_axis(i, ConstructionMatrix::apply(p));
  }
  count(ops, kBlockOps);
  return out;
}

CubicCoeffs blend_segment(const BezierCubic& group_bezier, std::size_t segment_index,
                          const CubicCoeffs& u, const BlendParams& blend, OpCounter* ops) {
  const double offset = static_cast<double>(segment_index - 1) * kSegmentSpan;
  const CubicCoeffs b = reparameterize_cubic(group_bezier.as_cubic(), offset, kSegmentSpan);
  count(ops, kBlendOps);
  return {
      blend.alpha * b.a + blend.beta * u.a,
      blend.alpha * b.b + blend.beta * u.b,
      blend.alpha * b.c + blend.beta * u.c,
      blend.alpha * b.d + blend.beta * u.d,
  };
}

std::size_t group_count(std::size_t point_count, GroupingMode grouping) {
  if (grouping == GroupingMode::Overlap) {
    if (point_count < 4 || point_count % 3 != 1) {
      throw Error(ErrorCode::IncompatibleLength,
                  "overlap grouping needs S = 1 (mod 3), got S=" + std::to_string(point_count));
    }
    return (point_count - 1) / 3;
  }
  if (point_count < 4 || point_count % 4 != 0) {
    throw Error(ErrorCode::IncompatibleLength,
                "disjoint grouping needs S = 0 (mod 4), got S=" + std::to_string(point_count));
  }
  return point_count / 4;
}

std::size_t group_first_point(const SegmentSpec& spec, GroupingMode grouping) noexcept {
  return spec.group_index * (grouping == GroupingMode::Overlap ? 3 : 4);
}

std::vector<SegmentSpec> plan_segments(std::size_t point_count, GroupingMode grouping,
                                       std::uint64_t trajectory_id) {
  const std::size_t groups = group_count(point_count, grouping);
  const std::size_t stride = grouping == GroupingMode::Overlap ? 3 : 4;
  std::vector<SegmentSpec> plan;
  plan.reserve(point_count - 1);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::size_t start = g * stride + k - 1;
      plan.push_back({trajectory_id, g, k, start, start + 1, SegmentKind::InGroup});
    }
    if (grouping == GroupingMode::Disjoint && g + 1 < groups) {
      const std::size_t start = g * stride + 3;
      plan.push_back({trajectory_id, g, 0, start, start + 1, SegmentKind::Bridge});
    }
  }
  return plan;
}

std::array<SegmentCurve, 3> build_group(std::span<const Point3, 4> points, SeedMode mode,
                                        const BlendParams& blend,
                                        const std::optional<CubicCoeffs>& previous,
                                        OpCounter* ops) {
  const BezierCubic bz = to_power_basis(points[0], points[1], points[2], points[3]);
  count(ops, kBezierOps);
  std::array<SegmentCurve, 3> out;
  std::optional<CubicCoeffs> prev = previous;
  for (std::size_t k = 1; k <= 3; ++k) {
    const Seed seed = compute_seed(bz, prev, mode, k, kSegmentSpan);
    count(ops, prev && mode == SeedMode::Chained ? kChainedSeedOps : kBezierSeedOps);
    SegmentCurve& seg = out[k - 1];
    seg.spec = {0, 0, k, k - 1, k, SegmentKind::InGroup};
    seg.u = segment_coeffs(points[k - 1], points[k], seed.slope, seed.curvature, ops);
    seg.v = blend_segment(bz, k, seg.u, blend, ops);
    prev = seg.u;
  }
  return out;
}

std::vector<SegmentCurve> build_trajectory(const Trajectory& trajectory, const BuildOptions& options,
                                           OpCounter* ops) {
  const auto& pts = trajectory.points;
  const std::size_t groups = group_count(pts.size(), options.grouping);
  const std::size_t stride = options.grouping == GroupingMode::Overlap ? 3 : 4;
  std::vector<SegmentCurve> curves;
  curves.reserve(pts.size() - 1);
  std::optional<CubicCoeffs> prev;
  const auto append = [&](SegmentCurve seg) {
    if (!seg.u.is_finite() || !seg.v.is_finite()) {
      throw Error(ErrorCode::NonFinite, "trajectory " + std::to_string(trajectory.id) +
                                            " segment " + std::to_string(curves.size()) +
                                            " overflowed (chained seeds grow geometrically)");
    }
    prev = seg.u;
    curves.push_back(seg);
  };
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t first = g * stride;
    const std::span<const Point3, 4> group_points(pts.data() + first, 4);
    for (SegmentCurve seg : build_group(group_points, options.seed, options.blend, prev, ops)) {
      seg.spec.trajectory_id = trajectory.id;
      seg.spec.group_index = g;
      seg.spec.start_point_index += first;
      seg.spec.end_point_index += first;
      append(seg);
    }
    if (options.grouping == GroupingMode::Disjoint && g + 1 < groups) {
      const std::size_t start = first + 3;
      const Seed seed = chained_seed(*prev);
      count(ops, kChainedSeedOps);
      SegmentCurve bridge;
      bridge.spec = {trajectory.id, g, 0, start, start + 1, SegmentKind::Bridge};
      bridge.u = segment_coeffs(pts[start], pts[start + 1], seed.slope, seed.curvature, ops);
      bridge.v = bridge.u;
      append(bridge);
    }
  }
  return curves;
}

std::vector<std::string> option_warnings(const BuildOptions& options) {
  std::vector<std::string> warnings;
  if (!options.blend.interpolates_endpoints()) {
    warnings.push_back("alpha + beta != 1: blended curves will not pass through group endpoints");
  }
  return warnings;
}

BuildResult build_range(const TrajectorySet& set, const BuildOptions& options, std::size_t first,
                        std::size_t last) {
  options.blend.validate();
  BuildResult result;
  result.curves.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) {
    result.curves.push_back(build_trajectory(set[i], options, &result.ops));
  }
  return result;
}

BuildResult build_set(const TrajectorySet& set, const BuildOptions& options) {
  BuildResult result = build_range(set, options, 0, set.trajectory_count());
  result.warnings = option_warnings(options);
  return result;
}

}  // namespace trajsmooth
