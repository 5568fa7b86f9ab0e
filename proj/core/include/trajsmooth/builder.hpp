#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trajsmooth/bezier.hpp"
#include "trajsmooth/model.hpp"

namespace trajsmooth {

using Block4x5 = std::array<std::array<double, 5>, 4>;

/// Applies a 4x5 block to (P_end, P_start, m, q, 1), accumulating each row
/// left to right. Shared by every construction route so that all of them
/// produce bitwise identical coefficients.
ScalarCubic apply_block(const Block4x5& block, std::span<const double, 5> input) noexcept;

/// The constant matrix T with (a, b, c, d) = T * (P_end, P_start, m, q, 1), where
/// m and q are the prescribed u'(0) and u''(0):
///   a = P_end - P_start - m - q/2,  b = q/2,  c = m,  d = P_start.
struct ConstructionMatrix {
  static constexpr Block4x5 entries{{
      {1.0, -1.0, -1.0, -0.5, 0.0},
      {0.0, 0.0, 0.0, 0.5, 0.0},
      {0.0, 0.0, 1.0, 0.0, 0.0},
      {0.0, 1.0, 0.0, 0.0, 0.0},
  }};

  static ScalarCubic apply(std::span<const double, 5> input) noexcept {
    return apply_block(entries, input);
  }
};

enum class SeedMode { BezierStart, Chained };
enum class GroupingMode { Overlap, Disjoint };

struct BlendParams {
  double alpha = 0.5;
  double beta = 0.5;

  /// Throws InvalidArgument unless both weights lie in (0, 1).
  void validate() const;
  /// Group endpoints are interpolated exactly only when alpha + beta = 1.
  bool interpolates_endpoints() const noexcept;
};

struct BuildOptions {
  GroupingMode grouping = GroupingMode::Overlap;
  SeedMode seed = SeedMode::BezierStart;
  BlendParams blend;
};

struct SegmentCurve {
  SegmentSpec spec;
  CubicCoeffs u;  // raw spline
  CubicCoeffs v;  // blended curve, equal to u for bridges
};

struct Seed {
  Point3 slope;
  Point3 curvature;
};

// Segment parameter span inside a group's Bezier parameter.
inline constexpr double kSegmentSpan = 1.0 / 3.0;

/// Seed (target u'(0), u''(0)) of a segment.
///
/// BezierStart, or Chained without a predecessor: the Bezier start derivatives
/// (C, 2B) expressed in the segment parameter, i.e. scaled by `span` and
/// `span`^2. Chained with a predecessor: (u'(1), u''(1)) of the predecessor.
/// Throws MissingPredecessor for Chained with segment_index > 1 and no
/// predecessor.
Seed compute_seed(const BezierCubic& group_bezier, const std::optional<CubicCoeffs>& previous,
                  SeedMode mode, std::size_t segment_index, double span = 1.0);

/// (a, b, c, d) per axis from T * (P_end, P_start, m, q, 1).
CubicCoeffs segment_coeffs(const Point3& start, const Point3& end, const Point3& slope,
                           const Point3& curvature, OpCounter* ops = nullptr);

/// v_k = alpha * b_k + beta * u_k, with b_k the group Bezier restricted to
/// s in [(k-1)/3, k/3] and rewritten over t in [0, 1].
CubicCoeffs blend_segment(const BezierCubic& group_bezier, std::size_t segment_index,
                          const CubicCoeffs& u, const BlendParams& blend, OpCounter* ops = nullptr);

/// Three blended segments over one group of four points. `previous` chains the
/// first segment in Chained mode.
std::array<SegmentCurve, 3> build_group(std::span<const Point3, 4> points, SeedMode mode,
                                        const BlendParams& blend,
                                        const std::optional<CubicCoeffs>& previous = std::nullopt,
                                        OpCounter* ops = nullptr);

/// Segment layout of a trajectory with S points. Throws IncompatibleLength.
///   Overlap:  S = 1 (mod 3), groups at 3g..3g+3, S-1 segments.
///   Disjoint: S = 0 (mod 4), groups at 4g..4g+3, 3S/4 in-group segments plus
///             S/4 - 1 bridges.
std::vector<SegmentSpec> plan_segments(std::size_t point_count, GroupingMode grouping,
                                       std::uint64_t trajectory_id = 0);

std::size_t group_count(std::size_t point_count, GroupingMode grouping);

/// Index of the first point of the group a segment belongs to.
std::size_t group_first_point(const SegmentSpec& spec, GroupingMode grouping) noexcept;

std::vector<SegmentCurve> build_trajectory(const Trajectory& trajectory, const BuildOptions& options,
                                           OpCounter* ops = nullptr);

struct BuildResult {
  std::vector<std::vector<SegmentCurve>> curves;  // one sequence per trajectory
  OpCounter ops;
  std::vector<std::string> warnings;
};

/// Serial build of trajectories [first, last) of the set.
BuildResult build_range(const TrajectorySet& set, const BuildOptions& options, std::size_t first,
                        std::size_t last);

BuildResult build_set(const TrajectorySet& set, const BuildOptions& options);

/// Warnings that depend only on the options (e.g. alpha + beta != 1).
std::vector<std::string> option_warnings(const BuildOptions& options);

}  // namespace trajsmooth
