#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "trajsmooth/model.hpp"

namespace trajsmooth {

/// 4 x (V+1) matrix of tick powers; column j is ((j/V)^3, (j/V)^2, j/V, 1).
class PowerMatrix {
 public:
  explicit PowerMatrix(std::size_t ticks);

  std::size_t ticks() const noexcept { return ticks_; }
  std::size_t columns() const noexcept { return ticks_ + 1; }
  double operator()(std::size_t row, std::size_t col) const { return entries_[row * columns() + col]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(entries_).subspan(r * columns(), columns());
  }

 private:
  std::size_t ticks_;
  std::vector<double> entries_;
};

/// Process-wide memoized power matrix. At most one construction per distinct V,
/// also under concurrent first access. Throws InvalidArgument for V = 0.
std::shared_ptr<const PowerMatrix> power_matrix(std::size_t ticks);

/// Number of PowerMatrix constructions performed by power_matrix().
std::uint64_t power_matrix_constructions() noexcept;

/// Drops all cached matrices and zeroes the construction counter.
void reset_power_matrix_cache();

enum class Layout { Eulerian, Lagrangian };

// Eulerian: one row per trajectory at a fixed segment position.
// Lagrangian: one row per segment of a single trajectory.
struct CoeffMatrix {
  Layout layout = Layout::Lagrangian;
  std::vector<ScalarCubic> rows;
};

/// rows x (V+1) values, row-major.
class SampleGrid {
 public:
  SampleGrid() = default;
  SampleGrid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values_).subspan(r * cols_, cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// E = C * W with the dot product accumulated t^3 term first. Adds
/// 4 * rows * (V+1) to `ops` when given. Throws ShapeMismatch on an empty C.
SampleGrid eval_batch(const CoeffMatrix& coeffs, const PowerMatrix& powers, OpCounter* ops = nullptr);

/// Coefficients of q(t) = p(offset + scale * t).
ScalarCubic reparameterize_cubic(const ScalarCubic& p, double offset, double scale) noexcept;
CubicCoeffs reparameterize_cubic(const CubicCoeffs& p, double offset, double scale) noexcept;

struct StitchResult {
  std::vector<double> values;
  // Junctions whose adjoining samples differed by more than the tolerance.
  std::size_t junction_mismatches = 0;
};

inline constexpr double kJunctionTolerance = 1e-9;

/// Concatenates per-segment samples (all of length V+1) into K*V + 1 values,
/// keeping column 0 only for the first segment. Throws InconsistentV.
StitchResult stitch(std::span<const std::span<const double>> segments);

/// Lagrangian grid of one trajectory: each row is one segment, in order.
StitchResult stitch(const SampleGrid& lagrangian);

}  // namespace trajsmooth
