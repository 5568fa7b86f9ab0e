#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trajsmooth/builder.hpp"
#include "trajsmooth/model.hpp"

namespace trajsmooth {

/// Block-diagonal 4M x 5M matrix with M copies of one 4x5 block, stored
/// implicitly as (block, count).
class GlobalMatrix {
 public:
  GlobalMatrix(const Block4x5& block, std::size_t block_count);

  const Block4x5& block() const noexcept { return block_; }
  std::size_t block_count() const noexcept { return block_count_; }
  std::size_t rows() const noexcept { return 4 * block_count_; }
  std::size_t cols() const noexcept { return 5 * block_count_; }
  std::size_t block_nonzeros() const noexcept;
  std::uint64_t nonzeros() const noexcept { return block_nonzeros() * block_count_; }

 private:
  Block4x5 block_;
  std::size_t block_count_;
};

/// Throws InvalidArgument when block_count is zero.
GlobalMatrix assemble_global(const Block4x5& block, std::size_t block_count);
GlobalMatrix assemble_global(std::size_t block_count);

/// Per-axis input of G: five entries (P_end, P_start, m, q, 1) per block.
class StackedVector {
 public:
  StackedVector() = default;
  /// Adopts raw storage; throws ShapeMismatch unless the length is a multiple
  /// of 5 and every fifth entry is 1.
  explicit StackedVector(std::vector<double> values);

  void reserve(std::size_t blocks) { values_.reserve(5 * blocks); }
  void append(double end, double start, double slope, double curvature);
  std::size_t block_count() const noexcept { return values_.size() / 5; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// c = G * s exploiting the block structure: 20 multiply-adds per block.
/// Throws ShapeMismatch.
std::vector<double> matvec_block(const GlobalMatrix& g, std::span<const double> s,
                                 OpCounter* ops = nullptr);
inline std::vector<double> matvec_block(const GlobalMatrix& g, const StackedVector& s,
                                        OpCounter* ops = nullptr) {
  return matvec_block(g, s.values(), ops);
}

/// Like matvec_block, restricted to blocks [first, last).
void matvec_block_range(const GlobalMatrix& g, std::span<const double> s, std::span<double> out,
                        std::size_t first, std::size_t last);

inline constexpr std::size_t kDefaultDenseCap = 5000;

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major
};

/// Full expansion of G. Throws AllocationLimit when block_count > cap or the
/// allocation fails.
DenseMatrix expand_dense(const GlobalMatrix& g, std::size_t cap = kDefaultDenseCap);

std::vector<double> matvec_dense(const DenseMatrix& dense, std::span<const double> s,
                                 OpCounter* ops = nullptr);

/// Generic compressed sparse row form, for comparison against the block path.
struct CsrMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_offsets;
  std::vector<std::size_t> columns;
  std::vector<double> values;
};

CsrMatrix expand_csr(const GlobalMatrix& g);

std::vector<double> matvec_csr(const CsrMatrix& csr, std::span<const double> s,
                               OpCounter* ops = nullptr);

/// nonzeros / (20 M^2).
double density(const GlobalMatrix& g) noexcept;

/// Fraction of G covered by its diagonal blocks, 1/M: the upper bound on density.
double block_density(const GlobalMatrix& g) noexcept;

/// Build of a whole set in the global-matrix formulation: for every segment
/// position, the stacked inputs of all M trajectories go through one G * s
/// product per axis. Agrees bitwise with build_set.
BuildResult build_set_global(const TrajectorySet& set, const BuildOptions& options);

enum class MatvecMethod { Block, Csr, Dense };

std::string to_string(MatvecMethod method);

struct SparseBenchRow {
  std::size_t blocks = 0;
  MatvecMethod method = MatvecMethod::Block;
  double wall_time_s = 0.0;  // median seconds per product
  std::uint64_t flops = 0;   // multiply-adds per product
};

struct SparseBenchOptions {
  std::size_t dense_cap = kDefaultDenseCap;
  std::size_t repetitions = 3;
  double min_sample_seconds = 2e-3;
  std::uint64_t seed = 42;
};

/// Times G * s for every (M, method) pair. Dense rows above the cap throw
/// AllocationLimit.
std::vector<SparseBenchRow> bench_sparse(std::span<const std::size_t> sizes,
                                         std::span<const MatvecMethod> methods,
                                         const SparseBenchOptions& options = {});

}  // namespace trajsmooth
