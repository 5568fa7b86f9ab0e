#include "trajsmooth/evaluator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "trajsmooth/error.hpp"

namespace trajsmooth {

PowerMatrix::PowerMatrix(std::size_t ticks) : ticks_(ticks) {
  if (ticks == 0) {
    throw Error(ErrorCode::InvalidArgument, "tick count V must be at least 1");
  }
  const std::size_t cols = columns();
  entries_.resize(4 * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(ticks);
    entries_[0 * cols + j] = t * t * t;
    entries_[1 * cols + j] = t * t;
    entries_[2 * cols + j] = t;
    entries_[3 * cols + j] = 1.0;
  }
}

namespace {

struct PowerCache {
  std::mutex mutex;
  std::map<std::size_t, std::shared_ptr<const PowerMatrix>> matrices;
  std::atomic<std::uint64_t> constructions{0};
};

PowerCache& power_cache() {
  static PowerCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const PowerMatrix> power_matrix(std::size_t ticks) {
  if (ticks == 0) {
    throw Error(ErrorCode::InvalidArgument, "tick count V must be at least 1");
  }
  auto& cache = power_cache();
  std::lock_guard lock(cache.mutex);
  auto& slot = cache.matrices[ticks];
  if (!slot) {
    slot = std::make_shared<const PowerMatrix>(ticks);
    cache.constructions.fetch_add(1, std::memory_order_relaxed);
  }
  return slot;
}

std::uint64_t power_matrix_constructions() noexcept {
  return power_cache().constructions.load(std::memory_order_relaxed);
}

void reset_power_matrix_cache() {
  auto& cache = power_cache();
  std::lock_guard lock(cache.mutex);
  cache.matrices.clear();
  cache.constructions.store(0, std::memory_order_relaxed);
}

SampleGrid eval_batch(const CoeffMatrix& coeffs, const PowerMatrix& powers, OpCounter* ops) {
  if (coeffs.rows.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "coefficient matrix has no rows");
  }
  const std::size_t cols = powers.columns();
  SampleGrid grid(coeffs.rows.size(), cols);
  const auto cube = powers.row(0);
  const auto square = powers.row(1);
  const auto linear = powers.row(2);
  const auto ones = powers.row(3);
  for (std::size_t i = 0; i < coeffs.rows.size(); ++i) {
    const ScalarCubic& r = coeffs.rows[i];
    for (std::size_t j = 0; j < cols; ++j) {
      double acc = r.a * cube[j];
      acc += r.b * square[j];
      acc += r.c * linear[j];
      acc += r.d * ones[j];
      grid(i, j) = acc;
    }
  }
  if (ops != nullptr) {
    ops->add(4 * coeffs.rows.size() * cols);
  }
  return grid;
}

ScalarCubic reparameterize_cubic(const ScalarCubic& p, double o, double h) noexcept {
  const double h2 = h * h;
  return {
      p.a * h2 * h,
      3.0 * p.a * o * h2 + p.b * h2,
      3.0 * p.a * o * o * h + 2.0 * p.b * o * h + p.c * h,
      ((p.a * o + p.b) * o + p.c) * o + p.d,
  };
}

CubicCoeffs reparameterize_cubic(const CubicCoeffs& p, double offset, double scale) noexcept {
  CubicCoeffs out;
  for (std::size_t i = 0; i < kAxes; ++i) {
    out.set_axis(i, reparameterize_cubic(p.axis(i), offset, scale));
  }
  return out;
}

StitchResult stitch(std::span<const std::span<const double>> segments) {
  StitchResult out;
  if (segments.empty()) {
    return out;
  }
  const std::size_t cols = segments.front().size();
  if (cols < 2) {
    throw Error(ErrorCode::InconsistentV, "segment sample rows need at least two ticks");
  }
  for (const auto& seg : segments) {
    if (seg.size() != cols) {
      throw Error(ErrorCode::InconsistentV, "segments sampled with differing tick counts (" +
                                                std::to_string(cols) + " vs " +
                                                std::to_string(seg.size()) + ")");
    }
  }
  out.values.reserve(segments.size() * (cols - 1) + 1);
  out.values.insert(out.values.end(), segments.front().begin(), segments.front().end());
  for (std::size_t k = 1; k < segments.size(); ++k) {
    const double prev = out.values.back();
    const double next = segments[k].front();
    const double scale = std::max({1.0, std::abs(prev), std::abs(next)});
    if (!(std::abs(prev - next) <= kJunctionTolerance * scale)) {
      ++out.junction_mismatches;
    }
    out.values.insert(out.values.end(), segments[k].begin() + 1, segments[k].end());
  }
  return out;
}

StitchResult stitch(const SampleGrid& lagrangian) {
  std::vector<std::span<const double>> rows;
  rows.reserve(lagrangian.rows());
  for (std::size_t r = 0; r < lagrangian.rows(); ++r) {
    rows.push_back(lagrangian.row(r));
  }
  return stitch(rows);
}

}  // namespace trajsmooth
