#include "trajsmooth/sparse.hpp"

#include <algorithm>
#include <chrono>
#include <new>
#include <optional>
#include <random>

#include "trajsmooth/error.hpp"

namespace trajsmooth {

GlobalMatrix::GlobalMatrix(const Block4x5& block, std::size_t block_count)
    : block_(block), block_count_(block_count) {
  if (block_count == 0) {
    throw Error(ErrorCode::InvalidArgument, "global matrix needs at least one block");
  }
}

std::size_t GlobalMatrix::block_nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& row : block_) {
    n += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](double v) { return v != 0.0; }));
  }
  return n;
}

GlobalMatrix assemble_global(const Block4x5& block, std::size_t block_count) {
  return GlobalMatrix(block, block_count);
}

GlobalMatrix assemble_global(std::size_t block_count) {
  return GlobalMatrix(ConstructionMatrix::entries, block_count);
}

StackedVector::StackedVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() % 5 != 0) {
    throw Error(ErrorCode::ShapeMismatch, "stacked vector length must be a multiple of 5");
  }
  for (std::size_t i = 4; i < values_.size(); i += 5) {
    if (values_[i] != 1.0) {
      throw Error(ErrorCode::ShapeMismatch,
                  "stacked vector entry " + std::to_string(i) + " must be 1");
    }
  }
}

void StackedVector::append(double end, double start, double slope, double curvature) {
  values_.insert(values_.end(), {end, start, slope, curvature, 1.0});
}

namespace {

void check_input(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorCode::ShapeMismatch, "input vector has length " + std::to_string(got) +
                                              ", expected " + std::to_string(expected));
  }
}

}  // namespace

void matvec_block_range(const GlobalMatrix& g, std::span<const double> s, std::span<double> out,
                        std::size_t first, std::size_t last) {
  for (std::size_t i = first; i < last; ++i) {
    const ScalarCubic c = apply_block(g.block(), s.subspan(5 * i).first<5>());
    out[4 * i + 0] = c.a;
    out[4 * i + 1] = c.b;
    out[4 * i + 2] = c.c;
    out[4 * i + 3] = c.d;
  }
}

std::vector<double> matvec_block(const GlobalMatrix& g, std::span<const double> s, OpCounter* ops) {
  check_input(g.cols(), s.size());
  std::vector<double> out(g.rows());
  matvec_block_range(g, s, out, 0, g.block_count());
  if (ops != nullptr) {
    ops->add(20 * g.block_count());
  }
  return out;
}

DenseMatrix expand_dense(const GlobalMatrix& g, std::size_t cap) {
  if (g.block_count() > cap) {
    throw Error(ErrorCode::AllocationLimit, "dense expansion of " + std::to_string(g.block_count()) +
                                                " blocks exceeds the cap of " + std::to_string(cap));
  }
  DenseMatrix dense;
  dense.rows = g.rows();
  dense.cols = g.cols();
  try {
    dense.values.assign(dense.rows * dense.cols, 0.0);
  } catch (const std::bad_alloc&) {
    throw Error(ErrorCode::AllocationLimit, "dense expansion of " + std::to_string(g.block_count()) +
                                                " blocks could not be allocated");
  }
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        dense.values[(4 * b + r) * dense.cols + 5 * b + c] = g.block()[r][c];
      }
    }
  }
  return dense;
}

std::vector<double> matvec_dense(const DenseMatrix& dense, std::span<const double> s, OpCounter* ops) {
  check_input(dense.cols, s.size());
  std::vector<double> out(dense.rows);
  for (std::size_t r = 0; r < dense.rows; ++r) {
    const double* row = dense.values.data() + r * dense.cols;
    double acc = 0.0;
    for (std::size_t c = 0; c < dense.cols; ++c) {
      acc += row[c] * s[c];
    }
    out[r] = acc;
  }
  if (ops != nullptr) {
    ops->add(static_cast<std::uint64_t>(dense.rows) * dense.cols);
  }
  return out;
}

CsrMatrix expand_csr(const GlobalMatrix& g) {
  CsrMatrix csr;
  csr.rows = g.rows();
  csr.cols = g.cols();
  csr.row_offsets.reserve(csr.rows + 1);
  csr.columns.reserve(g.nonzeros());
  csr.values.reserve(g.nonzeros());
  csr.row_offsets.push_back(0);
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        if (g.block()[r][c] != 0.0) {
          csr.columns.push_back(5 * b + c);
          csr.values.push_back(g.block()[r][c]);
        }
      }
      csr.row_offsets.push_back(csr.values.size());
    }
  }
  return csr;
}

std::vector<double> matvec_csr(const CsrMatrix& csr, std::span<const double> s, OpCounter* ops) {
  check_input(csr.cols, s.size());
  std::vector<double> out(csr.rows);
  for (std::size_t r = 0; r < csr.rows; ++r) {
    double acc = 0.0;
    for (std::size_t k = csr.row_offsets[r]; k < csr.row_offsets[r + 1]; ++k) {
      acc += csr.values[k] * s[csr.columns[k]];
    }
    out[r] = acc;
  }
  if (ops != nullptr) {
    ops->add(csr.values.size());
  }
  return out;
}

double density(const GlobalMatrix& g) noexcept {
  const double m = static_cast<double>(g.block_count());
  return static_cast<double>(g.nonzeros()) / (20.0 * m * m);
}

double block_density(const GlobalMatrix& g) noexcept {
  return 1.0 / static_cast<double>(g.block_count());
}

BuildResult build_set_global(const TrajectorySet& set, const BuildOptions& options) {
  options.blend.validate();
  const std::size_t m = set.trajectory_count();
  const auto plan = plan_segments(set.points_per_trajectory(), options.grouping);
  const GlobalMatrix g = assemble_global(m);

  BuildResult result;
  result.warnings = option_warnings(options);
  result.curves.resize(m);
  for (auto& c : result.curves) {
    c.reserve(plan.size());
  }
  std::vector<BezierCubic> beziers(m);
  std::vector<std::optional<CubicCoeffs>> previous(m);
  std::array<StackedVector, kAxes> stacked;

  for (const SegmentSpec& position : plan) {
    const bool bridge = position.kind == SegmentKind::Bridge;
    for (auto& s : stacked) {
      s = StackedVector();
      s.reserve(m);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto& pts = set[i].points;
      if (!bridge && position.segment_index == 1) {
        const std::size_t first = group_first_point(position, options.grouping);
        beziers[i] = to_power_basis(pts[first], pts[first + 1], pts[first + 2], pts[first + 3]);
      }
      const SeedMode mode = bridge ? SeedMode::Chained : options.seed;
      const Seed seed = compute_seed(beziers[i], previous[i], mode,
                                     bridge ? 2 : position.segment_index, kSegmentSpan);
      const Point3& start = pts[position.start_point_index];
      const Point3& end = pts[position.end_point_index];
      for (std::size_t a = 0; a < kAxes; ++a) {
        stacked[a].append(end[a], start[a], seed.slope[a], seed.curvature[a]);
      }
    }
    std::array<std::vector<double>, kAxes> coeffs;
    for (std::size_t a = 0; a < kAxes; ++a) {
      coeffs[a] = matvec_block(g, stacked[a], &result.ops);
    }
    for (std::size_t i = 0; i < m; ++i) {
      SegmentCurve seg;
      seg.spec = position;
      seg.spec.trajectory_id = set[i].id;
      for (std::size_t a = 0; a < kAxes; ++a) {
        const double* c = coeffs[a].data() + 4 * i;
        seg.u.set_axis(a, {c[0], c[1], c[2], c[3]});
      }
      seg.v = bridge ? seg.u
                     : blend_segment(beziers[i], position.segment_index, seg.u, options.blend,
                                     &result.ops);
      if (!seg.u.is_finite() || !seg.v.is_finite()) {
        throw Error(ErrorCode::NonFinite,
                    "trajectory " + std::to_string(set[i].id) + " overflowed during chained build");
      }
      previous[i] = seg.u;
      result.curves[i].push_back(seg);
    }
  }
  return result;
}

std::string to_string(MatvecMethod method) {
  switch (method) {
    case MatvecMethod::Block: return "block";
    case MatvecMethod::Csr: return "csr";
    case MatvecMethod::Dense: return "dense";
  }
  return "unknown";
}

namespace {

template <typename F>
double median_seconds_per_call(F&& call, const SparseBenchOptions& options) {
  using clock = std::chrono::steady_clock;
  std::vector<double> samples;
  call();  // warmup
  for (std::size_t r = 0; r < std::max<std::size_t>(1, options.repetitions); ++r) {
    std::size_t calls = 0;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
      call();
      ++calls;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < options.min_sample_seconds);
    samples.push_back(elapsed / static_cast<double>(calls));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

std::vector<SparseBenchRow> bench_sparse(std::span<const std::size_t> sizes,
                                         std::span<const MatvecMethod> methods,
                                         const SparseBenchOptions& options) {
  std::vector<SparseBenchRow> rows;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (const std::size_t m : sizes) {
    const GlobalMatrix g = assemble_global(m);
    StackedVector s;
    s.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      s.append(coord(rng), coord(rng), coord(rng), coord(rng));
    }
    for (const MatvecMethod method : methods) {
      SparseBenchRow row;
      row.blocks = m;
      row.method = method;
      OpCounter ops;
      volatile double sink = 0.0;
      switch (method) {
        case MatvecMethod::Block: {
          matvec_block(g, s, &ops);
          row.wall_time_s = median_seconds_per_call([&] { sink = matvec_block(g, s).back(); }, options);
          break;
        }
        case MatvecMethod::Csr: {
          const CsrMatrix csr = expand_csr(g);
          matvec_csr(csr, s.values(), &ops);
          row.wall_time_s =
              median_seconds_per_call([&] { sink = matvec_csr(csr, s.values()).back(); }, options);
          break;
        }
        case MatvecMethod::Dense: {
          const DenseMatrix dense = expand_dense(g, options.dense_cap);
          matvec_dense(dense, s.values(), &ops);
          row.wall_time_s =
              median_seconds_per_call([&] { sink = matvec_dense(dense, s.values()).back(); }, options);
          break;
        }
      }
      (void)sink;
      row.flops = ops.multiply_adds;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace trajsmooth
