#include "trajsmooth/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "trajsmooth/error.hpp"
#include "trajsmooth/synthetic.hpp"

namespace trajsmooth {

Partition partition(std::size_t total, std::size_t workers) {
  if (total == 0) {
    throw Error(ErrorCode::InvalidArgument, "cannot partition an empty range");
  }
  if (workers == 0) {
    throw Error(ErrorCode::InvalidArgument, "worker count must be at least 1");
  }
  Partition part;
  part.total = total;
  part.requested_workers = workers;
  part.workers = std::min(workers, total);
  part.chunks.reserve(part.workers);
  const std::size_t base = total / part.workers;
  const std::size_t extra = total % part.workers;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < part.workers; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    part.chunks.push_back({begin, begin + size});
    begin += size;
  }
  return part;
}

BuildResult build_parallel(const TrajectorySet& set, const BuildOptions& options, std::size_t workers) {
  options.blend.validate();
  const Partition part = partition(set.trajectory_count(), workers);
  auto pieces = run_parallel(part, [&](ChunkRange r) { return build_range(set, options, r.begin, r.end); });
  BuildResult merged;
  merged.curves.reserve(set.trajectory_count());
  for (auto& piece : pieces) {
    std::move(piece.curves.begin(), piece.curves.end(), std::back_inserter(merged.curves));
    merged.ops += piece.ops;
  }
  merged.warnings = option_warnings(options);
  return merged;
}

namespace {

std::size_t uniform_segment_count(std::span<const std::vector<SegmentCurve>> curves) {
  if (curves.empty() || curves.front().empty()) {
    throw Error(ErrorCode::ShapeMismatch, "no curves to evaluate");
  }
  const std::size_t k = curves.front().size();
  for (const auto& c : curves) {
    if (c.size() != k) {
      throw Error(ErrorCode::ShapeMismatch, "trajectories have differing segment counts");
    }
  }
  return k;
}

struct StitchedTrajectory {
  Polyline line;
  std::size_t mismatches = 0;
};

// Combines three per-axis stitched sample vectors into one polyline.
StitchedTrajectory assemble(std::uint64_t id, const std::array<StitchResult, kAxes>& axes) {
  StitchedTrajectory out;
  out.line.trajectory_id = id;
  const std::size_t n = axes[0].values.size();
  out.line.samples.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    out.line.samples[s] = {axes[0].values[s], axes[1].values[s], axes[2].values[s]};
  }
  out.mismatches = axes[0].junction_mismatches + axes[1].junction_mismatches + axes[2].junction_mismatches;
  return out;
}

struct ChunkOutput {
  std::vector<StitchedTrajectory> trajectories;
  OpCounter ops;
};

EvalResult merge(std::vector<ChunkOutput> pieces, std::size_t count, OpCounter ops) {
  EvalResult result;
  result.polylines.reserve(count);
  result.ops = ops;
  for (auto& piece : pieces) {
    result.ops += piece.ops;
    for (auto& t : piece.trajectories) {
      result.junction_mismatches += t.mismatches;
      result.polylines.push_back(std::move(t.line));
    }
  }
  return result;
}

EvalResult evaluate_lagrangian(std::span<const std::vector<SegmentCurve>> curves, const PowerMatrix& w,
                               std::size_t workers) {
  const Partition part = partition(curves.size(), workers);
  auto pieces = run_parallel(part, [&](ChunkRange r) {
    ChunkOutput out;
    out.trajectories.reserve(r.size());
    for (std::size_t i = r.begin; i < r.end; ++i) {
      std::array<StitchResult, kAxes> axes;
      for (std::size_t a = 0; a < kAxes; ++a) {
        CoeffMatrix c{Layout::Lagrangian, {}};
        c.rows.reserve(curves[i].size());
        for (const auto& seg : curves[i]) {
          c.rows.push_back(seg.v.axis(a));
        }
        axes[a] = stitch(eval_batch(c, w, &out.ops));
      }
      out.trajectories.push_back(assemble(curves[i].front().spec.trajectory_id, axes));
    }
    return out;
  });
  return merge(std::move(pieces), curves.size(), {});
}

EvalResult evaluate_eulerian(std::span<const std::vector<SegmentCurve>> curves, const PowerMatrix& w,
                             std::size_t workers) {
  const std::size_t positions = curves.front().size();
  const std::size_t m = curves.size();

  // grids[j][a]: samples of segment position j, axis a, one row per trajectory.
  std::vector<std::array<SampleGrid, kAxes>> grids(positions);
  const Partition by_position = partition(positions, workers);
  auto eval_ops = run_parallel(by_position, [&](ChunkRange r) {
    OpCounter ops;
    for (std::size_t j = r.begin; j < r.end; ++j) {
      for (std::size_t a = 0; a < kAxes; ++a) {
        CoeffMatrix c{Layout::Eulerian, {}};
        c.rows.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
          c.rows.push_back(curves[i][j].v.axis(a));
        }
        grids[j][a] = eval_batch(c, w, &ops);
      }
    }
    return ops;
  });
  OpCounter total;
  for (const auto& ops : eval_ops) {
    total += ops;
  }

  const Partition by_trajectory = partition(m, workers);
  auto pieces = run_parallel(by_trajectory, [&](ChunkRange r) {
    ChunkOutput out;
    out.trajectories.reserve(r.size());
    std::vector<std::span<const double>> rows(positions);
    for (std::size_t i = r.begin; i < r.end; ++i) {
      std::array<StitchResult, kAxes> axes;
      for (std::size_t a = 0; a < kAxes; ++a) {
        for (std::size_t j = 0; j < positions; ++j) {
          rows[j] = grids[j][a].row(i);
        }
        axes[a] = stitch(rows);
      }
      out.trajectories.push_back(assemble(curves[i].front().spec.trajectory_id, axes));
    }
    return out;
  });
  return merge(std::move(pieces), m, total);
}

}  // namespace

EvalResult evaluate_curves(std::span<const std::vector<SegmentCurve>> curves, std::size_t ticks,
                           std::size_t workers, Layout layout) {
  uniform_segment_count(curves);
  const auto w = power_matrix(ticks);
  return layout == Layout::Eulerian ? evaluate_eulerian(curves, *w, workers)
                                    : evaluate_lagrangian(curves, *w, workers);
}

PipelineResult run_pipeline(const TrajectorySet& set, const PipelineConfig& config, std::size_t workers) {
  PipelineResult result;
  result.build = build_parallel(set, config.build, workers);
  result.eval = evaluate_curves(result.build.curves, config.ticks, workers, Layout::Eulerian);
  return result;
}

std::string to_string(ScalingMode mode) {
  return mode == ScalingMode::Strong ? "strong" : "weak";
}

std::size_t available_cores() noexcept {
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void check_worker_counts(std::span<const std::size_t> counts) {
  if (counts.empty() || counts.front() != 1 || !std::is_sorted(counts.begin(), counts.end()) ||
      std::adjacent_find(counts.begin(), counts.end()) != counts.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "worker counts must be strictly ascending and start at 1");
  }
}

double median_pipeline_seconds(const TrajectorySet& set, const PipelineConfig& config,
                               std::size_t workers, const BenchOptions& options) {
  using clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < options.warmup; ++i) {
    run_pipeline(set, config, workers);
  }
  std::vector<double> samples;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, options.repetitions); ++i) {
    const auto start = clock::now();
    const PipelineResult r = run_pipeline(set, config, workers);
    samples.push_back(std::chrono::duration<double>(clock::now() - start).count());
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

void flag_oversubscription(ScalingReport& report) {
  const std::size_t cores = available_cores();
  for (auto& row : report.rows) {
    row.oversubscribed = row.workers > cores;
    if (row.oversubscribed) {
      report.warnings.push_back("InsufficientCores: " + std::to_string(row.workers) +
                                " workers on " + std::to_string(cores) + " hardware threads");
    }
  }
}

}  // namespace

ScalingReport bench_strong(const TrajectorySet& set, const PipelineConfig& config,
                           std::span<const std::size_t> worker_counts, const BenchOptions& options) {
  check_worker_counts(worker_counts);
  ScalingReport report;
  report.mode = ScalingMode::Strong;
  const std::size_t segments =
      set.trajectory_count() * plan_segments(set.points_per_trajectory(), config.build.grouping).size();
  for (const std::size_t p : worker_counts) {
    ScalingRow row;
    row.mode = ScalingMode::Strong;
    row.workers = p;
    row.trajectories = set.trajectory_count();
    row.segments = segments;
    row.ticks = config.ticks;
    row.wall_time_s = median_pipeline_seconds(set, config, p, options);
    report.rows.push_back(row);
  }
  const double base = report.rows.front().wall_time_s;
  for (auto& row : report.rows) {
    row.speedup = base / row.wall_time_s;
    row.efficiency = row.speedup / static_cast<double>(row.workers);
  }
  flag_oversubscription(report);
  return report;
}

ScalingReport bench_weak(const WeakJob& job, const PipelineConfig& config,
                         std::span<const std::size_t> worker_counts, const BenchOptions& options) {
  check_worker_counts(worker_counts);
  if (job.positions_per_worker == 0 || job.positions_per_worker % 3 != 0) {
    throw Error(ErrorCode::InvalidArgument, "weak-scaling load must be a positive multiple of 3");
  }
  PipelineConfig cfg = config;
  cfg.build.grouping = GroupingMode::Overlap;
  ScalingReport report;
  report.mode = ScalingMode::Weak;
  for (const std::size_t p : worker_counts) {
    const std::size_t positions = job.positions_per_worker * p;
    const TrajectorySet set = make_synthetic_set(job.trajectories, positions + 1, job.seed);
    ScalingRow row;
    row.mode = ScalingMode::Weak;
    row.workers = p;
    row.trajectories = job.trajectories;
    row.segments = positions * job.trajectories;
    row.ticks = cfg.ticks;
    row.wall_time_s = median_pipeline_seconds(set, cfg, p, options);
    report.rows.push_back(row);
  }
  const double base = report.rows.front().wall_time_s;
  double lo = base;
  double hi = base;
  for (auto& row : report.rows) {
    row.efficiency = base / row.wall_time_s;
    row.speedup = row.efficiency * static_cast<double>(row.workers);
    lo = std::min(lo, row.wall_time_s);
    hi = std::max(hi, row.wall_time_s);
  }
  report.time_ratio = hi / lo;
  report.flat = report.time_ratio <= kWeakFlatRatio;
  flag_oversubscription(report);
  return report;
}

}  // namespace trajsmooth
