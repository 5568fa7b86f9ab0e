#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "trajsmooth/builder.hpp"
#include "trajsmooth/evaluator.hpp"
#include "trajsmooth/model.hpp"

namespace trajsmooth {

struct ChunkRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const ChunkRange&, const ChunkRange&) = default;
};

struct Partition {
  std::size_t total = 0;
  std::size_t requested_workers = 0;
  std::size_t workers = 0;  // min(requested_workers, total)
  std::vector<ChunkRange> chunks;

  bool clamped() const noexcept { return workers != requested_workers; }
};

/// Balanced contiguous split of [0, total): the first total % P chunks hold
/// ceil(total / P) items. P is clamped to total so no chunk is empty.
/// Throws InvalidArgument when total or workers is zero.
Partition partition(std::size_t total, std::size_t workers);

/// Fork-join over the chunks of `part`. Chunk 0 runs on the calling thread.
/// `work` is called as work(range) or work(range, stop_token); results are
/// returned in chunk order. If any chunk throws, a stop is requested for the
/// others and the error of the lowest-indexed failing chunk is rethrown.
template <typename Work>
auto run_parallel(const Partition& part, Work&& work) {
  constexpr bool kTakesToken = std::invocable<Work&, ChunkRange, std::stop_token>;
  using Result = std::conditional_t<kTakesToken, std::invoke_result<Work&, ChunkRange, std::stop_token>,
                                    std::invoke_result<Work&, ChunkRange>>::type;

  const std::size_t n = part.chunks.size();
  std::stop_source stop;
  std::vector<std::exception_ptr> errors(n);
  using Slot = std::conditional_t<std::is_void_v<Result>, std::monostate, Result>;
  [[maybe_unused]] std::vector<std::optional<Slot>> results;
  if constexpr (!std::is_void_v<Result>) {
    results.resize(n);
  }

  const auto run_chunk = [&](std::size_t i) {
    if (stop.stop_requested()) {
      return;
    }
    try {
      if constexpr (std::is_void_v<Result>) {
        if constexpr (kTakesToken) {
          work(part.chunks[i], stop.get_token());
        } else {
          work(part.chunks[i]);
        }
      } else {
        if constexpr (kTakesToken) {
          results[i].emplace(work(part.chunks[i], stop.get_token()));
        } else {
          results[i].emplace(work(part.chunks[i]));
        }
      }
    } catch (...) {
      errors[i] = std::current_exception();
      stop.request_stop();
    }
  };

  {
    std::vector<std::jthread> threads;
    threads.reserve(n > 0 ? n - 1 : 0);
    for (std::size_t i = 1; i < n; ++i) {
      threads.emplace_back(run_chunk, i);
    }
    if (n > 0) {
      run_chunk(0);
    }
  }

  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  if constexpr (!std::is_void_v<Result>) {
    std::vector<Result> merged;
    merged.reserve(n);
    for (auto& r : results) {
      merged.push_back(std::move(*r));
    }
    return merged;
  }
}

/// build_set with trajectories split across `workers`; bitwise identical to
/// the serial build for any worker count.
BuildResult build_parallel(const TrajectorySet& set, const BuildOptions& options, std::size_t workers);

struct Polyline {
  std::uint64_t trajectory_id = 0;
  std::vector<Point3> samples;

  friend bool operator==(const Polyline&, const Polyline&) = default;
};

struct EvalResult {
  std::vector<Polyline> polylines;
  OpCounter ops;
  std::size_t junction_mismatches = 0;
};

/// Samples every blended curve at V+1 uniform ticks and stitches each
/// trajectory into a polyline of K*V + 1 points. Eulerian evaluation splits
/// segment positions across workers; Lagrangian splits trajectories.
EvalResult evaluate_curves(std::span<const std::vector<SegmentCurve>> curves, std::size_t ticks,
                           std::size_t workers, Layout layout = Layout::Eulerian);

struct PipelineConfig {
  BuildOptions build;
  std::size_t ticks = 100;
};

struct PipelineResult {
  BuildResult build;
  EvalResult eval;
};

PipelineResult run_pipeline(const TrajectorySet& set, const PipelineConfig& config, std::size_t workers);

enum class ScalingMode { Strong, Weak };

std::string to_string(ScalingMode mode);

struct ScalingRow {
  ScalingMode mode = ScalingMode::Strong;
  std::size_t workers = 1;
  std::size_t trajectories = 0;
  std::size_t segments = 0;
  std::size_t ticks = 0;
  double wall_time_s = 0.0;
  double speedup = 1.0;
  double efficiency = 1.0;
  bool oversubscribed = false;  // more workers than hardware threads
};

struct ScalingReport {
  ScalingMode mode = ScalingMode::Strong;
  std::vector<ScalingRow> rows;
  std::vector<std::string> warnings;
  // Weak scaling only: max/min wall time over rows and whether it is <= 1.5.
  double time_ratio = 1.0;
  bool flat = true;
};

struct BenchOptions {
  std::size_t warmup = 1;
  std::size_t repetitions = 3;
};

inline constexpr double kWeakFlatRatio = 1.5;

/// Hardware threads as reported by the platform (at least 1).
std::size_t available_cores() noexcept;

/// Fixed problem, varying worker count. Speedup is t(1)/t(P), efficiency
/// speedup/P. `worker_counts` must be ascending and start at 1.
ScalingReport bench_strong(const TrajectorySet& set, const PipelineConfig& config,
                           std::span<const std::size_t> worker_counts, const BenchOptions& options = {});

struct WeakJob {
  std::size_t trajectories = 8;             // rows of every coefficient matrix
  std::size_t positions_per_worker = 1050;  // segment positions per worker, multiple of 3
  std::uint64_t seed = 7;
};

/// Problem grown with the worker count: P workers get trajectories of
/// positions_per_worker * P + 1 points (overlap grouping). Speedup is the
/// scaled speedup P * t(1)/t(P); efficiency t(1)/t(P).
ScalingReport bench_weak(const WeakJob& job, const PipelineConfig& config,
                         std::span<const std::size_t> worker_counts, const BenchOptions& options = {});

}  // namespace trajsmooth
