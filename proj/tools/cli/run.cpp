#include "run.hpp"

#include <algorithm>
#include <iomanip>

#include "trajsmooth/error.hpp"
#include "trajsmooth/sparse.hpp"
#include "trajsmooth/synthetic.hpp"

namespace trajsmooth::cli {

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}

bool needs_input(Command c) {
  return c == Command::Smooth || c == Command::Eval || c == Command::Info;
}

bool needs_output(Command c) {
  return c == Command::Smooth || c == Command::Eval || c == Command::Generate;
}

BuildOptions build_options(const RunConfig& config) {
  BuildOptions options;
  options.grouping = config.grouping;
  options.seed = config.seed_mode;
  options.blend = {config.alpha, config.beta};
  return options;
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) {
    err << "warning: " << w << '\n';
  }
}

int do_smooth(const RunConfig& config, std::ostream& err) {
  const TrajectorySet set = io::read_trajectories(config.input, config.input_format);
  const BuildResult built = build_parallel(set, build_options(config), config.workers);
  print_warnings(built.warnings, err);
  io::write_coefficients(config.output, built.curves);
  return kOk;
}

int do_eval(const RunConfig& config, std::ostream& err) {
  const TrajectorySet set = io::read_trajectories(config.input, config.input_format);
  const PipelineResult result = run_pipeline(set, {build_options(config), config.ticks}, config.workers);
  print_warnings(result.build.warnings, err);
  if (result.eval.junction_mismatches > 0) {
    err << "warning: JunctionMismatch at " << result.eval.junction_mismatches << " junctions\n";
  }
  io::write_samples(config.output, result.eval.polylines,
                    config.output_format == "vtk" ? io::SampleFormat::VtkPolyline : io::SampleFormat::Csv);
  return kOk;
}

int do_info(const RunConfig& config, std::ostream& out) {
  const TrajectorySet set = io::read_trajectories(config.input, config.input_format);
  const std::size_t m = set.trajectory_count();
  const std::size_t s = set.points_per_trajectory();
  const std::size_t groups = group_count(s, config.grouping);
  const std::size_t segments = plan_segments(s, config.grouping).size();
  const GlobalMatrix g = assemble_global(m);
  out << "trajectories: " << m << '\n'
      << "points_per_trajectory: " << s << '\n'
      << "grouping: " << (config.grouping == GroupingMode::Overlap ? "overlap" : "disjoint") << '\n'
      << "groups_per_trajectory: " << groups << '\n'
      << "segments_per_trajectory: " << segments << '\n'
      << "global_matrix: " << g.rows() << " x " << g.cols() << '\n'
      << "density: " << io::format_double(block_density(g)) << '\n'
      << "nonzero_density: " << io::format_double(density(g)) << '\n'
      << "predicted_build_ops: " << m * groups << " (M*N)\n"
      << "predicted_eval_ops: " << groups * m * (config.ticks + 1) << " (N*M*(V+1))\n"
      << "predicted_eval_dot_products: " << segments * m * (config.ticks + 1) << '\n';
  return kOk;
}

int do_bench_scaling(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PipelineConfig pipeline{build_options(config), config.ticks};
  const BenchOptions bench{1, config.repetitions};
  ScalingReport report;
  if (config.scaling == ScalingMode::Strong) {
    const TrajectorySet set =
        config.input.empty()
            ? make_synthetic_set(config.trajectories.value_or(2000), config.points, config.seed)
            : io::read_trajectories(config.input, config.input_format);
    report = bench_strong(set, pipeline, config.worker_list, bench);
  } else {
    const WeakJob job{config.trajectories.value_or(8), config.load, config.seed};
    report = bench_weak(job, pipeline, config.worker_list, bench);
    err << "weak scaling max/min wall time ratio: " << report.time_ratio
        << (report.flat ? " (flat)" : " (not flat)") << '\n';
  }
  print_warnings(report.warnings, err);
  if (config.output.empty()) {
    out << io::format_report_csv(report);
  } else {
    io::write_report(config.output, report);
  }
  return kOk;
}

int do_bench_sparse(const RunConfig& config, std::ostream& out) {
  SparseBenchOptions options;
  options.dense_cap = config.dense_cap;
  options.repetitions = config.repetitions;
  options.seed = config.seed;
  const auto rows = bench_sparse(config.sizes, config.methods, options);
  if (config.output.empty()) {
    out << io::format_report_csv(rows);
  } else {
    io::write_report(config.output, rows);
  }
  return kOk;
}

int do_generate(const RunConfig& config) {
  const TrajectorySet set =
      make_synthetic_set(config.trajectories.value_or(100), config.points, config.seed);
  const auto format = config.output_format == "binary" ? io::DatasetFormat::Binary : io::DatasetFormat::Csv;
  io::write_trajectories(config.output, set, format);
  return kOk;
}

}  // namespace

void validate(const RunConfig& config) {
  const auto in_open_unit = [](double w) { return w > 0.0 && w < 1.0; };
  if (!in_open_unit(config.alpha)) config_error("--alpha must lie in (0, 1)");
  if (!in_open_unit(config.beta)) config_error("--beta must lie in (0, 1)");
  if (config.ticks < 1) config_error("--ticks must be at least 1");
  if (config.workers < 1) config_error("--workers must be at least 1");
  if (needs_input(config.command) && config.input.empty()) config_error("--input is required");
  if (needs_output(config.command) && config.output.empty()) config_error("--output is required");
  if (config.command == Command::Eval && config.output_format != "csv" && config.output_format != "vtk") {
    config_error("eval --output-format must be csv or vtk");
  }
  if (config.command == Command::Smooth && config.output_format != "csv") {
    config_error("smooth --output-format must be csv");
  }
  if (config.command == Command::Generate && config.output_format != "csv" &&
      config.output_format != "binary") {
    config_error("generate --output-format must be csv or binary");
  }
  if (config.command == Command::BenchScaling) {
    if (config.worker_list.empty() || config.worker_list.front() != 1 ||
        !std::is_sorted(config.worker_list.begin(), config.worker_list.end())) {
      config_error("--workers-list must be ascending and start at 1");
    }
  }
  if (config.command == Command::BenchSparse && (config.sizes.empty() || config.methods.empty())) {
    config_error("--sizes and --methods must be nonempty");
  }
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return kConfigError;
    case ErrorCode::IoError: return kIoError;
    case ErrorCode::ParseError:
    case ErrorCode::GapError: return kParseError;
    case ErrorCode::Empty:
    case ErrorCode::NonUniformLength:
    case ErrorCode::TooShort:
    case ErrorCode::NonFinite: return kInvalidDataset;
    case ErrorCode::IncompatibleLength: return kIncompatibleLength;
    case ErrorCode::AllocationLimit: return kAllocationLimit;
    case ErrorCode::DomainError:
    case ErrorCode::MissingPredecessor:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::InconsistentV: return kNumericalError;
  }
  return kInternalError;
}

std::string exit_code_help() {
  return "Exit status:\n"
         "  0  success\n"
         "  1  internal error\n"
         "  2  invalid flags or configuration\n"
         "  3  file could not be read or written\n"
         "  4  malformed dataset (ParseError, GapError)\n"
         "  5  invalid dataset (empty, ragged, too short, non-finite)\n"
         "  6  point count incompatible with the grouping\n"
         "  7  dense expansion over --dense-cap or out of memory\n"
         "  8  numerical or shape error\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::Smooth: return do_smooth(config, err);
      case Command::Eval: return do_eval(config, err);
      case Command::Info: return do_info(config, out);
      case Command::BenchScaling: return do_bench_scaling(config, out, err);
      case Command::BenchSparse: return do_bench_sparse(config, out);
      case Command::Generate: return do_generate(config);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace trajsmooth::cli
