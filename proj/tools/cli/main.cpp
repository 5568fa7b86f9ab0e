#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "run.hpp"

using trajsmooth::cli::Command;
using trajsmooth::cli::RunConfig;

namespace {

void add_common(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--input", config.input, "Trajectory dataset");
  cmd.add_option("--input-format", config.input_format, "Dataset format: csv | binary")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, trajsmooth::io::DatasetFormat>{
              {"csv", trajsmooth::io::DatasetFormat::Csv},
              {"binary", trajsmooth::io::DatasetFormat::Binary}},
          CLI::ignore_case));
  cmd.add_option("--output", config.output, "Output file");
  cmd.add_option("--output-format", config.output_format, "Output format (command specific)");
  cmd.add_option("--alpha", config.alpha, "Bezier weight in the blend, in (0, 1)")->capture_default_str();
  cmd.add_option("--beta", config.beta, "Spline weight in the blend, in (0, 1)")->capture_default_str();
  cmd.add_option("--seed-mode", config.seed_mode, "Segment seeding: bezier-start | chained")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, trajsmooth::SeedMode>{{"bezier-start", trajsmooth::SeedMode::BezierStart},
                                                      {"chained", trajsmooth::SeedMode::Chained}},
          CLI::ignore_case));
  cmd.add_option("--grouping", config.grouping, "Point grouping: overlap | disjoint")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, trajsmooth::GroupingMode>{{"overlap", trajsmooth::GroupingMode::Overlap},
                                                          {"disjoint", trajsmooth::GroupingMode::Disjoint}},
          CLI::ignore_case));
  cmd.add_option("--ticks", config.ticks, "Samples per segment minus one (V)")->capture_default_str();
  cmd.add_option("--workers", config.workers, "Worker threads")->capture_default_str();
  cmd.add_option("--dense-cap", config.dense_cap, "Largest M expanded to a dense matrix")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth CFD particle trajectories with blended Bezier-spline cubics"};
  app.footer(trajsmooth::cli::exit_code_help());
  app.require_subcommand(1);

  RunConfig config;

  auto* smooth = app.add_subcommand("smooth", "Write per-segment blended cubic coefficients (CSV)");
  auto* eval = app.add_subcommand("eval", "Sample all curves and write stitched polylines (csv | vtk)");
  auto* info = app.add_subcommand("info", "Print dataset, matrix and operation-count summary");
  auto* scaling = app.add_subcommand("bench-scaling", "Strong or weak scaling of build + eval");
  auto* sparse = app.add_subcommand("bench-sparse", "Block vs CSR vs dense G*s timings");
  auto* generate = app.add_subcommand("generate", "Write a synthetic trajectory dataset");

  for (auto* cmd : {smooth, eval, info, scaling, sparse, generate}) {
    add_common(*cmd, config);
  }

  scaling->add_option("--mode", config.scaling, "strong | weak")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, trajsmooth::ScalingMode>{{"strong", trajsmooth::ScalingMode::Strong},
                                                         {"weak", trajsmooth::ScalingMode::Weak}},
          CLI::ignore_case));
  scaling->add_option("--workers-list", config.worker_list, "Worker counts, ascending from 1")
      ->delimiter(',');
  scaling->add_option("--load", config.load, "Weak scaling: segment positions per worker")
      ->capture_default_str();
  for (auto* cmd : {scaling, sparse}) {
    cmd->add_option("--repetitions", config.repetitions, "Timed repetitions (median reported)")
        ->capture_default_str();
  }
  for (auto* cmd : {scaling, generate}) {
    cmd->add_option("--trajectories", config.trajectories, "Synthetic trajectory count");
    cmd->add_option("--points", config.points, "Synthetic points per trajectory")->capture_default_str();
    cmd->add_option("--seed", config.seed, "Synthetic data seed")->capture_default_str();
  }
  sparse->add_option("--sizes", config.sizes, "Block counts M")->delimiter(',');
  sparse->add_option("--methods", config.methods, "block, csr, dense")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, trajsmooth::MatvecMethod>{{"block", trajsmooth::MatvecMethod::Block},
                                                          {"csr", trajsmooth::MatvecMethod::Csr},
                                                          {"dense", trajsmooth::MatvecMethod::Dense}},
          CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : trajsmooth::cli::kConfigError;
  }

  if (smooth->parsed()) config.command = Command::Smooth;
  else if (eval->parsed()) config.command = Command::Eval;
  else if (info->parsed()) config.command = Command::Info;
  else if (scaling->parsed()) config.command = Command::BenchScaling;
  else if (sparse->parsed()) config.command = Command::BenchSparse;
  else config.command = Command::Generate;

  return trajsmooth::cli::run(config, std::cout, std::cerr);
}
