#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "run.hpp"
#include "trajsmooth/io.hpp"
#include "trajsmooth/synthetic.hpp"

using namespace trajsmooth;
using cli::Command;
using cli::RunConfig;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("trajsmooth_cli_" + name);
}

int run_quiet(const RunConfig& config, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(config, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::filesystem::path write_dataset(const std::string& name, std::size_t m, std::size_t s) {
  const auto path = temp_file(name);
  io::write_trajectories(path, make_synthetic_set(m, s, 3), io::DatasetFormat::Csv);
  return path;
}

}  // namespace

TEST_CASE("info reports the block-diagonal structure") {
  RunConfig config;
  config.command = Command::Info;
  config.input = write_dataset("info.csv", 1000, 13);
  std::string out;
  REQUIRE(run_quiet(config, &out) == 0);
  CHECK(out.find("trajectories: 1000\n") != std::string::npos);
  CHECK(out.find("groups_per_trajectory: 4\n") != std::string::npos);
  CHECK(out.find("segments_per_trajectory: 12\n") != std::string::npos);
  CHECK(out.find("density: 0.001\n") != std::string::npos);
  std::filesystem::remove(config.input);
}

TEST_CASE("eval writes K*V+1 samples per trajectory, identical for any worker count") {
  RunConfig config;
  config.command = Command::Eval;
  config.input = write_dataset("eval.csv", 3, 4);
  config.ticks = 10;
  std::string reference;
  for (const std::size_t p : {1u, 2u, 4u}) {
    config.workers = p;
    config.output = temp_file("eval_out_" + std::to_string(p) + ".csv");
    REQUIRE(run_quiet(config) == 0);
    const std::string text = io::read_text(config.output);
    const auto lines = io::parse_samples_csv(text);
    REQUIRE(lines.size() == 3);
    for (const auto& l : lines) CHECK(l.samples.size() == 31);
    if (p == 1) reference = text;
    CHECK(text == reference);
    std::filesystem::remove(config.output);
  }

  config.output_format = "vtk";
  config.output = temp_file("eval_out.vtk");
  REQUIRE(run_quiet(config) == 0);
  const io::VtkSummary vtk = io::check_vtk_polydata(io::read_text(config.output));
  CHECK(vtk.lines == 3);
  CHECK(vtk.points == 93);
  std::filesystem::remove(config.output);
  std::filesystem::remove(config.input);
}

TEST_CASE("smooth writes coefficients") {
  RunConfig config;
  config.command = Command::Smooth;
  config.input = write_dataset("smooth.csv", 2, 7);
  config.output = temp_file("coeffs.csv");
  REQUIRE(run_quiet(config) == 0);
  const std::string text = io::read_text(config.output);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 2 * 6 * 3);
  std::filesystem::remove(config.output);
  std::filesystem::remove(config.input);
}

TEST_CASE("errors map to documented exit codes") {
  RunConfig config;
  config.command = Command::Info;
  config.input = write_dataset("codes.csv", 2, 7);

  RunConfig bad_blend = config;
  bad_blend.alpha = 1.2;
  std::string err;
  CHECK(run_quiet(bad_blend, nullptr, &err) == cli::kConfigError);
  CHECK(err.find("alpha") != std::string::npos);

  RunConfig missing = config;
  missing.input = temp_file("does_not_exist.csv");
  CHECK(run_quiet(missing) == cli::kIoError);

  RunConfig disjoint = config;
  disjoint.grouping = GroupingMode::Disjoint;
  CHECK(run_quiet(disjoint) == cli::kIncompatibleLength);

  const auto garbage = temp_file("garbage.csv");
  io::write_text(garbage, "trajectory_id,point_index,x,y,z\n0,0,x,0,0\n");
  RunConfig parse = config;
  parse.input = garbage;
  CHECK(run_quiet(parse) == cli::kParseError);

  io::write_text(garbage, "trajectory_id,point_index,x,y,z\n0,0,0,0,0\n0,1,0,0,0\n0,2,0,0,0\n");
  CHECK(run_quiet(parse) == cli::kInvalidDataset);

  RunConfig no_ticks = config;
  no_ticks.command = Command::Eval;
  no_ticks.ticks = 0;
  CHECK(run_quiet(no_ticks) == cli::kConfigError);

  RunConfig dense = config;
  dense.command = Command::BenchSparse;
  dense.sizes = {100};
  dense.methods = {MatvecMethod::Dense};
  dense.dense_cap = 10;
  dense.repetitions = 1;
  CHECK(run_quiet(dense) == cli::kAllocationLimit);

  std::filesystem::remove(garbage);
  std::filesystem::remove(config.input);
  CHECK(cli::exit_code_help().find("8  numerical") != std::string::npos);
}

TEST_CASE("bench commands emit report CSVs") {
  RunConfig sparse;
  sparse.command = Command::BenchSparse;
  sparse.sizes = {10, 100};
  sparse.repetitions = 1;
  std::string out;
  REQUIRE(run_quiet(sparse, &out) == 0);
  CHECK(out.starts_with("M,method,wall_time_s,flops\n"));
  CHECK(std::count(out.begin(), out.end(), '\n') == 1 + 2 * 3);

  RunConfig scaling;
  scaling.command = Command::BenchScaling;
  scaling.trajectories = 10;
  scaling.points = 7;
  scaling.ticks = 5;
  scaling.worker_list = {1, 2};
  scaling.repetitions = 1;
  REQUIRE(run_quiet(scaling, &out) == 0);
  CHECK(out.starts_with("mode,P,M,segments,V,wall_time_s,speedup,efficiency\n"));
  CHECK(std::count(out.begin(), out.end(), '\n') == 3);

  scaling.scaling = ScalingMode::Weak;
  scaling.load = 6;
  scaling.trajectories = 4;
  std::string err;
  REQUIRE(run_quiet(scaling, &out, &err) == 0);
  CHECK(out.find("weak,2,4,") != std::string::npos);
  CHECK(err.find("ratio") != std::string::npos);
}
