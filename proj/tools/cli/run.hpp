#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trajsmooth/builder.hpp"
#include "trajsmooth/error.hpp"
#include "trajsmooth/io.hpp"
#include "trajsmooth/parallel.hpp"

namespace trajsmooth::cli {

enum class Command { Smooth, Eval, BenchScaling, BenchSparse, Info, Generate };

// Exit statuses, also listed in --help.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kConfigError = 2,
  kIoError = 3,
  kParseError = 4,
  kInvalidDataset = 5,
  kIncompatibleLength = 6,
  kAllocationLimit = 7,
  kNumericalError = 8,
};

struct RunConfig {
  Command command = Command::Info;

  std::filesystem::path input;
  io::DatasetFormat input_format = io::DatasetFormat::Csv;
  std::filesystem::path output;
  std::string output_format = "csv";

  double alpha = 0.5;
  double beta = 0.5;
  SeedMode seed_mode = SeedMode::BezierStart;
  GroupingMode grouping = GroupingMode::Overlap;
  std::size_t ticks = 100;
  std::size_t workers = available_cores();
  std::size_t dense_cap = kDefaultDenseCap;

  // bench-scaling
  ScalingMode scaling = ScalingMode::Strong;
  std::vector<std::size_t> worker_list{1, 2, 4};
  std::size_t load = 1050;
  std::size_t repetitions = 3;
  // Synthetic problem size; strong default 2000 x 13, weak default 8 rows.
  std::optional<std::size_t> trajectories;
  std::size_t points = 13;
  std::uint64_t seed = 1;

  // bench-sparse
  std::vector<std::size_t> sizes{10, 100, 1000};
  std::vector<MatvecMethod> methods{MatvecMethod::Block, MatvecMethod::Csr, MatvecMethod::Dense};
};

/// Throws Error(InvalidArgument) describing the first invalid field.
void validate(const RunConfig& config);

/// Executes one command; diagnostics go to `err`, human-readable output to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Maps a library error to its documented exit status.
int exit_code_for(ErrorCode code) noexcept;

std::string exit_code_help();

}  // namespace trajsmooth::cli
