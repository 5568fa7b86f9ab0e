#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <random>

#include "doctest.h"
#include "trajsmooth/error.hpp"
#include "trajsmooth/io.hpp"
#include "trajsmooth/synthetic.hpp"

using namespace trajsmooth;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("trajsmooth_test_" + name);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("CSV dataset parsing") {
  const TrajectorySet one = io::parse_trajectories_csv(
      "trajectory_id,point_index,x,y,z\n"
      "5,0,0,0,0\n5,1,1,0.5,-1\n5,2,2,1,-2\n5,3,3,1.5,-3\n");
  CHECK(one.trajectory_count() == 1);
  CHECK(one.points_per_trajectory() == 4);
  CHECK(one[0].id == 5);
  CHECK(one[0].points[3] == Point3{3.0, 1.5, -3.0});

  CHECK(code_of([] {
          io::parse_trajectories_csv("trajectory_id,point_index,x,y,z\n0,0,0,0,0\n0,1,0,0,0\n0,3,0,0,0\n");
        }) == ErrorCode::GapError);
  CHECK(code_of([] { io::parse_trajectories_csv("id,i,x,y,z\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_trajectories_csv("trajectory_id,point_index,x,y,z\n0,0,abc,0,0\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_trajectories_csv("trajectory_id,point_index,x,y,z\n0,0,1,2\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          io::parse_trajectories_csv(
              "trajectory_id,point_index,x,y,z\n0,0,0,0,0\n1,0,0,0,0\n0,1,0,0,0\n");
        }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_trajectories_csv("trajectory_id,point_index,x,y,z\n"); }) == ErrorCode::Empty);
  CHECK(code_of([] {
          io::parse_trajectories_csv("trajectory_id,point_index,x,y,z\n0,0,0,0,0\n0,1,0,0,0\n0,2,0,0,0\n");
        }) == ErrorCode::TooShort);
}

TEST_CASE("binary dataset parsing") {
  const TrajectorySet set = make_random_set(2, 4, 1);
  const auto bytes = io::format_trajectories_binary(set);
  CHECK(bytes.size() == 12 + 24 * 8);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "TRJ1");
  const TrajectorySet back = io::parse_trajectories_binary(bytes);
  CHECK(back.trajectory_count() == 2);
  CHECK(back.points_per_trajectory() == 4);
  CHECK(back == set);

  auto bad_magic = bytes;
  bad_magic[3] = '2';
  CHECK(code_of([&] { io::parse_trajectories_binary(bad_magic); }) == ErrorCode::ParseError);
  auto truncated = bytes;
  truncated.pop_back();
  CHECK(code_of([&] { io::parse_trajectories_binary(truncated); }) == ErrorCode::ParseError);
}

TEST_CASE("datasets round-trip bit-exactly through files in both formats") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  std::vector<Trajectory> raw(6);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i].id = i;
    for (int k = 0; k < 10; ++k) raw[i].points.push_back({d(rng), d(rng) * 1e-300, d(rng) / 3.0});
  }
  raw[0].points[0] = {-0.0, 5e-324, 1.7976931348623157e308};
  const TrajectorySet set = validate_set(raw);

  const auto csv = temp_file("rt.csv");
  const auto bin = temp_file("rt.bin");
  io::write_trajectories(csv, set, io::DatasetFormat::Csv);
  io::write_trajectories(bin, set, io::DatasetFormat::Binary);
  const TrajectorySet from_csv = io::read_trajectories(csv, io::DatasetFormat::Csv);
  const TrajectorySet from_bin = io::read_trajectories(bin, io::DatasetFormat::Binary);
  CHECK(from_csv == set);
  CHECK(from_bin == set);
  CHECK(std::signbit(from_csv[0].points[0].x));
  CHECK(std::signbit(from_bin[0].points[0].x));
  std::filesystem::remove(csv);
  std::filesystem::remove(bin);

  CHECK(code_of([] { io::read_trajectories("/nonexistent/trajsmooth.csv", io::DatasetFormat::Csv); }) ==
        ErrorCode::IoError);
}

TEST_CASE("samples CSV round-trips and VTK passes the structural check") {
  const std::vector<Polyline> lines{
      {3, std::vector<Point3>(31, Point3{0.1, 0.2, 0.3})},
      {4, {{1, 2, 3}, {4, 5, 6}}},
  };
  const std::string csv = io::format_samples_csv(lines);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 33);
  CHECK(io::parse_samples_csv(csv) == lines);

  const std::vector<Polyline> single{lines[0]};
  const io::VtkSummary one = io::check_vtk_polydata(io::format_samples_vtk(single));
  CHECK(one.points == 31);
  CHECK(one.lines == 1);
  CHECK(one.line_lengths == std::vector<std::size_t>{31});

  const io::VtkSummary two = io::check_vtk_polydata(io::format_samples_vtk(lines));
  CHECK(two.points == 33);
  CHECK(two.line_lengths == std::vector<std::size_t>{31, 2});

  std::string broken = io::format_samples_vtk(lines);
  broken.replace(broken.find("POINTS 33"), 9, "POINTS 34");
  CHECK_THROWS_AS(io::check_vtk_polydata(broken), Error);
  std::string bad_index = io::format_samples_vtk(lines);
  bad_index.replace(bad_index.rfind("32"), 2, "40");
  CHECK_THROWS_AS(io::check_vtk_polydata(bad_index), Error);

  CHECK_THROWS_AS(io::write_samples(temp_file("empty.csv"), std::vector<Polyline>{}, io::SampleFormat::Csv), Error);
}

TEST_CASE("report CSV layouts") {
  ScalingReport report;
  for (const std::size_t p : {1u, 2u, 4u}) {
    ScalingRow row;
    row.workers = p;
    row.trajectories = 10;
    row.segments = 120;
    row.ticks = 100;
    row.wall_time_s = 1.0 / static_cast<double>(p);
    row.speedup = static_cast<double>(p);
    row.efficiency = 1.0;
    report.rows.push_back(row);
  }
  const std::string csv = io::format_report_csv(report);
  CHECK(csv.starts_with("mode,P,M,segments,V,wall_time_s,speedup,efficiency\n"));
  CHECK(csv.find("strong,1,10,120,100,1,1,1\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  std::vector<SparseBenchRow> rows;
  for (const std::size_t m : {10u, 100u, 1000u})
    for (const auto method : {MatvecMethod::Block, MatvecMethod::Dense}) rows.push_back({m, method, 0.5, 20 * m});
  const std::string sparse = io::format_report_csv(rows);
  CHECK(sparse.starts_with("M,method,wall_time_s,flops\n"));
  CHECK(std::count(sparse.begin(), sparse.end(), '\n') == 7);
  CHECK(sparse.find("1000,dense,0.5,20000\n") != std::string::npos);

  CHECK_THROWS_AS(io::write_report(temp_file("r.csv"), ScalingReport{}), Error);
}

TEST_CASE("coefficient CSV lists three axes per segment") {
  const TrajectorySet set = make_synthetic_set(2, 7, 1);
  const BuildResult built = build_set(set, {});
  const std::string csv = io::format_coefficients_csv(built.curves);
  CHECK(csv.starts_with("trajectory_id,segment_index,axis,a,b,c,d\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 6 * 3);
  CHECK(csv.find("\n1,5,z,") != std::string::npos);
}
