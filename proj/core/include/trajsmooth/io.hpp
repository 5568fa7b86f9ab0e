#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "trajsmooth/builder.hpp"
#include "trajsmooth/model.hpp"
#include "trajsmooth/parallel.hpp"
#include "trajsmooth/sparse.hpp"

namespace trajsmooth::io {

enum class DatasetFormat { Csv, Binary };
enum class SampleFormat { Csv, VtkPolyline };

// Dataset files.
//
// CSV: header `trajectory_id,point_index,x,y,z`; rows grouped by trajectory,
// point_index ascending and dense from 0.
// Binary: "TRJ1", uint32 M, uint32 S, then M*S (x, y, z) little-endian
// float64 triples, trajectory-major. Trajectory ids are implicit (0..M-1).

/// Throws ParseError, GapError, IoError, or any validate_set error.
TrajectorySet read_trajectories(const std::filesystem::path& path, DatasetFormat format);
void write_trajectories(const std::filesystem::path& path, const TrajectorySet& set, DatasetFormat format);

TrajectorySet parse_trajectories_csv(const std::string& text);
std::string format_trajectories_csv(const TrajectorySet& set);
TrajectorySet parse_trajectories_binary(std::span<const unsigned char> bytes);
std::vector<unsigned char> format_trajectories_binary(const TrajectorySet& set);

/// Stitched samples as CSV (`trajectory_id,sample_index,x,y,z`) or legacy VTK
/// ASCII polydata with one polyline per trajectory.
void write_samples(const std::filesystem::path& path, std::span<const Polyline> polylines,
                   SampleFormat format);
std::string format_samples_csv(std::span<const Polyline> polylines);
std::string format_samples_vtk(std::span<const Polyline> polylines);
std::vector<Polyline> parse_samples_csv(const std::string& text);

struct VtkSummary {
  std::size_t points = 0;
  std::size_t lines = 0;
  std::vector<std::size_t> line_lengths;
};

/// Line-oriented structural check of a legacy VTK polydata file: header,
/// POINTS count equal to the emitted triples, every LINES index in range.
/// Throws ParseError describing the first violation.
VtkSummary check_vtk_polydata(const std::string& text);

/// Per-segment blended coefficients: `trajectory_id,segment_index,axis,a,b,c,d`.
std::string format_coefficients_csv(std::span<const std::vector<SegmentCurve>> curves);
void write_coefficients(const std::filesystem::path& path,
                        std::span<const std::vector<SegmentCurve>> curves);

/// `mode,P,M,segments,V,wall_time_s,speedup,efficiency`.
std::string format_report_csv(const ScalingReport& report);
/// `M,method,wall_time_s,flops`.
std::string format_report_csv(std::span<const SparseBenchRow> rows);
void write_report(const std::filesystem::path& path, const ScalingReport& report);
void write_report(const std::filesystem::path& path, std::span<const SparseBenchRow> rows);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace trajsmooth::io
