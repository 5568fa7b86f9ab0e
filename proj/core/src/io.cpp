#include "trajsmooth/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string_view>

#include "trajsmooth/error.hpp"

namespace trajsmooth::io {

namespace {

constexpr std::string_view kDatasetHeader = "trajectory_id,point_index,x,y,z";
constexpr std::string_view kSamplesHeader = "trajectory_id,sample_index,x,y,z";
constexpr std::array<char, 4> kMagic{'T', 'R', 'J', '1'};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(trim(text.substr(0, nl)));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto pos = line.find(sep);
    fields.push_back(trim(line.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return fields;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    parse_fail(line_no, "malformed number '" + std::string(field) + "'");
  }
  return value;
}

// Reads `id,index,x,y,z` rows into per-id sequences, enforcing grouping and
// dense indices.
std::vector<Trajectory> parse_indexed_rows(const std::string& text, std::string_view header,
                                           bool enforce_gaps) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front() != header) {
    throw Error(ErrorCode::ParseError, "expected header '" + std::string(header) + "'");
  }
  std::vector<Trajectory> out;
  std::set<std::uint64_t> seen;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto f = split_fields(lines[n], ',');
    if (f.size() != 5) {
      parse_fail(n + 1, "expected 5 fields, got " + std::to_string(f.size()));
    }
    const auto id = parse_number<std::uint64_t>(f[0], n + 1);
    const auto index = parse_number<std::uint64_t>(f[1], n + 1);
    const Point3 p{parse_number<double>(f[2], n + 1), parse_number<double>(f[3], n + 1),
                   parse_number<double>(f[4], n + 1)};
    if (out.empty() || out.back().id != id) {
      if (!seen.insert(id).second) {
        parse_fail(n + 1, "rows of trajectory " + std::to_string(id) + " are not contiguous");
      }
      out.push_back({id, {}});
    }
    auto& pts = out.back().points;
    if (index > pts.size()) {
      if (enforce_gaps) {
        throw Error(ErrorCode::GapError, "line " + std::to_string(n + 1) + ": trajectory " +
                                             std::to_string(id) + " skips index " +
                                             std::to_string(pts.size()));
      }
    }
    if (index != pts.size()) {
      parse_fail(n + 1, "index " + std::to_string(index) + " out of order, expected " +
                            std::to_string(pts.size()));
    }
    pts.push_back(p);
  }
  return out;
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFFu));
}

std::uint32_t get_u32(std::span<const unsigned char> b) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

void put_f64(std::vector<unsigned char>& out, double d) {
  const auto bits = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>((bits >> (8 * i)) & 0xFFu));
}

double get_f64(std::span<const unsigned char> b) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[static_cast<std::size_t>(i)];
  return std::bit_cast<double>(bits);
}

constexpr std::string_view axis_name(std::size_t a) {
  return a == 0 ? "x" : (a == 1 ? "y" : "z");
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out.flush()) {
    throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
  }
}

TrajectorySet parse_trajectories_csv(const std::string& text) {
  return validate_set(parse_indexed_rows(text, kDatasetHeader, true));
}

std::string format_trajectories_csv(const TrajectorySet& set) {
  std::string out(kDatasetHeader);
  out += '\n';
  for (const auto& tr : set.trajectories()) {
    for (std::size_t k = 0; k < tr.points.size(); ++k) {
      const Point3& p = tr.points[k];
      out += std::to_string(tr.id) + ',' + std::to_string(k) + ',' + format_double(p.x) + ',' +
             format_double(p.y) + ',' + format_double(p.z) + '\n';
    }
  }
  return out;
}

TrajectorySet parse_trajectories_binary(std::span<const unsigned char> bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw Error(ErrorCode::ParseError, "missing TRJ1 magic");
  }
  const std::uint64_t m = get_u32(bytes.subspan(4, 4));
  const std::uint64_t s = get_u32(bytes.subspan(8, 4));
  const std::uint64_t expected = 12 + m * s * 24;
  if (bytes.size() != expected) {
    throw Error(ErrorCode::ParseError, "binary dataset has " + std::to_string(bytes.size()) +
                                           " bytes, header implies " + std::to_string(expected));
  }
  std::vector<Trajectory> raw(m);
  std::size_t offset = 12;
  for (std::uint64_t i = 0; i < m; ++i) {
    raw[i].id = i;
    raw[i].points.resize(s);
    for (auto& p : raw[i].points) {
      for (std::size_t a = 0; a < kAxes; ++a) {
        p[a] = get_f64(bytes.subspan(offset, 8));
        offset += 8;
      }
    }
  }
  return validate_set(std::move(raw));
}

std::vector<unsigned char> format_trajectories_binary(const TrajectorySet& set) {
  std::vector<unsigned char> out(kMagic.begin(), kMagic.end());
  out.reserve(12 + set.trajectory_count() * set.points_per_trajectory() * 24);
  put_u32(out, static_cast<std::uint32_t>(set.trajectory_count()));
  put_u32(out, static_cast<std::uint32_t>(set.points_per_trajectory()));
  for (const auto& tr : set.trajectories()) {
    for (const auto& p : tr.points) {
      put_f64(out, p.x);
      put_f64(out, p.y);
      put_f64(out, p.z);
    }
  }
  return out;
}

TrajectorySet read_trajectories(const std::filesystem::path& path, DatasetFormat format) {
  const std::string text = read_text(path);
  if (format == DatasetFormat::Csv) {
    return parse_trajectories_csv(text);
  }
  const auto* data = reinterpret_cast<const unsigned char*>(text.data());
  return parse_trajectories_binary(std::span<const unsigned char>(data, text.size()));
}

void write_trajectories(const std::filesystem::path& path, const TrajectorySet& set, DatasetFormat format) {
  if (format == DatasetFormat::Csv) {
    write_text(path, format_trajectories_csv(set));
    return;
  }
  const auto bytes = format_trajectories_binary(set);
  write_text(path, std::string(bytes.begin(), bytes.end()));
}

std::string format_samples_csv(std::span<const Polyline> polylines) {
  std::string out(kSamplesHeader);
  out += '\n';
  for (const auto& line : polylines) {
    for (std::size_t k = 0; k < line.samples.size(); ++k) {
      const Point3& p = line.samples[k];
      out += std::to_string(line.trajectory_id) + ',' + std::to_string(k) + ',' + format_double(p.x) +
             ',' + format_double(p.y) + ',' + format_double(p.z) + '\n';
    }
  }
  return out;
}

std::vector<Polyline> parse_samples_csv(const std::string& text) {
  std::vector<Polyline> out;
  for (auto& tr : parse_indexed_rows(text, kSamplesHeader, false)) {
    out.push_back({tr.id, std::move(tr.points)});
  }
  return out;
}

std::string format_samples_vtk(std::span<const Polyline> polylines) {
  std::size_t total = 0;
  for (const auto& line : polylines) total += line.samples.size();
  std::string out =
      "# vtk DataFile Version 3.0\n"
      "trajsmooth polylines\n"
      "ASCII\n"
      "DATASET POLYDATA\n";
  out += "POINTS " + std::to_string(total) + " double\n";
  for (const auto& line : polylines) {
    for (const auto& p : line.samples) {
      out += format_double(p.x) + ' ' + format_double(p.y) + ' ' + format_double(p.z) + '\n';
    }
  }
  out += "LINES " + std::to_string(polylines.size()) + ' ' + std::to_string(total + polylines.size()) + '\n';
  std::size_t next = 0;
  for (const auto& line : polylines) {
    out += std::to_string(line.samples.size());
    for (std::size_t k = 0; k < line.samples.size(); ++k) {
      out += ' ' + std::to_string(next++);
    }
    out += '\n';
  }
  return out;
}

void write_samples(const std::filesystem::path& path, std::span<const Polyline> polylines,
                   SampleFormat format) {
  if (polylines.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no polylines to write");
  }
  write_text(path, format == SampleFormat::Csv ? format_samples_csv(polylines)
                                               : format_samples_vtk(polylines));
}

VtkSummary check_vtk_polydata(const std::string& text) {
  const auto lines = split_lines(text);
  std::size_t n = 0;
  const auto next_line = [&]() -> std::string_view {
    if (n >= lines.size()) {
      throw Error(ErrorCode::ParseError, "unexpected end of VTK file");
    }
    return lines[n++];
  };
  if (!next_line().starts_with("# vtk DataFile Version")) {
    parse_fail(n, "missing VTK version header");
  }
  next_line();  // title
  if (next_line() != "ASCII") parse_fail(n, "expected ASCII");
  if (next_line() != "DATASET POLYDATA") parse_fail(n, "expected DATASET POLYDATA");

  auto tokens = split_whitespace(next_line());
  if (tokens.size() != 3 || tokens[0] != "POINTS") parse_fail(n, "expected POINTS <n> <type>");
  VtkSummary summary;
  summary.points = parse_number<std::size_t>(tokens[1], n);
  std::size_t coords = 0;
  while (coords < 3 * summary.points) {
    for (const auto tok : split_whitespace(next_line())) {
      parse_number<double>(tok, n);
      ++coords;
    }
  }
  if (coords != 3 * summary.points) {
    parse_fail(n, "POINTS declares " + std::to_string(summary.points) + " points but " +
                      std::to_string(coords) + " coordinates follow");
  }

  tokens = split_whitespace(next_line());
  if (tokens.size() != 3 || tokens[0] != "LINES") parse_fail(n, "expected LINES <n> <size>");
  summary.lines = parse_number<std::size_t>(tokens[1], n);
  const auto declared_size = parse_number<std::size_t>(tokens[2], n);
  std::size_t size = 0;
  for (std::size_t l = 0; l < summary.lines; ++l) {
    tokens = split_whitespace(next_line());
    if (tokens.empty()) parse_fail(n, "empty LINES entry");
    const auto count = parse_number<std::size_t>(tokens[0], n);
    if (tokens.size() != count + 1) parse_fail(n, "LINES entry length does not match its count");
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      if (parse_number<std::size_t>(tokens[k], n) >= summary.points) {
        parse_fail(n, "LINES index out of range");
      }
    }
    summary.line_lengths.push_back(count);
    size += count + 1;
  }
  if (size != declared_size) {
    parse_fail(n, "LINES size field " + std::to_string(declared_size) + " but entries total " +
                      std::to_string(size));
  }
  while (n < lines.size()) {
    if (!lines[n++].empty()) parse_fail(n, "trailing content after LINES block");
  }
  return summary;
}

std::string format_coefficients_csv(std::span<const std::vector<SegmentCurve>> curves) {
  std::string out = "trajectory_id,segment_index,axis,a,b,c,d\n";
  for (const auto& trajectory : curves) {
    for (std::size_t s = 0; s < trajectory.size(); ++s) {
      const SegmentCurve& seg = trajectory[s];
      for (std::size_t a = 0; a < kAxes; ++a) {
        const ScalarCubic c = seg.v.axis(a);
        out += std::to_string(seg.spec.trajectory_id) + ',' + std::to_string(s) + ',';
        out += axis_name(a);
        out += ',' + format_double(c.a) + ',' + format_double(c.b) + ',' + format_double(c.c) + ',' +
               format_double(c.d) + '\n';
      }
    }
  }
  return out;
}

void write_coefficients(const std::filesystem::path& path,
                        std::span<const std::vector<SegmentCurve>> curves) {
  write_text(path, format_coefficients_csv(curves));
}

std::string format_report_csv(const ScalingReport& report) {
  std::string out = "mode,P,M,segments,V,wall_time_s,speedup,efficiency\n";
  for (const auto& row : report.rows) {
    out += to_string(row.mode) + ',' + std::to_string(row.workers) + ',' +
           std::to_string(row.trajectories) + ',' + std::to_string(row.segments) + ',' +
           std::to_string(row.ticks) + ',' + format_double(row.wall_time_s) + ',' +
           format_double(row.speedup) + ',' + format_double(row.efficiency) + '\n';
  }
  return out;
}

std::string format_report_csv(std::span<const SparseBenchRow> rows) {
  std::string out = "M,method,wall_time_s,flops\n";
  for (const auto& row : rows) {
    out += std::to_string(row.blocks) + ',' + to_string(row.method) + ',' +
           format_double(row.wall_time_s) + ',' + std::to_string(row.flops) + '\n';
  }
  return out;
}

void write_report(const std::filesystem::path& path, const ScalingReport& report) {
  if (report.rows.empty()) {
    throw Error(ErrorCode::InvalidArgument, "scaling report has no rows");
  }
  write_text(path, format_report_csv(report));
}

void write_report(const std::filesystem::path& path, std::span<const SparseBenchRow> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::InvalidArgument, "sparse benchmark report has no rows");
  }
  write_text(path, format_report_csv(rows));
}

}  // namespace trajsmooth::io
