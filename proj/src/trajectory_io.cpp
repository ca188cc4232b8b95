#include "circswarm/trajectory_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "circswarm/errors.hpp"

namespace circswarm {

namespace {

constexpr std::string_view kHeader = "t,agent,x,y";

double parse_double(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw IoError("trajectory line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

std::size_t parse_index(std::string_view field, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw IoError("trajectory line " + std::to_string(line) + ": bad agent index '" + std::string(field) + "'");
  }
  return value;
}

std::array<std::string_view, 4> split_row(std::string_view row, std::size_t line) {
  std::array<std::string_view, 4> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t comma = row.find(',', start);
    if ((comma == std::string_view::npos) != (i == 3)) {
      throw IoError("trajectory line " + std::to_string(line) + ": expected 4 comma-separated fields");
    }
    out[i] = row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw IoError("format_double: buffer too small");
  return {buf.data(), ptr};
}

void write_trajectory(const Trajectory& traj, std::ostream& out) {
  traj.validate();
  std::string buffer;
  buffer.append(kHeader).push_back('\n');
  for (const SwarmState& frame : traj.frames) {
    const std::string t = format_double(frame.time);
    for (std::size_t k = 0; k < frame.size(); ++k) {
      buffer += t;
      buffer += ',';
      buffer += std::to_string(k);
      buffer += ',';
      buffer += format_double(frame.positions[k].real());
      buffer += ',';
      buffer += format_double(frame.positions[k].imag());
      buffer += '\n';
    }
  }
  out << buffer;
  if (!out) throw IoError("failed to write trajectory");
}

void write_trajectory(const Trajectory& traj, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_trajectory(traj, file);
  file.close();
  if (!file) throw IoError("failed to write '" + path + "'");
}

Trajectory read_trajectory(std::istream& in) {
  std::string row;
  if (!std::getline(in, row)) throw IoError("trajectory is empty");
  if (!row.empty() && row.back() == '\r') row.pop_back();
  if (row != kHeader) throw IoError("trajectory header must be '" + std::string(kHeader) + "'");

  Trajectory traj;
  ComplexVector positions;
  double time = 0.0;
  std::size_t line = 1;
  auto flush = [&] {
    if (positions.empty()) return;
    try {
      traj.frames.emplace_back(std::move(positions), time);
    } catch (const InvalidArgument& e) {
      throw IoError("trajectory frame at t=" + format_double(time) + ": " + e.what());
    }
    positions.clear();
  };

  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    const auto fields = split_row(row, line);
    const double t = parse_double(fields[0], line);
    const std::size_t agent = parse_index(fields[1], line);
    const Complex p{parse_double(fields[2], line), parse_double(fields[3], line)};
    if (!positions.empty() && t != time) flush();
    if (positions.empty()) time = t;
    if (agent != positions.size()) {
      throw IoError("trajectory line " + std::to_string(line) + ": agent " + std::to_string(agent) +
                    " out of order (expected " + std::to_string(positions.size()) + ")");
    }
    positions.push_back(p);
  }
  if (in.bad()) throw IoError("read error while parsing trajectory");
  flush();
  if (traj.frames.empty()) throw IoError("trajectory has no rows");

  try {
    traj.validate();
  } catch (const InvalidArgument& e) {
    throw IoError(std::string("inconsistent trajectory: ") + e.what());
  }
  return traj;
}

Trajectory read_trajectory(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  return read_trajectory(file);
}

}  // namespace circswarm
