#include "circswarm/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "circswarm/errors.hpp"
#include "circswarm/trajectory_io.hpp"

namespace circswarm {

namespace {

constexpr std::string_view kFirstColor = "#d62728";
constexpr std::string_view kLaterColor = "#1f4fb4";

void require_frames(const Trajectory& traj) {
  if (traj.frames.empty()) throw InvalidArgument("cannot plot an empty trajectory");
  traj.validate();
}

std::string point(Complex p) { return format_double(p.real()) + "," + format_double(p.imag()); }

}  // namespace

std::vector<std::size_t> plotted_frames(const Trajectory& traj, PlotStyle style) {
  require_frames(traj);
  const std::size_t count = traj.frames.size();
  std::size_t first = 0;
  std::size_t last = count;
  switch (style) {
    case PlotStyle::OverlayFirstStep: last = std::min<std::size_t>(count, 2); break;
    case PlotStyle::FullEvolution: break;
    case PlotStyle::FinalZoom: first = count > kFinalZoomFrames ? count - kFinalZoomFrames : 0; break;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = first; i < last; ++i) out.push_back(i);
  return out;
}

Viewport plot_viewport(const Trajectory& traj, PlotStyle style) {
  double x_min = INFINITY, x_max = -INFINITY, y_min = INFINITY, y_max = -INFINITY;
  for (std::size_t i : plotted_frames(traj, style)) {
    for (Complex p : traj.frames[i].positions) {
      x_min = std::min(x_min, p.real());
      x_max = std::max(x_max, p.real());
      y_min = std::min(y_min, p.imag());
      y_max = std::max(y_max, p.imag());
    }
  }
  // A collapsed swarm still needs a visible box; scale the floor with the
  // coordinates so it stays resolvable in double precision.
  const double magnitude = std::max({std::abs(x_min), std::abs(x_max), std::abs(y_min), std::abs(y_max)});
  const double side = std::max({x_max - x_min, y_max - y_min, 1e-12, 1e-9 * magnitude});
  const double half = 0.5 * side * (1.0 + 2.0 * kViewportMargin);
  const double cx = 0.5 * (x_min + x_max);
  const double cy = 0.5 * (y_min + y_max);
  return {cx - half, cx + half, cy - half, cy + half};
}

void render_plot(const Trajectory& traj, PlotStyle style, std::ostream& out) {
  const std::vector<std::size_t> frames = plotted_frames(traj, style);
  const Viewport view = plot_viewport(traj, style);
  const double width = view.x_max - view.x_min;
  const double height = view.y_max - view.y_min;
  const double dot = 0.006 * width;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"";
  svg += format_double(view.x_min) + " " + format_double(-view.y_max) + " " + format_double(width) + " " +
         format_double(height) + "\">\n";
  svg += "<!-- style: " + std::string(to_string(style)) + ", frames " + std::to_string(frames.front()) + ".." +
         std::to_string(frames.back()) + " -->\n";
  svg += "<rect x=\"" + format_double(view.x_min) + "\" y=\"" + format_double(-view.y_max) + "\" width=\"" +
         format_double(width) + "\" height=\"" + format_double(height) + "\" fill=\"white\"/>\n";
  // World y grows upward; flip so the picture is not mirrored.
  svg += "<g transform=\"scale(1,-1)\">\n";
  for (std::size_t i : frames) {
    const SwarmState& frame = traj.frames[i];
    const std::string_view color = i == 0 ? kFirstColor : kLaterColor;
    if (frame.size() == 1) {
      svg += "<circle class=\"frame\" data-frame=\"" + std::to_string(i) + "\" cx=\"" +
             format_double(frame.positions[0].real()) + "\" cy=\"" + format_double(frame.positions[0].imag()) +
             "\" r=\"" + format_double(dot) + "\" fill=\"" + std::string(color) + "\"/>\n";
      continue;
    }
    svg += "<polygon class=\"frame\" data-frame=\"" + std::to_string(i) + "\" points=\"";
    for (std::size_t k = 0; k < frame.size(); ++k) {
      if (k > 0) svg += ' ';
      svg += point(frame.positions[k]);
    }
    svg += "\" fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  out << svg;
  if (!out) throw IoError("failed to write plot");
}

void render_plot(const Trajectory& traj, PlotStyle style, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  render_plot(traj, style, file);
  file.close();
  if (!file) throw IoError("failed to write '" + path + "'");
}

}  // namespace circswarm
