#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "circswarm/scenario.hpp"

namespace circswarm {

/// World-coordinate rectangle shown by a plot.
struct Viewport {
  double x_min;
  double x_max;
  double y_min;
  double y_max;

  bool strictly_contains(Complex p) const noexcept {
    return p.real() > x_min && p.real() < x_max && p.imag() > y_min && p.imag() < y_max;
  }
};

inline constexpr std::size_t kFinalZoomFrames = 5;
inline constexpr double kViewportMargin = 0.05;

/// Frames drawn for a style: the first two, all of them, or the last five.
std::vector<std::size_t> plotted_frames(const Trajectory& traj, PlotStyle style);

/// Square bounding box of the plotted frames, padded by 5% of its side.
Viewport plot_viewport(const Trajectory& traj, PlotStyle style);

/// Standalone SVG. Each plotted frame is drawn as a closed polygon through
/// the agents in index order (dot markers only for a single agent); the
/// first frame is red and later frames blue.
void render_plot(const Trajectory& traj, PlotStyle style, std::ostream& out);
void render_plot(const Trajectory& traj, PlotStyle style, const std::string& path);

}  // namespace circswarm
