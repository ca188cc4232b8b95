#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "circswarm/scenario.hpp"

namespace circswarm {

/// %.17g-style decimal, independent of the global locale.
std::string format_double(double value);

/// CSV with header `t,agent,x,y`, one row per (frame, agent), ordered by
/// time then agent.
void write_trajectory(const Trajectory& traj, std::ostream& out);
void write_trajectory(const Trajectory& traj, const std::string& path);

/// Inverse of write_trajectory. Throws IoError on malformed input.
Trajectory read_trajectory(std::istream& in);
Trajectory read_trajectory(const std::string& path);

}  // namespace circswarm
