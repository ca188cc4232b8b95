#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circswarm/circulant.hpp"
#include "circswarm/complex.hpp"
#include "circswarm/dynamics.hpp"

namespace circswarm {

enum class ModelKind { Darboux, CentroidGathering, Custom };
enum class InitKind { RandomUniform, RegularPolygon, Explicit };
enum class PlotStyle { OverlayFirstStep, FullEvolution, FinalZoom };

std::string_view to_string(ModelKind kind);
std::string_view to_string(InitKind kind);
std::string_view to_string(PlotStyle style);
std::string_view to_string(TimeMode mode);

/// Throws ConfigError naming "style" for unknown names.
PlotStyle parse_plot_style(std::string_view name);

struct BeaconConfig {
  Complex position;
  TimeMode kind;
};

struct OutputPaths {
  std::optional<std::string> trajectory;
  std::optional<std::string> plot;
  PlotStyle plot_style = PlotStyle::FullEvolution;
};

struct ScenarioConfig {
  ModelKind model = ModelKind::Darboux;
  std::size_t n = 0;
  std::optional<Complex> lambda;
  std::optional<Complex> alpha;
  std::optional<Complex> beta_f;
  std::optional<Complex> beta_b;
  std::optional<ComplexVector> m;
  TimeMode mode = TimeMode::Discrete;
  std::uint64_t steps = 0;
  double dt = 1.0;
  InitKind init = InitKind::RandomUniform;
  std::uint64_t seed = 0;
  std::optional<ComplexVector> points;
  std::optional<BeaconConfig> beacon;
  OutputPaths outputs;
};

/// Frames t = 0..steps of one run. Times strictly increase and every
/// frame has the same number of agents.
struct Trajectory {
  std::vector<SwarmState> frames;

  /// Throws InvalidArgument if the frame invariants do not hold.
  void validate() const;
  std::size_t agents() const { return frames.empty() ? 0 : frames.front().size(); }
};

/// Parses and validates a JSON scenario. Complex values may be written as
/// a number, a [re, im] pair, {"re": .., "im": ..} or {"modulus": .., "arg": ..}.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

FactorCirculant build_interaction(const ScenarioConfig& config);

/// Uniform samples in [0,1]^2 from mt19937_64 seeded with `seed`; each
/// 64-bit draw keeps its top 53 bits, x before y for every agent.
ComplexVector random_uniform_points(std::size_t n, std::uint64_t seed);
/// Vertices exp(2πik/N) of the unit regular polygon.
ComplexVector regular_polygon_points(std::size_t n);

SwarmState initial_state(const ScenarioConfig& config);

/// Deterministic in the config. Discrete runs step the map once per frame;
/// continuous runs sample the closed-form flow at t = k·dt.
Trajectory run_scenario(const ScenarioConfig& config);

}  // namespace circswarm
