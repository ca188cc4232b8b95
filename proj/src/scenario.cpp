#include "circswarm/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "circswarm/errors.hpp"
#include "circswarm/models.hpp"
#include "json.hpp"

namespace circswarm {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {"model", "n",    "lambda", "alpha", "beta_f", "beta_b", "m",      "mode",
                                          "steps", "dt",   "init",   "seed",  "points", "beacon", "outputs"};

double finite_number(const json& value, const std::string& field) {
  if (!value.is_number()) throw ConfigError(field, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

Complex parse_complex(const json& value, const std::string& field) {
  if (value.is_number()) return {finite_number(value, field), 0.0};
  if (value.is_array()) {
    if (value.size() != 2) throw ConfigError(field, "complex arrays must be [re, im]");
    return {finite_number(value[0], field), finite_number(value[1], field)};
  }
  if (value.is_object()) {
    if (value.contains("modulus") || value.contains("arg")) {
      if (!value.contains("modulus") || !value.contains("arg")) throw ConfigError(field, "polar form needs modulus and arg");
      const Complex z = std::polar(finite_number(value.at("modulus"), field), finite_number(value.at("arg"), field));
      if (!is_finite(z)) throw ConfigError(field, "must be finite");
      return z;
    }
    const double re = value.contains("re") ? finite_number(value.at("re"), field) : 0.0;
    const double im = value.contains("im") ? finite_number(value.at("im"), field) : 0.0;
    if (!value.contains("re") && !value.contains("im")) throw ConfigError(field, "complex objects need re/im or modulus/arg");
    return {re, im};
  }
  throw ConfigError(field, "expected a number, [re, im] or an object");
}

std::optional<Complex> optional_complex(const json& doc, const std::string& field) {
  if (!doc.contains(field)) return std::nullopt;
  return parse_complex(doc.at(field), field);
}

std::string required_string(const json& value, const std::string& field) {
  if (!value.is_string()) throw ConfigError(field, "expected a string");
  return value.get<std::string>();
}

std::uint64_t non_negative_integer(const json& value, const std::string& field) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer()) {
    if (value.get<std::int64_t>() < 0) throw ConfigError(field, "must be >= 0");
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  throw ConfigError(field, "expected a non-negative integer");
}

TimeMode parse_mode(const json& value, const std::string& field) {
  const std::string s = required_string(value, field);
  if (s == "discrete") return TimeMode::Discrete;
  if (s == "continuous") return TimeMode::Continuous;
  throw ConfigError(field, "unknown mode '" + s + "' (expected discrete or continuous)");
}

ComplexVector parse_points(const json& value, const std::string& field) {
  if (!value.is_array()) throw ConfigError(field, "expected an array of [x, y] pairs");
  ComplexVector out;
  out.reserve(value.size());
  for (const json& p : value) {
    if (!p.is_array() || p.size() != 2) throw ConfigError(field, "each point must be [x, y]");
    out.emplace_back(finite_number(p[0], field), finite_number(p[1], field));
  }
  return out;
}

void require_present(const std::optional<Complex>& value, const std::string& field, std::string_view model) {
  if (!value) throw ConfigError(field, "required for model " + std::string(model));
}

void parse_outputs(const json& value, OutputPaths& out) {
  if (!value.is_object()) throw ConfigError("outputs", "expected an object");
  for (const auto& [key, item] : value.items()) {
    if (key == "trajectory") {
      out.trajectory = required_string(item, "outputs.trajectory");
    } else if (key == "plot") {
      out.plot = required_string(item, "outputs.plot");
    } else if (key == "plot_style") {
      try {
        out.plot_style = parse_plot_style(required_string(item, "outputs.plot_style"));
      } catch (const ConfigError& e) {
        throw ConfigError("outputs.plot_style", e.what());
      }
    } else {
      throw ConfigError("outputs." + key, "unknown key");
    }
  }
}

void validate(const ScenarioConfig& c) {
  const std::string_view model = to_string(c.model);
  switch (c.model) {
    case ModelKind::Darboux:
      require_present(c.lambda, "lambda", model);
      break;
    case ModelKind::CentroidGathering:
      require_present(c.alpha, "alpha", model);
      if (c.beta_f.has_value() != c.beta_b.has_value()) {
        throw ConfigError(c.beta_f ? "beta_b" : "beta_f", "beta_f and beta_b must be given together");
      }
      if (c.beta_f) {
        if (c.lambda) throw ConfigError("lambda", "implied by beta_b/beta_f; do not set both");
        if (*c.beta_f == Complex{}) throw ConfigError("beta_f", "must be nonzero");
      } else {
        require_present(c.lambda, "lambda", model);
        if (*c.alpha == Complex{1.0, 0.0}) throw ConfigError("alpha", "alpha = 1 makes the normalized weights vanish");
      }
      break;
    case ModelKind::Custom:
      require_present(c.lambda, "lambda", model);
      if (!c.m) throw ConfigError("m", "required for model custom");
      if (c.m->size() != c.n) {
        throw ConfigError("m", "length " + std::to_string(c.m->size()) + " does not match n = " + std::to_string(c.n));
      }
      break;
  }
  if (c.init == InitKind::Explicit) {
    if (!c.points) throw ConfigError("points", "required when init is explicit");
    if (c.points->size() != c.n) {
      throw ConfigError("points", "expected " + std::to_string(c.n) + " points, got " + std::to_string(c.points->size()));
    }
  }
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Darboux: return "darboux";
    case ModelKind::CentroidGathering: return "centroid_gathering";
    case ModelKind::Custom: return "custom";
  }
  return "?";
}

std::string_view to_string(InitKind kind) {
  switch (kind) {
    case InitKind::RandomUniform: return "random_uniform";
    case InitKind::RegularPolygon: return "regular_polygon";
    case InitKind::Explicit: return "explicit";
  }
  return "?";
}

std::string_view to_string(PlotStyle style) {
  switch (style) {
    case PlotStyle::OverlayFirstStep: return "overlay_first_step";
    case PlotStyle::FullEvolution: return "full_evolution";
    case PlotStyle::FinalZoom: return "final_zoom";
  }
  return "?";
}

std::string_view to_string(TimeMode mode) { return mode == TimeMode::Discrete ? "discrete" : "continuous"; }

PlotStyle parse_plot_style(std::string_view name) {
  if (name == "overlay_first_step") return PlotStyle::OverlayFirstStep;
  if (name == "full_evolution") return PlotStyle::FullEvolution;
  if (name == "final_zoom") return PlotStyle::FinalZoom;
  throw ConfigError("style", "unknown plot style '" + std::string(name) +
                                 "' (expected overlay_first_step, full_evolution or final_zoom)");
}

void Trajectory::validate() const {
  if (frames.empty()) return;
  const std::size_t n = frames.front().size();
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].size() != n) throw InvalidArgument("trajectory frames must all have the same number of agents");
    if (i > 0 && !(frames[i].time > frames[i - 1].time)) {
      throw InvalidArgument("trajectory frame times must strictly increase");
    }
  }
}

ScenarioConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kKnownKeys.contains(key)) throw ConfigError(key, "unknown key");
  }

  ScenarioConfig c;
  if (!doc.contains("model")) throw ConfigError("model", "missing");
  const std::string model = required_string(doc.at("model"), "model");
  if (model == "darboux") {
    c.model = ModelKind::Darboux;
  } else if (model == "centroid_gathering") {
    c.model = ModelKind::CentroidGathering;
  } else if (model == "custom") {
    c.model = ModelKind::Custom;
  } else {
    throw ConfigError("model", "unknown model '" + model + "'");
  }

  if (!doc.contains("n")) throw ConfigError("n", "missing");
  c.n = static_cast<std::size_t>(non_negative_integer(doc.at("n"), "n"));
  if (c.n < 2) throw ConfigError("n", "need at least 2 agents");

  c.lambda = optional_complex(doc, "lambda");
  c.alpha = optional_complex(doc, "alpha");
  c.beta_f = optional_complex(doc, "beta_f");
  c.beta_b = optional_complex(doc, "beta_b");
  if (doc.contains("m")) {
    const json& m = doc.at("m");
    if (!m.is_array()) throw ConfigError("m", "expected an array of complex weights");
    ComplexVector weights;
    for (const json& w : m) weights.push_back(parse_complex(w, "m"));
    c.m = std::move(weights);
  }

  if (doc.contains("mode")) c.mode = parse_mode(doc.at("mode"), "mode");
  if (!doc.contains("steps")) throw ConfigError("steps", "missing");
  c.steps = non_negative_integer(doc.at("steps"), "steps");
  if (doc.contains("dt")) {
    c.dt = finite_number(doc.at("dt"), "dt");
    if (!(c.dt > 0.0)) throw ConfigError("dt", "must be positive");
  } else if (c.mode == TimeMode::Continuous) {
    throw ConfigError("dt", "required for continuous mode");
  }

  if (doc.contains("init")) {
    const std::string init = required_string(doc.at("init"), "init");
    if (init == "random_uniform") {
      c.init = InitKind::RandomUniform;
    } else if (init == "regular_polygon") {
      c.init = InitKind::RegularPolygon;
    } else if (init == "explicit") {
      c.init = InitKind::Explicit;
    } else {
      throw ConfigError("init", "unknown init '" + init + "'");
    }
  }
  if (doc.contains("seed")) c.seed = non_negative_integer(doc.at("seed"), "seed");
  if (doc.contains("points")) c.points = parse_points(doc.at("points"), "points");

  if (doc.contains("beacon")) {
    const json& b = doc.at("beacon");
    if (!b.is_object()) throw ConfigError("beacon", "expected an object with x, y and optional kind");
    if (!b.contains("x")) throw ConfigError("beacon.x", "missing");
    if (!b.contains("y")) throw ConfigError("beacon.y", "missing");
    BeaconConfig beacon{{finite_number(b.at("x"), "beacon.x"), finite_number(b.at("y"), "beacon.y")}, c.mode};
    if (b.contains("kind")) beacon.kind = parse_mode(b.at("kind"), "beacon.kind");
    if (beacon.kind != c.mode) throw ConfigError("beacon.kind", "must match the simulation mode");
    c.beacon = beacon;
  }
  if (doc.contains("outputs")) parse_outputs(doc.at("outputs"), c.outputs);

  validate(c);
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading config '" + path + "'");
  return parse_config(buffer.str());
}

FactorCirculant build_interaction(const ScenarioConfig& config) {
  switch (config.model) {
    case ModelKind::Darboux:
      return darboux(config.n, config.lambda.value());
    case ModelKind::CentroidGathering:
      if (config.beta_f) return centroid_gathering({config.n, config.alpha.value(), *config.beta_f, config.beta_b.value()});
      return normalized_gathering(config.n, config.alpha.value(), config.lambda.value());
    case ModelKind::Custom:
      return FactorCirculant(config.m.value(), config.lambda.value());
  }
  throw ConfigError("model", "unhandled model");
}

ComplexVector random_uniform_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  constexpr double kScale = 1.0 / static_cast<double>(std::uint64_t{1} << 53);
  auto draw = [&] { return static_cast<double>(engine() >> 11) * kScale; };
  ComplexVector out(n);
  for (Complex& p : out) {
    const double x = draw();
    const double y = draw();
    p = {x, y};
  }
  return out;
}

ComplexVector regular_polygon_points(std::size_t n) {
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  return out;
}

SwarmState initial_state(const ScenarioConfig& config) {
  switch (config.init) {
    case InitKind::RandomUniform: return SwarmState(random_uniform_points(config.n, config.seed));
    case InitKind::RegularPolygon: return SwarmState(regular_polygon_points(config.n));
    case InitKind::Explicit: return SwarmState(config.points.value());
  }
  throw ConfigError("init", "unhandled init");
}

namespace {

void advance(const ScenarioConfig& config, const FactorCirculant& phi, const SwarmState& start, Trajectory& traj) {
  if (config.mode == TimeMode::Discrete) {
    const std::optional<BeaconSystem> beacon =
        config.beacon ? std::optional(embed_beacon(phi, TimeMode::Discrete, config.beacon->position)) : std::nullopt;
    for (std::uint64_t step = 0; step < config.steps; ++step) {
      const SwarmState& prev = traj.frames.back();
      traj.frames.push_back(beacon ? step_beacon(*beacon, prev) : step_discrete(phi, prev));
    }
    return;
  }

  // Continuous frames are sampled from the closed-form flow of the initial
  // state, taken relative to the beacon when one is set.
  const Complex anchor = config.beacon ? config.beacon->position : Complex{};
  ComplexVector relative = start.positions;
  for (Complex& p : relative) p -= anchor;
  const SwarmState relative_start(std::move(relative));
  const Diagonalization diag = diagonalize(phi);
  for (std::uint64_t k = 1; k <= config.steps; ++k) {
    const double t = static_cast<double>(k) * config.dt;
    ComplexVector positions = evolve_continuous(diag, relative_start, t).positions;
    for (Complex& p : positions) p += anchor;
    traj.frames.emplace_back(std::move(positions), t);
  }
}

}  // namespace

Trajectory run_scenario(const ScenarioConfig& config) {
  const FactorCirculant phi = build_interaction(config);
  const SwarmState start = initial_state(config);
  Trajectory traj;
  traj.frames.reserve(config.steps + 1);
  traj.frames.push_back(start);

  try {
    advance(config, phi, start, traj);
  } catch (const InvalidArgument&) {
    throw NumericOverflow("state became non-finite after " + std::to_string(traj.frames.size() - 1) + " of " +
                          std::to_string(config.steps) + " steps");
  }
  return traj;
}

}  // namespace circswarm
