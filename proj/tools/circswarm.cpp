// circswarm: simulate, inspect and plot lambda-circulant swarms.
//
// Exit codes: 0 ok, 1 bad config or usage, 2 numeric failure (including a
// FAIL row from `verify`), 3 I/O error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "circswarm/errors.hpp"
#include "circswarm/plot.hpp"
#include "circswarm/report.hpp"
#include "circswarm/scenario.hpp"
#include "circswarm/trajectory_io.hpp"

namespace {

using namespace circswarm;

enum Exit { kOk = 0, kConfig = 1, kNumeric = 2, kIo = 3 };

int simulate(const std::string& config_path, const std::string& csv_path, const std::string& svg_path,
             const std::string& style) {
  const ScenarioConfig config = load_config(config_path);
  const Trajectory traj = run_scenario(config);
  const std::optional<std::string> csv = !csv_path.empty() ? std::optional(csv_path) : config.outputs.trajectory;
  const std::optional<std::string> svg = !svg_path.empty() ? std::optional(svg_path) : config.outputs.plot;
  if (csv) {
    write_trajectory(traj, *csv);
  } else {
    write_trajectory(traj, std::cout);
  }
  if (svg) render_plot(traj, style.empty() ? config.outputs.plot_style : parse_plot_style(style), *svg);
  return kOk;
}

int verify(const std::string& config_path) {
  const std::vector<CheckResult> checks = verify_scenario(load_config(config_path));
  std::cout << format_checks(checks);
  return all_passed(checks) ? kOk : kNumeric;
}

int plot(const std::string& csv_path, const std::string& style, const std::string& out_path) {
  const PlotStyle parsed = parse_plot_style(style);
  render_plot(read_trajectory(csv_path), parsed, out_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate and analyse swarms driven by lambda-factor circulant interactions."};
  app.require_subcommand(1);

  std::string config_path;
  std::string csv_path;
  std::string svg_path;
  std::string style;
  std::string plot_style = "full_evolution";
  std::string out_path;

  CLI::App* sim = app.add_subcommand("simulate", "run a scenario and write its trajectory (CSV to stdout by default)");
  sim->add_option("config", config_path, "scenario JSON")->required();
  sim->add_option("--csv", csv_path, "trajectory CSV path (overrides outputs.trajectory)");
  sim->add_option("--svg", svg_path, "plot SVG path (overrides outputs.plot)");
  sim->add_option("--style", style, "overlay_first_step, full_evolution or final_zoom");

  CLI::App* spec = app.add_subcommand("spectrum", "print eigenvalues, dominant modes and the predicted limit");
  spec->add_option("config", config_path, "scenario JSON")->required();

  CLI::App* ver = app.add_subcommand("verify", "run numerical self-checks and print a pass/fail table");
  ver->add_option("config", config_path, "scenario JSON")->required();

  CLI::App* plt = app.add_subcommand("plot", "render a trajectory CSV as SVG");
  plt->add_option("trajectory", csv_path, "trajectory CSV")->required();
  plt->add_option("--style", plot_style, "overlay_first_step, full_evolution or final_zoom");
  plt->add_option("-o,--output", out_path, "output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*sim) return simulate(config_path, csv_path, svg_path, style);
    if (*spec) {
      std::cout << spectrum_report(load_config(config_path));
      return kOk;
    }
    if (*ver) return verify(config_path);
    if (*plt) return plot(csv_path, plot_style, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const DegenerateFactor& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const SingularSpectrum& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const NumericOverflow& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
