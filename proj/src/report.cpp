#include "circswarm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "circswarm/asymptotics.hpp"
#include "circswarm/errors.hpp"
#include "circswarm/trajectory_io.hpp"

namespace circswarm {

namespace {

constexpr double kReconstructionTol = 1e-10;
constexpr double kTransformTol = 1e-10;
constexpr double kMaskTol = 1e-10;
constexpr double kEvolutionTol = 1e-8;
constexpr std::uint64_t kEvolutionSteps = 200;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "% .12f", x);
  return buf;
}

std::string complex_text(Complex z) {
  return format_double(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + format_double(std::abs(z.imag())) + "i";
}

std::string indices(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

CheckResult bound_check(std::string name, double error, double tol) {
  return {std::move(name), error < tol ? CheckStatus::Pass : CheckStatus::Fail,
          "max error " + sci(error) + " (tol " + sci(tol) + ")"};
}

std::string_view status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Info: return "INFO";
  }
  return "?";
}

}  // namespace

std::string spectrum_report(const ScenarioConfig& config) {
  const FactorCirculant phi = build_interaction(config);
  const SwarmState state0 = initial_state(config);
  const ModalSpectrum spectrum = eigenvalues(phi);

  std::ostringstream out;
  out << "model " << to_string(config.model) << ", N = " << phi.size() << ", lambda = " << complex_text(phi.factor())
      << ", mode " << to_string(config.mode) << "\n";
  out << "gamma = " << complex_text(spectrum.gamma) << "\n\n";
  out << "  l            re(mu)            im(mu)              |mu|\n";
  for (std::size_t l = 0; l < spectrum.size(); ++l) {
    const Complex mu = spectrum.mu[l];
    char line[128];
    std::snprintf(line, sizeof line, "%3zu  %s  %s  %s\n", l, fixed(mu.real()).c_str(), fixed(mu.imag()).c_str(),
                  fixed(std::abs(mu)).c_str());
    out << line;
  }

  // A continuous system is judged through its unit-time flow exp(Phi).
  const ModalSpectrum judged = config.mode == TimeMode::Continuous ? unit_time_flow_spectrum(spectrum) : spectrum;
  const LimitClass cls = classify(judged, state0);
  out << "\n";
  if (config.mode == TimeMode::Continuous) out << "classified by exp(mu), the unit-time flow\n";
  if (config.beacon) {
    out << "beacon at " << format_double(config.beacon->position.real()) << ", "
        << format_double(config.beacon->position.imag()) << ": the classification applies to P - beacon\n";
  }
  out << "dominant modes: " << indices(cls.dominant_indices) << ", |mu_dom| = " << format_double(cls.dominant_modulus) << "\n";
  if (cls.dominant_indices.size() > 1) out << "dominant tie across " << cls.dominant_indices.size() << " modes\n";
  out << "limit: " << to_string(cls.kind) << ", motion: " << to_string(cls.motion) << "\n";
  if (cls.limit_point) {
    out << "limit point: " << format_double(cls.limit_point->real()) << ", " << format_double(cls.limit_point->imag())
        << "\n";
  }

  try {
    const FormationPrediction f = formation(judged, state0);
    out << "formation: " << (f.is_linear() ? "linear" : "non-linear") << ", growth "
        << format_double(std::abs(f.growth)) << ", amplitude " << format_double(f.amplitude.real()) << ", "
        << format_double(f.amplitude.imag()) << "\n";
    out << "direction:";
    for (Complex d : f.direction) out << " (" << format_double(d.real()) << ", " << format_double(d.imag()) << ")";
    out << "\n";
  } catch (const MultiModal& e) {
    out << "formation: MultiModal, dominant " << indices(e.dominant()) << "\n";
  }
  return out.str();
}

std::vector<CheckResult> verify_scenario(const ScenarioConfig& config) {
  const FactorCirculant phi = build_interaction(config);
  const SwarmState state0 = initial_state(config);
  const std::size_t n = phi.size();
  const DenseMatrix dense = to_dense(phi);
  const Diagonalization diag = diagonalize(phi);
  std::vector<CheckResult> out;

  const DenseMatrix rebuilt = diag.t * DenseMatrix::diagonal(diag.spectrum.mu) * diag.t_inv;
  out.push_back(bound_check("reconstruction T Diag(mu) T^-1 = Phi", max_entry_error(rebuilt, dense), kReconstructionTol));
  out.push_back(bound_check("T T^-1 = I", max_entry_error(diag.t * diag.t_inv, DenseMatrix::identity(n)), kTransformTol));
  out.push_back(bound_check("mask identity", max_entry_error(mask_decompose(phi).reconstruct(), dense), kMaskTol));
  if (std::abs(std::abs(phi.factor()) - 1.0) <= kUnitModulusTolerance) {
    out.push_back(bound_check("T unitary (|lambda| = 1)",
                              max_entry_error(diag.t.adjoint() * diag.t, DenseMatrix::identity(n)), kTransformTol));
  }

  if (config.mode == TimeMode::Discrete) {
    SwarmState direct = state0;
    for (std::uint64_t k = 0; k < kEvolutionSteps; ++k) direct = step_discrete(phi, direct);
    const SwarmState modal = evolve_discrete(diag, state0, kEvolutionSteps);
    const double err = relative_error(modal.positions, direct.positions);
    out.push_back({"modal vs direct, 200 steps", err < kEvolutionTol ? CheckStatus::Pass : CheckStatus::Fail,
                   "relative error " + sci(err) + " (tol " + sci(kEvolutionTol) + ")"});
  } else {
    // No direct integrator here; check the flow's semigroup property.
    const SwarmState half = evolve_continuous(diag, state0, 0.5);
    const SwarmState twice = evolve_continuous(diag, half, 0.5);
    const SwarmState once = evolve_continuous(diag, state0, 1.0);
    const double err = relative_error(twice.positions, once.positions);
    out.push_back({"flow semigroup exp(Phi/2)^2 = exp(Phi)", err < kEvolutionTol ? CheckStatus::Pass : CheckStatus::Fail,
                   "relative error " + sci(err) + " (tol " + sci(kEvolutionTol) + ")"});
  }

  const InvarianceReport inv = check_invariance(phi);
  double worst_zero = 0.0, worst_one = 0.0;
  for (Complex s : inv.row_sums) {
    worst_zero = std::max(worst_zero, std::abs(s));
    worst_one = std::max(worst_one, std::abs(s - 1.0));
  }
  out.push_back({"row sums 0 (continuous invariance)", CheckStatus::Info,
                 std::string(inv.continuous_ok ? "yes" : "no") + ", max |sum| " + sci(worst_zero)});
  out.push_back({"row sums 1 (discrete invariance)", CheckStatus::Info,
                 std::string(inv.discrete_ok ? "yes" : "no") + ", max |sum - 1| " + sci(worst_one)});

  const Complex beacon_position = config.beacon ? config.beacon->position : Complex{};
  const BeaconSystem beacon = embed_beacon(phi, config.mode, beacon_position);
  const InvarianceReport embedded = check_invariance(beacon.embedded_matrix());
  const bool ok = config.mode == TimeMode::Discrete ? embedded.discrete_ok : embedded.continuous_ok;
  std::size_t exact = 0;
  for (Complex s : embedded.row_sums) exact += s == beacon.beacon_value;
  out.push_back({"beacon embedding invariant", ok ? CheckStatus::Pass : CheckStatus::Fail,
                 std::to_string(exact) + "/" + std::to_string(embedded.row_sums.size()) + " row sums bit-exact"});
  return out;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::size_t width = 0;
  for (const CheckResult& c : checks) width = std::max(width, c.name.size());
  std::string out;
  for (const CheckResult& c : checks) {
    out += status_label(c.status);
    out += "  ";
    out += c.name;
    out.append(width - c.name.size() + 2, ' ');
    out += c.detail;
    out += '\n';
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

}  // namespace circswarm
