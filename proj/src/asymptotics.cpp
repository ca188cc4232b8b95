#include "circswarm/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "circswarm/errors.hpp"
#include "circswarm/fourier.hpp"

namespace circswarm {

namespace {

double max_modulus(const ModalSpectrum& spectrum) {
  double largest = 0.0;
  for (Complex mu : spectrum.mu) largest = std::max(largest, std::abs(mu));
  return largest;
}

Complex root_power(Complex gamma, double k) {
  return std::polar(std::pow(std::abs(gamma), k), std::arg(gamma) * k);
}

MotionShape motion_of(const ModalSpectrum& spectrum, const std::vector<std::size_t>& dominant, double modulus) {
  const Complex lead = spectrum.mu[dominant.front()];
  for (std::size_t l : dominant) {
    if (std::abs(spectrum.mu[l] - lead) > kTieTolerance * modulus) return MotionShape::Superposed;
  }
  return std::abs(lead.imag()) <= kUnitModulusTolerance * std::abs(lead) ? MotionShape::Straight
                                                                          : MotionShape::Spiral;
}

Complex mode0_amplitude(Complex gamma, const SwarmState& state) {
  const std::size_t n = state.size();
  Complex acc{};
  for (std::size_t k = 0; k < n; ++k) acc += root_power(gamma, -static_cast<double>(k)) * state.positions[k];
  return acc / static_cast<double>(n);
}

}  // namespace

std::string_view to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::FixedPoint: return "FixedPoint";
    case LimitKind::ConvergeToPoint: return "ConvergeToPoint";
    case LimitKind::DecayToOrigin: return "DecayToOrigin";
    case LimitKind::Diverge: return "Diverge";
    case LimitKind::NeutralRotation: return "NeutralRotation";
  }
  return "?";
}

std::string_view to_string(MotionShape shape) {
  switch (shape) {
    case MotionShape::Straight: return "straight";
    case MotionShape::Spiral: return "spiral";
    case MotionShape::Superposed: return "superposed";
  }
  return "?";
}

bool FormationPrediction::is_linear() const {
  for (Complex d : direction) {
    if (std::abs(d.imag()) > kUnitModulusTolerance * std::abs(d)) return false;
  }
  return true;
}

ComplexVector EllipseLimit::residual_at(std::uint64_t t) const {
  const Complex forward = a * integer_power(mu1, t);
  const Complex backward = b * integer_power(muN1, t);
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex wk = unit_root_power(n, k);
    out[k] = forward * wk + backward * std::conj(wk);
  }
  return out;
}

double EllipseLimit::semi_major() const noexcept { return std::abs(a) + std::abs(b); }
double EllipseLimit::semi_minor() const noexcept { return std::abs(std::abs(a) - std::abs(b)); }

std::vector<std::size_t> dominant_modes(const ModalSpectrum& spectrum, double tie_tol) {
  if (spectrum.mu.empty()) throw InvalidArgument("dominant_modes: empty spectrum");
  if (!(tie_tol > 0.0 && tie_tol <= 1e-3)) throw InvalidArgument("dominant_modes: tie tolerance must lie in (0, 1e-3]");
  const double threshold = (1.0 - tie_tol) * max_modulus(spectrum);
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < spectrum.size(); ++l) {
    if (std::abs(spectrum.mu[l]) >= threshold) out.push_back(l);
  }
  return out;
}

ModalSpectrum unit_time_flow_spectrum(const ModalSpectrum& spectrum) {
  ModalSpectrum out = spectrum;
  for (Complex& mu : out.mu) mu = std::exp(mu);
  return out;
}

LimitClass classify(const FactorCirculant& phi, const SwarmState& state0) {
  if (phi.size() != state0.size()) throw DimensionMismatch(phi.size(), state0.size());
  return classify(eigenvalues(phi), state0);
}

LimitClass classify(const ModalSpectrum& spectrum, const SwarmState& state0) {
  if (spectrum.size() != state0.size()) throw DimensionMismatch(spectrum.size(), state0.size());
  std::vector<std::size_t> dominant = dominant_modes(spectrum);
  const double modulus = max_modulus(spectrum);
  LimitClass out{LimitKind::FixedPoint, motion_of(spectrum, dominant, modulus), dominant, modulus, std::nullopt};

  if (modulus > 1.0 + kUnitModulusTolerance) {
    out.kind = LimitKind::Diverge;
  } else if (modulus < 1.0 - kUnitModulusTolerance) {
    out.kind = LimitKind::DecayToOrigin;
    out.limit_point = Complex{};
  } else {
    const bool all_unit = std::all_of(dominant.begin(), dominant.end(), [&](std::size_t l) {
      return std::abs(spectrum.mu[l] - 1.0) <= kUnitModulusTolerance;
    });
    if (!all_unit) {
      out.kind = LimitKind::NeutralRotation;
    } else if (dominant.size() == 1 && dominant.front() == 0 && spectrum.gamma == Complex{1.0, 0.0}) {
      // Only the consensus direction survives: every agent meets at the
      // mode-0 amplitude, which for a circulant is the centroid.
      out.kind = LimitKind::ConvergeToPoint;
      out.limit_point = mode0_amplitude(spectrum.gamma, state0);
    } else {
      out.kind = LimitKind::FixedPoint;
    }
  }
  return out;
}

FormationPrediction formation(const FactorCirculant& phi, const SwarmState& state0) {
  if (phi.size() != state0.size()) throw DimensionMismatch(phi.size(), state0.size());
  return formation(eigenvalues(phi), state0);
}

FormationPrediction formation(const ModalSpectrum& spectrum, const SwarmState& state0) {
  if (spectrum.size() != state0.size()) throw DimensionMismatch(spectrum.size(), state0.size());
  std::vector<std::size_t> dominant = dominant_modes(spectrum);
  if (dominant.size() != 1 || dominant.front() != 0) throw MultiModal(std::move(dominant));
  const std::size_t n = spectrum.size();
  ComplexVector direction(n);
  for (std::size_t k = 0; k < n; ++k) direction[k] = root_power(spectrum.gamma, static_cast<double>(k));
  return {std::move(direction), mode0_amplitude(spectrum.gamma, state0), spectrum.mu[0]};
}

ComplexVector deflated_state(const Diagonalization& diag, const SwarmState& state) {
  if (diag.size() != state.size()) throw DimensionMismatch(diag.size(), state.size());
  ComplexVector modal = diag.to_modal(state.positions);
  modal[0] = Complex{};
  return diag.from_modal(modal);
}

EllipseLimit ellipse_residual(const FactorCirculant& phi, const SwarmState& state0) {
  const std::size_t n = phi.size();
  if (n != state0.size()) throw DimensionMismatch(n, state0.size());
  if (phi.factor() != Complex{1.0, 0.0}) throw PreconditionFailed("ellipse_residual requires a circulant (lambda = 1)");
  if (n < 3) throw PreconditionFailed("ellipse_residual requires N >= 3");

  const ModalSpectrum spectrum = eigenvalues(phi);
  const std::vector<std::size_t> dominant = dominant_modes(spectrum);
  if (dominant != std::vector<std::size_t>{0} || std::abs(spectrum.mu[0] - 1.0) > kUnitModulusTolerance) {
    throw PreconditionFailed("ellipse_residual requires mu_0 = 1 as the unique dominant eigenvalue");
  }

  ModalSpectrum rest = spectrum;
  rest.mu[0] = Complex{};
  const std::vector<std::size_t> residual = dominant_modes(rest);
  if (residual != std::vector<std::size_t>{1, n - 1}) {
    throw PreconditionFailed("ellipse_residual requires modes {1, N-1} to dominate the residual");
  }

  Complex a{};
  Complex b{};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex wk = unit_root_power(n, k);
    a += std::conj(wk) * state0.positions[k];
    b += wk * state0.positions[k];
  }
  const double nd = static_cast<double>(n);
  return {a / nd, b / nd, spectrum.mu[1], spectrum.mu[n - 1], state0.centroid(), n};
}

SwarmState predicted_state(const FactorCirculant& phi, const SwarmState& state0, std::uint64_t t) {
  const FormationPrediction f = formation(phi, state0);
  const Complex scale = integer_power(f.growth, t) * f.amplitude;
  ComplexVector out(f.direction.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = scale * f.direction[k];
  return SwarmState(std::move(out), state0.time + static_cast<double>(t));
}

}  // namespace circswarm
