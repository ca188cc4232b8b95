#include "circswarm/dynamics.hpp"

#include <cmath>
#include <utility>

#include "circswarm/errors.hpp"

namespace circswarm {

namespace {

void require_size(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

// Left-to-right row sums; the beacon correction is built from the same sums
// so that the embedded system balances exactly.
ComplexVector row_sums(const FactorCirculant& phi) {
  const std::size_t n = phi.size();
  ComplexVector sums(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < n; ++c) acc += phi.entry(r, c);
    sums[r] = acc;
  }
  return sums;
}

InvarianceReport report_from_sums(ComplexVector sums, double tolerance) {
  InvarianceReport report{std::move(sums), true, true, tolerance};
  for (Complex s : report.row_sums) {
    if (std::abs(s.real()) > tolerance || std::abs(s.imag()) > tolerance) report.continuous_ok = false;
    if (std::abs(s.real() - 1.0) > tolerance || std::abs(s.imag()) > tolerance) report.discrete_ok = false;
  }
  return report;
}

SwarmState evolve_modal(const Diagonalization& diag, const SwarmState& state0, double t_out,
                        const ComplexVector& multipliers) {
  ComplexVector modal = diag.to_modal(state0.positions);
  for (std::size_t l = 0; l < modal.size(); ++l) modal[l] *= multipliers[l];
  return SwarmState(diag.from_modal(modal), t_out);
}

ComplexVector offset(std::span<const Complex> v, Complex shift) {
  ComplexVector out(v.begin(), v.end());
  for (Complex& z : out) z += shift;
  return out;
}

}  // namespace

SwarmState::SwarmState(ComplexVector positions_in, double time_in)
    : positions(std::move(positions_in)), time(time_in) {
  if (positions.empty()) throw InvalidArgument("a swarm state needs at least one agent");
  require_finite(positions, "agent position");
  if (!std::isfinite(time) || time < 0.0) throw InvalidArgument("state time must be finite and >= 0");
}

Complex SwarmState::centroid() const {
  Complex acc{};
  for (Complex p : positions) acc += p;
  return acc / static_cast<double>(positions.size());
}

SimilarityTransform::SimilarityTransform(Complex scale_in, Complex shift_in) : scale(scale_in), shift(shift_in) {
  require_finite(scale, "similarity scale");
  require_finite(shift, "similarity shift");
  if (scale == Complex{}) throw InvalidArgument("similarity scale must be nonzero");
}

DenseMatrix BeaconSystem::embedded_matrix() const {
  const std::size_t n = base.size();
  DenseMatrix out(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = base.entry(r, c);
    out(r, n) = correction[r];
  }
  out(n, n) = beacon_value;
  return out;
}

SwarmState step_discrete(const FactorCirculant& phi, const SwarmState& state) {
  require_size(phi.size(), state.size());
  return SwarmState(multiply_vector(phi, state.positions), state.time + 1.0);
}

ModalState to_modal(const Diagonalization& diag, const SwarmState& state) {
  require_size(diag.size(), state.size());
  return {diag.to_modal(state.positions), state.time};
}

SwarmState from_modal(const Diagonalization& diag, const ModalState& modal) {
  require_size(diag.size(), modal.coords.size());
  return SwarmState(diag.from_modal(modal.coords), modal.time);
}

SwarmState evolve_discrete(const FactorCirculant& phi, const SwarmState& state0, std::uint64_t t) {
  if (phi.factor() == Complex{}) throw DegenerateFactor();
  require_size(phi.size(), state0.size());
  if (t == 0) return state0;
  return evolve_discrete(diagonalize(phi), state0, t);
}

SwarmState evolve_discrete(const Diagonalization& diag, const SwarmState& state0, std::uint64_t t) {
  require_size(diag.size(), state0.size());
  if (t == 0) return state0;
  ComplexVector multipliers(diag.size());
  for (std::size_t l = 0; l < multipliers.size(); ++l) multipliers[l] = integer_power(diag.spectrum.mu[l], t);
  return evolve_modal(diag, state0, state0.time + static_cast<double>(t), multipliers);
}

SwarmState evolve_continuous(const FactorCirculant& phi, const SwarmState& state0, double t) {
  if (phi.factor() == Complex{}) throw DegenerateFactor();
  require_size(phi.size(), state0.size());
  if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("evolution time must be finite and >= 0");
  if (t == 0.0) return state0;
  return evolve_continuous(diagonalize(phi), state0, t);
}

SwarmState evolve_continuous(const Diagonalization& diag, const SwarmState& state0, double t) {
  require_size(diag.size(), state0.size());
  if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("evolution time must be finite and >= 0");
  if (t == 0.0) return state0;
  ComplexVector multipliers(diag.size());
  for (std::size_t l = 0; l < multipliers.size(); ++l) multipliers[l] = std::exp(diag.spectrum.mu[l] * t);
  return evolve_modal(diag, state0, state0.time + t, multipliers);
}

SwarmState apply_similarity(const SwarmState& state, const SimilarityTransform& s) {
  ComplexVector out(state.positions);
  for (Complex& p : out) p = s.scale * p + s.shift;
  return SwarmState(std::move(out), state.time);
}

InvarianceReport check_invariance(const FactorCirculant& phi, double tolerance) {
  return report_from_sums(row_sums(phi), tolerance);
}

InvarianceReport check_invariance(const DenseMatrix& matrix, double tolerance) {
  const std::size_t n = matrix.size();
  ComplexVector sums(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc{};
    for (Complex z : matrix.row(r)) acc += z;
    sums[r] = acc;
  }
  return report_from_sums(std::move(sums), tolerance);
}

BeaconSystem embed_beacon(const FactorCirculant& phi, TimeMode kind, Complex beacon_position) {
  require_finite(beacon_position, "beacon position");
  const ComplexVector sums = row_sums(phi);
  const Complex target = kind == TimeMode::Discrete ? Complex{1.0, 0.0} : Complex{};
  ComplexVector correction(sums.size());
  for (std::size_t r = 0; r < sums.size(); ++r) {
    // target - s is rounded, so s + (target - s) can miss target by an ulp;
    // feed the miss back. For target 0 this is exact after one pass. For
    // target 1 it can stay an ulp off when s has bits finer than the grid
    // of 1 - s (e.g. s = -1.1, c = 2.1): no double c then hits 1 exactly.
    Complex c = target - sums[r];
    for (int pass = 0; pass < 4 && sums[r] + c != target; ++pass) c += target - (sums[r] + c);
    correction[r] = c;
  }
  return {phi, std::move(correction), target, beacon_position, kind};
}

SwarmState step_beacon(const BeaconSystem& system, const SwarmState& state) {
  require_size(system.size(), state.size());
  const Complex b = system.beacon_position;
  const SwarmState relative(offset(state.positions, -b), state.time);
  const SwarmState moved = system.kind == TimeMode::Discrete ? step_discrete(system.base, relative)
                                                             : evolve_continuous(system.base, relative, 1.0);
  return SwarmState(offset(moved.positions, b), state.time + 1.0);
}

ComplexVector apply_embedded(const BeaconSystem& system, std::span<const Complex> extended) {
  require_size(system.size() + 1, extended.size());
  return system.embedded_matrix() * extended;
}

}  // namespace circswarm
