#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "circswarm/circulant.hpp"
#include "circswarm/complex.hpp"
#include "circswarm/dense_matrix.hpp"

namespace circswarm {

/// Agent positions as complex numbers (x + iy), agent k at index k.
struct SwarmState {
  ComplexVector positions;
  double time = 0.0;

  SwarmState() = default;
  /// Requires at least one agent, finite positions and a finite time >= 0.
  explicit SwarmState(ComplexVector positions, double time = 0.0);

  std::size_t size() const noexcept { return positions.size(); }
  Complex centroid() const;
};

/// Coordinates in the modal basis, P~ = T^{-1}·P.
struct ModalState {
  ComplexVector coords;
  double time = 0.0;
};

/// P -> rho·P + tau·1.
struct SimilarityTransform {
  Complex scale;
  Complex shift;

  /// Rejects rho = 0 and non-finite parameters.
  SimilarityTransform(Complex scale, Complex shift);
};

enum class TimeMode { Discrete, Continuous };

/// Row sums Phi·1 and whether they meet the continuous (all 0) or
/// discrete (all 1) invariance condition at `tolerance` per entry.
struct InvarianceReport {
  ComplexVector row_sums;
  bool continuous_ok = false;
  bool discrete_ok = false;
  double tolerance = 0.0;
};

inline constexpr double kInvarianceTolerance = 1e-10;

/// Phi extended by a stationary beacon agent:
///
///     [ Phi  s ]
///     [ 0    z ]
///
/// with s = -Phi·1, z = 0 (continuous) or s = 1 - Phi·1, z = 1 (discrete),
/// so the (N+1)-agent system is similarity invariant.
struct BeaconSystem {
  FactorCirculant base;
  ComplexVector correction;
  Complex beacon_value;
  Complex beacon_position;
  TimeMode kind;

  std::size_t size() const noexcept { return base.size(); }
  DenseMatrix embedded_matrix() const;
};

SwarmState step_discrete(const FactorCirculant& phi, const SwarmState& state);

ModalState to_modal(const Diagonalization& diag, const SwarmState& state);
SwarmState from_modal(const Diagonalization& diag, const ModalState& modal);

/// T·Diag(mu^t)·T^{-1}·P(0). Returns state0 unchanged when t = 0.
SwarmState evolve_discrete(const FactorCirculant& phi, const SwarmState& state0, std::uint64_t t);
SwarmState evolve_discrete(const Diagonalization& diag, const SwarmState& state0, std::uint64_t t);

/// Closed-form flow T·Diag(exp(mu·t))·T^{-1}·P(0) of dP/dt = Phi·P.
SwarmState evolve_continuous(const FactorCirculant& phi, const SwarmState& state0, double t);
SwarmState evolve_continuous(const Diagonalization& diag, const SwarmState& state0, double t);

SwarmState apply_similarity(const SwarmState& state, const SimilarityTransform& s);

InvarianceReport check_invariance(const FactorCirculant& phi, double tolerance = kInvarianceTolerance);
InvarianceReport check_invariance(const DenseMatrix& matrix, double tolerance = kInvarianceTolerance);

BeaconSystem embed_beacon(const FactorCirculant& phi, TimeMode kind, Complex beacon_position);

/// One unit of time for the agents of a beacon system, in the frame
/// centered on the beacon: P <- B·1 + Phi·(P - B·1) for a discrete system,
/// P <- B·1 + exp(Phi)·(P - B·1) for a continuous one.
SwarmState step_beacon(const BeaconSystem& system, const SwarmState& state);

/// Embedded matrix times an (N+1)-vector whose last entry is the beacon:
/// the next state for a discrete system, the velocity for a continuous one.
ComplexVector apply_embedded(const BeaconSystem& system, std::span<const Complex> extended);

}  // namespace circswarm
