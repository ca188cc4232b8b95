#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "circswarm/circulant.hpp"
#include "circswarm/complex.hpp"
#include "circswarm/dynamics.hpp"

namespace circswarm {

inline constexpr double kTieTolerance = 1e-9;
inline constexpr double kUnitModulusTolerance = 1e-12;

enum class LimitKind { FixedPoint, ConvergeToPoint, DecayToOrigin, Diverge, NeutralRotation };

/// Shape of the late-time motion, read off the phase of the dominant
/// eigenvalue: a real mu moves agents along straight lines, a complex one
/// along spiral arcs. Superposed means tied dominant modes with distinct
/// eigenvalues.
enum class MotionShape { Straight, Spiral, Superposed };

std::string_view to_string(LimitKind kind);
std::string_view to_string(MotionShape shape);

struct LimitClass {
  LimitKind kind;
  MotionShape motion;
  std::vector<std::size_t> dominant_indices;
  double dominant_modulus;
  std::optional<Complex> limit_point;
};

/// P(t) ~ growth^t · amplitude · direction.
struct FormationPrediction {
  ComplexVector direction;  // [1, γ, ..., γ^{N-1}]
  Complex amplitude;        // (1/N)·[1, γ^{-1}, ..., γ^{-(N-1)}]·P(0)
  Complex growth;           // mu_0

  /// True when the direction is a ray through the origin (all γ^k share
  /// a phase up to sign), i.e. a linear constellation.
  bool is_linear() const;
};

/// Residual shape of circulant (λ = 1) evolution once the centroid mode is
/// removed: a·mu1^t·w^k + b·muN1^t·w^{-k}, an affine image of a regular
/// polygon. a is the amplitude of Fourier mode 1 (direction w^k,
/// eigenvalue mu1), b that of mode N-1 (direction w^{-k}, eigenvalue muN1).
struct EllipseLimit {
  Complex a;
  Complex b;
  Complex mu1;
  Complex muN1;
  Complex centroid;
  std::size_t n;

  /// Predicted deflated state P(t) - centroid·1.
  ComplexVector residual_at(std::uint64_t t) const;
  double semi_major() const noexcept;
  double semi_minor() const noexcept;
};

/// All l with |mu_l| >= (1 - tie_tol)·max|mu|, ascending.
std::vector<std::size_t> dominant_modes(const ModalSpectrum& spectrum, double tie_tol = kTieTolerance);

/// Classification of the discrete-time map P -> Phi·P.
LimitClass classify(const FactorCirculant& phi, const SwarmState& state0);
/// Same rules applied to an arbitrary modal spectrum, e.g. the unit-time
/// flow of a continuous system.
LimitClass classify(const ModalSpectrum& spectrum, const SwarmState& state0);

/// Spectrum of exp(Phi): mu_l -> exp(mu_l), gamma unchanged. Lets the
/// discrete rules classify dP/dt = Phi·P.
ModalSpectrum unit_time_flow_spectrum(const ModalSpectrum& spectrum);

/// Rank-one limit along mode 0; throws MultiModal unless mode 0 is the
/// unique dominant mode.
FormationPrediction formation(const FactorCirculant& phi, const SwarmState& state0);
FormationPrediction formation(const ModalSpectrum& spectrum, const SwarmState& state0);

/// P with its mode-0 component removed in modal coordinates.
ComplexVector deflated_state(const Diagonalization& diag, const SwarmState& state);

/// Requires λ = 1, mu_0 = 1 uniquely dominant and modes {1, N-1} as the
/// dominant pair among the rest; PreconditionFailed otherwise.
EllipseLimit ellipse_residual(const FactorCirculant& phi, const SwarmState& state0);

/// growth^t·amplitude·direction. Asymptotic, not exact.
SwarmState predicted_state(const FactorCirculant& phi, const SwarmState& state0, std::uint64_t t);

}  // namespace circswarm
