#pragma once

#include <cstddef>

#include "circswarm/circulant.hpp"
#include "circswarm/complex.hpp"

namespace circswarm {

/// Midpoint pursuit: each agent moves halfway to its cyclic successor,
/// m = [1/2, 1/2, 0, ..., 0]. The wrap-around link is weighted by factor.
FactorCirculant darboux(std::size_t n, Complex factor);

/// Agent k weighs itself by alpha, every later agent by beta_f and every
/// earlier agent by beta_b.
struct CentroidGatheringParams {
  std::size_t n;
  Complex alpha;
  Complex beta_f;
  Complex beta_b;
};

/// m = [alpha, beta_f, ..., beta_f], factor beta_b / beta_f.
FactorCirculant centroid_gathering(const CentroidGatheringParams& params);

/// beta_f = (1 - alpha)/(N - 1), beta_b = factor·beta_f.
FactorCirculant normalized_gathering(std::size_t n, Complex alpha, Complex factor);

/// mu_0 of normalized_gathering via the geometric-series closed form
///   alpha - beta_f + beta_f·(λ - 1)/(γ - 1),
/// and exactly 1 when γ = 1.
Complex gathering_mu0_closed_form(std::size_t n, Complex alpha, Complex factor);

/// mu_l of normalized_gathering, alpha - beta_f + beta_f·(λ - 1)/(γ·w^l - 1)
/// (the geometric sum is used directly where the denominator vanishes).
ComplexVector gathering_spectrum_closed_form(std::size_t n, Complex alpha, Complex factor);

}  // namespace circswarm
