#include "circswarm/models.hpp"

#include <cmath>
#include <utility>

#include "circswarm/errors.hpp"
#include "circswarm/fourier.hpp"

namespace circswarm {

namespace {

// Within this distance of 1 the quotient (λ - 1)/(z - 1) loses about
// -log10(distance) digits, so the geometric sum is added up term by term.
constexpr double kGeometricCancellation = 1e-2;

void require_agents(std::size_t n) {
  if (n < 2) throw InvalidArgument("models need N >= 2");
}

Complex normalized_forward_weight(std::size_t n, Complex alpha) {
  require_finite(alpha, "alpha");
  if (alpha == Complex{1.0, 0.0}) throw InvalidArgument("alpha = 1 leaves beta_f = 0 and the factor undefined");
  return (1.0 - alpha) / static_cast<double>(n - 1);
}

// sum_{k=0}^{N-1} z^k, where z^N = λ.
Complex geometric_sum(Complex z, Complex lambda, std::size_t n) {
  if (std::abs(z - 1.0) > kGeometricCancellation) return (lambda - 1.0) / (z - 1.0);
  Complex acc{};
  Complex term{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    acc += term;
    term *= z;
  }
  return acc;
}

}  // namespace

FactorCirculant darboux(std::size_t n, Complex factor) {
  require_agents(n);
  ComplexVector m(n, Complex{});
  m[0] = 0.5;
  m[1] = 0.5;
  return {std::move(m), factor};
}

FactorCirculant centroid_gathering(const CentroidGatheringParams& params) {
  require_agents(params.n);
  require_finite(params.alpha, "alpha");
  require_finite(params.beta_f, "beta_f");
  require_finite(params.beta_b, "beta_b");
  if (params.beta_f == Complex{}) throw InvalidArgument("beta_f must be nonzero");
  ComplexVector m(params.n, params.beta_f);
  m[0] = params.alpha;
  return {std::move(m), params.beta_b / params.beta_f};
}

FactorCirculant normalized_gathering(std::size_t n, Complex alpha, Complex factor) {
  require_agents(n);
  require_finite(factor, "factor");
  const Complex beta_f = normalized_forward_weight(n, alpha);
  return centroid_gathering({n, alpha, beta_f, factor * beta_f});
}

Complex gathering_mu0_closed_form(std::size_t n, Complex alpha, Complex factor) {
  return gathering_spectrum_closed_form(n, alpha, factor)[0];
}

ComplexVector gathering_spectrum_closed_form(std::size_t n, Complex alpha, Complex factor) {
  require_agents(n);
  const Complex beta_f = normalized_forward_weight(n, alpha);
  const Complex gamma = principal_root(factor, n);
  ComplexVector mu(n);
  for (std::size_t l = 0; l < n; ++l) {
    const Complex z = gamma * unit_root_power(n, l);
    // The λ = 1 circulant has mu_0 = 1 exactly.
    if (l == 0 && gamma == Complex{1.0, 0.0}) {
      mu[l] = 1.0;
      continue;
    }
    mu[l] = alpha - beta_f + beta_f * geometric_sum(z, factor, n);
  }
  return mu;
}

}  // namespace circswarm
