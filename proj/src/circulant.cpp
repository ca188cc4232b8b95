#include "circswarm/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "circswarm/errors.hpp"
#include "circswarm/fourier.hpp"

namespace circswarm {

namespace {

constexpr double kSingularityTolerance = 1e-12;

void require_spectral(const FactorCirculant& phi) {
  if (phi.factor() == Complex{}) throw DegenerateFactor();
}

// gamma^{sign·k} for k = 0..n-1, each evaluated in polar form from lambda so
// the error does not grow with k.
ComplexVector gamma_powers(Complex factor, std::size_t n, int sign) {
  const double modulus = std::abs(factor);
  double angle = std::arg(factor);
  if (angle == -std::numbers::pi) angle = std::numbers::pi;
  const double nd = static_cast<double>(n);
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double e = sign * static_cast<double>(k) / nd;
    out[k] = std::polar(std::pow(modulus, e), angle * e);
  }
  return out;
}

// mu_l = sum_k c_k w^{kl}.
ComplexVector circulant_spectrum(std::span<const Complex> c) {
  const std::size_t n = c.size();
  ComplexVector roots(n);
  for (std::size_t j = 0; j < n; ++j) roots[j] = unit_root_power(n, j);
  ComplexVector mu(n);
  for (std::size_t l = 0; l < n; ++l) {
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) acc += c[k] * roots[(k * l) % n];
    mu[l] = acc;
  }
  return mu;
}

}  // namespace

FactorCirculant::FactorCirculant(ComplexVector first_row, Complex factor)
    : m_(std::move(first_row)), factor_(factor) {
  if (m_.size() < 2) throw InvalidArgument("a factor circulant needs N >= 2");
  require_finite(m_, "first-row weight");
  require_finite(factor_, "factor");
}

Complex FactorCirculant::entry(std::size_t row, std::size_t col) const {
  const std::size_t n = m_.size();
  if (row >= n || col >= n) throw InvalidArgument("entry index out of range");
  const Complex weight = m_[(col + n - row) % n];
  return col < row ? factor_ * weight : weight;
}

FactorCirculant FactorCirculant::shift(std::size_t n, Complex factor) {
  ComplexVector m(n, Complex{});
  if (n > 1) m[1] = 1.0;
  return {std::move(m), factor};
}

FactorCirculant FactorCirculant::identity(std::size_t n, Complex factor) {
  ComplexVector m(n, Complex{});
  if (n > 0) m[0] = 1.0;
  return {std::move(m), factor};
}

ComplexVector Diagonalization::to_modal(std::span<const Complex> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw DimensionMismatch(n, v.size());
  const ComplexVector inv_powers = gamma_powers(factor, n, -1);
  ComplexVector scaled(n);
  for (std::size_t k = 0; k < n; ++k) scaled[k] = inv_powers[k] * v[k];
  return unitary_dft(scaled, FourierDirection::Adjoint);
}

ComplexVector Diagonalization::from_modal(std::span<const Complex> c) const {
  const std::size_t n = size();
  if (c.size() != n) throw DimensionMismatch(n, c.size());
  const ComplexVector powers = gamma_powers(factor, n, 1);
  ComplexVector out = unitary_dft(c, FourierDirection::Forward);
  for (std::size_t k = 0; k < n; ++k) out[k] *= powers[k];
  return out;
}

ComplexVector Diagonalization::apply(std::span<const Complex> v) const {
  ComplexVector modal = to_modal(v);
  for (std::size_t l = 0; l < modal.size(); ++l) modal[l] *= spectrum.mu[l];
  return from_modal(modal);
}

DenseMatrix MaskDecomposition::mask_matrix() const {
  const std::size_t n = base_circulant.size();
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = c < r ? lambda_mask : Complex{1.0, 0.0};
  }
  return out;
}

DenseMatrix MaskDecomposition::reconstruct() const {
  return circulant_matrix(base_circulant).hadamard(circulant_matrix(gamma_circulant)).hadamard(mask_matrix());
}

DenseMatrix circulant_matrix(std::span<const Complex> first_row) {
  const std::size_t n = first_row.size();
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = first_row[(c + n - r) % n];
  }
  return out;
}

Complex principal_root(Complex factor, std::size_t n) {
  if (n < 2) throw InvalidArgument("principal_root requires n >= 2");
  require_finite(factor, "factor");
  if (factor == Complex{}) throw DegenerateFactor();
  return gamma_powers(factor, n, 1)[1];
}

DenseMatrix to_dense(const FactorCirculant& phi) {
  const std::size_t n = phi.size();
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = phi.entry(r, c);
  }
  return out;
}

ModalSpectrum eigenvalues(const FactorCirculant& phi) {
  require_spectral(phi);
  const std::size_t n = phi.size();
  const ComplexVector powers = gamma_powers(phi.factor(), n, 1);
  ComplexVector c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = phi.first_row()[k] * powers[k];
  return {circulant_spectrum(c), principal_root(phi.factor(), n)};
}

Diagonalization diagonalize(const FactorCirculant& phi) {
  ModalSpectrum spectrum = eigenvalues(phi);
  const std::size_t n = phi.size();
  const ComplexVector up = gamma_powers(phi.factor(), n, 1);
  const ComplexVector down = gamma_powers(phi.factor(), n, -1);
  const DenseMatrix ft = dft_matrix(n);
  DenseMatrix t(n);
  DenseMatrix t_inv(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      t(r, c) = up[r] * ft(r, c);
      t_inv(r, c) = std::conj(ft(c, r)) * down[c];
    }
  }
  return {std::move(t), std::move(t_inv), std::move(spectrum), phi.factor()};
}

MaskDecomposition mask_decompose(const FactorCirculant& phi) {
  require_spectral(phi);
  const std::size_t n = phi.size();
  const ComplexVector up = gamma_powers(phi.factor(), n, 1);
  ComplexVector base(n);
  for (std::size_t k = 0; k < n; ++k) base[k] = phi.first_row()[k] * up[k];
  return {std::move(base), gamma_powers(phi.factor(), n, -1), phi.factor()};
}

ComplexVector multiply_vector(const FactorCirculant& phi, std::span<const Complex> v) {
  const std::size_t n = phi.size();
  if (v.size() != n) throw DimensionMismatch(n, v.size());
  const auto m = phi.first_row();
  ComplexVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex upper{};
    for (std::size_t c = r; c < n; ++c) upper += m[c - r] * v[c];
    Complex lower{};
    for (std::size_t c = 0; c < r; ++c) lower += m[c + n - r] * v[c];
    out[r] = upper + phi.factor() * lower;
  }
  return out;
}

FactorCirculant multiply(const FactorCirculant& a, const FactorCirculant& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  if (a.factor() != b.factor()) {
    throw InvalidArgument("multiply requires equal factors; mixed-factor products are not factor circulants");
  }
  // Row 0 of A·B determines the product.
  const std::size_t n = a.size();
  ComplexVector row(n);
  for (std::size_t c = 0; c < n; ++c) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += a.first_row()[j] * b.entry(j, c);
    row[c] = acc;
  }
  return {std::move(row), a.factor()};
}

FactorCirculant inverse(const FactorCirculant& phi) {
  const ModalSpectrum spectrum = eigenvalues(phi);
  const std::size_t n = phi.size();
  double largest = 0.0;
  for (Complex mu : spectrum.mu) largest = std::max(largest, std::abs(mu));
  std::vector<std::size_t> singular;
  for (std::size_t l = 0; l < n; ++l) {
    if (largest == 0.0 || std::abs(spectrum.mu[l]) <= kSingularityTolerance * largest) singular.push_back(l);
  }
  if (!singular.empty()) throw SingularSpectrum(std::move(singular));

  // The inverse shares T, so its base circulant row is the inverse DFT of 1/mu:
  // c_k = (1/N) sum_l w^{-kl} / mu_l, then m_k = c_k γ^{-k}.
  ComplexVector reciprocal(n);
  for (std::size_t l = 0; l < n; ++l) reciprocal[l] = 1.0 / spectrum.mu[l];
  ComplexVector c = unitary_dft_direct(reciprocal, FourierDirection::Adjoint);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const ComplexVector down = gamma_powers(phi.factor(), n, -1);
  for (std::size_t k = 0; k < n; ++k) c[k] *= scale * down[k];
  return {std::move(c), phi.factor()};
}

}  // namespace circswarm
