#pragma once

#include <cstddef>
#include <span>

#include "circswarm/complex.hpp"
#include "circswarm/dense_matrix.hpp"

namespace circswarm {

/// A lambda-factor circulant stored by its first row m and factor lambda.
///
/// Entry (k, l) is m[(l - k) mod N], multiplied by lambda when l < k, so
/// the strictly-lower wrapped band carries the factor:
///
///     [ m0      m1      ...  m_{N-1} ]
///     [ λm_{N-1} m0     ...  m_{N-2} ]
///     [ ...                          ]
///     [ λm1     λm2     ...  m0      ]
///
/// lambda = 1 gives an ordinary circulant. Instances are immutable.
class FactorCirculant {
 public:
  /// Requires first_row.size() >= 2 and finite entries. A zero factor is
  /// accepted here; spectral operations reject it with DegenerateFactor.
  FactorCirculant(ComplexVector first_row, Complex factor);

  std::size_t size() const noexcept { return m_.size(); }
  std::span<const Complex> first_row() const noexcept { return m_; }
  Complex factor() const noexcept { return factor_; }

  Complex entry(std::size_t row, std::size_t col) const;

  /// Z_lambda: first row e_1, so Z^N = lambda·I.
  static FactorCirculant shift(std::size_t n, Complex factor);
  static FactorCirculant identity(std::size_t n, Complex factor = 1.0);

  bool operator==(const FactorCirculant&) const = default;

 private:
  ComplexVector m_;
  Complex factor_;
};

/// Eigenvalues mu_0..mu_{N-1} in Fourier index order, plus the root gamma
/// that produced them.
struct ModalSpectrum {
  ComplexVector mu;
  Complex gamma;

  std::size_t size() const noexcept { return mu.size(); }
};

/// Phi = T·Diag(mu)·T^{-1} with T = Diag(1, γ, ..., γ^{N-1})·FT.
struct Diagonalization {
  DenseMatrix t;
  DenseMatrix t_inv;
  ModalSpectrum spectrum;
  Complex factor;  // lambda = gamma^N, kept exact for the structured transforms

  std::size_t size() const noexcept { return spectrum.size(); }

  /// T^{-1}·v = FT*·Γ^{-1}·v, evaluated through the Fourier transform.
  ComplexVector to_modal(std::span<const Complex> v) const;
  /// T·c = Γ·FT·c.
  ComplexVector from_modal(std::span<const Complex> c) const;
  /// T·Diag(mu)·T^{-1}·v, the modal route to Phi·v.
  ComplexVector apply(std::span<const Complex> v) const;
};

/// Phi = Circ[m_k γ^k] ⊙ Circ[γ^{-k}] ⊙ Λ, where Λ is λ strictly below the
/// diagonal and 1 elsewhere.
struct MaskDecomposition {
  ComplexVector base_circulant;   // c_k = m_k γ^k
  ComplexVector gamma_circulant;  // γ^{-k}
  Complex lambda_mask;            // value of Λ strictly below the diagonal

  DenseMatrix mask_matrix() const;
  /// Elementwise product of the three factors.
  DenseMatrix reconstruct() const;
};

/// Ordinary circulant with the given first row.
DenseMatrix circulant_matrix(std::span<const Complex> first_row);

/// Principal N-th root: |λ|^{1/N}·exp(i·Arg(λ)/N), Arg in (-π, π].
Complex principal_root(Complex factor, std::size_t n);

DenseMatrix to_dense(const FactorCirculant& phi);

ModalSpectrum eigenvalues(const FactorCirculant& phi);
Diagonalization diagonalize(const FactorCirculant& phi);
MaskDecomposition mask_decompose(const FactorCirculant& phi);

/// Phi·v in O(N^2) straight from the compressed form.
ComplexVector multiply_vector(const FactorCirculant& phi, std::span<const Complex> v);

/// Product of two lambda-circulants sharing size and (exactly equal) factor.
FactorCirculant multiply(const FactorCirculant& a, const FactorCirculant& b);

/// Modes with |mu_l| <= 1e-12·max|mu| are singular and reported in the error.
FactorCirculant inverse(const FactorCirculant& phi);

}  // namespace circswarm
