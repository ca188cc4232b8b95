#include "circswarm/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "circswarm/errors.hpp"

namespace circswarm {

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), data_(n * n, Complex{0.0, 0.0}) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> diag) {
  DenseMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

DenseMatrix DenseMatrix::hadamard(const DenseMatrix& other) const {
  if (other.n_ != n_) throw DimensionMismatch(n_, other.n_);
  DenseMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * other.data_[i];
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch(a.n_, b.n_);
  const std::size_t n = a.n_;
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

DenseMatrix operator*(Complex s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (Complex& z : out.data_) z *= s;
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch(a.n_, b.n_);
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ComplexVector DenseMatrix::operator*(std::span<const Complex> v) const {
  if (v.size() != n_) throw DimensionMismatch(n_, v.size());
  ComplexVector out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double max_entry_error(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  double worst = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) worst = std::max(worst, std::abs(da[i] - db[i]));
  return worst;
}

}  // namespace circswarm
