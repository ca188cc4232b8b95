#pragma once

#include <cstddef>
#include <span>

#include "circswarm/complex.hpp"

namespace circswarm {

/// Square complex matrix, row-major. Used for interchange and as the
/// reference path that the structured operations are checked against.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const Complex> diag);

  std::size_t size() const noexcept { return n_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  Complex operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
  std::span<const Complex> data() const noexcept { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix hadamard(const DenseMatrix& other) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(Complex s, const DenseMatrix& a);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  ComplexVector operator*(std::span<const Complex> v) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  ComplexVector data_;
};

/// Largest entrywise |a - b|.
double max_entry_error(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace circswarm
