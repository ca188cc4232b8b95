#include "circswarm/fourier.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "circswarm/errors.hpp"

namespace circswarm {

Complex unit_root_power(std::size_t n, std::size_t k) {
  if (n == 0) throw InvalidArgument("transform size must be positive");
  const std::size_t r = k % n;
  // Quarter turns are returned exactly so that e.g. w^{N/2} = -1 has no
  // spurious imaginary part.
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

DenseMatrix dft_matrix(std::size_t n) {
  if (n < 1) throw InvalidArgument("dft_matrix requires n >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  DenseMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) out(k, l) = scale * unit_root_power(n, k * l);
  }
  return out;
}

ComplexVector unitary_dft_direct(std::span<const Complex> x, FourierDirection dir) {
  const std::size_t n = x.size();
  if (n == 0) throw InvalidArgument("transform size must be positive");
  ComplexVector roots(n);
  for (std::size_t j = 0; j < n; ++j) {
    roots[j] = unit_root_power(n, j);
    if (dir == FourierDirection::Adjoint) roots[j] = std::conj(roots[j]);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t l = 0; l < n; ++l) acc += roots[(k * l) % n] * x[l];
    out[k] = scale * acc;
  }
  return out;
}

ComplexVector unitary_fft_radix2(std::span<const Complex> x, FourierDirection dir) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) throw InvalidArgument("radix-2 transform needs a power-of-two size");
  ComplexVector a(x.begin(), x.end());

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex tw = unit_root_power(n, k * stride);
        if (dir == FourierDirection::Adjoint) tw = std::conj(tw);
        const Complex u = a[start + k];
        const Complex v = a[start + k + half] * tw;
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Complex& z : a) z *= scale;
  return a;
}

ComplexVector unitary_dft(std::span<const Complex> x, FourierDirection dir) {
  if (x.size() >= 8 && is_power_of_two(x.size())) return unitary_fft_radix2(x, dir);
  return unitary_dft_direct(x, dir);
}

}  // namespace circswarm
