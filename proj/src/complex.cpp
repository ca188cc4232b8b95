#include "circswarm/complex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circswarm/errors.hpp"

namespace circswarm {

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

void require_finite(std::span<const Complex> values, const char* what) {
  for (Complex z : values) require_finite(z, what);
}

Complex integer_power(Complex z, std::uint64_t exponent) noexcept {
  Complex result{1.0, 0.0};
  Complex base = z;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

double norm2(std::span<const Complex> v) noexcept {
  // Scaled accumulation so that states near the overflow or underflow
  // limits keep a meaningful norm.
  double scale = 0.0;
  for (Complex z : v) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (Complex z : v) {
    const double re = z.real() / scale;
    const double im = z.imag() / scale;
    sum += re * re + im * im;
  }
  return scale * std::sqrt(sum);
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double relative_error(std::span<const Complex> actual, std::span<const Complex> expected) {
  if (actual.size() != expected.size()) throw DimensionMismatch(expected.size(), actual.size());
  ComplexVector diff(actual.size());
  for (std::size_t i = 0; i < actual.size(); ++i) diff[i] = actual[i] - expected[i];
  const double denom = norm2(expected);
  const double num = norm2(diff);
  return denom == 0.0 ? num : num / denom;
}

}  // namespace circswarm
