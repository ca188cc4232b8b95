#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace circswarm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws InvalidArgument naming `what` if z has a NaN or infinite part.
void require_finite(Complex z, const char* what);
void require_finite(std::span<const Complex> values, const char* what);

/// z^exponent by repeated squaring. Unlike std::pow(complex, int) this
/// never routes through log(), so 0^k is exactly 0 for k > 0 and z^0 is 1.
Complex integer_power(Complex z, std::uint64_t exponent) noexcept;

/// Euclidean norm of a complex vector.
double norm2(std::span<const Complex> v) noexcept;

/// Largest |a_i - b_i|. Sizes must match.
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

/// ||a - b|| / ||b||, with ||b|| = 0 treated as absolute error.
double relative_error(std::span<const Complex> actual, std::span<const Complex> expected);

}  // namespace circswarm
