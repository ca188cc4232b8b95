#pragma once

#include <cstddef>
#include <span>

#include "circswarm/complex.hpp"
#include "circswarm/dense_matrix.hpp"

namespace circswarm {

/// Which unitary Fourier matrix to apply. Forward is FT with entries
/// w^{kl}/sqrt(N), w = exp(-2 pi i / N); Adjoint is FT*.
enum class FourierDirection { Forward, Adjoint };

/// w^k = exp(-2 pi i k / n), with k reduced mod n before evaluation.
Complex unit_root_power(std::size_t n, std::size_t k);

/// FT as a dense matrix, entry (k,l) = w^{kl}/sqrt(n). Requires n >= 1.
DenseMatrix dft_matrix(std::size_t n);

/// O(N^2) evaluation of FT·x or FT*·x.
ComplexVector unitary_dft_direct(std::span<const Complex> x, FourierDirection dir);

/// Iterative radix-2 transform; x.size() must be a power of two.
ComplexVector unitary_fft_radix2(std::span<const Complex> x, FourierDirection dir);

/// Dispatches to the radix-2 path for power-of-two sizes, the direct sum otherwise.
ComplexVector unitary_dft(std::span<const Complex> x, FourierDirection dir);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace circswarm
