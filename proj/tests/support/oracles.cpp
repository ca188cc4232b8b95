#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

using EigenMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

EigenMatrix to_eigen(const DenseMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  EigenMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

// Kuhn's augmenting-path matching restricted to pairs within `limit`.
bool perfect_matching(std::span<const Complex> a, std::span<const Complex> b, double limit) {
  const std::size_t n = a.size();
  std::vector<int> match_b(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || std::abs(a[i] - b[j]) > limit) continue;
      seen[j] = 1;
      if (match_b[j] < 0 || self(self, static_cast<std::size_t>(match_b[j]))) {
        match_b[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

}  // namespace

DenseMatrix dense_from_definition(std::span<const Complex> m, Complex lambda) {
  const std::size_t n = m.size();
  DenseMatrix out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) out(k, l) = (l < k ? lambda : Complex{1.0}) * m[(l + n - k) % n];
  return out;
}

ComplexVector dense_eigenvalues(const DenseMatrix& a) {
  const EigenMatrix m = to_eigen(a);
  Eigen::ComplexEigenSolver<EigenMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) {
    // Shifted QR can cycle on matrices that are already Hessenberg with a
    // lone corner entry, e.g. (I + lambda-shift)/2 with lambda = i. A random
    // unitary similarity keeps the spectrum and breaks the pattern.
    std::mt19937_64 engine(0x5eed);
    std::normal_distribution<double> normal;
    EigenMatrix g(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = {normal(engine), normal(engine)};
    const EigenMatrix q = Eigen::HouseholderQR<EigenMatrix>(g).householderQ();
    solver.compute(q.adjoint() * m * q, false);
  }
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return ComplexVector(ev.data(), ev.data() + ev.size());
}

double bottleneck_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("bottleneck_distance: size mismatch");
  std::vector<double> candidates;
  for (Complex x : a)
    for (Complex y : b) candidates.push_back(std::abs(x - y));
  std::sort(candidates.begin(), candidates.end());
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(a, b, candidates[mid])) hi = mid; else lo = mid + 1;
  }
  return candidates.empty() ? 0.0 : candidates[lo];
}

ComplexVector dense_apply(const DenseMatrix& a, std::span<const Complex> x) {
  const std::size_t n = a.size();
  ComplexVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < n; ++c) acc += a(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

ComplexVector rk4_flow(const DenseMatrix& a, std::span<const Complex> x0, double t, double h) {
  ComplexVector x(x0.begin(), x0.end());
  const auto steps = static_cast<std::uint64_t>(std::llround(t / h));
  const double dt = t / static_cast<double>(steps);
  const std::size_t n = x.size();
  ComplexVector tmp(n);
  for (std::uint64_t s = 0; s < steps; ++s) {
    const ComplexVector k1 = dense_apply(a, x);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    const ComplexVector k2 = dense_apply(a, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    const ComplexVector k3 = dense_apply(a, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    const ComplexVector k4 = dense_apply(a, tmp);
    for (std::size_t i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return x;
}

ComplexVector row_sums(const DenseMatrix& a) {
  const std::size_t n = a.size();
  ComplexVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    long double re = 0, im = 0;
    for (std::size_t c = 0; c < n; ++c) {
      re += a(r, c).real();
      im += a(r, c).imag();
    }
    out[r] = {static_cast<double>(re), static_cast<double>(im)};
  }
  return out;
}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

std::size_t Sampler::integer(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Complex Sampler::in_square(double half_width) {
  const double x = uniform(-half_width, half_width);
  const double y = uniform(-half_width, half_width);
  return {x, y};
}

Complex Sampler::in_annulus(double r_min, double r_max) {
  const double r = std::sqrt(uniform(r_min * r_min, r_max * r_max));
  return std::polar(r, uniform(-std::numbers::pi, std::numbers::pi));
}

Complex Sampler::on_unit_circle() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

ComplexVector Sampler::vector(std::size_t n, double half_width) {
  ComplexVector out(n);
  for (Complex& z : out) z = in_square(half_width);
  return out;
}

FactorCirculant Sampler::circulant(std::size_t n_min, std::size_t n_max, double r_min, double r_max) {
  const std::size_t n = integer(n_min, n_max);
  ComplexVector m = vector(n);
  return {std::move(m), in_annulus(r_min, r_max)};
}

FactorCirculant with_spectral_radius(const FactorCirculant& phi, double radius) {
  double current = 0.0;
  for (Complex mu : dense_eigenvalues(dense_from_definition(phi.first_row(), phi.factor())))
    current = std::max(current, std::abs(mu));
  ComplexVector m(phi.first_row().begin(), phi.first_row().end());
  for (Complex& z : m) z *= radius / current;
  return {std::move(m), phi.factor()};
}

}  // namespace oracle
