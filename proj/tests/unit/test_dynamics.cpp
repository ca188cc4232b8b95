#include <cmath>
#include <limits>

#include "check.hpp"
#include "circswarm/dynamics.hpp"
#include "circswarm/errors.hpp"
#include "circswarm/models.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circswarm;
using check::near;

namespace {

const Complex I{0.0, 1.0};

SwarmState random_state(oracle::Sampler& rng, std::size_t n) { return SwarmState(rng.vector(n)); }

ComplexVector ones(std::size_t n) { return ComplexVector(n, Complex{1.0, 0.0}); }

double modulus_of_mode(const FactorCirculant& phi, std::size_t l) { return std::abs(eigenvalues(phi).mu[l]); }

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("SwarmState validation") {
  CHECK_THROWS_AS(SwarmState(ComplexVector{}), InvalidArgument);
  CHECK_THROWS_AS(SwarmState(ComplexVector{Complex(NAN, 0)}), InvalidArgument);
  CHECK_THROWS_AS(SwarmState(ComplexVector{1.0, 2.0}, -1.0), InvalidArgument);
  CHECK_THROWS_AS(SwarmState(ComplexVector{1.0, 2.0}, INFINITY), InvalidArgument);
  CHECK(SwarmState(ComplexVector{Complex(1, 1), Complex(3, -1)}).centroid() == Complex(2, 0));
}

TEST_CASE("step_discrete") {
  const SwarmState s(ComplexVector{Complex(1, 2), Complex(-1, 0)}, 3.0);
  const SwarmState id = step_discrete(FactorCirculant::identity(2), s);
  CHECK(id.positions == s.positions);
  CHECK(id.time == 4.0);

  const SwarmState tri = step_discrete(darboux(3, 1.0), SwarmState(ComplexVector{1.0, I, -1.0}));
  CHECK(near(tri.positions[0], Complex(0.5, 0.5), 1e-16));
  CHECK(near(tri.positions[1], Complex(-0.5, 0.5), 1e-16));
  CHECK(near(tri.positions[2], 0.0, 1e-16));

  oracle::Sampler rng(20);
  const FactorCirculant phi(rng.vector(6), rng.in_annulus(0.1, 2.0));
  const SwarmState x = random_state(rng, 6);
  CHECK(step_discrete(phi, x).positions == multiply_vector(phi, x.positions));

  CHECK_THROWS_AS(step_discrete(phi, SwarmState(ones(5))), DimensionMismatch);
}

TEST_CASE("modal coordinates") {
  const Diagonalization d = diagonalize(darboux(5, 1.0));
  const ModalState m = to_modal(d, SwarmState(ones(5)));
  CHECK(near(m.coords[0], std::sqrt(5.0), 1e-14));
  for (std::size_t l = 1; l < 5; ++l) CHECK(near(m.coords[l], 0.0, 1e-15));

  ComplexVector spike(5, Complex{});
  spike[0] = std::sqrt(5.0);
  const SwarmState back = from_modal(d, ModalState{spike, 2.0});
  for (Complex p : back.positions) CHECK(near(p, 1.0, 1e-14));
  CHECK(back.time == 2.0);

  const ModalState zero = to_modal(d, SwarmState(ComplexVector(5, Complex{})));
  for (Complex c : zero.coords) CHECK(c == Complex(0.0, 0.0));
  for (Complex p : from_modal(d, zero).positions) CHECK(p == Complex(0.0, 0.0));

  oracle::Sampler rng(21);
  for (int i = 0; i < 20; ++i) {
    const FactorCirculant phi(rng.vector(8), rng.in_annulus(0.1, 2.0));
    const Diagonalization di = diagonalize(phi);
    const SwarmState s = random_state(rng, 8);
    CHECK(check::scaled_diff(from_modal(di, to_modal(di, s)).positions, s.positions) < 1e-12);
    const ComplexVector c = rng.vector(8);
    CHECK(check::scaled_diff(to_modal(di, from_modal(di, ModalState{c, 0.0})).coords, c) < 1e-11);
  }
  CHECK_THROWS_AS(to_modal(d, SwarmState(ones(4))), DimensionMismatch);
  CHECK_THROWS_AS(from_modal(d, ModalState{ones(4), 0.0}), DimensionMismatch);
}

TEST_CASE("evolve_discrete") {
  oracle::Sampler rng(22);
  const FactorCirculant phi(rng.vector(6), rng.in_annulus(0.1, 2.0));
  const SwarmState s = random_state(rng, 6);

  const SwarmState same = evolve_discrete(phi, s, 0);
  CHECK(same.positions == s.positions);
  CHECK(same.time == s.time);
  CHECK(check::scaled_diff(evolve_discrete(phi, s, 1).positions, step_discrete(phi, s).positions) < 1e-12);

  CHECK_THROWS_AS(evolve_discrete(FactorCirculant({0.5, 0.5}, 0.0), SwarmState(ones(2)), 3), DegenerateFactor);
}

TEST_CASE("evolve_discrete: Darboux heptagon contracts onto its centroid") {
  // Agents close in on the centroid no faster than the runner-up modes
  // decay: ||P(t) - c|| <= |mu_1|^t ||P(0) - c||.
  const FactorCirculant phi = darboux(7, 1.0);
  const double rate = modulus_of_mode(phi, 1);
  oracle::Sampler rng(23);
  for (int i = 0; i < 20; ++i) {
    const SwarmState s(rng.vector(7));
    const Complex c = s.centroid();
    const SwarmState end = evolve_discrete(phi, s, 100);
    double start_spread = 0.0, end_spread = 0.0;
    for (std::size_t k = 0; k < 7; ++k) {
      start_spread += std::norm(s.positions[k] - c);
      end_spread += std::norm(end.positions[k] - c);
    }
    CHECK(std::sqrt(end_spread) <= std::pow(rate, 100) * std::sqrt(start_spread) * (1 + 1e-9) + 1e-14);
    CHECK(near(end.centroid(), c, 1e-14));
    // And after 500 steps the spread is far below 1e-9.
    for (Complex p : evolve_discrete(phi, s, 500).positions) CHECK(near(p, c, 1e-9));
  }
}

TEST_CASE("modal and direct evolution agree") {
  oracle::Sampler rng(24);
  for (int i = 0; i < 40; ++i) {
    const FactorCirculant phi = oracle::with_spectral_radius(rng.circulant(2, 12, 0.1, 2.0), rng.uniform(0.3, 1.1));
    const SwarmState s = random_state(rng, phi.size());
    const std::uint64_t t = rng.integer(1, 200);
    SwarmState direct = s;
    for (std::uint64_t k = 0; k < t; ++k) direct = step_discrete(phi, direct);
    const SwarmState modal = evolve_discrete(phi, s, t);
    CHECK(relative_error(modal.positions, direct.positions) < 1e-8);
    CHECK(modal.time == direct.time);
  }
}

TEST_CASE("semigroup") {
  oracle::Sampler rng(25);
  for (int i = 0; i < 20; ++i) {
    const FactorCirculant phi = oracle::with_spectral_radius(rng.circulant(2, 10, 0.2, 2.0), rng.uniform(0.5, 1.05));
    const SwarmState s = random_state(rng, phi.size());
    const std::uint64_t a = rng.integer(0, 60), b = rng.integer(0, 60);
    CHECK(relative_error(evolve_discrete(phi, evolve_discrete(phi, s, a), b).positions,
                         evolve_discrete(phi, s, a + b).positions) < 1e-9);
    const double ta = rng.uniform(0.0, 1.0), tb = rng.uniform(0.0, 1.0);
    CHECK(relative_error(evolve_continuous(phi, evolve_continuous(phi, s, ta), tb).positions,
                         evolve_continuous(phi, s, ta + tb).positions) < 1e-9);
  }
}

TEST_CASE("evolve_continuous") {
  oracle::Sampler rng(26);
  const SwarmState s = random_state(rng, 4);
  const FactorCirculant decay({-1.0, 0.0, 0.0, 0.0}, 1.0);
  CHECK(evolve_continuous(decay, s, 0.0).positions == s.positions);
  const SwarmState one = evolve_continuous(decay, s, 1.0);
  CHECK(one.time == 1.0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(near(one.positions[k], s.positions[k] * std::exp(-1.0), 1e-15));

  for (int i = 0; i < 5; ++i) {
    const FactorCirculant phi(rng.vector(5), rng.in_annulus(0.1, 2.0));
    const SwarmState x = random_state(rng, 5);
    const ComplexVector reference = oracle::rk4_flow(to_dense(phi), x.positions, 0.7, 1e-4);
    CHECK(relative_error(evolve_continuous(phi, x, 0.7).positions, reference) < 1e-6);
  }

  CHECK_THROWS_AS(evolve_continuous(decay, s, -0.5), InvalidArgument);
  CHECK_THROWS_AS(evolve_continuous(decay, s, NAN), InvalidArgument);
  CHECK_THROWS_AS(evolve_continuous(FactorCirculant({1.0, 0.0}, 0.0), SwarmState(ones(2)), 1.0), DegenerateFactor);
}

TEST_CASE("apply_similarity") {
  const SwarmState s(ComplexVector{1.0, -1.0});
  CHECK(apply_similarity(s, {1.0, 0.0}).positions == s.positions);
  CHECK(apply_similarity(s, {I, 0.0}).positions == ComplexVector{I, -I});
  CHECK(apply_similarity(SwarmState(ComplexVector{0.0, 1.0}), {2.0, Complex(1, 1)}).positions ==
        ComplexVector{Complex(1, 1), Complex(3, 1)});
  CHECK_THROWS_AS(SimilarityTransform(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(SimilarityTransform(1.0, Complex(NAN, 0)), InvalidArgument);
}

TEST_CASE("similarity equivariance") {
  oracle::Sampler rng(27);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = rng.integer(2, 10);
    const SimilarityTransform tr(rng.in_annulus(0.5, 2.0), rng.in_square(3.0));
    const SwarmState s = random_state(rng, n);

    const FactorCirculant stochastic = normalized_gathering(n, rng.in_square(), 1.0);
    REQUIRE(check_invariance(stochastic).discrete_ok);
    const SwarmState lhs = step_discrete(stochastic, apply_similarity(s, tr));
    const SwarmState rhs = apply_similarity(step_discrete(stochastic, s), tr);
    CHECK(check::scaled_diff(lhs.positions, rhs.positions) < 1e-10);

    // m_0 = -(sum of the rest) gives zero row sums for lambda = 1.
    ComplexVector m = rng.vector(n);
    m[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) m[0] -= m[k];
    const FactorCirculant generator(m, 1.0);
    REQUIRE(check_invariance(generator).continuous_ok);
    const ComplexVector v1 = multiply_vector(generator, apply_similarity(s, tr).positions);
    ComplexVector v2 = multiply_vector(generator, s.positions);
    for (Complex& z : v2) z *= tr.scale;
    CHECK(check::scaled_diff(v1, v2) < 1e-10);
  }
}

TEST_CASE("centroid conservation") {
  oracle::Sampler rng(28);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = rng.integer(2, 12);
    const FactorCirculant phi = normalized_gathering(n, rng.uniform(0.0, 0.95), 1.0);
    SwarmState s = random_state(rng, n);
    const Complex c = s.centroid();
    for (int k = 0; k < 50; ++k) {
      s = step_discrete(phi, s);
      CHECK(near(s.centroid(), c, 1e-12));
    }
  }
}

TEST_CASE("check_invariance") {
  const InvarianceReport dx = check_invariance(darboux(5, 1.0));
  CHECK(dx.discrete_ok);
  CHECK_FALSE(dx.continuous_ok);
  CHECK(dx.tolerance == kInvarianceTolerance);

  const InvarianceReport zero = check_invariance(FactorCirculant(ComplexVector(3, Complex{}), 1.0));
  CHECK(zero.continuous_ok);
  CHECK_FALSE(zero.discrete_ok);

  const InvarianceReport damped = check_invariance(darboux(3, 0.1));
  CHECK_FALSE(damped.discrete_ok);
  CHECK(near(damped.row_sums[0], 1.0, 1e-16));
  CHECK(near(damped.row_sums[1], 1.0, 1e-16));
  CHECK(near(damped.row_sums[2], 0.55, 1e-16));

  // Flags follow the stated tolerance.
  CHECK(check_invariance(FactorCirculant({0.5, 0.5 + 5e-11}, 1.0)).discrete_ok);
  CHECK_FALSE(check_invariance(FactorCirculant({0.5, 0.5 + 5e-10}, 1.0)).discrete_ok);
  CHECK(check_invariance(FactorCirculant({0.5, 0.5 + 5e-10}, 1.0), 1e-9).discrete_ok);

  const InvarianceReport dense = check_invariance(to_dense(darboux(3, 0.1)));
  CHECK(dense.row_sums == damped.row_sums);
}

TEST_CASE("embed_beacon") {
  const BeaconSystem keep = embed_beacon(darboux(4, 1.0), TimeMode::Discrete, 0.0);
  for (Complex s : keep.correction) CHECK(s == Complex(0.0, 0.0));
  CHECK(keep.beacon_value == Complex(1.0, 0.0));

  const BeaconSystem damped = embed_beacon(darboux(3, 0.1), TimeMode::Discrete, 0.0);
  CHECK(near(damped.correction[0], 0.0, 1e-16));
  CHECK(near(damped.correction[1], 0.0, 1e-16));
  CHECK(near(damped.correction[2], 0.45, 1e-16));
  const DenseMatrix e = damped.embedded_matrix();
  REQUIRE(e.size() == 4);
  CHECK(e(3, 3) == Complex(1.0, 0.0));
  for (std::size_t c = 0; c < 3; ++c) CHECK(e(3, c) == Complex(0.0, 0.0));

  oracle::Sampler rng(29);
  for (int i = 0; i < 100; ++i) {
    const FactorCirculant phi = rng.circulant(2, 12, 0.1, 2.0);
    const BeaconSystem cont = embed_beacon(phi, TimeMode::Continuous, rng.in_square());
    CHECK(cont.beacon_value == Complex(0.0, 0.0));
    const InvarianceReport rc = check_invariance(cont.embedded_matrix(), 0.0);
    CHECK(rc.continuous_ok);
    const ComplexVector velocity = apply_embedded(cont, ones(phi.size() + 1));
    for (Complex v : velocity) CHECK(v == Complex(0.0, 0.0));

    const BeaconSystem disc = embed_beacon(phi, TimeMode::Discrete, rng.in_square());
    const InvarianceReport rd = check_invariance(disc.embedded_matrix());
    CHECK(rd.discrete_ok);
    for (Complex s : rd.row_sums) {
      CHECK(s.imag() == 0.0);
      CHECK(std::abs(s.real() - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
    }
  }
  CHECK_THROWS_AS(embed_beacon(darboux(3, 1.0), TimeMode::Discrete, Complex(NAN, 0)), InvalidArgument);
}

TEST_CASE("step_beacon") {
  oracle::Sampler rng(30);
  const FactorCirculant phi = darboux(5, Complex(0.3, 0.4));
  const SwarmState s = random_state(rng, 5);

  const BeaconSystem origin = embed_beacon(phi, TimeMode::Discrete, 0.0);
  const SwarmState a = step_beacon(origin, s);
  CHECK(a.positions == step_discrete(phi, s).positions);
  CHECK(a.time == s.time + 1.0);

  const Complex b{2.0, -1.0};
  const BeaconSystem sink = embed_beacon(FactorCirculant(ComplexVector(5, Complex{}), 1.0), TimeMode::Discrete, b);
  for (Complex p : step_beacon(sink, s).positions) CHECK(p == b);

  const FactorCirculant stochastic = darboux(5, 1.0);
  const BeaconSystem idle = embed_beacon(stochastic, TimeMode::Discrete, b);
  CHECK(check::scaled_diff(step_beacon(idle, s).positions, step_discrete(stochastic, s).positions) < 1e-15);

  SUBCASE("agrees with the embedded (N+1) system") {
    const BeaconSystem sys = embed_beacon(phi, TimeMode::Discrete, b);
    ComplexVector ext = s.positions;
    ext.push_back(b);
    SwarmState cur = s;
    for (int k = 0; k < 30; ++k) {
      ext = apply_embedded(sys, ext);
      cur = step_beacon(sys, cur);
      CHECK(ext.back() == b);
      CHECK(check::scaled_diff(ComplexVector(ext.begin(), ext.end() - 1), cur.positions) < 1e-12);
    }
  }
  SUBCASE("continuous kind flows for unit time around the beacon") {
    const BeaconSystem sys = embed_beacon(phi, TimeMode::Continuous, b);
    ComplexVector ext = s.positions;
    ext.push_back(b);
    const ComplexVector reference = oracle::rk4_flow(sys.embedded_matrix(), ext, 1.0, 1e-4);
    CHECK(reference.back() == b);
    const SwarmState next = step_beacon(sys, s);
    CHECK(relative_error(next.positions, ComplexVector(reference.begin(), reference.end() - 1)) < 1e-9);
  }
  CHECK_THROWS_AS(step_beacon(origin, SwarmState(ones(3))), DimensionMismatch);
  CHECK_THROWS_AS(apply_embedded(origin, ones(5)), DimensionMismatch);
}

}
