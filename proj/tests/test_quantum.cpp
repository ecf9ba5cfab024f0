#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>

#include "phpot/quantum.hpp"

using namespace phpot;
using namespace phpot::quantum;

TEST_CASE("determinant orbit seed and first steps") {
  const cplx eta{1.0, -0.5};
  DeterminantOrbit orbit(eta, 2.0, 6);  // beta = 0: q_{n+2} = q_n
  CHECK(orbit.q(0) == cplx(1.0));
  CHECK(orbit.q(1) == eta - cplx(0.0, 1.0));
  CHECK(orbit.q(2) == cplx(1.0));
  CHECK(orbit.q(3) == orbit.q(1));
  CHECK(orbit.q(6) == cplx(1.0));
}

TEST_CASE("bilinear identity pins |q| from below") {
  const cplx eta{0.7, 0.4};
  DeterminantOrbit orbit(eta, 1.3, 400);
  for (int n = 1; n <= 400; ++n) {
    const double re = (orbit.q(n) * std::conj(orbit.q(n - 1))).real();
    CHECK(re == doctest::Approx(eta.real()).epsilon(1e-10));
    CHECK(std::abs(orbit.q(n)) * std::abs(orbit.q(n - 1)) >= eta.real() - 1e-12);
  }
}

TEST_CASE("closed form equals the recurrence") {
  const cplx eta{1.2, -0.3};
  for (double xi : {0.4, 2.0, 3.1}) {
    DeterminantOrbit orbit(eta, xi, 300);
    for (int n = 0; n <= 300; ++n)
      CHECK(std::abs(q_closed_form(eta, xi, n) - orbit.q(n)) <=
            1e-9 * (1.0 + std::abs(orbit.q(n))));
  }
}

TEST_CASE("xi = 0 free packet: |q_n| = |1 + i n eta| for real eta") {
  const cplx eta{1.0, 0.0};
  DeterminantOrbit orbit(eta, 0.0, 40);
  const auto packet = InitialPacket::make(eta);
  for (int n = 0; n <= 40; ++n) {
    const double expect = std::sqrt(1.0 + static_cast<double>(n) * n);
    CHECK(std::abs(orbit.q(n)) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(width(orbit.pair(n), packet) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("1-cycle at xi = 2 with eta = 1 + i") {
  const cplx eta{1.0, 1.0};
  const auto params = QuantumParams::from_xi(2.0);
  const auto packet = InitialPacket::make(eta, params.b);
  DeterminantOrbit orbit(eta, 2.0, 100);
  for (int n = 1; n <= 100; ++n) {
    CHECK(orbit.q(n) == cplx(1.0));
    CHECK(mean_energy(orbit.pair(n), packet, params) == doctest::Approx(0.5));
    CHECK(width(orbit.pair(n), packet) == doctest::Approx(packet.gamma0));
  }
}

TEST_CASE("density is continuous across a pulse; the width dips in between") {
  const cplx eta{1.0, -0.5};
  const auto params = QuantumParams::from_xi(1.0);
  const auto packet = InitialPacket::make(eta, params.b);
  DeterminantOrbit orbit(eta, 1.0, 10);
  for (int n = 2; n <= 10; ++n) {
    // frac = 0 at index n is the same instant as frac = 1 at index n - 1
    const auto post = density_profile(orbit.pair(n), 0.0, packet, params);
    const auto pre = density_profile(orbit.pair(n - 1), 1.0, packet, params);
    CHECK(post.width == doctest::Approx(pre.width).epsilon(1e-12));
    CHECK(post.amplitude == doctest::Approx(pre.amplitude).epsilon(1e-12));
  }
}

TEST_CASE("wave function magnitude matches the density profile") {
  const cplx eta{1.0, -0.5};
  const auto params = QuantumParams::from_xi(1.0);
  const auto packet = InitialPacket::make(eta, params.b);
  DeterminantOrbit orbit(eta, 1.0, 6);
  for (double frac : {0.2, 0.6, 1.0}) {
    const auto prof = density_profile(orbit.pair(4), frac, packet, params);
    for (double x : {0.0, 0.7, -1.3}) {
      const cplx psi = wavefunction_at(orbit, 4, frac, x, packet, params);
      const double expect =
          prof.amplitude * std::exp(-x * x / (prof.width * prof.width));
      CHECK(std::norm(psi) == doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("wave function phase continuity across a pulse") {
  // across the pulse at (n-1) tau, psi only gains exp(-i xi x^2 / 2 b^2)
  const cplx eta{1.0, -0.5};
  const double xi = 1.7;
  const auto params = QuantumParams::from_xi(xi);
  const auto packet = InitialPacket::make(eta, params.b);
  DeterminantOrbit orbit(eta, xi, 8);
  for (int n = 2; n <= 8; ++n)
    for (double x : {0.0, 0.9}) {
      const cplx before = wavefunction_at(orbit, n - 1, 1.0, x, packet, params);
      const cplx after = wavefunction_at(orbit, n, 0.0, x, packet, params);
      const cplx kick =
          std::exp(cplx(0.0, -0.5 * xi * x * x / (params.b * params.b)));
      CHECK(std::abs(after - before * kick) <= 1e-10 * std::abs(before));
    }
}

TEST_CASE("packet construction rejects non-normalizable eta") {
  CHECK_THROWS_AS(InitialPacket::make(cplx(0.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(InitialPacket::make(cplx(-0.2, 0.0)), std::domain_error);
  CHECK_THROWS_AS(DeterminantOrbit(cplx(-1.0, 0.0), 1.0, 5), std::domain_error);
}
