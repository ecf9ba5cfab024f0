#include <doctest.h>

#include <cmath>
#include <complex>

#include "phpot/classical.hpp"
#include "phpot/offcenter.hpp"

using namespace phpot;
using namespace phpot::offcenter;

namespace {
struct Setup {
  quantum::QuantumParams params;
  quantum::InitialPacket packet;
  quantum::DeterminantOrbit orbit;
  std::vector<OffsetAmplitude> ds;

  Setup(cplx eta, double xi, cplx d0, int n_max)
      : params(quantum::QuantumParams::from_xi(xi)),
        packet(quantum::InitialPacket::make(eta, params.b)),
        orbit(eta, xi, n_max),
        ds(d_sequence(d0, orbit)) {}
};
}  // namespace

TEST_CASE("closed-form d_n equals the stepwise Moebius route") {
  Setup s({1.0, -0.3}, 1.2, {0.4, 0.2}, 150);
  moebius::PacketShape shape = moebius::initial_sigma(s.orbit.eta());
  cplx d = s.ds[1].d_n;
  for (int n = 1; n < 150; ++n) {
    d = d_step(d, shape, 1.2);
    shape = moebius::moebius_step(shape, 1.2);
    CHECK(std::abs(d - s.ds[static_cast<size_t>(n) + 1].d_n) <=
          1e-10 * (1.0 + std::abs(d)));
  }
}

TEST_CASE("both expectation formulations agree") {
  Setup s({0.8, 0.1}, 2.3, {1.0, -0.5}, 100);
  for (int n = 1; n <= 100; ++n) {
    const auto a = expectations(s.orbit.pair(n), s.ds[static_cast<size_t>(n)],
                                s.packet, s.params);
    const auto shape = moebius::linearize(s.orbit.pair(n));
    const auto b = expectations_sigma(shape, s.ds[static_cast<size_t>(n)].d_n, s.params);
    CHECK(a.x_bar == doctest::Approx(b.x_bar).epsilon(1e-9));
    CHECK(a.p_bar == doctest::Approx(b.p_bar).epsilon(1e-9));
  }
}

TEST_CASE("expectations follow the classical kicked map") {
  Setup s({1.0, 0.2}, 1.7, {0.7, 0.3}, 300);
  std::vector<ExpectationPair> orbit;
  for (int n = 1; n <= 300; ++n)
    orbit.push_back(expectations(s.orbit.pair(n), s.ds[static_cast<size_t>(n)],
                                 s.packet, s.params));
  CHECK(ehrenfest_residual(orbit, s.params) <= 1e-9);

  classical::ClassicalState cs{1, orbit[0].x_bar,
                               s.params.period / s.params.mass * orbit[0].p_bar};
  for (int n = 1; n <= 300; ++n) {
    CHECK(std::abs(orbit[static_cast<size_t>(n) - 1].x_bar - cs.x) <=
          1e-9 * (1.0 + std::abs(cs.x)));
    cs = classical::step(cs, 1.7);
  }
}

TEST_CASE("energy separates into packet energy plus p_bar^2/2m") {
  Setup s({1.0, 0.3}, 2.0, {1.0, 0.0}, 80);
  for (int n = 1; n <= 80; ++n) {
    const auto split = energy_split(s.orbit.pair(n), s.ds[static_cast<size_t>(n)],
                                    s.packet, s.params);
    CHECK(split.total == split.quantum_part + split.classical_part);
    const double direct = energy_direct(moebius::linearize(s.orbit.pair(n)),
                                        s.ds[static_cast<size_t>(n)].d_n, s.params);
    CHECK(std::abs(split.total - direct) <= 1e-12 * (1.0 + direct));
    CHECK(split.quantum_part >= 0.0);
    CHECK(split.classical_part >= 0.0);
  }
}

TEST_CASE("centered packet has zero offset energy") {
  Setup s({1.0, -0.5}, 1.0, {0.0, 0.0}, 20);
  for (int n = 1; n <= 20; ++n) {
    const auto e = expectations(s.orbit.pair(n), s.ds[static_cast<size_t>(n)],
                                s.packet, s.params);
    CHECK(e.x_bar == 0.0);
    CHECK(e.p_bar == 0.0);
  }
}

TEST_CASE("d0 converter reproduces a requested phase-space point") {
  const cplx eta{1.1, -0.4};
  const double xi = 0.9;
  const auto params = quantum::QuantumParams::from_xi(xi);
  const cplx d0 = d0_from_phase_space(0.8, -0.6, eta, params);
  Setup s(eta, xi, d0, 3);
  const auto e1 = expectations(s.orbit.pair(1), s.ds[1],
                               quantum::InitialPacket::make(eta, params.b), params);
  CHECK(e1.x_bar == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(e1.p_bar == doctest::Approx(-0.6).epsilon(1e-10));
}
