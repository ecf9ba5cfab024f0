#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>

#include "phpot/oracles.hpp"

using namespace phpot;
using namespace phpot::oracles;

TEST_CASE("fft round trip and a known transform") {
  std::vector<cplx> data(64);
  for (size_t j = 0; j < data.size(); ++j)
    data[j] = cplx(std::sin(0.3 * j), std::cos(0.7 * j));
  auto copy = data;
  fft_inplace(copy, false);
  fft_inplace(copy, true);
  for (size_t j = 0; j < data.size(); ++j)
    CHECK(std::abs(copy[j] - data[j]) <= 1e-12);

  // single harmonic -> single bin
  std::vector<cplx> wave(32);
  for (size_t j = 0; j < wave.size(); ++j)
    wave[j] = std::exp(cplx(0.0, 2.0 * M_PI * 3.0 * j / 32.0));
  fft_inplace(wave, false);
  for (size_t m = 0; m < wave.size(); ++m) {
    const double expect = (m == 3) ? 32.0 : 0.0;
    CHECK(std::abs(wave[m]) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("dense determinant reproduces the q recurrence") {
  const cplx eta{1.0, -0.5};
  for (double xi : {0.0, 1.0, 2.0, 3.5}) {
    quantum::DeterminantOrbit orbit(eta, xi, 8);
    for (int n = 1; n <= 8; ++n) {
      const cplx det = dense_determinant(eta, 2.0 - xi, n);
      CHECK(std::abs(det - orbit.q(n)) <= 1e-10 * (1.0 + std::abs(orbit.q(n))));
    }
  }
  // n = 2 at xi = 2 by hand: [[eta - i, i], [i, 0]] -> det = 1
  CHECK(std::abs(dense_determinant(eta, 0.0, 2) - cplx(1.0)) <= 1e-14);
  CHECK_THROWS_AS(dense_determinant(eta, 0.0, 13), std::domain_error);
}

TEST_CASE("split-step propagator tracks analytic widths and conserves norm") {
  const cplx eta{1.0, -0.5};
  const double xi = 1.5;
  const auto params = quantum::QuantumParams::from_xi(xi);
  const auto packet = quantum::InitialPacket::make(eta, params.b);
  quantum::DeterminantOrbit orbit(eta, xi, 15);
  SplitStepPropagator prop(packet, params, cplx(0.0), GridSpec{40.0, 4096, 1});
  CHECK(prop.norm() == doctest::Approx(1.0).epsilon(1e-10));
  for (int n = 1; n <= 15; ++n) {
    prop.step();
    CHECK(prop.pulses_done() == n);
    CHECK(prop.norm() == doctest::Approx(1.0).epsilon(1e-10));
    const double gamma = quantum::width(orbit.pair(n), packet);
    CHECK(prop.width() == doctest::Approx(gamma).epsilon(1e-5));
    CHECK(std::abs(prop.mean_x()) <= 1e-8);
  }
}

TEST_CASE("split-step intermediate width matches the bracket profile") {
  const cplx eta{1.0, 0.3};
  const double xi = 2.4;
  const auto params = quantum::QuantumParams::from_xi(xi);
  const auto packet = quantum::InitialPacket::make(eta, params.b);
  quantum::DeterminantOrbit orbit(eta, xi, 6);
  SplitStepPropagator prop(packet, params, cplx(0.0), GridSpec{40.0, 4096, 1});
  for (int n = 1; n <= 5; ++n) prop.step();
  for (double frac : {0.25, 0.5, 0.75}) {
    const auto prof = quantum::density_profile(orbit.pair(6), frac, packet, params);
    CHECK(prop.width_at_fraction(frac) == doctest::Approx(prof.width).epsilon(1e-4));
  }
}

TEST_CASE("transfer integral: diffusion, binding, and death") {
  const GridSpec grid{30.0, 4096, 1};

  const auto free_spec = polymer::PolymerSpec::dimensionless(0.0, 1.0);
  const auto free_res = transfer_integral(free_spec, 15, grid);
  REQUIRE(!free_res.death_index);
  for (int n = 1; n <= 15; ++n)
    CHECK(free_res.widths[static_cast<size_t>(n) - 1] ==
          doctest::Approx(std::sqrt(1.0 + n)).epsilon(1e-6));

  const auto bind = polymer::PolymerSpec::dimensionless(1.0, 0.5);
  const auto bind_res = transfer_integral(bind, 20, grid);
  REQUIRE(!bind_res.death_index);
  for (int n = 1; n <= 20; ++n)
    CHECK(bind_res.widths[static_cast<size_t>(n) - 1] ==
          doctest::Approx(polymer::width_profile(bind, n)).epsilon(1e-4));

  const auto unbind = polymer::PolymerSpec::dimensionless(-0.5, 1.0);
  const auto death_res = transfer_integral(unbind, 30, grid);
  REQUIRE(death_res.death_index.has_value());
  const int n_star = polymer::max_length(unbind).n_star;
  CHECK(std::abs(*death_res.death_index - (n_star + 1)) <= 2);

  CHECK_THROWS_AS(transfer_integral(polymer::PolymerSpec::dimensionless(-2.5, 1.0), 5, grid),
                  polymer::DeathError);
}

TEST_CASE("grid misuse is rejected") {
  const auto params = quantum::QuantumParams::from_xi(1.0);
  const auto packet = quantum::InitialPacket::make(cplx(1.0, 0.0), params.b);
  CHECK_THROWS_AS(SplitStepPropagator(packet, params, cplx(0.0), GridSpec{30.0, 1000, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(SplitStepPropagator(packet, params, cplx(0.0), GridSpec{-1.0, 1024, 1}),
                  std::domain_error);
}
