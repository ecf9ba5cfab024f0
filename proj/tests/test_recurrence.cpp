#include <doctest.h>

#include "phpot/recurrence.hpp"

using namespace phpot;

TEST_CASE("iterate produces the seeded three-term sequence") {
  // u_{n+2} = u_{n+1} + u_n from (1, 1): Fibonacci
  RecurrenceSeed fib{cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)};
  const auto u = iterate(fib, 10);
  REQUIRE(u.size() == 11);
  CHECK(u[9].real() == doctest::Approx(55.0).epsilon(1e-15));
  CHECK(u[10].real() == doctest::Approx(89.0).epsilon(1e-15));
}

TEST_CASE("oscillatory closed form matches iteration") {
  for (double beta : {-1.7, -0.4, 0.0, 0.9, 1.99}) {
    RecurrenceSeed seed{cplx(1.0, 0.2), cplx(0.4, -1.1), cplx(beta), cplx(-1.0)};
    const auto u = iterate(seed, 200);
    for (int n = 0; n <= 200; ++n) {
      const cplx closed = closed_form_oscillatory(seed, n);
      CHECK(std::abs(closed - u[static_cast<size_t>(n)]) <=
            1e-9 * (1.0 + std::abs(u[static_cast<size_t>(n)])));
    }
  }
}

TEST_CASE("closed form falls back to iteration at the band edges") {
  for (double beta : {2.0, -2.0}) {
    RecurrenceSeed seed{cplx(1.0), cplx(0.5), cplx(beta), cplx(-1.0)};
    const auto u = iterate(seed, 50);
    for (int n = 0; n <= 50; ++n)
      CHECK(closed_form_oscillatory(seed, n) == u[static_cast<size_t>(n)]);
  }
}

TEST_CASE("coupling classification") {
  CHECK(coupling_from_xi(1.0).regime == Regime::Oscillatory);
  CHECK(coupling_from_xi(0.0).regime == Regime::Marginal);
  CHECK(coupling_from_xi(4.0).regime == Regime::Marginal);
  CHECK(coupling_from_xi(-0.1).regime == Regime::Hyperbolic);
  CHECK(coupling_from_gtilde(1.0).regime == Regime::Hyperbolic);
  CHECK(coupling_from_gtilde(-0.5).regime == Regime::Oscillatory);

  // 2 cos(phi) = beta = 2 - xi
  const auto c = coupling_from_xi(2.0);
  REQUIRE(c.angle.has_value());
  CHECK(*c.angle == doctest::Approx(M_PI / 2.0).epsilon(1e-14));

  // 2 cosh(theta) = g_tilde + 2: g_tilde = 0.5 -> theta = arccosh(1.25) = ln 2
  const auto g = coupling_from_gtilde(0.5);
  REQUIRE(g.angle.has_value());
  CHECK(*g.angle == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}
