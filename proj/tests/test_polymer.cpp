#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "phpot/polymer.hpp"

using namespace phpot::polymer;

TEST_CASE("dimensionless construction round-trips") {
  const auto spec = PolymerSpec::dimensionless(1.5, 0.7);
  CHECK(spec.l() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spec.g_tilde() == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(spec.chi() == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("g = 0 is pure diffusion: gamma_n^2 = a^2 + n l^2") {
  const auto spec = PolymerSpec::dimensionless(0.0, 0.4);
  const auto run = q_polymer(spec, 50);
  REQUIRE(!run.death_index);
  for (const auto& p : run.profiles) {
    CHECK(p.q_n == doctest::Approx(1.0 + p.n * 0.4).epsilon(1e-12));
    const double expect = std::sqrt(spec.a * spec.a + p.n);
    CHECK(p.gamma_n == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("closed forms match the recurrence in all three regimes") {
  for (double gt : {-1.2, -0.3, 0.0, 0.5, 2.0})
    for (double chi : {0.4, 1.0, 3.0}) {
      const auto spec = PolymerSpec::dimensionless(gt, chi);
      const auto run = q_polymer(spec, 200);
      for (const auto& p : run.profiles)
        CHECK(std::abs(q_polymer_closed(spec, p.n) - p.q_n) <=
              1e-10 * (1.0 + std::abs(p.q_n)));
    }
}

TEST_CASE("binding saturation value and chi-independence") {
  // g_tilde = 1: e^{-theta} = 3/2 - sqrt(5)/2, gamma_inf = 1.27202...
  const auto spec = PolymerSpec::dimensionless(1.0, 0.5);
  const double gamma_inf = width_saturation(spec);
  CHECK(gamma_inf ==
        doctest::Approx(1.0 / std::sqrt(std::sqrt(1.25) - 0.5)).epsilon(1e-12));
  CHECK(gamma_inf == doctest::Approx(1.2720196495).epsilon(1e-9));
  CHECK(width_profile(spec, 200) == doctest::Approx(gamma_inf).epsilon(1e-8));
  // same asymptote from a different starting scale
  const auto other = PolymerSpec::dimensionless(1.0, 2.5);
  CHECK(width_profile(other, 200) == doctest::Approx(gamma_inf).epsilon(1e-8));
}

TEST_CASE("tuned coupling freezes the width at its initial value") {
  for (double chi : {0.25, 0.5, 0.8}) {
    const double gt = tuned_coupling(chi);
    CHECK(gt == doctest::Approx(chi * chi / (1.0 - chi)).epsilon(1e-14));
    const auto spec = PolymerSpec::dimensionless(gt, chi);
    CHECK(width_saturation(spec) == doctest::Approx(spec.a).epsilon(1e-12));
    // the transient relaxes onto a; equality is asymptotic, not plane-by-plane
    CHECK(width_profile(spec, 100) == doctest::Approx(spec.a).epsilon(1e-10));
    CHECK(width_profile(spec, 200) == doctest::Approx(spec.a).epsilon(1e-10));
  }
  CHECK_THROWS_AS(tuned_coupling(1.2), std::domain_error);
}

TEST_CASE("maximum length anchors") {
  // |g_tilde| = 1, chi = 0.5: theta' = pi/3, w* = 2.3186..., n* = 2
  const auto a = max_length(PolymerSpec::dimensionless(-1.0, 0.5));
  CHECK(a.w_star == doctest::Approx(2.3186).epsilon(1e-4));
  CHECK(a.n_star == 2);

  // |g_tilde| = 0.01, chi = 1 -> n* = 30
  const auto b = max_length(PolymerSpec::dimensionless(-0.01, 1.0));
  CHECK(b.n_star == 30);

  // death follows at n* + 1 in the recurrence
  const auto run = q_polymer(PolymerSpec::dimensionless(-1.0, 0.5), 10);
  REQUIRE(run.death_index.has_value());
  CHECK(*run.death_index == a.n_star + 1);

  CHECK_THROWS_AS(max_length(PolymerSpec::dimensionless(0.5, 1.0)), std::domain_error);
}

TEST_CASE("width_profile throws once the line is dead") {
  const auto spec = PolymerSpec::dimensionless(-1.0, 0.5);
  CHECK_THROWS_AS(width_profile(spec, 10), DeathError);
}

TEST_CASE("immediate death at g_tilde <= -2") {
  CHECK_THROWS_AS(q_polymer(PolymerSpec::dimensionless(-2.0, 1.0), 3), DeathError);
  CHECK_THROWS_AS(q_polymer(PolymerSpec::dimensionless(-3.0, 1.0), 3), DeathError);
}

TEST_CASE("unbinding transient reports NaN widths while still alive") {
  // between the width divergence and death, q_n - q_{n-1} < 0
  const auto run = q_polymer(PolymerSpec::dimensionless(-0.5, 1.0), 10);
  REQUIRE(run.death_index.has_value());
  bool saw_nan = false;
  for (const auto& p : run.profiles) saw_nan = saw_nan || std::isnan(p.gamma_n);
  CHECK(saw_nan);
}

TEST_CASE("growth regimes in the weak unbinding limit") {
  const auto rep = growth_regimes(PolymerSpec::dimensionless(-1e-4, 1.0));
  CHECK(rep.early_ok);
  CHECK(std::abs(rep.early_exponent - 0.5) <= 0.05);
  REQUIRE(rep.late_slope.has_value());
  CHECK(rep.late_ok);
}
