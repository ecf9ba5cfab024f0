#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "phpot/scan.hpp"

using namespace phpot;
using namespace phpot::scan;

namespace {
ScanSpec fig1_spec() {
  ScanSpec spec;
  spec.manifestation = Manifestation::Classical;
  spec.xi_min = 0.0;
  spec.xi_max = 2.0;
  spec.xi_step = 0.01;
  spec.n_iterations = 20;
  spec.x0 = 1.0;
  spec.p0 = 0.5;
  return spec;
}
}  // namespace

TEST_CASE("portrait rows are sorted, complete, and non-negative") {
  const auto rows = run_portrait(fig1_spec());
  CHECK(rows.size() == 200 * 20);
  for (size_t k = 1; k < rows.size(); ++k) {
    const bool ordered = rows[k - 1].xi < rows[k].xi ||
                         (rows[k - 1].xi == rows[k].xi && rows[k - 1].n < rows[k].n);
    CHECK(ordered);
    CHECK(rows[k].energy >= 0.0);
  }
}

TEST_CASE("portrait output is byte-identical across worker counts") {
  const auto spec = fig1_spec();
  setenv("PHPOT_WORKERS", "1", 1);
  const std::string serial = portrait_csv(run_portrait(spec));
  setenv("PHPOT_WORKERS", "4", 1);
  const std::string parallel = portrait_csv(run_portrait(spec));
  unsetenv("PHPOT_WORKERS");
  CHECK(serial == parallel);
  CHECK(serial.substr(0, 12) == "xi,n,energy\n");
}

TEST_CASE("quantum 1-cycle column: eta = 1 + i gives constant energy 0.5 at xi = 2") {
  ScanSpec spec = fig1_spec();
  spec.manifestation = Manifestation::Quantum;
  spec.eta = {1.0, 1.0};
  const auto rows = run_portrait(spec);
  int seen = 0;
  for (const auto& r : rows)
    if (std::abs(r.xi - 2.0) < 1e-12) {
      CHECK(r.energy == doctest::Approx(0.5).epsilon(1e-12));
      ++seen;
    }
  CHECK(seen == 20);
}

TEST_CASE("quantum portrait energies stay bounded away from zero") {
  // eta = 1 - i/2: the quantum lower envelope keeps a finite gap from zero,
  // unlike the classical portrait whose minimum effectively touches zero.
  // The gap is absolute, not a fixed fraction of the scan maximum: near
  // xi -> 0 the packet spreads wide and a weak kick refocuses it, so
  // E_min ~ eta_R / (2 Im[q_n conj(q_{n-1})]) can be small while the
  // near-band-edge maxima stay O(1).
  ScanSpec spec = fig1_spec();
  spec.manifestation = Manifestation::Quantum;
  spec.eta = {1.0, -0.5};
  double quantum_lo = 1e300;
  for (const auto& r : run_portrait(spec)) quantum_lo = std::min(quantum_lo, r.energy);
  CHECK(quantum_lo > 1e-3);  // measured 2.117e-3 in hbar/tau units

  double classical_lo = 1e300;
  for (const auto& r : run_portrait(fig1_spec()))
    classical_lo = std::min(classical_lo, r.energy);
  CHECK(classical_lo < 1e-6);  // measured 1.2e-10: the classical floor
  CHECK(quantum_lo > 1e6 * classical_lo);
}

TEST_CASE("spec validation") {
  ScanSpec bad = fig1_spec();
  bad.xi_step = -0.1;
  CHECK_THROWS_AS(run_portrait(bad), std::invalid_argument);
  bad = fig1_spec();
  bad.n_iterations = 0;
  CHECK_THROWS_AS(run_portrait(bad), std::invalid_argument);
  bad = fig1_spec();
  bad.manifestation = Manifestation::Polymer;
  CHECK_THROWS_AS(run_portrait(bad), std::invalid_argument);
}

TEST_CASE("polymer profile emission") {
  const auto binding = run_polymer_profile(1.0, 0.5, 30);
  REQUIRE(binding.gamma_inf.has_value());
  CHECK(*binding.gamma_inf == doctest::Approx(1.2720196495).epsilon(1e-9));
  CHECK(binding.rows.size() == 30);
  const std::string csv = polymer_csv(binding);
  CHECK(csv.substr(0, 14) == "n,gamma,alive\n");

  const auto unbinding = run_polymer_profile(-0.01, 1.0, 60);
  REQUIRE(unbinding.n_star.has_value());
  CHECK(*unbinding.n_star == 30);
  // last emitted row is the death marker
  REQUIRE(!unbinding.rows.empty());
  CHECK(unbinding.rows.back().alive == false);
  CHECK(unbinding.rows.back().n == 31);

  const auto diffusive = run_polymer_profile(0.0, 1.0, 10);
  CHECK(!diffusive.gamma_inf);
  CHECK(!diffusive.n_star);
}

TEST_CASE("orbit dump schema") {
  ScanSpec spec = fig1_spec();
  spec.n_iterations = 5;
  const auto rows = run_orbit(spec, 3.0);
  REQUIRE(rows.size() == 5);
  const std::string csv = orbit_csv(rows);
  CHECK(csv.substr(0, 17) == "n,x,rho,energy\n1,");

  spec.manifestation = Manifestation::Quantum;
  spec.eta = {1.0, -0.5};
  const auto qrows = run_orbit(spec, 1.0);
  CHECK(orbit_csv(qrows).substr(0, 44) ==
        "n,re_q,im_q,re_sigma,im_sigma,width,energy\n1");
}

TEST_CASE("continuum trace conserves total energy") {
  const auto rows = run_continuum(1.0, 1.0, 1.0, 0.7, 6.0, 120);
  REQUIRE(rows.size() == 121);
  for (const auto& r : rows) {
    CHECK(r.total == doctest::Approx(rows.front().total).epsilon(1e-10));
    CHECK(r.width >= std::min(0.7, rows.front().width) * (1.0 - 1e-12));
  }
  CHECK(continuum_csv(rows).substr(0, 31) == "t,width,kinetic,potential,total");
}

TEST_CASE("json mirrors carry the same field names") {
  ScanSpec spec = fig1_spec();
  spec.n_iterations = 2;
  spec.xi_max = 0.05;
  const auto rows = run_portrait(spec);
  const std::string js = portrait_json(rows);
  CHECK(js.find("\"xi\"") != std::string::npos);
  CHECK(js.find("\"n\"") != std::string::npos);
  CHECK(js.find("\"energy\"") != std::string::npos);
}
