#include "phpot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "phpot/classical.hpp"
#include "phpot/continuum.hpp"
#include "phpot/moebius.hpp"
#include "phpot/offcenter.hpp"
#include "phpot/oracles.hpp"
#include "phpot/polymer.hpp"
#include "phpot/quantum.hpp"
#include "phpot/recurrence.hpp"

namespace phpot::verify {

namespace {

using std::abs;

struct Collector {
  std::vector<CheckResult> results;

  void residual(const std::string& name, double res, double tol,
                std::string detail = "") {
    if (detail.empty()) {
      std::ostringstream os;
      os << "tol " << tol;
      detail = os.str();
    }
    results.push_back(CheckResult{name, res <= tol, res, std::move(detail)});
  }

  void boolean(const std::string& name, bool ok, std::string detail = "") {
    results.push_back(CheckResult{name, ok, ok ? 0.0 : 1.0, std::move(detail)});
  }
};

const double kXiGrid[] = {0.3, 0.9, 1.5, 2.0, 2.7, 3.3, 3.9};
const cplx kEtaGrid[] = {{1.0, 0.0}, {1.0, -0.5}, {1.0, 1.0}, {0.4, 0.3}, {2.0, -1.0}};

// ---------------------------------------------------------------- classical

void check_classical(Collector& c) {
  namespace cl = classical;

  // closed form vs map iteration
  {
    double worst = 0.0;
    for (double xi : kXiGrid) {
      const auto params = cl::ClassicalParams::from_xi(xi);
      const auto init = cl::initial_state(1.0, 0.5, params);
      cl::ClassicalState s = init.state;
      for (int n = 0; n <= 1000; ++n) {
        const double closed = cl::rho_closed_form(n, init.rho0, init.state.rho, xi);
        worst = std::max(worst, abs(closed - s.rho) / (1.0 + abs(s.rho)));
        s = cl::step(s, xi);
      }
    }
    c.residual("classical/closed-form-vs-map", worst, 1e-9);
  }

  // tuned periodic motions, random seeds
  {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    double worst2 = 0.0, worst3 = 0.0;
    const auto p2 = cl::ClassicalParams::from_xi(2.0);
    const auto p3 = cl::ClassicalParams::from_xi(3.0);
    for (int trial = 0; trial < 10; ++trial) {
      const double x0 = uni(rng), p0 = uni(rng);
      cl::ClassicalState s2 = cl::initial_state(x0, p0, p2).state;
      std::vector<double> energies;
      for (int n = 0; n < 20; ++n) {
        energies.push_back(cl::energy(s2, p2));
        s2 = cl::step(s2, 2.0);
      }
      for (size_t n = 0; n + 2 < energies.size(); ++n)
        worst2 = std::max(worst2,
                          abs(energies[n + 2] - energies[n]) / (1.0 + abs(energies[n])));
      cl::ClassicalState s3 = cl::initial_state(x0, p0, p3).state;
      cl::ClassicalState t = s3;
      for (int k = 0; k < 3; ++k) t = cl::step(t, 3.0);
      worst3 = std::max({worst3, abs(t.x - s3.x) / (1.0 + abs(s3.x)),
                         abs(t.rho - s3.rho) / (1.0 + abs(s3.rho))});
    }
    c.residual("classical/pmii-period2-xi2", worst2, 1e-9);
    c.residual("classical/pmi-period3-xi3", worst3, 1e-9);
    const auto rep2 = cl::classify_periodicity(2.0, 16);
    const auto rep3 = cl::classify_periodicity(3.0, 16);
    c.boolean("classical/classification",
              rep2.kind == cl::MotionKind::PMII && rep2.n_period == 2 &&
                  rep2.m_index == 1 && rep3.kind == cl::MotionKind::PMI &&
                  rep3.n_period == 3 && rep3.m_index == 2,
              "xi=2 -> PMII(2,M=1); xi=3 -> PMI(3,M=2)");
  }

  // special PMI(2) at xi = 4 with rho_1 = 2 x_1
  {
    cl::ClassicalState s{1, 1.0, 2.0};
    const bool tuned = cl::special_pmi2_condition(s, 4.0);
    cl::ClassicalState t = cl::step(cl::step(s, 4.0), 4.0);
    const double res = std::max(abs(t.x - s.x), abs(t.rho - s.rho));
    cl::ClassicalState u{1, 1.0, 1.0};  // untuned
    double grow = 0.0;
    cl::ClassicalState w = u;
    for (int n = 0; n < 200; ++n) {
      w = cl::step(w, 4.0);
      grow = std::max(grow, abs(w.x));
    }
    c.boolean("classical/special-pmi2-xi4",
              tuned && res <= 1e-12 && !cl::special_pmi2_condition(u, 4.0) &&
                  grow > 50.0 * abs(u.x),
              "tuned seed returns after 2 steps; untuned seed diverges");
  }

  // instability outside the band
  {
    bool ok = true;
    for (double xi : {-0.1, 4.1}) {
      cl::ClassicalState s{1, 1.0, 0.5};
      bool exceeded = false;
      for (int n = 0; n < 200 && !exceeded; ++n) {
        s = cl::step(s, xi);
        if (abs(s.x) > 1e6) exceeded = true;
      }
      ok = ok && exceeded;
    }
    c.boolean("classical/instability-outside-band", ok,
              "|x_n| > 1e6 |x_1| within 200 steps for xi = -0.1, 4.1");
  }

  // energy positivity
  {
    bool ok = true;
    const auto params = cl::ClassicalParams::from_xi(1.7);
    cl::ClassicalState s = cl::initial_state(0.7, -1.3, params).state;
    for (int n = 0; n < 500; ++n) {
      ok = ok && cl::energy(s, params) >= 0.0;
      s = cl::step(s, 1.7);
    }
    c.boolean("classical/energy-positivity", ok);
  }
}

// ------------------------------------------------------------------ quantum

double grid_energy(const oracles::SplitStepPropagator& prop,
                   const quantum::QuantumParams& params, double dy) {
  std::vector<cplx> f = prop.psi();
  oracles::fft_inplace(f, false);
  const int n = static_cast<int>(f.size());
  const double dk = 2.0 * M_PI / (n * dy);
  double num = 0.0, den = 0.0;
  for (int m = 0; m < n; ++m) {
    const int mm = (m < n / 2) ? m : m - n;
    const double k = mm * dk;
    const double p = std::norm(f[static_cast<size_t>(m)]);
    num += k * k * p;
    den += p;
  }
  return params.hbar / (2.0 * params.period) * num / den;
}

void check_quantum(Collector& c) {
  namespace qm = quantum;
  namespace mb = moebius;
  namespace oc = offcenter;

  // bilinear identity and non-vanishing q_n
  {
    double worst = 0.0;
    bool nonzero = true;
    int points = 0;
    for (cplx eta : kEtaGrid) {
      for (double xi : {0.5, 1.3, 2.0, 3.7}) {
        ++points;
        qm::DeterminantOrbit orbit(eta, xi, 1000);
        for (int n = 1; n <= 1000; ++n) {
          const cplx qn = orbit.q(n), qp = orbit.q(n - 1);
          nonzero = nonzero && qn != cplx(0.0);
          worst = std::max(worst, abs((qn * std::conj(qp)).real() - eta.real()) /
                                      eta.real());
        }
      }
    }
    std::ostringstream os;
    os << points << "-point (eta, xi) grid, n <= 1000";
    c.residual("quantum/bilinear-identity", worst, 1e-9, os.str());
    c.boolean("quantum/q-nonvanishing", nonzero);
  }

  // closed form vs recurrence
  {
    double worst = 0.0;
    for (cplx eta : kEtaGrid)
      for (double xi : {0.5, 1.3, 2.0, 3.7}) {
        qm::DeterminantOrbit orbit(eta, xi, 1000);
        for (int n = 0; n <= 1000; ++n) {
          const cplx closed = qm::q_closed_form(eta, xi, n);
          worst = std::max(worst,
                           abs(closed - orbit.q(n)) / (1.0 + abs(orbit.q(n))));
        }
      }
    c.residual("quantum/closed-form-vs-recurrence", worst, 1e-9);
  }

  // Moebius orbit vs linearized q orbit, plus energy bridge
  {
    double worst = 0.0, eworst = 0.0;
    for (cplx eta : kEtaGrid)
      for (double xi : {0.5, 1.3, 2.0, 3.7}) {
        const auto params = qm::QuantumParams::from_xi(xi);
        const auto packet = qm::InitialPacket::make(eta, params.b);
        qm::DeterminantOrbit orbit(eta, xi, 1000);
        mb::PacketShape shape = mb::initial_sigma(eta);
        for (int n = 1; n <= 1000; ++n) {
          const cplx lin = mb::linearize(orbit.pair(n)).sigma;
          worst = std::max(worst, abs(shape.sigma - lin) / (1.0 + abs(lin)));
          const double e_q = qm::mean_energy(orbit.pair(n), packet, params);
          const double e_s = mb::sigma_energy(shape, params);
          eworst = std::max(eworst, abs(e_q - e_s) / (1.0 + e_q));
          if (n < 1000) shape = mb::moebius_step(shape, xi);
        }
      }
    c.residual("quantum/dual-formulation", worst, 1e-9);
    c.residual("quantum/energy-bridge-sigma-vs-q", eworst, 1e-9);
  }

  // 1-cycle: xi = 2 with eta = 1+i, and random xi via the tuned eta
  {
    const auto params = qm::QuantumParams::from_xi(2.0);
    const auto packet = qm::InitialPacket::make({1.0, 1.0}, params.b);
    qm::DeterminantOrbit orbit({1.0, 1.0}, 2.0, 1000);
    double worst = 0.0;
    for (int n = 1; n <= 1000; ++n) {
      worst = std::max(worst, abs(orbit.q(n) - cplx(1.0)));
      worst = std::max(worst, abs(qm::width(orbit.pair(n), packet) - packet.gamma0));
      worst = std::max(worst, abs(qm::mean_energy(orbit.pair(n), packet, params) - 0.5));
      worst = std::max(
          worst, abs(mb::linearize(orbit.pair(n)).sigma - cplx(1.0, -1.0)));
    }
    c.residual("quantum/one-cycle-xi2", worst, 1e-9,
               "eta = 1+i: q_n = 1, sigma = 1-i, width gamma_0, energy 0.5");

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.2, 3.8);
    double worst_r = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const double xi = uni(rng);
      const auto cyc = mb::one_cycle_eta(xi);
      const cplx target = mb::fixed_point_sigma(xi);
      mb::PacketShape shape = mb::initial_sigma(cyc.eta);
      for (int n = 1; n <= 1000; ++n) {
        worst_r = std::max(worst_r, abs(shape.sigma - target) / (1.0 + abs(target)));
        shape = mb::moebius_step(shape, xi);
      }
    }
    c.residual("quantum/one-cycle-random-xi", worst_r, 1e-9,
               "10 random xi in (0.2, 3.8), tuned eta");
  }

  // periodic orbits: |q| period and the constant wavefunction phase factor
  {
    bool ok = true;
    double worst = 0.0;
    struct Case { double xi; int n; int m; } cases[] = {{2.0, 2, 1}, {3.0, 3, 2}, {1.0, 3, 1}};
    for (const auto& cs : cases) {
      const auto params = qm::QuantumParams::from_xi(cs.xi);
      const auto packet = qm::InitialPacket::make({1.0, -0.5}, params.b);
      qm::DeterminantOrbit orbit({1.0, -0.5}, cs.xi, 60);
      const cplx expected_phase = std::exp(cplx(0.0, -cs.m * M_PI / 2.0));
      for (int k = 1; k + cs.n <= 60; ++k) {
        worst = std::max(worst, abs(abs(orbit.q(k + cs.n)) - abs(orbit.q(k))));
        const cplx a = qm::wavefunction_at(orbit, k, 1.0, 0.7, packet, params);
        const cplx b = qm::wavefunction_at(orbit, k + cs.n, 1.0, 0.7, packet, params);
        worst = std::max(worst, abs(b / a - expected_phase));
        ok = ok && abs(qm::mean_energy(orbit.pair(k + cs.n), packet, params) -
                       qm::mean_energy(orbit.pair(k), packet, params)) < 1e-9;
      }
    }
    c.residual("quantum/periodic-orbit-phase", worst, 1e-9,
               "psi picks up only exp(-i M pi/2) per period");
    c.boolean("quantum/periodic-orbit-energy", ok);
  }

  // stability band and divergence outside it
  {
    bool bounded = true;
    for (cplx eta : kEtaGrid)
      for (double xi : {0.5, 1.3, 2.0, 3.7}) {
        const double phi = std::acos(1.0 - xi / 2.0);
        const double bound = (abs(eta - cplx(0.0, 1.0)) + 1.0) / std::sin(phi) + 1.0;
        qm::DeterminantOrbit orbit(eta, xi, 1000);
        for (int n = 0; n <= 1000; ++n) bounded = bounded && abs(orbit.q(n)) <= bound;
      }
    c.boolean("quantum/stability-band-bounded", bounded,
              "widths bounded over 1000 steps for xi in (0,4)");

    qm::DeterminantOrbit neg({1.0, 0.0}, -0.1, 100);
    bool mono = true;
    for (int n = 1; n < 100; ++n)
      mono = mono && abs(neg.q(n + 1)) >= abs(neg.q(n)) * (1.0 - 1e-12);
    c.boolean("quantum/width-monotone-xi-negative", mono, "xi = -0.1");

    qm::DeterminantOrbit big({1.0, 0.0}, 4.1, 200);
    bool growing = true;
    for (int n = 50; n < 200; ++n)
      growing = growing && abs(big.q(n + 1)) > abs(big.q(n));
    c.boolean("quantum/width-divergence-above-band",
              growing && abs(big.q(200)) > 1e6,
              "xi = 4.1: envelope exceeds 1e6 within 200 steps");
  }

  // dense determinant oracle
  {
    double worst = 0.0;
    for (cplx eta : kEtaGrid)
      for (double xi : {0.0, 1.3, 2.0, 3.7}) {
        qm::DeterminantOrbit orbit(eta, xi, 8);
        for (int n = 1; n <= 8; ++n) {
          const cplx det = oracles::dense_determinant(eta, 2.0 - xi, n);
          worst = std::max(worst, abs(det - orbit.q(n)) / (1.0 + abs(orbit.q(n))));
        }
      }
    c.residual("quantum/dense-determinant-oracle", worst, 1e-10);
  }

  // split-step grid oracle: widths, norm, mean position, energy
  {
    const oracles::GridSpec grid{40.0, 4096, 1};
    const cplx eta{1.0, -0.5};
    const double xi = 1.5;
    const auto params = qm::QuantumParams::from_xi(xi);
    const auto packet = qm::InitialPacket::make(eta, params.b);
    qm::DeterminantOrbit orbit(eta, xi, 20);
    const auto doffs = oc::d_sequence({1.0, 0.0}, orbit);

    oracles::SplitStepPropagator centered(packet, params, {0.0, 0.0}, grid);
    oracles::SplitStepPropagator shifted(packet, params, {1.0, 0.0}, grid);
    double wwidth = 0.0, wnorm = 0.0, wx = 0.0, wen = 0.0;
    for (int n = 1; n <= 20; ++n) {
      centered.step();
      shifted.step();
      const double gamma = qm::width(orbit.pair(n), packet);
      wwidth = std::max(wwidth, abs(centered.width() - gamma) / gamma);
      wnorm = std::max({wnorm, abs(centered.norm() - 1.0), abs(shifted.norm() - 1.0)});
      const auto expv = oc::expectations(orbit.pair(n), doffs[static_cast<size_t>(n)],
                                         packet, params);
      wx = std::max(wx, abs(shifted.mean_x() - expv.x_bar));
      const double dy = 2.0 * grid.half_width / grid.points;
      const auto split = oc::energy_split(orbit.pair(n), doffs[static_cast<size_t>(n)],
                                          packet, params);
      wen = std::max(wen, abs(grid_energy(shifted, params, dy) - split.total) /
                              split.total);
    }
    c.residual("quantum/split-step-width", wwidth, 1e-4);
    c.residual("quantum/split-step-norm", wnorm, 1e-10);
    c.residual("quantum/split-step-mean-x", wx, 1e-5);
    c.residual("quantum/split-step-energy", wen, 1e-6);
  }

  // free packet (xi = 0) and the 1-cycle on the grid
  {
    const oracles::GridSpec grid{40.0, 4096, 1};
    const auto p0 = qm::QuantumParams::from_xi(0.0);
    const auto pk0 = qm::InitialPacket::make({1.0, 0.0}, p0.b);
    oracles::SplitStepPropagator free_prop(pk0, p0, {0.0, 0.0}, grid);
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
      free_prop.step();
      const double expect = pk0.gamma0 * std::sqrt(1.0 + static_cast<double>(n) * n);
      worst = std::max(worst, abs(free_prop.width() - expect) / expect);
    }
    c.residual("quantum/split-step-free-spreading", worst, 1e-6);

    const auto p2 = qm::QuantumParams::from_xi(2.0);
    const auto pk2 = qm::InitialPacket::make({1.0, 1.0}, p2.b);
    oracles::SplitStepPropagator cyc(pk2, p2, {0.0, 0.0}, grid);
    double wcyc = 0.0;
    for (int n = 1; n <= 10; ++n) {
      cyc.step();
      wcyc = std::max(wcyc, abs(cyc.width() - pk2.gamma0) / pk2.gamma0);
    }
    c.residual("quantum/split-step-one-cycle", wcyc, 1e-6);
  }

  // wave function: normalization at intermediate times and the density bridge
  {
    const double xi = 1.0;
    const auto params = qm::QuantumParams::from_xi(xi);
    const auto packet = qm::InitialPacket::make({1.0, -0.5}, params.b);
    qm::DeterminantOrbit orbit({1.0, -0.5}, xi, 6);
    double nrm = 0.0;
    const double frac = 0.37;
    const int n = 5;
    const double lim = 20.0, dx = 0.004;
    for (double x = -lim; x <= lim; x += dx)
      nrm += std::norm(qm::wavefunction_at(orbit, n, frac, x, packet, params)) * dx;
    c.residual("quantum/wavefunction-normalization", abs(nrm - 1.0), 1e-6);

    double bridge = 0.0;
    for (int k = 1; k <= 6; ++k) {
      const auto prof = qm::density_profile(orbit.pair(k), 1.0, packet, params);
      bridge = std::max(bridge,
                        abs(prof.width - qm::width(orbit.pair(k), packet)) /
                            prof.width);
    }
    c.residual("quantum/density-width-bilinear-bridge", bridge, 1e-12,
               "frac = 1 profile width equals |q_n| gamma_0");
  }

  // pulse phase jump leaves the density alone
  {
    const cplx sigma{0.8, 0.3};
    const cplx jumped = qm::pulse_phase_jump(sigma, 2.0);
    c.boolean("quantum/pulse-phase-jump",
              jumped.real() == sigma.real() && jumped.imag() == sigma.imag() + 2.0,
              "sigma -> sigma + i xi, Re untouched");
  }
}

// ---------------------------------------------------------------- offcenter

void check_offcenter(Collector& c) {
  namespace qm = quantum;
  namespace mb = moebius;
  namespace oc = offcenter;
  namespace cl = classical;

  // d closed form vs stepwise rule
  {
    const cplx eta{1.0, 0.0};
    const double xi = 1.0;
    const cplx d0{0.3, 0.1};
    qm::DeterminantOrbit orbit(eta, xi, 300);
    const auto ds = oc::d_sequence(d0, orbit);
    mb::PacketShape shape = mb::initial_sigma(eta);
    cplx d = ds[1].d_n;
    double worst = 0.0;
    for (int n = 1; n < 300; ++n) {
      d = oc::d_step(d, shape, xi);
      shape = mb::moebius_step(shape, xi);
      worst = std::max(worst, abs(d - ds[static_cast<size_t>(n) + 1].d_n) /
                                  (1.0 + abs(d)));
    }
    c.residual("offcenter/d-closed-vs-stepwise", worst, 1e-9);
  }

  // Ehrenfest: expectation orbit equals the classical map orbit
  {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uxi(0.2, 3.8);
    std::uniform_real_distribution<double> uim(-0.6, 0.6);
    double worst = 0.0, worst_edge = 0.0, res_worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const double xi = (trial == 9) ? 3.9 : uxi(rng);
      const cplx eta{1.0 + 0.5 * uim(rng), uim(rng)};
      const cplx d0{1.0 + uim(rng), uim(rng)};
      const auto params = qm::QuantumParams::from_xi(xi);
      const auto packet = qm::InitialPacket::make(eta, params.b);
      qm::DeterminantOrbit orbit(eta, xi, 1000);
      const auto ds = oc::d_sequence(d0, orbit);
      std::vector<oc::ExpectationPair> expv;
      for (int n = 1; n <= 1000; ++n)
        expv.push_back(
            oc::expectations(orbit.pair(n), ds[static_cast<size_t>(n)], packet, params));
      res_worst = std::max(res_worst, oc::ehrenfest_residual(expv, params));

      cl::ClassicalState s{1, expv[0].x_bar,
                           params.period / params.mass * expv[0].p_bar};
      double w = 0.0;
      for (int n = 1; n <= 1000; ++n) {
        const auto& e = expv[static_cast<size_t>(n) - 1];
        w = std::max(w, abs(e.x_bar - s.x) / (1.0 + abs(s.x)));
        s = cl::step(s, xi);
      }
      if (xi > 3.85)
        worst_edge = std::max(worst_edge, w);
      else
        worst = std::max(worst, w);
    }
    c.residual("offcenter/ehrenfest-difference-equations", res_worst, 1e-9);
    c.residual("offcenter/quantum-vs-classical-orbit", worst, 1e-9);
    c.residual("offcenter/quantum-vs-classical-orbit-band-edge", worst_edge, 1e-8,
               "xi = 3.9");
  }

  // energy split: additivity against the direct expression, sigma untouched by d
  {
    const cplx eta{1.0, 0.3};
    const double xi = 2.0;
    const cplx d0{1.0, 0.0};
    const auto params = qm::QuantumParams::from_xi(xi);
    const auto packet = qm::InitialPacket::make(eta, params.b);
    qm::DeterminantOrbit orbit(eta, xi, 200);
    const auto ds = oc::d_sequence(d0, orbit);
    double worst = 0.0;
    for (int n = 1; n <= 200; ++n) {
      const auto split =
          oc::energy_split(orbit.pair(n), ds[static_cast<size_t>(n)], packet, params);
      const double direct = oc::energy_direct(mb::linearize(orbit.pair(n)),
                                              ds[static_cast<size_t>(n)].d_n, params);
      worst = std::max(worst, abs(split.total - direct) / (1.0 + direct));
      worst = std::max(worst,
                       abs(split.total - split.quantum_part - split.classical_part));
    }
    c.residual("offcenter/energy-split-additivity", worst, 1e-12);
    c.boolean("offcenter/sigma-independent-of-d", true,
              "sigma orbit is computed from q alone; d never enters");
  }
}

// ---------------------------------------------------------------- continuum

void check_continuum(Collector& c) {
  namespace ct = continuum;
  const ct::ContinuumParams base{1.0, 1.0, 1.0, 1.0};  // omega_s = 1, r = 1

  // fixed point stays put for 100 periods (closed form and integrator)
  {
    double worst = 0.0;
    const double ws = base.omega_s();
    for (int k = 1; k <= 100; ++k) {
      const double t = k * 2.0 * M_PI / ws;
      worst = std::max(worst, abs(ct::evolve_v(base, cplx(ws, 0.0), t) - ws));
    }
    worst = std::max(worst, abs(ct::evolve_v_numeric(base, cplx(ws, 0.0),
                                                     100 * 2.0 * M_PI / ws) -
                                ws));
    c.residual("continuum/fixed-point", worst, 1e-12 * ws);
  }

  // closed form vs adaptive integrator
  {
    double worst = 0.0;
    for (cplx v0 : {cplx{0.4, 0.0}, cplx{1.7, 0.6}, cplx{0.9, -0.8}})
      for (double t : {0.3, 1.2, 3.9, 7.7}) {
        const cplx a = ct::evolve_v(base, v0, t);
        const cplx b = ct::evolve_v_numeric(base, v0, t, 1e-10);
        worst = std::max(worst, abs(a - b) / (1.0 + abs(a)));
      }
    c.residual("continuum/closed-form-vs-integrator", worst, 1e-8);
  }

  // discrete pulse map converges at first order in tau
  {
    const cplx v0{1.3, 0.4};
    const double t = 2.0;
    const cplx exact = ct::evolve_v(base, v0, t);
    double err[3];
    const int steps[3] = {100, 1000, 10000};
    for (int k = 0; k < 3; ++k)
      err[k] = abs(ct::discrete_limit_v(base, v0, t, steps[k]) - exact);
    const double rate1 = std::log10(err[0] / err[1]);
    const double rate2 = std::log10(err[1] / err[2]);
    const double dev = std::max(abs(rate1 - 1.0), abs(rate2 - 1.0));
    std::ostringstream os;
    os << "rates " << rate1 << ", " << rate2 << " per decade (expect 1)";
    c.residual("continuum/discrete-map-first-order", dev, 0.2, os.str());
  }

  // widths: endpoints, bounds, period, and consistency with v(t)
  {
    const ct::ContinuumParams p2{1.0, 1.0, 1.0, 1.0 / std::sqrt(2.0)};  // r = 2
    const double r = p2.r();
    double worst = abs(ct::width_t(p2, 0.0) - p2.l0);
    worst = std::max(worst, abs(ct::width_t(p2, M_PI / (2.0 * p2.omega_s())) -
                                p2.l0 * r));
    bool in_range = true, periodic = true, consistent = true;
    for (int k = 0; k <= 200; ++k) {
      const double t = 0.05 * k;
      const double w = ct::width_t(p2, t);
      in_range = in_range && w >= p2.l0 * (1.0 - 1e-12) &&
                 w <= p2.l0 * r * (1.0 + 1e-12);
      periodic = periodic &&
                 abs(ct::width_t(p2, t + M_PI / p2.omega_s()) - w) <= 1e-10 * w;
      const cplx v = ct::evolve_v(p2, cplx(p2.omega(), 0.0), t);
      const double w_from_v = std::sqrt(p2.hbar / (p2.mass * v.real()));
      consistent = consistent && abs(w_from_v - w) <= 1e-9 * w;
    }
    c.residual("continuum/width-endpoints", worst, 1e-12);
    c.boolean("continuum/width-range-period-consistency",
              in_range && periodic && consistent,
              "gamma in [l0, l0 r], period pi/omega_s, matches Re v(t)");
  }

  // energy partition: conservation and the value of the constant
  {
    double worst_cons = 0.0, worst_val = 0.0;
    std::ostringstream os;
    for (double r : {0.5, 1.0, 2.0}) {
      const ct::ContinuumParams p{1.0, 1.0, 1.0, 1.0 / std::sqrt(r)};
      const double e0 = ct::energies(p, 0.0).total;
      const double expect = p.hbar * p.omega_s() / 4.0 * (r + 1.0 / r);
      const double printed = p.hbar * p.omega_s() / 4.0 * (r * r + 1.0 / (r * r));
      worst_val = std::max(worst_val, abs(e0 - expect) / expect);
      for (int k = 1; k <= 100; ++k)
        worst_cons =
            std::max(worst_cons, abs(ct::energies(p, 0.07 * k).total - e0) / e0);
      os << "r=" << r << ": sum=" << e0 << " vs printed-form " << printed << "; ";
    }
    c.residual("continuum/energy-conservation", worst_cons, 1e-10);
    c.residual("continuum/energy-total-value", worst_val, 1e-12,
               "E_kin + E_pot = (hbar omega_s / 4)(r + 1/r); " + os.str());
  }

  // phase clock: accumulated origin phase of the pulsed fixed-point packet
  // versus the static-oscillator ground state phase -omega_s t / 2
  {
    const double tau = 0.01, ws = 1.0;
    const double xi = ws * ws * tau * tau;
    const int pulses = 1000;
    const auto cyc = moebius::one_cycle_eta(xi);
    const auto params = quantum::QuantumParams::from_xi(xi, 1.0, 1.0, tau);
    const auto packet = quantum::InitialPacket::make(cyc.eta, params.b);
    const oracles::GridSpec grid{80.0, 4096, 1};
    oracles::SplitStepPropagator prop(packet, params, {0.0, 0.0}, grid);
    double phase = 0.0;
    cplx prev = prop.psi_at_origin();
    for (int n = 0; n < pulses; ++n) {
      prop.step();
      const cplx cur = prop.psi_at_origin();
      phase += std::arg(cur / prev);
      prev = cur;
    }
    const double t = pulses * tau;
    const double static_phase = -ws * t / 2.0;
    std::ostringstream os;
    os << "measured " << phase << ", static reference " << static_phase
       << "; pulsed packet tracks the static phase (shape alone is frozen)";
    c.residual("continuum/phase-clock", abs(phase - static_phase), 1e-3, os.str());
  }
}

// ------------------------------------------------------------------ polymer

void check_polymer(Collector& c) {
  namespace pl = polymer;

  // closed forms vs recurrence
  {
    double worst = 0.0;
    for (double gt : {-1.5, -0.5, -0.01, 0.0, 0.25, 1.0, 4.0})
      for (double chi : {0.3, 1.0, 2.5}) {
        const auto spec = pl::PolymerSpec::dimensionless(gt, chi);
        int n_max = 1000;
        if (gt > 0.0) {
          const double th = std::acosh(1.0 + gt / 2.0);
          n_max = std::min(n_max, static_cast<int>(600.0 / th));
        }
        const auto run = pl::q_polymer(spec, n_max);
        for (const auto& prof : run.profiles) {
          const double closed = pl::q_polymer_closed(spec, prof.n);
          worst = std::max(worst, abs(closed - prof.q_n) / (1.0 + abs(prof.q_n)));
        }
      }
    c.residual("polymer/closed-form-vs-recurrence", worst, 1e-10);
  }

  // pure diffusion at g = 0
  {
    const auto spec = pl::PolymerSpec::dimensionless(0.0, 0.7);
    const auto run = pl::q_polymer(spec, 100);
    double worst = 0.0;
    for (const auto& prof : run.profiles) {
      const double expect =
          std::sqrt(spec.a * spec.a + prof.n * spec.l() * spec.l());
      worst = std::max(worst, abs(prof.gamma_n - expect) / expect);
    }
    c.residual("polymer/free-diffusion", worst, 1e-12,
               "gamma_n^2 = a^2 + n l^2 at g = 0");
  }

  // binding saturation, chi-independence
  {
    double worst = 0.0, indep = 0.0;
    for (double gt : {0.25, 1.0, 4.0}) {
      double w_prev = -1.0;
      for (double chi : {0.5, 2.0}) {
        const auto spec = pl::PolymerSpec::dimensionless(gt, chi);
        const double w200 = pl::width_profile(spec, 200);
        worst = std::max(worst,
                         abs(w200 - pl::width_saturation(spec)) /
                             pl::width_saturation(spec));
        if (w_prev > 0.0) indep = std::max(indep, abs(w200 - w_prev) / w_prev);
        w_prev = w200;
      }
    }
    c.residual("polymer/saturation-value", worst, 1e-6);
    c.residual("polymer/saturation-chi-independence", indep, 1e-6);
  }

  // tuned compensation, and the angle-convention mutation check
  {
    double worst = 0.0;
    bool mutation_detected = true;
    for (double chi : {0.3, 0.5, 0.9}) {
      const double gt = pl::tuned_coupling(chi);
      const auto spec = pl::PolymerSpec::dimensionless(gt, chi);
      worst = std::max(worst, abs(pl::width_saturation(spec) / spec.a - 1.0));
      worst = std::max(worst, abs(pl::width_profile(spec, 200) / spec.a - 1.0));
      // deliberately wrong convention cosh(theta) = 1 + g_tilde
      const double cw = 1.0 + gt;
      const double zeta_wrong = 1.0 - (cw - std::sqrt(cw * cw - 1.0));
      const double gamma_wrong = spec.l() / std::sqrt(zeta_wrong);
      mutation_detected = mutation_detected && abs(gamma_wrong / spec.a - 1.0) > 1e-3;
    }
    c.residual("polymer/tuned-compensation", worst, 1e-6,
               "cosh theta = 1 + g/2 convention; the 1 + g variant fails this check");
    c.boolean("polymer/angle-convention-mutation", mutation_detected,
              "cosh theta = 1 + g_tilde would miss gamma_inf = a");
  }

  // strong-coupling correction coefficient: 1/(2g) vs the printed 1/(4g)
  {
    bool half_wins = true;
    std::ostringstream os;
    for (double gt : {50.0, 200.0}) {
      const auto spec = pl::PolymerSpec::dimensionless(gt, 1.0);
      const double gamma = pl::width_profile(spec, 40) / spec.l();
      const double coeff = (gamma - 1.0) * gt;
      half_wins = half_wins && abs(coeff - 0.5) < abs(coeff - 0.25);
      os << "g=" << gt << ": (gamma/l - 1) g = " << coeff << "; ";
    }
    c.boolean("polymer/strong-coupling-coefficient", half_wins,
              os.str() + "recurrence favors 1/(2g)");
  }

  // unbinding: analytic maximum length vs brute-force sign scan
  {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ug(-1.999, -0.001);
    std::uniform_real_distribution<double> uc(0.1, 5.0);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const double gt = ug(rng);
      const double chi = uc(rng);
      const auto spec = pl::PolymerSpec::dimensionless(gt, chi);
      const auto ml = pl::max_length(spec);
      const auto run = pl::q_polymer(spec, ml.n_star + 10);
      const int brute = run.death_index ? *run.death_index - 1
                                        : ml.n_star + 10;
      if (brute != ml.n_star) ++mismatches;
    }
    c.residual("polymer/max-length-sign-scan", mismatches, 0.0,
               "200 random (g, chi) samples, exact agreement");
  }

  // small-coupling asymptote for w*
  {
    const auto spec = pl::PolymerSpec::dimensionless(-1e-4, 1.0);
    const auto ml = pl::max_length(spec);
    const double asym = M_PI / std::sqrt(1e-4) - 1.0;
    c.residual("polymer/max-length-asymptote", abs(ml.w_star - asym) / asym, 0.05);
  }

  // growth regimes in the weak unbinding limit
  {
    const auto weak = pl::PolymerSpec::dimensionless(-1e-4, 1.0);
    const auto rep = pl::growth_regimes(weak);
    std::ostringstream os;
    os << "early exponent " << rep.early_exponent;
    if (rep.late_slope) os << ", late slope " << *rep.late_slope;
    c.boolean("polymer/growth-regimes", rep.early_ok && rep.late_ok, os.str());
    const auto rep0 = pl::growth_regimes(pl::PolymerSpec::dimensionless(0.0, 1.0));
    c.boolean("polymer/growth-free-no-linear-regime",
              rep0.early_ok && !rep0.late_slope, "g = 0: root-n forever");
  }

  // transfer-integral oracle
  {
    const oracles::GridSpec grid{30.0, 4096, 1};
    double worst = 0.0;
    const auto free_spec = pl::PolymerSpec::dimensionless(0.0, 1.0);
    const auto free_res = oracles::transfer_integral(free_spec, 20, grid);
    for (int n = 1; n <= 20; ++n) {
      const double expect = std::sqrt(free_spec.a * free_spec.a +
                                      n * free_spec.l() * free_spec.l());
      worst = std::max(worst,
                       abs(free_res.widths[static_cast<size_t>(n) - 1] - expect) /
                           expect);
    }
    c.residual("polymer/transfer-free-diffusion", worst, 1e-6);

    const auto bind = pl::PolymerSpec::dimensionless(1.0, 0.5);
    const auto bind_res = oracles::transfer_integral(bind, 20, grid);
    double wb = 0.0;
    for (int n = 1; n <= 20; ++n)
      wb = std::max(wb, abs(bind_res.widths[static_cast<size_t>(n) - 1] -
                            pl::width_profile(bind, n)) /
                            pl::width_profile(bind, n));
    const double sat_gap =
        abs(bind_res.widths.back() - pl::width_saturation(bind)) /
        pl::width_saturation(bind);
    c.residual("polymer/transfer-binding-widths", wb, 1e-4);
    c.residual("polymer/transfer-binding-saturation", sat_gap, 1e-4);

    const auto unbind = pl::PolymerSpec::dimensionless(-0.5, 1.0);
    const auto death_res = oracles::transfer_integral(unbind, 30, grid);
    const auto ml = pl::max_length(unbind);
    const bool died = death_res.death_index.has_value() &&
                      abs(*death_res.death_index - (ml.n_star + 1)) <= 2;
    std::ostringstream os;
    os << "grid death at "
       << (death_res.death_index ? std::to_string(*death_res.death_index) : "none")
       << ", analytic n*+1 = " << ml.n_star + 1;
    c.boolean("polymer/transfer-unbinding-death", died, os.str());
  }

  // immediate death below the survival threshold
  {
    bool threw = false;
    try {
      pl::q_polymer(pl::PolymerSpec::dimensionless(-2.5, 1.0), 5);
    } catch (const pl::DeathError&) {
      threw = true;
    }
    c.boolean("polymer/immediate-death-threshold", threw, "g_tilde <= -2 rejected");
  }
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite) {
  Collector c;
  if (suite == Suite::All || suite == Suite::Classical) check_classical(c);
  if (suite == Suite::All || suite == Suite::Quantum) {
    check_quantum(c);
    check_offcenter(c);
  }
  if (suite == Suite::All || suite == Suite::Continuum) check_continuum(c);
  if (suite == Suite::All || suite == Suite::Polymer) check_polymer(c);
  return c.results;
}

Suite suite_from_name(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "classical") return Suite::Classical;
  if (name == "quantum") return Suite::Quantum;
  if (name == "polymer") return Suite::Polymer;
  if (name == "continuum") return Suite::Continuum;
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace phpot::verify
