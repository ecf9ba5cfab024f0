#include "phpot/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "phpot/recurrence.hpp"

namespace phpot::classical {

ClassicalParams ClassicalParams::from_xi(double xi, double mass, double period) {
  ClassicalParams p;
  p.mass = mass;
  p.period = period;
  p.xi = xi;
  p.strength = xi * mass / period;
  return p;
}

InitialClassical initial_state(double x0, double p0, const ClassicalParams& params) {
  const double rho1 = (params.period / params.mass) * p0;
  const double x1 = x0 + rho1;
  const double rho0 = rho1 + params.xi * (x1 - rho1);
  return InitialClassical{ClassicalState{1, x1, rho1}, rho0};
}

ClassicalState step(const ClassicalState& state, double xi) {
  const double rho_next = state.rho - xi * state.x;
  return ClassicalState{state.n + 1, state.x + rho_next, rho_next};
}

double rho_closed_form(int n, double rho0, double rho1, double xi, bool strict) {
  if (n < 0) throw std::domain_error("rho_closed_form: n must be >= 0");
  const double beta = 2.0 - xi;
  const bool in_band = xi > 0.0 && xi < 4.0;
  const double phi = in_band ? std::acos(beta / 2.0) : 0.0;
  if (!in_band || std::abs(std::sin(phi)) < kSinPhiDegeneracy) {
    if (strict && !in_band)
      throw std::domain_error("rho_closed_form: xi outside (0,4) in strict mode");
    // iterate the rho recurrence directly: rho_{k+2} = beta rho_{k+1} - rho_k
    RecurrenceSeed seed{cplx(rho0), cplx(rho1), cplx(beta), cplx(-1.0)};
    return iterate(seed, n + 1).back().real();
  }
  return (rho1 * std::sin((n + 1) * phi) - rho0 * std::sin(n * phi)) / std::sin(phi);
}

double energy(const ClassicalState& state, const ClassicalParams& params) {
  const double v = state.rho / params.period;
  return 0.5 * params.mass * v * v;
}

PeriodicityReport classify_periodicity(double xi, int n_max) {
  if (n_max < 2) throw std::domain_error("classify_periodicity: n_max must be >= 2");
  PeriodicityReport rep;
  if (xi < 0.0 || xi > 4.0) {
    rep.kind = MotionKind::Unstable;
    return rep;
  }
  if (xi == 0.0 || xi == 4.0) return rep;  // band edge, no rational-angle match
  const double phi = std::acos(1.0 - xi / 2.0);
  for (int n = 2; n <= n_max; ++n) {
    const double m_real = phi * n / M_PI;
    const int m = static_cast<int>(std::lround(m_real));
    if (m < 1 || m > n - 1) continue;  // phi in (0,pi) means M in [1, n-1]
    if (std::abs(m_real - m) < 1e-9 * n) {
      rep.n_period = n;
      rep.m_index = m;
      rep.kind = (m % 2 == 0) ? MotionKind::PMI : MotionKind::PMII;
      rep.full_state_period = (m % 2 == 0) ? n : 2 * n;
      return rep;
    }
  }
  return rep;
}

bool special_pmi2_condition(const ClassicalState& state, double xi) {
  if (std::abs(xi - 4.0) > 1e-12) return false;
  return std::abs(state.rho - 2.0 * state.x) <= 1e-12 * (1.0 + std::abs(state.x));
}

}  // namespace phpot::classical
