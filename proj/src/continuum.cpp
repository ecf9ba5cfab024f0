#include "phpot/continuum.hpp"

#include <cmath>
#include <stdexcept>

namespace phpot::continuum {

double ContinuumParams::omega_s() const { return std::sqrt(kappa / mass); }
double ContinuumParams::omega() const { return hbar / (mass * l0 * l0); }
double ContinuumParams::r() const { return omega() / omega_s(); }

cplx evolve_v(const ContinuumParams& params, cplx v0, double t) {
  if (!(v0.real() > 0.0)) throw std::domain_error("evolve_v: Re(v0) must be > 0");
  if (t < 0.0) throw std::domain_error("evolve_v: t must be >= 0");
  const double ws = params.omega_s();
  const double c = std::cos(ws * t);
  const double s = std::sin(ws * t);
  const cplx i{0.0, 1.0};
  return ws * (v0 * c + i * ws * s) / (ws * c + i * v0 * s);
}

namespace {
cplx riccati_rhs(double ws2, cplx v) { return cplx(0.0, 1.0) * (ws2 - v * v); }
}

cplx evolve_v_numeric(const ContinuumParams& params, cplx v0, double t, double rel_tol) {
  // Cash-Karp embedded RK4(5) with step-size control.
  static constexpr double a2 = 1.0 / 5, a3 = 3.0 / 10, a4 = 3.0 / 5, a5 = 1.0,
                          a6 = 7.0 / 8;
  static constexpr double b21 = 1.0 / 5;
  static constexpr double b31 = 3.0 / 40, b32 = 9.0 / 40;
  static constexpr double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
  static constexpr double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27,
                          b54 = 35.0 / 27;
  static constexpr double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                          b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
  static constexpr double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594,
                          c6 = 512.0 / 1771;
  static constexpr double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                          d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336,
                          d6 = c6 - 1.0 / 4;
  (void)a2; (void)a3; (void)a4; (void)a5; (void)a6;

  const double ws2 = params.kappa / params.mass;
  cplx v = v0;
  double time = 0.0;
  double h = (params.omega_s() > 0.0) ? 0.1 / params.omega_s() : 0.1;
  if (h > t && t > 0.0) h = t;
  int guard = 0;
  while (time < t) {
    if (++guard > 2'000'000) throw std::runtime_error("evolve_v_numeric: step limit");
    if (time + h > t) h = t - time;
    const cplx k1 = riccati_rhs(ws2, v);
    const cplx k2 = riccati_rhs(ws2, v + h * (b21 * k1));
    const cplx k3 = riccati_rhs(ws2, v + h * (b31 * k1 + b32 * k2));
    const cplx k4 = riccati_rhs(ws2, v + h * (b41 * k1 + b42 * k2 + b43 * k3));
    const cplx k5 = riccati_rhs(ws2, v + h * (b51 * k1 + b52 * k2 + b53 * k3 + b54 * k4));
    const cplx k6 = riccati_rhs(
        ws2, v + h * (b61 * k1 + b62 * k2 + b63 * k3 + b64 * k4 + b65 * k5));
    const cplx v5 = v + h * (c1 * k1 + c3 * k3 + c4 * k4 + c6 * k6);
    const cplx err = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6);
    const double scale = rel_tol * (1.0 + std::abs(v5));
    const double e = std::abs(err) / scale;
    if (e <= 1.0) {
      time += h;
      v = v5;
    }
    const double factor = 0.9 * std::pow(e > 1e-30 ? e : 1e-30, -0.2);
    h *= std::min(5.0, std::max(0.2, factor));
  }
  return v;
}

cplx discrete_limit_v(const ContinuumParams& params, cplx v0, double t, int steps) {
  if (steps < 1) throw std::domain_error("discrete_limit_v: steps must be >= 1");
  const double tau = t / steps;
  const double lam = params.kappa * tau;
  const cplx i{0.0, 1.0};
  cplx v = v0;
  for (int k = 0; k < steps; ++k)
    v = 1.0 / (1.0 / (v + i * lam / params.mass) + i * tau);
  return v;
}

double width_t(const ContinuumParams& params, double t) {
  if (t < 0.0) throw std::domain_error("width_t: t must be >= 0");
  const double c = std::cos(params.omega_s() * t);
  const double s = std::sin(params.omega_s() * t);
  const double rr = params.r();
  return params.l0 * std::sqrt(c * c + rr * rr * s * s);
}

EnergySplit energies(const ContinuumParams& params, double t) {
  if (t < 0.0) throw std::domain_error("energies: t must be >= 0");
  const double c = std::cos(params.omega_s() * t);
  const double s = std::sin(params.omega_s() * t);
  const double rr = params.r();
  const double pref = params.hbar * params.omega() / 4.0;
  const double kin = pref * (c * c + s * s / (rr * rr));
  const double pot = pref / (rr * rr) * (c * c + rr * rr * s * s);
  return EnergySplit{kin, pot, kin + pot};
}

}  // namespace phpot::continuum
