#pragma once

#include <complex>

// tau -> 0 limit: dv/dt = i (kappa/m - v^2), its closed-form solution,
// packet width, and the kinetic/potential energy partition.

namespace phpot::continuum {

using cplx = std::complex<double>;

struct ContinuumParams {
  double kappa = 1.0;  // effective static stiffness (lambda/tau -> kappa)
  double mass = 1.0;
  double hbar = 1.0;
  double l0 = 1.0;     // initial (real) packet width

  double omega_s() const;  // sqrt(kappa / mass)
  double omega() const;    // hbar / (mass l0^2)
  double r() const;        // omega / omega_s
};

// Closed-form Moebius-in-trig solution of the Riccati equation:
//   v(t) = omega_s (v0 cos(omega_s t) + i omega_s sin(omega_s t))
//               / (omega_s cos(omega_s t) + i v0 sin(omega_s t)).
// No naive tan division, so the omega_s t = pi/2 points are regular.
cplx evolve_v(const ContinuumParams& params, cplx v0, double t);

// Embedded 4th/5th-order adaptive integration of the same equation.
cplx evolve_v_numeric(const ContinuumParams& params, cplx v0, double t,
                      double rel_tol = 1e-10);

// Discrete pulse map 1/v_{k+1} = 1/(v_k + i lambda/m) + i tau with
// tau = T/steps and lambda = kappa tau; first-order accurate in tau.
cplx discrete_limit_v(const ContinuumParams& params, cplx v0, double t, int steps);

// gamma(t) = l0 [ (1 + r^2 tan^2 w t) / (1 + tan^2 w t) ]^{1/2}, w = omega_s.
double width_t(const ContinuumParams& params, double t);

struct EnergySplit {
  double kinetic;
  double potential;
  double total;  // (hbar omega_s / 4)(r + 1/r), constant in t
};

EnergySplit energies(const ContinuumParams& params, double t);

}  // namespace phpot::continuum
