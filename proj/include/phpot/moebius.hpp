#pragma once

#include <complex>

#include "phpot/quantum.hpp"

// Nonlinear first-order formulation: the sigma Moebius iteration, its
// period-tau fixed point, and the linearizing bridge to the q_n orbit.

namespace phpot::moebius {

struct PacketShape {
  cplx sigma;  // dimensionless inverse variance, Re > 0
  int n = 1;
};

// 1/sigma' = 1/(sigma + i xi) + i
PacketShape moebius_step(const PacketShape& shape, double xi);

// sigma_1 = eta / (1 + i eta)
PacketShape initial_sigma(cplx eta);

// sigma_n = -i (q_n + i q_{n-1}) / q_n
PacketShape linearize(const quantum::DeterminantPair& pair);

// sigma = (1/2) sqrt(xi (4 - xi)) - i xi / 2, the 1-cycle shape
cplx fixed_point_sigma(double xi);

struct OneCycleEta {
  cplx eta;            // 2 sin(phi/2) exp(i phi/2)
  bool normalizable;   // false at the xi = 4 band edge where Re(eta) = 0
};

OneCycleEta one_cycle_eta(double xi);

// E_n = (hbar / 2 tau) |sigma|^2 / (sigma + sigma^*)
double sigma_energy(const PacketShape& shape, const quantum::QuantumParams& params);

}  // namespace phpot::moebius
