#pragma once

#include <complex>
#include <vector>

#include "phpot/recurrence.hpp"

// Centered Gaussian wave packet in the linear determinant formulation:
// q_n orbit, closed form, wave function, density, width, mean energy.

namespace phpot::quantum {

struct QuantumParams {
  double hbar = 1.0;
  double mass = 1.0;
  double period = 1.0;  // tau
  double strength = 0.0;
  double xi = 0.0;
  double b = 1.0;  // (hbar * period / mass)^{1/2}

  static QuantumParams from_xi(double xi, double hbar = 1.0, double mass = 1.0,
                               double period = 1.0);
};

struct InitialPacket {
  cplx eta;             // 2 B b^2, Re > 0
  double gamma0 = 1.0;  // b / sqrt(Re eta)

  static InitialPacket make(cplx eta, double b = 1.0);
};

struct DeterminantPair {
  int n = 0;
  cplx q_n{1.0, 0.0};
  cplx q_prev{0.0, 0.0};  // q_{n-1}; unused at n = 0
};

// q_0 = 1, q_1 = eta - i, q_{n+2} = -i beta q_{n+1} + q_n, with the
// continuously unwrapped phase of q_n tracked so the i^{-n/2} q_n^{-1/2}
// prefactor stays on one branch across steps.
class DeterminantOrbit {
 public:
  DeterminantOrbit(cplx eta, double xi, int n_max);

  int size() const { return static_cast<int>(q_.size()); }  // entries 0..n_max
  cplx q(int n) const { return q_.at(static_cast<size_t>(n)); }
  double unwrapped_arg(int n) const { return arg_.at(static_cast<size_t>(n)); }
  DeterminantPair pair(int n) const;
  cplx eta() const { return eta_; }
  double xi() const { return xi_; }

 private:
  cplx eta_;
  double xi_;
  std::vector<cplx> q_;
  std::vector<double> arg_;
};

std::vector<DeterminantPair> q_sequence(cplx eta, double xi, int n);

// q_n = ((-i)^n / sin phi) [i (eta - i) sin(n phi) - sin((n-1) phi)];
// falls back to the recurrence at degenerate phi.
cplx q_closed_form(cplx eta, double xi, int n);

// gamma_n = |q_n| gamma_0
double width(const DeterminantPair& pair, const InitialPacket& packet);

// E_n = (hbar / 4 tau eta^R) |q_n + i q_{n-1}|^2
double mean_energy(const DeterminantPair& pair, const InitialPacket& packet,
                   const QuantumParams& params);

// psi(x, (n-1+frac) tau); frac = 1 is the pre-pulse wave function at index n.
cplx wavefunction_at(const DeterminantOrbit& orbit, int n, double frac, double x,
                     const InitialPacket& packet, const QuantumParams& params);

struct DensityProfile {
  double amplitude;  // 1 / (width sqrt(pi))
  double width;      // P ~ exp(-x^2 / width^2)
};

DensityProfile density_profile(const DeterminantPair& pair, double frac,
                               const InitialPacket& packet, const QuantumParams& params);

// sigma -> sigma + i xi across a pulse; |psi|^2 is untouched.
cplx pulse_phase_jump(cplx sigma, double xi);

}  // namespace phpot::quantum
