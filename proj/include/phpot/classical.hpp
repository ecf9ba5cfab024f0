#pragma once

#include <optional>
#include <vector>

// Classical kicked particle: map iteration, closed-form momentum, energy,
// and periodic-motion classification.

namespace phpot::classical {

struct ClassicalParams {
  double mass = 1.0;
  double period = 1.0;
  double strength = 0.0;  // lambda
  double xi = 0.0;        // lambda * period / mass

  static ClassicalParams from_xi(double xi, double mass = 1.0, double period = 1.0);
};

// (x_n, rho_n) sampled just before pulse n; rho_n = (period/mass) p_n.
struct ClassicalState {
  int n = 1;
  double x = 0.0;
  double rho = 0.0;
};

struct InitialClassical {
  ClassicalState state;  // at n = 1
  double rho0;           // companion datum rho_0 = rho_1 + xi (x_1 - rho_1)
};

InitialClassical initial_state(double x0, double p0, const ClassicalParams& params);

// One pulse-plus-drift: rho' = rho - xi x; x' = x + rho'.
ClassicalState step(const ClassicalState& state, double xi);

// rho_{n+1} = [rho_1 sin((n+1) phi) - rho_0 sin(n phi)] / sin(phi).
// Falls back to map iteration outside the sine-kernel's comfort zone; with
// strict=true, xi outside (0,4) raises instead.
double rho_closed_form(int n, double rho0, double rho1, double xi, bool strict = false);

double energy(const ClassicalState& state, const ClassicalParams& params);

enum class MotionKind { PMI, PMII, QuasiPeriodic, Unstable };

struct PeriodicityReport {
  MotionKind kind = MotionKind::QuasiPeriodic;
  std::optional<int> n_period;           // energy period (smallest n with phi = M pi / n)
  std::optional<int> m_index;            // the M in phi = M pi / n
  std::optional<int> full_state_period;  // n for M even, 2n for M odd
};

PeriodicityReport classify_periodicity(double xi, int n_max);

// The one special PMI(2): xi = 4 and rho_1 = 2 x_1.
bool special_pmi2_condition(const ClassicalState& state, double xi);

}  // namespace phpot::classical
