#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

// Directed line in a planar pulsed harmonic potential: real q_n recurrence,
// width profile, binding saturation, tuned compensation, unbinding maximum
// length, and growth-regime fits.

namespace phpot::polymer {

struct PolymerSpec {
  double nu;       // rigidity T / 2 kappa
  double spacing;  // d
  double g;        // plane coupling; negative = unbinding
  double a;        // initial transverse scale

  double g_tilde() const { return 2.0 * nu * spacing * g; }
  double l() const;                       // (4 nu d)^{1/2}
  double chi() const;                     // (l/a)^2

  // Canonical dimensionless construction: l = 1, a = chi^{-1/2}.
  static PolymerSpec dimensionless(double g_tilde, double chi);
};

// Thrown when the line's density becomes unnormalizable (first q_n <= 0).
class DeathError : public std::runtime_error {
 public:
  DeathError(int n, double length)
      : std::runtime_error("polymer line destroyed at plane " + std::to_string(n)),
        plane(n),
        length(length) {}
  int plane;
  double length;  // n * d
};

struct PolymerProfile {
  int n;
  double q_n;
  double q_prev;
  double gamma_n;  // transverse width; valid only while alive
};

struct PolymerRun {
  std::vector<PolymerProfile> profiles;  // planes 1..last alive
  std::optional<int> death_index;        // first n with q_n <= 0
};

// Recurrence orbit q_{n+2} = (g_tilde + 2) q_{n+1} - q_n, q_0 = 1,
// q_1 = chi + 1, with per-plane widths; stops at death.
PolymerRun q_polymer(const PolymerSpec& spec, int n);

// sinh (binding) / sin (unbinding) closed forms for q_n.
double q_polymer_closed(const PolymerSpec& spec, int n);

// gamma_n = l (q_n / (q_n - q_{n-1}))^{1/2}; throws DeathError if dead by n.
double width_profile(const PolymerSpec& spec, int n);

// gamma_inf = l / sqrt(1 - e^{-theta}) with cosh theta = 1 + g_tilde/2.
double width_saturation(const PolymerSpec& spec);

// g_tilde = chi^2 / (1 - chi); only defined for chi in (0,1).
double tuned_coupling(double chi);

struct MaxLength {
  int n_star;
  double w_star;
};

// Unbinding only (-2 < g_tilde < 0).
MaxLength max_length(const PolymerSpec& spec);

struct GrowthReport {
  double early_exponent;            // gamma_n ~ n^p fit on n theta' < 0.3
  std::optional<double> late_slope; // local log-log slope near n theta' ~ pi/2
  bool early_ok;
  bool late_ok;
};

GrowthReport growth_regimes(const PolymerSpec& spec);

}  // namespace phpot::polymer
