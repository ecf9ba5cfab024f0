#pragma once

#include <complex>
#include <optional>
#include <vector>

// Shared engine for the three-term recurrences u_{n+2} = c*u_{n+1} + e*u_n
// that drive the classical map, the quantum determinant orbit, and the
// polymer partition function, plus the common angle parameterization and
// stability classification.

namespace phpot {

using cplx = std::complex<double>;

enum class Regime { Oscillatory, Marginal, Hyperbolic };

struct PulseCoupling {
  double coupling = 0.0;  // xi (mechanics) or g_tilde (polymer)
  double beta = 0.0;
  Regime regime = Regime::Oscillatory;
  // phi with 2 cos(phi) = beta when |beta| < 2; theta with 2 cosh(theta) = beta
  // when beta > 2. Absent at the band edges and for beta < -2.
  std::optional<double> angle;
};

// |sin phi| below this and the sine-kernel closed forms hand over to direct
// iteration; the ratio is ill-conditioned there while the recurrence is exact.
inline constexpr double kSinPhiDegeneracy = 1e-8;

PulseCoupling classify_beta(double beta);
PulseCoupling coupling_from_xi(double xi);        // beta = 2 - xi
PulseCoupling coupling_from_gtilde(double gt);    // beta = g_tilde + 2

struct RecurrenceSeed {
  cplx u0, u1;
  cplx c;  // coefficient of u_{n+1}
  cplx e;  // coefficient of u_n
};

// u_0..u_n evaluated as multiply-then-add, left to right, so outputs are
// bit-reproducible across modules.
std::vector<cplx> iterate(const RecurrenceSeed& seed, int n);

// Sine-kernel closed form for c = beta real, e = -1, |beta| <= 2:
//   u_n = [u1 sin(n phi) - u0 sin((n-1) phi)] / sin(phi).
// Delegates to iterate() when phi is degenerate.
cplx closed_form_oscillatory(const RecurrenceSeed& seed, int n);

}  // namespace phpot
