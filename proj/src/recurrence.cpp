#include "phpot/recurrence.hpp"

#include <cmath>
#include <stdexcept>

namespace phpot {

PulseCoupling classify_beta(double beta) {
  if (!std::isfinite(beta)) throw std::domain_error("classify_beta: non-finite beta");
  PulseCoupling pc;
  pc.beta = beta;
  if (std::abs(beta) < 2.0) {
    pc.regime = Regime::Oscillatory;
    pc.angle = std::acos(beta / 2.0);  // in (0, pi)
  } else if (std::abs(beta) == 2.0) {
    pc.regime = Regime::Marginal;
  } else {
    pc.regime = Regime::Hyperbolic;
    if (beta > 2.0) pc.angle = std::acosh(beta / 2.0);
  }
  return pc;
}

PulseCoupling coupling_from_xi(double xi) {
  PulseCoupling pc = classify_beta(2.0 - xi);
  pc.coupling = xi;
  return pc;
}

PulseCoupling coupling_from_gtilde(double gt) {
  PulseCoupling pc = classify_beta(gt + 2.0);
  pc.coupling = gt;
  return pc;
}

std::vector<cplx> iterate(const RecurrenceSeed& seed, int n) {
  if (n < 0) throw std::domain_error("iterate: n must be >= 0");
  std::vector<cplx> u(static_cast<size_t>(n) + 1);
  u[0] = seed.u0;
  if (n >= 1) u[1] = seed.u1;
  for (int k = 0; k + 2 <= n; ++k) {
    // fixed evaluation order: c*u_{k+1} first, then + e*u_k
    u[static_cast<size_t>(k) + 2] =
        seed.c * u[static_cast<size_t>(k) + 1] + seed.e * u[static_cast<size_t>(k)];
  }
  return u;
}

cplx closed_form_oscillatory(const RecurrenceSeed& seed, int n) {
  if (seed.e != cplx(-1.0, 0.0) || seed.c.imag() != 0.0)
    throw std::domain_error("closed_form_oscillatory: requires c real, e = -1");
  const double beta = seed.c.real();
  if (std::abs(beta) > 2.0)
    throw std::domain_error("closed_form_oscillatory: |beta| must be <= 2");
  const double phi = std::acos(beta / 2.0);
  const double s = std::sin(phi);
  if (std::abs(s) < kSinPhiDegeneracy) return iterate(seed, n).back();
  return (seed.u1 * std::sin(n * phi) - seed.u0 * std::sin((n - 1) * phi)) / s;
}

}  // namespace phpot
