#include "phpot/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace phpot::moebius {

namespace {
const cplx kI{0.0, 1.0};
}

PacketShape moebius_step(const PacketShape& shape, double xi) {
  if (!(shape.sigma.real() > 0.0))
    throw std::domain_error("moebius_step: Re(sigma) must be > 0");
  const cplx shifted = shape.sigma + cplx(0.0, xi);
  if (shifted == cplx(0.0))
    throw std::logic_error("moebius_step: sigma + i xi vanished (contract violation)");
  // two explicit reciprocals, as in the first-order rule
  const cplx inv_next = 1.0 / shifted + kI;
  return PacketShape{1.0 / inv_next, shape.n + 1};
}

PacketShape initial_sigma(cplx eta) {
  if (!(eta.real() > 0.0))
    throw std::domain_error("initial_sigma: Re(eta) must be > 0");
  return PacketShape{eta / (1.0 + kI * eta), 1};
}

PacketShape linearize(const quantum::DeterminantPair& pair) {
  if (pair.q_n == cplx(0.0)) throw std::domain_error("linearize: q_n must be nonzero");
  return PacketShape{-kI * (pair.q_n + kI * pair.q_prev) / pair.q_n, pair.n};
}

cplx fixed_point_sigma(double xi) {
  return cplx(0.5 * std::sqrt(xi * (4.0 - xi)), -0.5 * xi);
}

OneCycleEta one_cycle_eta(double xi) {
  if (xi < 0.0 || xi > 4.0)
    throw std::domain_error("one_cycle_eta: xi must lie in [0,4]");
  const double phi = std::acos(1.0 - xi / 2.0);
  const cplx eta = 2.0 * std::sin(phi / 2.0) * std::exp(cplx(0.0, phi / 2.0));
  // Re(eta) = sin(phi) = sqrt(xi (4 - xi)) / 2 vanishes exactly at both band
  // edges; decide from xi so rounding in sin/exp cannot flip the flag.
  return OneCycleEta{eta, xi > 0.0 && xi < 4.0};
}

double sigma_energy(const PacketShape& shape, const quantum::QuantumParams& params) {
  return params.hbar / (2.0 * params.period) * std::norm(shape.sigma) /
         (2.0 * shape.sigma.real());
}

}  // namespace phpot::moebius
