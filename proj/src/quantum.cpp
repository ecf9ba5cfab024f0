#include "phpot/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace phpot::quantum {

namespace {
const cplx kI{0.0, 1.0};

cplx minus_i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}
}  // namespace

QuantumParams QuantumParams::from_xi(double xi, double hbar, double mass, double period) {
  QuantumParams p;
  p.hbar = hbar;
  p.mass = mass;
  p.period = period;
  p.xi = xi;
  p.strength = xi * mass / period;
  p.b = std::sqrt(hbar * period / mass);
  return p;
}

InitialPacket InitialPacket::make(cplx eta, double b) {
  if (!(eta.real() > 0.0))
    throw std::domain_error("InitialPacket: Re(eta) must be > 0");
  return InitialPacket{eta, b / std::sqrt(eta.real())};
}

DeterminantOrbit::DeterminantOrbit(cplx eta, double xi, int n_max) : eta_(eta), xi_(xi) {
  if (!(eta.real() > 0.0))
    throw std::domain_error("DeterminantOrbit: Re(eta) must be > 0");
  if (n_max < 1) n_max = 1;
  RecurrenceSeed seed{cplx(1.0), eta - kI, -kI * (2.0 - xi), cplx(1.0)};
  q_ = iterate(seed, n_max);
  arg_.resize(q_.size());
  arg_[0] = 0.0;
  for (size_t k = 1; k < q_.size(); ++k) {
    if (q_[k] == cplx(0.0))
      throw std::runtime_error("DeterminantOrbit: q_n vanished (broken orbit)");
    arg_[k] = arg_[k - 1] + std::arg(q_[k] / q_[k - 1]);
  }
}

DeterminantPair DeterminantOrbit::pair(int n) const {
  if (n == 0) return DeterminantPair{0, q_.at(0), cplx(0.0)};
  return DeterminantPair{n, q_.at(static_cast<size_t>(n)), q_.at(static_cast<size_t>(n) - 1)};
}

std::vector<DeterminantPair> q_sequence(cplx eta, double xi, int n) {
  DeterminantOrbit orbit(eta, xi, n);
  std::vector<DeterminantPair> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(orbit.pair(k));
  return out;
}

cplx q_closed_form(cplx eta, double xi, int n) {
  const double beta = 2.0 - xi;
  if (std::abs(beta) > 2.0)
    throw std::domain_error("q_closed_form: xi must lie in [0,4]");
  const double phi = std::acos(beta / 2.0);
  const double s = std::sin(phi);
  RecurrenceSeed seed{cplx(1.0), eta - kI, -kI * beta, cplx(1.0)};
  if (std::abs(s) < kSinPhiDegeneracy) return iterate(seed, n).back();
  return minus_i_pow(n) / s *
         (kI * (eta - kI) * std::sin(n * phi) - std::sin((n - 1) * phi));
}

double width(const DeterminantPair& pair, const InitialPacket& packet) {
  return std::abs(pair.q_n) * packet.gamma0;
}

double mean_energy(const DeterminantPair& pair, const InitialPacket& packet,
                   const QuantumParams& params) {
  const cplx z = pair.q_n + kI * pair.q_prev;
  return params.hbar / (4.0 * params.period * packet.eta.real()) * std::norm(z);
}

cplx wavefunction_at(const DeterminantOrbit& orbit, int n, double frac, double x,
                     const InitialPacket& packet, const QuantumParams& params) {
  if (n < 1) throw std::domain_error("wavefunction_at: n must be >= 1");
  if (frac < 0.0 || frac > 1.0)
    throw std::domain_error("wavefunction_at: frac must lie in [0,1]");
  const cplx qn = orbit.q(n);
  const cplx qp = orbit.q(n - 1);
  const cplx bracket = frac * qn - kI * (1.0 - frac) * qp;
  const double b2 = params.b * params.b;
  const double norm_pref = std::pow(packet.eta.real() / (M_PI * b2), 0.25);
  // i^{-n/2} q_n^{-1/2} on the continuously tracked branch. At frac = 1 the
  // bracket is q_n exactly; for intermediate frac we offset the unwrapped
  // q_n phase by the bracket's phase relative to q_n (principal branch of the
  // ratio, which never winds for frac in [0,1]).
  const double bracket_arg = orbit.unwrapped_arg(n) + std::arg(bracket / qn);
  const cplx pref = std::exp(cplx(-0.5 * std::log(std::abs(bracket)), 0.0) +
                             cplx(0.0, -n * M_PI / 4.0 - 0.5 * bracket_arg));
  const cplx exponent = kI * (x * x) / (2.0 * b2) * (qn + kI * qp) / bracket;
  return norm_pref * pref * std::exp(exponent);
}

DensityProfile density_profile(const DeterminantPair& pair, double frac,
                               const InitialPacket& packet, const QuantumParams& params) {
  if (pair.n < 1) throw std::domain_error("density_profile: n must be >= 1");
  const cplx bracket = frac * pair.q_n - kI * (1.0 - frac) * pair.q_prev;
  const double w = params.b * std::abs(bracket) / std::sqrt(packet.eta.real());
  return DensityProfile{1.0 / (w * std::sqrt(M_PI)), w};
}

cplx pulse_phase_jump(cplx sigma, double xi) {
  if (!(sigma.real() > 0.0))
    throw std::domain_error("pulse_phase_jump: Re(sigma) must be > 0");
  return sigma + cplx(0.0, xi);
}

}  // namespace phpot::quantum
