#include "phpot/offcenter.hpp"

#include <cmath>
#include <stdexcept>

namespace phpot::offcenter {

namespace {
const cplx kI{0.0, 1.0};

cplx i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double take_real(cplx z, const char* what) {
  if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real())))
    throw std::runtime_error(std::string("offcenter: imaginary residue in ") + what);
  return z.real();
}
}  // namespace

std::vector<OffsetAmplitude> d_sequence(cplx d0, const quantum::DeterminantOrbit& orbit) {
  std::vector<OffsetAmplitude> out;
  out.reserve(static_cast<size_t>(orbit.size()));
  for (int n = 0; n < orbit.size(); ++n) {
    const cplx mi = (n % 4 == 0)   ? cplx{1, 0}
                    : (n % 4 == 1) ? cplx{0, -1}
                    : (n % 4 == 2) ? cplx{-1, 0}
                                   : cplx{0, 1};  // (-i)^n
    out.push_back(OffsetAmplitude{n, mi * d0 / orbit.q(n), d0});
  }
  return out;
}

cplx d_step(cplx d_n, const moebius::PacketShape& shape, double xi) {
  const moebius::PacketShape next = moebius::moebius_step(shape, xi);
  return d_n * next.sigma / (shape.sigma + cplx(0.0, xi));
}

ExpectationPair expectations(const quantum::DeterminantPair& pair,
                             const OffsetAmplitude& offset,
                             const quantum::InitialPacket& packet,
                             const quantum::QuantumParams& params) {
  const int n = pair.n;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const cplx d0 = offset.d0;
  const cplx core = pair.q_n * std::conj(d0) + sign * std::conj(pair.q_n) * d0;
  const cplx mom_extra = kI * pair.q_prev * std::conj(d0) -
                         kI * sign * std::conj(pair.q_prev) * d0;
  const double etaR = packet.eta.real();
  const cplx xb = i_pow(n) * params.b / (2.0 * etaR) * core;
  const cplx pb = i_pow(n) * params.hbar / (2.0 * params.b * etaR) * (core + mom_extra);
  return ExpectationPair{take_real(xb, "x_bar"), take_real(pb, "p_bar"), n};
}

ExpectationPair expectations_sigma(const moebius::PacketShape& shape, cplx d_n,
                                   const quantum::QuantumParams& params) {
  const cplx sigma = shape.sigma;
  const double two_re = 2.0 * sigma.real();
  const cplx xb = params.b * (d_n + std::conj(d_n)) / two_re;
  const cplx pb = -kI * params.hbar / params.b *
                  (std::conj(sigma) * d_n - sigma * std::conj(d_n)) / two_re;
  return ExpectationPair{take_real(xb, "x_bar"), take_real(pb, "p_bar"), shape.n};
}

double ehrenfest_residual(const std::vector<ExpectationPair>& orbit,
                          const quantum::QuantumParams& params) {
  if (orbit.size() < 2)
    throw std::domain_error("ehrenfest_residual: orbit length must be >= 2");
  const double tm = params.period / params.mass;
  double worst = 0.0;
  for (size_t k = 0; k + 1 < orbit.size(); ++k) {
    const auto& a = orbit[k];
    const auto& b = orbit[k + 1];
    const double r1 = b.x_bar - a.x_bar - tm * b.p_bar;
    const double s1 = 1.0 + std::abs(b.x_bar) + std::abs(a.x_bar) + tm * std::abs(b.p_bar);
    const double r2 = b.p_bar - a.p_bar + params.strength * a.x_bar;
    const double s2 = 1.0 + std::abs(b.p_bar) + std::abs(a.p_bar) +
                      std::abs(params.strength * a.x_bar);
    worst = std::max({worst, std::abs(r1) / s1, std::abs(r2) / s2});
  }
  return worst;
}

EnergySplit energy_split(const quantum::DeterminantPair& pair,
                         const OffsetAmplitude& offset,
                         const quantum::InitialPacket& packet,
                         const quantum::QuantumParams& params) {
  const double eq = quantum::mean_energy(pair, packet, params);
  const ExpectationPair exp = expectations(pair, offset, packet, params);
  const double ec = exp.p_bar * exp.p_bar / (2.0 * params.mass);
  return EnergySplit{eq, ec, eq + ec};
}

double energy_direct(const moebius::PacketShape& shape, cplx d_n,
                     const quantum::QuantumParams& params) {
  const cplx sigma = shape.sigma;
  const cplx two_re = sigma + std::conj(sigma);
  const cplx comm = std::conj(sigma) * d_n - sigma * std::conj(d_n);
  const cplx e = params.hbar / (2.0 * params.period) *
                 (std::norm(sigma) / two_re - comm * comm / (two_re * two_re));
  return take_real(e, "energy_direct");
}

cplx d0_from_phase_space(double x_bar1, double p_bar1, cplx eta,
                         const quantum::QuantumParams& params) {
  const cplx sigma1 = moebius::initial_sigma(eta).sigma;
  const cplx d1 = sigma1 * x_bar1 / params.b + kI * params.b * p_bar1 / params.hbar;
  return kI * d1 * (eta - kI);  // invert d_1 = -i d0 / q_1
}

}  // namespace phpot::offcenter
