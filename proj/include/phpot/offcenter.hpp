#pragma once

#include <complex>
#include <vector>

#include "phpot/moebius.hpp"
#include "phpot/quantum.hpp"

// Off-centered Gaussian packet: d_n dynamics, position/momentum expectation
// values, Ehrenfest correspondence, and the quantum/classical energy split.

namespace phpot::offcenter {

struct OffsetAmplitude {
  int n = 0;
  cplx d_n;
  cplx d0;
};

// d_n = (-i)^n d0 / q_n along the given q orbit; the sigma orbit itself is
// untouched by the off-centering.
std::vector<OffsetAmplitude> d_sequence(cplx d0, const quantum::DeterminantOrbit& orbit);

// Stepwise rule d_{n+1} = d_n sigma_{n+1} / (sigma_n + i xi), used as the
// independent route in tests.
cplx d_step(cplx d_n, const moebius::PacketShape& shape, double xi);

struct ExpectationPair {
  double x_bar;
  double p_bar;
  int n;
};

ExpectationPair expectations(const quantum::DeterminantPair& pair,
                             const OffsetAmplitude& offset,
                             const quantum::InitialPacket& packet,
                             const quantum::QuantumParams& params);

// Same observables from the (sigma, d) form.
ExpectationPair expectations_sigma(const moebius::PacketShape& shape, cplx d_n,
                                   const quantum::QuantumParams& params);

// Max over n of the two Ehrenfest difference-equation residuals, normalized.
double ehrenfest_residual(const std::vector<ExpectationPair>& orbit,
                          const quantum::QuantumParams& params);

struct EnergySplit {
  double quantum_part;    // centered-packet energy
  double classical_part;  // p_bar^2 / 2m
  double total;
};

EnergySplit energy_split(const quantum::DeterminantPair& pair,
                         const OffsetAmplitude& offset,
                         const quantum::InitialPacket& packet,
                         const quantum::QuantumParams& params);

// Direct evaluation of the split energy expression in the (sigma, d) form:
// E = (hbar/2tau)[ |sigma|^2/(sigma+sigma*) - (sigma* d - sigma d*)^2/(sigma+sigma*)^2 ].
double energy_direct(const moebius::PacketShape& shape, cplx d_n,
                     const quantum::QuantumParams& params);

// Convenience converter: pick d0 so that the n = 1 expectations equal the
// given phase-space point.
cplx d0_from_phase_space(double x_bar1, double p_bar1, cplx eta,
                         const quantum::QuantumParams& params);

}  // namespace phpot::offcenter
