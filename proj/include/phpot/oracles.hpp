#pragma once

#include <complex>
#include <vector>

#include "phpot/polymer.hpp"
#include "phpot/quantum.hpp"

// Independent brute-force verifiers: dense-matrix determinants for q_n,
// grid-based split-step wave propagation, and transfer-integral quadrature
// for the polymer. Verification-grade, not performance-grade.

namespace phpot::oracles {

struct GridSpec {
  double half_width = 30.0;  // extent in units of b (quantum) or l (polymer)
  int points = 4096;         // power of two
  int dt_substeps = 1;
};

// det of the n x n matrix with M_00 = eta - i, M_ll = -i beta, off-diagonal i,
// by full Gaussian elimination with partial pivoting. n <= 12.
cplx dense_determinant(cplx eta, double beta, int n);

// Split-step evolution of the (possibly off-centered) initial packet:
// multiplicative pulse phase exp(-i xi y^2 / 2) alternated with exact free
// propagation in the discrete-frequency domain. Works in rescaled y = x/b.
class SplitStepPropagator {
 public:
  SplitStepPropagator(const quantum::InitialPacket& packet,
                      const quantum::QuantumParams& params, cplx d0,
                      const GridSpec& grid);

  // Advance to the next pre-pulse instant (free propagation, preceded by the
  // pulse phase when a pulse has already been crossed).
  void step();
  // Advance by a fraction of an interval from the current pre-pulse state
  // into a scratch copy; returns the density width at that instant.
  double width_at_fraction(double frac) const;

  int pulses_done() const { return n_; }
  double norm() const;            // integral of |psi|^2 dx
  double width() const;           // gamma with P ~ exp(-x^2/gamma^2), mean removed
  double mean_x() const;
  cplx psi_at_origin() const;
  double boundary_leak() const;   // max edge density over peak density

  const std::vector<cplx>& psi() const { return psi_; }
  std::vector<double> grid_x() const;

 private:
  void apply_free(std::vector<cplx>& f, double fraction) const;
  void apply_kick(std::vector<cplx>& f) const;

  quantum::QuantumParams params_;
  GridSpec grid_;
  double dy_;
  int n_ = 0;
  std::vector<cplx> psi_;  // samples on y grid, y_j = (j - N/2) dy
};

struct TransferResult {
  std::vector<double> widths;          // gamma_n for n = 1.., physical units
  std::optional<int> death_index;      // first plane where normalizability fails
};

TransferResult transfer_integral(const polymer::PolymerSpec& spec, int n_planes,
                                 const GridSpec& grid);

// power-of-two in-place FFT used by the grid oracles (exposed for tests)
void fft_inplace(std::vector<cplx>& data, bool inverse);

}  // namespace phpot::oracles
