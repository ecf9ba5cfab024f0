#include "phpot/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace phpot::oracles {

void fft_inplace(std::vector<cplx>& data, bool inverse) {
  const size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::domain_error("fft_inplace: size must be a power of two");
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const cplx u = data[i + k];
        const cplx v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& z : data) z /= static_cast<double>(n);
}

cplx dense_determinant(cplx eta, double beta, int n) {
  if (n < 1 || n > 12)
    throw std::domain_error("dense_determinant: n must lie in [1,12]");
  const cplx i{0.0, 1.0};
  std::vector<std::vector<cplx>> m(static_cast<size_t>(n),
                                   std::vector<cplx>(static_cast<size_t>(n), cplx(0.0)));
  m[0][0] = eta - i;
  for (int l = 1; l < n; ++l) m[static_cast<size_t>(l)][static_cast<size_t>(l)] = -i * beta;
  for (int l = 0; l + 1 < n; ++l) {
    m[static_cast<size_t>(l)][static_cast<size_t>(l) + 1] = i;
    m[static_cast<size_t>(l) + 1][static_cast<size_t>(l)] = i;
  }
  cplx det(1.0);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(m[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
          std::abs(m[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
        pivot = row;
    if (pivot != col) {
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
      det = -det;
    }
    const cplx p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    if (p == cplx(0.0)) return cplx(0.0);
    det *= p;
    for (int row = col + 1; row < n; ++row) {
      const cplx f = m[static_cast<size_t>(row)][static_cast<size_t>(col)] / p;
      for (int c2 = col; c2 < n; ++c2)
        m[static_cast<size_t>(row)][static_cast<size_t>(c2)] -=
            f * m[static_cast<size_t>(col)][static_cast<size_t>(c2)];
    }
  }
  return det;
}

namespace {
void check_grid(const GridSpec& grid) {
  if (grid.points < 256 || (grid.points & (grid.points - 1)) != 0)
    throw std::domain_error("GridSpec: points must be a power of two >= 256");
  if (!(grid.half_width > 0.0)) throw std::domain_error("GridSpec: half_width must be > 0");
}
}  // namespace

SplitStepPropagator::SplitStepPropagator(const quantum::InitialPacket& packet,
                                         const quantum::QuantumParams& params, cplx d0,
                                         const GridSpec& grid)
    : params_(params), grid_(grid) {
  check_grid(grid);
  const int n = grid.points;
  dy_ = 2.0 * grid.half_width / n;
  psi_.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double y = (j - n / 2) * dy_;
    psi_[static_cast<size_t>(j)] = std::exp(-packet.eta * (y * y) / 2.0 + d0 * y);
  }
  double nrm = 0.0;
  for (const auto& z : psi_) nrm += std::norm(z);
  nrm = std::sqrt(nrm * dy_);
  for (auto& z : psi_) z /= nrm;
}

void SplitStepPropagator::apply_free(std::vector<cplx>& f, double fraction) const {
  const int n = grid_.points;
  const int sub = std::max(1, grid_.dt_substeps);
  const double dk = 2.0 * M_PI / (n * dy_);
  fft_inplace(f, false);
  for (int m = 0; m < n; ++m) {
    const int mm = (m < n / 2) ? m : m - n;
    const double k = mm * dk;
    // exact free kernel; substeps compose to the same total phase
    f[static_cast<size_t>(m)] *=
        std::pow(std::exp(cplx(0.0, -0.5 * k * k * fraction / sub)), sub);
  }
  fft_inplace(f, true);
}

void SplitStepPropagator::apply_kick(std::vector<cplx>& f) const {
  const int n = grid_.points;
  for (int j = 0; j < n; ++j) {
    const double y = (j - n / 2) * dy_;
    f[static_cast<size_t>(j)] *= std::exp(cplx(0.0, -0.5 * params_.xi * y * y));
  }
}

void SplitStepPropagator::step() {
  if (n_ >= 1) apply_kick(psi_);
  apply_free(psi_, 1.0);
  ++n_;
  if (boundary_leak() > 1e-12) {
    throw std::runtime_error(
        "SplitStepPropagator: boundary leak; retry with half_width >= " +
        std::to_string(2.0 * grid_.half_width));
  }
}

double SplitStepPropagator::width_at_fraction(double frac) const {
  if (frac < 0.0 || frac > 1.0)
    throw std::domain_error("width_at_fraction: frac must lie in [0,1]");
  std::vector<cplx> f = psi_;
  apply_kick(f);
  apply_free(f, frac);
  double nrm = 0.0, mean = 0.0, m2 = 0.0;
  const int n = grid_.points;
  for (int j = 0; j < n; ++j) {
    const double y = (j - n / 2) * dy_;
    const double p = std::norm(f[static_cast<size_t>(j)]);
    nrm += p;
    mean += p * y;
    m2 += p * y * y;
  }
  mean /= nrm;
  const double var = m2 / nrm - mean * mean;
  return params_.b * std::sqrt(2.0 * var);
}

double SplitStepPropagator::norm() const {
  double nrm = 0.0;
  for (const auto& z : psi_) nrm += std::norm(z);
  return nrm * dy_;
}

double SplitStepPropagator::width() const {
  double nrm = 0.0, mean = 0.0, m2 = 0.0;
  const int n = grid_.points;
  for (int j = 0; j < n; ++j) {
    const double y = (j - n / 2) * dy_;
    const double p = std::norm(psi_[static_cast<size_t>(j)]);
    nrm += p;
    mean += p * y;
    m2 += p * y * y;
  }
  mean /= nrm;
  const double var = m2 / nrm - mean * mean;
  return params_.b * std::sqrt(2.0 * var);
}

double SplitStepPropagator::mean_x() const {
  double nrm = 0.0, mean = 0.0;
  const int n = grid_.points;
  for (int j = 0; j < n; ++j) {
    const double y = (j - n / 2) * dy_;
    const double p = std::norm(psi_[static_cast<size_t>(j)]);
    nrm += p;
    mean += p * y;
  }
  return params_.b * mean / nrm;
}

cplx SplitStepPropagator::psi_at_origin() const {
  return psi_[static_cast<size_t>(grid_.points / 2)];
}

double SplitStepPropagator::boundary_leak() const {
  double peak = 0.0;
  for (const auto& z : psi_) peak = std::max(peak, std::norm(z));
  const double edge = std::max(std::norm(psi_.front()), std::norm(psi_.back()));
  return peak > 0.0 ? edge / peak : 0.0;
}

std::vector<double> SplitStepPropagator::grid_x() const {
  std::vector<double> x(static_cast<size_t>(grid_.points));
  for (int j = 0; j < grid_.points; ++j)
    x[static_cast<size_t>(j)] = params_.b * (j - grid_.points / 2) * dy_;
  return x;
}

TransferResult transfer_integral(const polymer::PolymerSpec& spec, int n_planes,
                                 const GridSpec& grid) {
  check_grid(grid);
  const double gt = spec.g_tilde();
  if (gt <= -2.0) throw polymer::DeathError(1, spec.spacing);
  const double chi = spec.chi();
  const int n = grid.points;
  const double du = 2.0 * grid.half_width / n;
  const double dk = 2.0 * M_PI / (n * du);

  std::vector<cplx> z(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double u = (j - n / 2) * du;
    z[static_cast<size_t>(j)] = std::exp(-chi * u * u);
  }

  TransferResult result;
  for (int plane = 1; plane <= n_planes; ++plane) {
    if (plane > 1) {
      // plane factor exp(-g_tilde u^2) at z = (plane-1) d
      for (int j = 0; j < n; ++j) {
        const double u = (j - n / 2) * du;
        z[static_cast<size_t>(j)] *= std::exp(-gt * u * u);
      }
    }
    // thermal wander over one spacing: kernel exp(-(du)^2) in units of l
    fft_inplace(z, false);
    for (int m = 0; m < n; ++m) {
      const int mm = (m < n / 2) ? m : m - n;
      const double k = mm * dk;
      z[static_cast<size_t>(m)] *= std::exp(-k * k / 4.0);
    }
    fft_inplace(z, true);

    double nrm = 0.0, m2 = 0.0, peak = 0.0;
    for (int j = 0; j < n; ++j) {
      const double u = (j - n / 2) * du;
      const double p = z[static_cast<size_t>(j)].real();
      nrm += p;
      m2 += p * u * u;
      peak = std::max(peak, std::abs(p));
    }
    const double edge = std::max(std::abs(z.front().real()), std::abs(z.back().real()));
    const double var = m2 / nrm;
    const bool dead = !(nrm > 0.0) || edge > 1e-9 * peak ||
                      2.0 * var > std::pow(grid.half_width / 2.0, 2);
    if (dead) {
      result.death_index = plane;
      break;
    }
    result.widths.push_back(spec.l() * std::sqrt(2.0 * var));
    // renormalize; the partition function carries an arbitrary prefactor
    for (auto& v : z) v /= nrm * du;
  }
  return result;
}

}  // namespace phpot::oracles
