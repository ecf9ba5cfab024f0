#include "phpot/polymer.hpp"

#include <cmath>
#include <limits>

#include "phpot/recurrence.hpp"

namespace phpot::polymer {

double PolymerSpec::l() const { return std::sqrt(4.0 * nu * spacing); }
double PolymerSpec::chi() const {
  const double ratio = l() / a;
  return ratio * ratio;
}

PolymerSpec PolymerSpec::dimensionless(double g_tilde, double chi) {
  if (!(chi > 0.0)) throw std::domain_error("PolymerSpec: chi must be > 0");
  PolymerSpec s;
  s.nu = 0.25;
  s.spacing = 1.0;  // l = 1
  s.g = g_tilde / (2.0 * s.nu * s.spacing);
  s.a = 1.0 / std::sqrt(chi);
  return s;
}

namespace {
double require_alive_coupling(const PolymerSpec& spec) {
  const double gt = spec.g_tilde();
  if (gt <= -2.0) throw DeathError(1, spec.spacing);  // cannot survive one pulse
  return gt;
}
}  // namespace

PolymerRun q_polymer(const PolymerSpec& spec, int n) {
  const double gt = require_alive_coupling(spec);
  const double chi = spec.chi();
  const double lscale = spec.l();
  RecurrenceSeed seed{cplx(1.0), cplx(chi + 1.0), cplx(gt + 2.0), cplx(-1.0)};
  const auto q = iterate(seed, std::max(n, 1));
  PolymerRun run;
  for (int k = 1; k < static_cast<int>(q.size()); ++k) {
    const double qk = q[static_cast<size_t>(k)].real();
    const double qp = q[static_cast<size_t>(k) - 1].real();
    if (qk <= 0.0) {
      run.death_index = k;
      break;
    }
    // gamma is real only while the density stays normalizable; during the
    // unbinding transient with q_n < q_{n-1} it is reported as NaN.
    const double ratio = qk / (qk - qp);
    const double gamma =
        ratio > 0.0 ? lscale * std::sqrt(ratio) : std::numeric_limits<double>::quiet_NaN();
    run.profiles.push_back(PolymerProfile{k, qk, qp, gamma});
  }
  return run;
}

double q_polymer_closed(const PolymerSpec& spec, int n) {
  const double gt = require_alive_coupling(spec);
  const double chi = spec.chi();
  if (n == 0) return 1.0;
  if (gt > 0.0) {
    const double th = std::acosh(1.0 + gt / 2.0);
    return (std::sinh((n + 1) * th) +
            (chi + 1.0 - 2.0 * std::cosh(th)) * std::sinh(n * th)) /
           std::sinh(th);
  }
  if (gt == 0.0) return 1.0 + n * chi;  // pure diffusion
  const double thp = std::acos(1.0 - std::abs(gt) / 2.0);
  return (std::sin((n + 1) * thp) + (chi + 1.0 - 2.0 * std::cos(thp)) * std::sin(n * thp)) /
         std::sin(thp);
}

double width_profile(const PolymerSpec& spec, int n) {
  if (n < 1) throw std::domain_error("width_profile: n must be >= 1");
  PolymerRun run = q_polymer(spec, n);
  if (run.death_index && *run.death_index <= n)
    throw DeathError(*run.death_index, *run.death_index * spec.spacing);
  return run.profiles.at(static_cast<size_t>(n) - 1).gamma_n;
}

double width_saturation(const PolymerSpec& spec) {
  const double gt = spec.g_tilde();
  if (!(gt > 0.0)) throw std::domain_error("width_saturation: requires g_tilde > 0");
  const double c = 1.0 + gt / 2.0;
  const double exp_minus_theta = c - std::sqrt(c * c - 1.0);
  const double zeta = 1.0 - exp_minus_theta;
  return spec.l() / std::sqrt(zeta);
}

double tuned_coupling(double chi) {
  if (!(chi > 0.0 && chi < 1.0))
    throw std::domain_error("tuned_coupling: no compensation possible unless 0 < chi < 1");
  return chi * chi / (1.0 - chi);
}

MaxLength max_length(const PolymerSpec& spec) {
  const double gt = spec.g_tilde();
  if (!(gt > -2.0 && gt < 0.0))
    throw std::domain_error("max_length: requires -2 < g_tilde < 0");
  const double thp = std::acos(1.0 - std::abs(gt) / 2.0);
  const double chi = spec.chi();
  const double w =
      (M_PI / 2.0 + std::atan((chi + 1.0 - std::cos(thp)) / std::sin(thp))) / thp;
  return MaxLength{static_cast<int>(std::floor(w)), w};
}

GrowthReport growth_regimes(const PolymerSpec& spec) {
  const double gt = spec.g_tilde();
  if (gt > 0.0) throw std::domain_error("growth_regimes: requires g_tilde <= 0");
  const double thp = gt < 0.0 ? std::acos(1.0 - std::abs(gt) / 2.0) : 0.0;

  const int n_early_max =
      thp > 0.0 ? static_cast<int>(0.3 / thp) : 100;
  const int n_total = thp > 0.0 ? static_cast<int>(M_PI / thp) + 2 : n_early_max + 1;
  PolymerRun run = q_polymer(spec, n_total);

  GrowthReport rep{0.0, std::nullopt, false, false};

  // early regime: least-squares slope of log gamma vs log n
  {
    const int n_lo = std::max(2, thp > 0.0 ? static_cast<int>(0.1 / thp) : 10);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (const auto& p : run.profiles) {
      if (p.n < n_lo || p.n > n_early_max || !(p.gamma_n > 0.0)) continue;
      const double x = std::log(static_cast<double>(p.n));
      const double y = std::log(p.gamma_n);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
      ++count;
    }
    if (count >= 3) {
      rep.early_exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
      rep.early_ok = std::abs(rep.early_exponent - 0.5) <= 0.05;
    }
  }

  // late regime: local log-log slope in the crossover band before the width
  // divergence, n theta' in [0.9, 1.0]
  if (thp > 0.0) {
    double slope_sum = 0.0;
    int slope_count = 0;
    for (size_t k = 1; k < run.profiles.size(); ++k) {
      const auto& a = run.profiles[k - 1];
      const auto& b = run.profiles[k];
      const double u = b.n * thp;
      if (u < 0.9 || u > 1.0) continue;
      if (!(a.gamma_n > 0.0) || !(b.gamma_n > 0.0)) continue;
      slope_sum += (std::log(b.gamma_n) - std::log(a.gamma_n)) /
                   (std::log(static_cast<double>(b.n)) - std::log(static_cast<double>(a.n)));
      ++slope_count;
    }
    if (slope_count > 0) {
      rep.late_slope = slope_sum / slope_count;
      rep.late_ok = std::abs(*rep.late_slope - 1.0) <= 0.1;
    }
  }
  return rep;
}

}  // namespace phpot::polymer
