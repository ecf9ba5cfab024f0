#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "phpot/recurrence.hpp"

// Parameter scans behind the CLI: energy portraits over a coupling range,
// polymer width profiles, continuum time traces, and single-orbit dumps.
// All emitters produce deterministic bytes for a fixed spec; scans are
// distributed over a worker pool (PHPOT_WORKERS, default hw concurrency).

namespace phpot::scan {

enum class Manifestation { Classical, Quantum, Moebius, OffCenter, Continuum, Polymer };

Manifestation manifestation_from_name(const std::string& name);

struct ScanSpec {
  Manifestation manifestation = Manifestation::Classical;
  double xi_min = 0.0;   // exclusive lower edge: first sample is xi_min + xi_step
  double xi_max = 2.0;
  double xi_step = 0.01;
  int n_iterations = 20;

  // initial-condition block; which fields matter depends on the manifestation
  double x0 = 1.0;
  double p0 = 0.5;
  cplx eta{1.0, -0.5};
  cplx d0{0.0, 0.0};

  double hbar = 1.0;
  double mass = 1.0;
  double period = 1.0;

  void validate() const;  // throws std::invalid_argument
};

struct PortraitRow {
  double xi;
  int n;
  double energy;
};

// One row per (xi, n), sorted by (xi, n). Classical, Quantum, Moebius and
// OffCenter only; the other manifestations have dedicated entry points.
std::vector<PortraitRow> run_portrait(const ScanSpec& spec);

std::string portrait_csv(const std::vector<PortraitRow>& rows);   // header xi,n,energy
std::string portrait_json(const std::vector<PortraitRow>& rows);  // same field names

struct PolymerProfileRow {
  int n;
  double gamma;  // NaN during the unbinding transient
  bool alive;
};

struct PolymerProfileResult {
  std::vector<PolymerProfileRow> rows;
  std::optional<double> gamma_inf;  // binding asymptote (g_tilde > 0)
  std::optional<int> n_star;        // maximum surviving plane (unbinding)
};

PolymerProfileResult run_polymer_profile(double g_tilde, double chi, int n_iterations);

std::string polymer_csv(const PolymerProfileResult& result);   // header n,gamma,alive
std::string polymer_json(const PolymerProfileResult& result);

struct ContinuumRow {
  double t;
  double width;
  double kinetic;
  double potential;
  double total;
};

std::vector<ContinuumRow> run_continuum(double kappa, double mass, double hbar,
                                        double l0, double t_max, int samples);

std::string continuum_csv(const std::vector<ContinuumRow>& rows);
std::string continuum_json(const std::vector<ContinuumRow>& rows);

struct OrbitRow {
  int n;
  std::vector<std::pair<std::string, double>> fields;  // schema per manifestation
};

// Trajectory dump at a single coupling value; the columns depend on the
// manifestation (classical: x,rho,energy; quantum family: re_q,im_q,width,energy).
std::vector<OrbitRow> run_orbit(const ScanSpec& spec, double xi);

std::string orbit_csv(const std::vector<OrbitRow>& rows);
std::string orbit_json(const std::vector<OrbitRow>& rows);

// Worker count resolution: PHPOT_WORKERS if set and positive, otherwise
// std::thread::hardware_concurrency().
int worker_count();

}  // namespace phpot::scan
