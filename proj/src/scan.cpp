#include "phpot/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "phpot/classical.hpp"
#include "phpot/continuum.hpp"
#include "phpot/moebius.hpp"
#include "phpot/offcenter.hpp"
#include "phpot/polymer.hpp"
#include "phpot/quantum.hpp"

namespace phpot::scan {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

template <typename Fn>
void parallel_for(int n_tasks, Fn&& fn) {
  const int workers = std::min(worker_count(), n_tasks);
  if (workers <= 1) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n_tasks; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::vector<double> energies_at_xi(const ScanSpec& spec, double xi) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(spec.n_iterations));
  switch (spec.manifestation) {
    case Manifestation::Classical: {
      const auto params = classical::ClassicalParams::from_xi(xi, spec.mass, spec.period);
      classical::ClassicalState s = classical::initial_state(spec.x0, spec.p0, params).state;
      for (int n = 1; n <= spec.n_iterations; ++n) {
        out.push_back(classical::energy(s, params));
        s = classical::step(s, xi);
      }
      break;
    }
    case Manifestation::Quantum: {
      const auto params =
          quantum::QuantumParams::from_xi(xi, spec.hbar, spec.mass, spec.period);
      const auto packet = quantum::InitialPacket::make(spec.eta, params.b);
      quantum::DeterminantOrbit orbit(spec.eta, xi, spec.n_iterations);
      for (int n = 1; n <= spec.n_iterations; ++n)
        out.push_back(quantum::mean_energy(orbit.pair(n), packet, params));
      break;
    }
    case Manifestation::Moebius: {
      const auto params =
          quantum::QuantumParams::from_xi(xi, spec.hbar, spec.mass, spec.period);
      moebius::PacketShape shape = moebius::initial_sigma(spec.eta);
      for (int n = 1; n <= spec.n_iterations; ++n) {
        out.push_back(moebius::sigma_energy(shape, params));
        shape = moebius::moebius_step(shape, xi);
      }
      break;
    }
    case Manifestation::OffCenter: {
      const auto params =
          quantum::QuantumParams::from_xi(xi, spec.hbar, spec.mass, spec.period);
      const auto packet = quantum::InitialPacket::make(spec.eta, params.b);
      quantum::DeterminantOrbit orbit(spec.eta, xi, spec.n_iterations);
      const auto ds = offcenter::d_sequence(spec.d0, orbit);
      for (int n = 1; n <= spec.n_iterations; ++n)
        out.push_back(offcenter::energy_split(orbit.pair(n), ds[static_cast<size_t>(n)],
                                              packet, params)
                          .total);
      break;
    }
    default:
      throw std::invalid_argument("run_portrait: continuum and polymer scans have "
                                  "their own entry points");
  }
  return out;
}

}  // namespace

Manifestation manifestation_from_name(const std::string& name) {
  if (name == "classical") return Manifestation::Classical;
  if (name == "quantum") return Manifestation::Quantum;
  if (name == "moebius") return Manifestation::Moebius;
  if (name == "offcenter") return Manifestation::OffCenter;
  if (name == "continuum") return Manifestation::Continuum;
  if (name == "polymer") return Manifestation::Polymer;
  throw std::invalid_argument("unknown manifestation: " + name);
}

void ScanSpec::validate() const {
  if (!(xi_step > 0.0)) throw std::invalid_argument("xi_step must be > 0");
  if (!(xi_min < xi_max)) throw std::invalid_argument("xi_min must be < xi_max");
  if (n_iterations < 1) throw std::invalid_argument("n_iterations must be >= 1");
  if (manifestation != Manifestation::Classical && eta.real() <= 0.0)
    throw std::invalid_argument("Re(eta) must be > 0 for a normalizable packet");
}

int worker_count() {
  if (const char* env = std::getenv("PHPOT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<PortraitRow> run_portrait(const ScanSpec& spec) {
  spec.validate();
  const int count =
      static_cast<int>(std::floor((spec.xi_max - spec.xi_min) / spec.xi_step + 1e-9));
  if (count < 1) throw std::invalid_argument("empty scan range");

  std::vector<std::vector<double>> blocks(static_cast<size_t>(count));
  parallel_for(count, [&](int k) {
    const double xi = spec.xi_min + (k + 1) * spec.xi_step;
    blocks[static_cast<size_t>(k)] = energies_at_xi(spec, xi);
  });

  std::vector<PortraitRow> rows;
  rows.reserve(static_cast<size_t>(count) * static_cast<size_t>(spec.n_iterations));
  for (int k = 0; k < count; ++k) {
    const double xi = spec.xi_min + (k + 1) * spec.xi_step;
    const auto& block = blocks[static_cast<size_t>(k)];
    for (int n = 1; n <= spec.n_iterations; ++n)
      rows.push_back(PortraitRow{xi, n, block[static_cast<size_t>(n) - 1]});
  }
  return rows;
}

std::string portrait_csv(const std::vector<PortraitRow>& rows) {
  std::string out = "xi,n,energy\n";
  for (const auto& r : rows)
    out += fmt(r.xi) + "," + std::to_string(r.n) + "," + fmt(r.energy) + "\n";
  return out;
}

std::string portrait_json(const std::vector<PortraitRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"xi", r.xi}, {"n", r.n}, {"energy", r.energy}});
  return json{{"rows", arr}}.dump(2) + "\n";
}

PolymerProfileResult run_polymer_profile(double g_tilde, double chi, int n_iterations) {
  if (n_iterations < 1) throw std::invalid_argument("n_iterations must be >= 1");
  const auto spec = polymer::PolymerSpec::dimensionless(g_tilde, chi);
  const auto run = polymer::q_polymer(spec, n_iterations);

  PolymerProfileResult result;
  for (const auto& p : run.profiles) {
    if (p.n > n_iterations) break;
    result.rows.push_back(PolymerProfileRow{p.n, p.gamma_n, true});
  }
  if (run.death_index && *run.death_index <= n_iterations)
    result.rows.push_back(PolymerProfileRow{
        *run.death_index, std::numeric_limits<double>::quiet_NaN(), false});
  if (g_tilde > 0.0) result.gamma_inf = polymer::width_saturation(spec);
  if (g_tilde < 0.0) result.n_star = polymer::max_length(spec).n_star;
  return result;
}

std::string polymer_csv(const PolymerProfileResult& result) {
  std::string out = "n,gamma,alive\n";
  for (const auto& r : result.rows)
    out += std::to_string(r.n) + "," + fmt(r.gamma) + "," + (r.alive ? "1" : "0") + "\n";
  return out;
}

std::string polymer_json(const PolymerProfileResult& result) {
  json arr = json::array();
  for (const auto& r : result.rows) {
    json row{{"n", r.n}, {"alive", r.alive}};
    if (std::isnan(r.gamma))
      row["gamma"] = nullptr;
    else
      row["gamma"] = r.gamma;
    arr.push_back(std::move(row));
  }
  json doc{{"rows", arr}};
  if (result.gamma_inf) doc["gamma_inf"] = *result.gamma_inf;
  if (result.n_star) doc["n_star"] = *result.n_star;
  return doc.dump(2) + "\n";
}

std::vector<ContinuumRow> run_continuum(double kappa, double mass, double hbar,
                                        double l0, double t_max, int samples) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
  const continuum::ContinuumParams params{kappa, mass, hbar, l0};
  std::vector<ContinuumRow> rows(static_cast<size_t>(samples) + 1);
  parallel_for(samples + 1, [&](int k) {
    const double t = t_max * k / samples;
    const auto e = continuum::energies(params, t);
    rows[static_cast<size_t>(k)] =
        ContinuumRow{t, continuum::width_t(params, t), e.kinetic, e.potential, e.total};
  });
  return rows;
}

std::string continuum_csv(const std::vector<ContinuumRow>& rows) {
  std::string out = "t,width,kinetic,potential,total\n";
  for (const auto& r : rows)
    out += fmt(r.t) + "," + fmt(r.width) + "," + fmt(r.kinetic) + "," +
           fmt(r.potential) + "," + fmt(r.total) + "\n";
  return out;
}

std::string continuum_json(const std::vector<ContinuumRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"t", r.t},
                   {"width", r.width},
                   {"kinetic", r.kinetic},
                   {"potential", r.potential},
                   {"total", r.total}});
  return json{{"rows", arr}}.dump(2) + "\n";
}

std::vector<OrbitRow> run_orbit(const ScanSpec& spec, double xi) {
  if (spec.n_iterations < 1) throw std::invalid_argument("n_iterations must be >= 1");
  std::vector<OrbitRow> rows;
  switch (spec.manifestation) {
    case Manifestation::Classical: {
      const auto params = classical::ClassicalParams::from_xi(xi, spec.mass, spec.period);
      classical::ClassicalState s = classical::initial_state(spec.x0, spec.p0, params).state;
      for (int n = 1; n <= spec.n_iterations; ++n) {
        rows.push_back(OrbitRow{
            n, {{"x", s.x}, {"rho", s.rho}, {"energy", classical::energy(s, params)}}});
        s = classical::step(s, xi);
      }
      break;
    }
    case Manifestation::Quantum:
    case Manifestation::Moebius: {
      const auto params =
          quantum::QuantumParams::from_xi(xi, spec.hbar, spec.mass, spec.period);
      const auto packet = quantum::InitialPacket::make(spec.eta, params.b);
      quantum::DeterminantOrbit orbit(spec.eta, xi, spec.n_iterations);
      for (int n = 1; n <= spec.n_iterations; ++n) {
        const auto pair = orbit.pair(n);
        const auto shape = moebius::linearize(pair);
        rows.push_back(OrbitRow{n,
                                {{"re_q", pair.q_n.real()},
                                 {"im_q", pair.q_n.imag()},
                                 {"re_sigma", shape.sigma.real()},
                                 {"im_sigma", shape.sigma.imag()},
                                 {"width", quantum::width(pair, packet)},
                                 {"energy", quantum::mean_energy(pair, packet, params)}}});
      }
      break;
    }
    case Manifestation::OffCenter: {
      const auto params =
          quantum::QuantumParams::from_xi(xi, spec.hbar, spec.mass, spec.period);
      const auto packet = quantum::InitialPacket::make(spec.eta, params.b);
      quantum::DeterminantOrbit orbit(spec.eta, xi, spec.n_iterations);
      const auto ds = offcenter::d_sequence(spec.d0, orbit);
      for (int n = 1; n <= spec.n_iterations; ++n) {
        const auto pair = orbit.pair(n);
        const auto& off = ds[static_cast<size_t>(n)];
        const auto expv = offcenter::expectations(pair, off, packet, params);
        const auto split = offcenter::energy_split(pair, off, packet, params);
        rows.push_back(OrbitRow{n,
                                {{"x_bar", expv.x_bar},
                                 {"p_bar", expv.p_bar},
                                 {"width", quantum::width(pair, packet)},
                                 {"energy_quantum", split.quantum_part},
                                 {"energy_classical", split.classical_part},
                                 {"energy", split.total}}});
      }
      break;
    }
    default:
      throw std::invalid_argument(
          "run_orbit: supported manifestations are classical, quantum, moebius, offcenter");
  }
  return rows;
}

std::string orbit_csv(const std::vector<OrbitRow>& rows) {
  if (rows.empty()) return "n\n";
  std::string out = "n";
  for (const auto& f : rows.front().fields) out += "," + f.first;
  out += "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    for (const auto& f : r.fields) out += "," + fmt(f.second);
    out += "\n";
  }
  return out;
}

std::string orbit_json(const std::vector<OrbitRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row{{"n", r.n}};
    for (const auto& f : r.fields) row[f.first] = f.second;
    arr.push_back(std::move(row));
  }
  return json{{"rows", arr}}.dump(2) + "\n";
}

}  // namespace phpot::scan
