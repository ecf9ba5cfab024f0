// phpot: pulsed-harmonic-potential scans and cross-checks.
//
// Subcommands: portrait, polymer, continuum, orbit, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "phpot/polymer.hpp"
#include "phpot/scan.hpp"
#include "phpot/verify.hpp"

namespace {

struct CommonOut {
  std::string path = "-";
  std::string format = "csv";
};

void add_output_options(CLI::App* cmd, CommonOut& out) {
  cmd->add_option("-o,--output", out.path, "output file, '-' for stdout")
      ->capture_default_str();
  cmd->add_option("--format", out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void write_output(const CommonOut& out, const std::string& body) {
  if (out.path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out.path);
  f << body;
}

struct SpecFlags {
  std::string manifestation = "classical";
  double eta_re = 1.0, eta_im = -0.5;
  double d0_re = 0.0, d0_im = 0.0;
};

void add_spec_options(CLI::App* cmd, phpot::scan::ScanSpec& spec, SpecFlags& flags) {
  cmd->add_option("-m,--manifestation", flags.manifestation,
                  "classical, quantum, moebius or offcenter")
      ->check(CLI::IsMember({"classical", "quantum", "moebius", "offcenter"}))
      ->capture_default_str();
  cmd->add_option("--iterations", spec.n_iterations, "pulses per parameter point")
      ->capture_default_str();
  cmd->add_option("--x0", spec.x0, "classical initial position")->capture_default_str();
  cmd->add_option("--p0", spec.p0, "classical initial momentum")->capture_default_str();
  cmd->add_option("--eta-re", flags.eta_re, "Re(eta), initial packet shape")
      ->capture_default_str();
  cmd->add_option("--eta-im", flags.eta_im, "Im(eta)")->capture_default_str();
  cmd->add_option("--d0-re", flags.d0_re, "Re(d0), off-center amplitude")
      ->capture_default_str();
  cmd->add_option("--d0-im", flags.d0_im, "Im(d0)")->capture_default_str();
  cmd->add_option("--hbar", spec.hbar, "hbar")->capture_default_str();
  cmd->add_option("--mass", spec.mass, "particle mass")->capture_default_str();
  cmd->add_option("--period", spec.period, "pulse period tau")->capture_default_str();
}

void finalize_spec(phpot::scan::ScanSpec& spec, const SpecFlags& flags) {
  spec.manifestation = phpot::scan::manifestation_from_name(flags.manifestation);
  spec.eta = {flags.eta_re, flags.eta_im};
  spec.d0 = {flags.d0_re, flags.d0_im};
}

int run_verify(const std::string& suite_name, const std::string& format) {
  const auto suite = phpot::verify::suite_from_name(suite_name);
  const auto results = phpot::verify::run_suite(suite);
  bool all_pass = true;
  if (format == "json") {
    std::cout << "[\n";
    for (size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      std::cout << "  {\"name\": \"" << r.name << "\", \"pass\": "
                << (r.pass ? "true" : "false") << ", \"residual\": " << r.residual
                << "}" << (i + 1 < results.size() ? "," : "") << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << "]\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                << "  residual=" << r.residual;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pulsed harmonic potential: portraits, profiles, verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  phpot::scan::ScanSpec spec;
  SpecFlags flags;
  CommonOut out;
  double xi = 1.0;
  double g_tilde = 1.0, chi = 0.5;
  double kappa = 1.0, c_mass = 1.0, c_hbar = 1.0, l0 = 1.0, t_max = 6.283185307179586;
  int samples = 200;
  std::string suite = "all", verify_format = "text";

  auto* portrait = app.add_subcommand("portrait", "energy portrait over a coupling scan");
  add_spec_options(portrait, spec, flags);
  portrait->add_option("--xi-min", spec.xi_min, "exclusive scan lower edge")
      ->capture_default_str();
  portrait->add_option("--xi-max", spec.xi_max, "scan upper edge")->capture_default_str();
  portrait->add_option("--xi-step", spec.xi_step, "scan step")->capture_default_str();
  add_output_options(portrait, out);

  auto* orbit = app.add_subcommand("orbit", "trajectory dump at a single coupling");
  add_spec_options(orbit, spec, flags);
  orbit->add_option("--xi", xi, "coupling value")->capture_default_str();
  add_output_options(orbit, out);

  auto* poly = app.add_subcommand("polymer", "directed-line width profile");
  poly->add_option("--g-tilde", g_tilde, "dimensionless plane coupling")
      ->capture_default_str();
  poly->add_option("--chi", chi, "(l/a)^2")->capture_default_str();
  poly->add_option("--iterations", spec.n_iterations, "number of planes")
      ->capture_default_str();
  add_output_options(poly, out);

  auto* cont = app.add_subcommand("continuum", "static-limit width and energy trace");
  cont->add_option("--kappa", kappa, "static stiffness")->capture_default_str();
  cont->add_option("--mass", c_mass, "mass")->capture_default_str();
  cont->add_option("--hbar", c_hbar, "hbar")->capture_default_str();
  cont->add_option("--l0", l0, "initial width")->capture_default_str();
  cont->add_option("--t-max", t_max, "trace end time")->capture_default_str();
  cont->add_option("--samples", samples, "number of sample intervals")
      ->capture_default_str();
  add_output_options(cont, out);

  auto* verify = app.add_subcommand("verify", "run the cross-check suite");
  verify->add_option("--suite", suite, "all, classical, quantum, polymer or continuum")
      ->check(CLI::IsMember({"all", "classical", "quantum", "polymer", "continuum"}))
      ->capture_default_str();
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (portrait->parsed()) {
      finalize_spec(spec, flags);
      const auto rows = phpot::scan::run_portrait(spec);
      write_output(out, out.format == "json" ? phpot::scan::portrait_json(rows)
                                             : phpot::scan::portrait_csv(rows));
    } else if (orbit->parsed()) {
      finalize_spec(spec, flags);
      const auto rows = phpot::scan::run_orbit(spec, xi);
      write_output(out, out.format == "json" ? phpot::scan::orbit_json(rows)
                                             : phpot::scan::orbit_csv(rows));
    } else if (poly->parsed()) {
      const auto result = phpot::scan::run_polymer_profile(g_tilde, chi, spec.n_iterations);
      write_output(out, out.format == "json" ? phpot::scan::polymer_json(result)
                                             : phpot::scan::polymer_csv(result));
      if (result.gamma_inf)
        std::cerr << "gamma_inf = " << *result.gamma_inf << "\n";
      if (result.n_star)
        std::cerr << "n_star = " << *result.n_star << "\n";
    } else if (cont->parsed()) {
      const auto rows = phpot::scan::run_continuum(kappa, c_mass, c_hbar, l0, t_max, samples);
      write_output(out, out.format == "json" ? phpot::scan::continuum_json(rows)
                                             : phpot::scan::continuum_csv(rows));
    } else if (verify->parsed()) {
      return run_verify(suite, verify_format);
    }
  } catch (const phpot::polymer::DeathError& e) {
    std::cerr << "error: " << e.what() << " (line destroyed immediately)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
