#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phpot/classical.hpp"
#include "phpot/continuum.hpp"
#include "phpot/moebius.hpp"
#include "phpot/offcenter.hpp"
#include "phpot/oracles.hpp"
#include "phpot/polymer.hpp"
#include "phpot/quantum.hpp"
#include "phpot/scan.hpp"
#include "phpot/verify.hpp"

namespace py = pybind11;
using namespace phpot;

PYBIND11_MODULE(_core, m) {
  m.doc() = "pulsed harmonic potential: classical map, Gaussian packet, directed line";

  // ------------------------------------------------------------- classical
  auto mc = m.def_submodule("classical");
  py::class_<classical::ClassicalParams>(mc, "ClassicalParams")
      .def_readonly("mass", &classical::ClassicalParams::mass)
      .def_readonly("period", &classical::ClassicalParams::period)
      .def_readonly("strength", &classical::ClassicalParams::strength)
      .def_readonly("xi", &classical::ClassicalParams::xi)
      .def_static("from_xi", &classical::ClassicalParams::from_xi, py::arg("xi"),
                  py::arg("mass") = 1.0, py::arg("period") = 1.0);
  py::class_<classical::ClassicalState>(mc, "ClassicalState")
      .def(py::init([](int n, double x, double rho) {
             return classical::ClassicalState{n, x, rho};
           }),
           py::arg("n"), py::arg("x"), py::arg("rho"))
      .def_readonly("n", &classical::ClassicalState::n)
      .def_readonly("x", &classical::ClassicalState::x)
      .def_readonly("rho", &classical::ClassicalState::rho);
  py::class_<classical::InitialClassical>(mc, "InitialClassical")
      .def_readonly("state", &classical::InitialClassical::state)
      .def_readonly("rho0", &classical::InitialClassical::rho0);
  py::enum_<classical::MotionKind>(mc, "MotionKind")
      .value("PMI", classical::MotionKind::PMI)
      .value("PMII", classical::MotionKind::PMII)
      .value("QuasiPeriodic", classical::MotionKind::QuasiPeriodic)
      .value("Unstable", classical::MotionKind::Unstable);
  py::class_<classical::PeriodicityReport>(mc, "PeriodicityReport")
      .def_readonly("kind", &classical::PeriodicityReport::kind)
      .def_readonly("n_period", &classical::PeriodicityReport::n_period)
      .def_readonly("m_index", &classical::PeriodicityReport::m_index)
      .def_readonly("full_state_period", &classical::PeriodicityReport::full_state_period);
  mc.def("initial_state", &classical::initial_state, py::arg("x0"), py::arg("p0"),
         py::arg("params"));
  mc.def("step", &classical::step, py::arg("state"), py::arg("xi"));
  mc.def("rho_closed_form", &classical::rho_closed_form, py::arg("n"), py::arg("rho0"),
         py::arg("rho1"), py::arg("xi"), py::arg("strict") = false);
  mc.def("energy", &classical::energy, py::arg("state"), py::arg("params"));
  mc.def("classify_periodicity", &classical::classify_periodicity, py::arg("xi"),
         py::arg("n_max"));
  mc.def("special_pmi2_condition", &classical::special_pmi2_condition, py::arg("state"),
         py::arg("xi"));

  // --------------------------------------------------------------- quantum
  auto mq = m.def_submodule("quantum");
  py::class_<quantum::QuantumParams>(mq, "QuantumParams")
      .def_readonly("hbar", &quantum::QuantumParams::hbar)
      .def_readonly("mass", &quantum::QuantumParams::mass)
      .def_readonly("period", &quantum::QuantumParams::period)
      .def_readonly("xi", &quantum::QuantumParams::xi)
      .def_readonly("b", &quantum::QuantumParams::b)
      .def_static("from_xi", &quantum::QuantumParams::from_xi, py::arg("xi"),
                  py::arg("hbar") = 1.0, py::arg("mass") = 1.0, py::arg("period") = 1.0);
  py::class_<quantum::InitialPacket>(mq, "InitialPacket")
      .def_readonly("eta", &quantum::InitialPacket::eta)
      .def_readonly("gamma0", &quantum::InitialPacket::gamma0)
      .def_static("make", &quantum::InitialPacket::make, py::arg("eta"),
                  py::arg("b") = 1.0);
  py::class_<quantum::DeterminantPair>(mq, "DeterminantPair")
      .def_readonly("n", &quantum::DeterminantPair::n)
      .def_readonly("q_n", &quantum::DeterminantPair::q_n)
      .def_readonly("q_prev", &quantum::DeterminantPair::q_prev);
  py::class_<quantum::DeterminantOrbit>(mq, "DeterminantOrbit")
      .def(py::init<cplx, double, int>(), py::arg("eta"), py::arg("xi"),
           py::arg("n_max"))
      .def("q", &quantum::DeterminantOrbit::q, py::arg("n"))
      .def("unwrapped_arg", &quantum::DeterminantOrbit::unwrapped_arg, py::arg("n"))
      .def("pair", &quantum::DeterminantOrbit::pair, py::arg("n"))
      .def_property_readonly("size", &quantum::DeterminantOrbit::size);
  py::class_<quantum::DensityProfile>(mq, "DensityProfile")
      .def_readonly("amplitude", &quantum::DensityProfile::amplitude)
      .def_readonly("width", &quantum::DensityProfile::width);
  mq.def("q_closed_form", &quantum::q_closed_form, py::arg("eta"), py::arg("xi"),
         py::arg("n"));
  mq.def("width", &quantum::width, py::arg("pair"), py::arg("packet"));
  mq.def("mean_energy", &quantum::mean_energy, py::arg("pair"), py::arg("packet"),
         py::arg("params"));
  mq.def("wavefunction_at", &quantum::wavefunction_at, py::arg("orbit"), py::arg("n"),
         py::arg("frac"), py::arg("x"), py::arg("packet"), py::arg("params"));
  mq.def("density_profile", &quantum::density_profile, py::arg("pair"), py::arg("frac"),
         py::arg("packet"), py::arg("params"));
  mq.def("pulse_phase_jump", &quantum::pulse_phase_jump, py::arg("sigma"), py::arg("xi"));

  // --------------------------------------------------------------- moebius
  auto mm = m.def_submodule("moebius");
  py::class_<moebius::PacketShape>(mm, "PacketShape")
      .def(py::init([](cplx sigma, int n) {
             return moebius::PacketShape{sigma, n};
           }),
           py::arg("sigma"), py::arg("n") = 1)
      .def_readonly("sigma", &moebius::PacketShape::sigma)
      .def_readonly("n", &moebius::PacketShape::n);
  py::class_<moebius::OneCycleEta>(mm, "OneCycleEta")
      .def_readonly("eta", &moebius::OneCycleEta::eta)
      .def_readonly("normalizable", &moebius::OneCycleEta::normalizable);
  mm.def("moebius_step", &moebius::moebius_step, py::arg("shape"), py::arg("xi"));
  mm.def("initial_sigma", &moebius::initial_sigma, py::arg("eta"));
  mm.def("linearize", &moebius::linearize, py::arg("pair"));
  mm.def("fixed_point_sigma", &moebius::fixed_point_sigma, py::arg("xi"));
  mm.def("one_cycle_eta", &moebius::one_cycle_eta, py::arg("xi"));
  mm.def("sigma_energy", &moebius::sigma_energy, py::arg("shape"), py::arg("params"));

  // ------------------------------------------------------------- continuum
  auto mt = m.def_submodule("continuum");
  py::class_<continuum::ContinuumParams>(mt, "ContinuumParams")
      .def(py::init([](double kappa, double mass, double hbar, double l0) {
             return continuum::ContinuumParams{kappa, mass, hbar, l0};
           }),
           py::arg("kappa") = 1.0, py::arg("mass") = 1.0, py::arg("hbar") = 1.0,
           py::arg("l0") = 1.0)
      .def_readonly("kappa", &continuum::ContinuumParams::kappa)
      .def_readonly("mass", &continuum::ContinuumParams::mass)
      .def_readonly("hbar", &continuum::ContinuumParams::hbar)
      .def_readonly("l0", &continuum::ContinuumParams::l0)
      .def("omega_s", &continuum::ContinuumParams::omega_s)
      .def("omega", &continuum::ContinuumParams::omega)
      .def("r", &continuum::ContinuumParams::r);
  py::class_<continuum::EnergySplit>(mt, "EnergySplit")
      .def_readonly("kinetic", &continuum::EnergySplit::kinetic)
      .def_readonly("potential", &continuum::EnergySplit::potential)
      .def_readonly("total", &continuum::EnergySplit::total);
  mt.def("evolve_v", &continuum::evolve_v, py::arg("params"), py::arg("v0"), py::arg("t"));
  mt.def("evolve_v_numeric", &continuum::evolve_v_numeric, py::arg("params"),
         py::arg("v0"), py::arg("t"), py::arg("rel_tol") = 1e-10);
  mt.def("discrete_limit_v", &continuum::discrete_limit_v, py::arg("params"),
         py::arg("v0"), py::arg("t"), py::arg("steps"));
  mt.def("width_t", &continuum::width_t, py::arg("params"), py::arg("t"));
  mt.def("energies", &continuum::energies, py::arg("params"), py::arg("t"));

  // ------------------------------------------------------------- offcenter
  auto mo = m.def_submodule("offcenter");
  py::class_<offcenter::OffsetAmplitude>(mo, "OffsetAmplitude")
      .def_readonly("n", &offcenter::OffsetAmplitude::n)
      .def_readonly("d_n", &offcenter::OffsetAmplitude::d_n)
      .def_readonly("d0", &offcenter::OffsetAmplitude::d0);
  py::class_<offcenter::ExpectationPair>(mo, "ExpectationPair")
      .def_readonly("x_bar", &offcenter::ExpectationPair::x_bar)
      .def_readonly("p_bar", &offcenter::ExpectationPair::p_bar)
      .def_readonly("n", &offcenter::ExpectationPair::n);
  py::class_<offcenter::EnergySplit>(mo, "EnergySplit")
      .def_readonly("quantum_part", &offcenter::EnergySplit::quantum_part)
      .def_readonly("classical_part", &offcenter::EnergySplit::classical_part)
      .def_readonly("total", &offcenter::EnergySplit::total);
  mo.def("d_sequence", &offcenter::d_sequence, py::arg("d0"), py::arg("orbit"));
  mo.def("d_step", &offcenter::d_step, py::arg("d_n"), py::arg("shape"), py::arg("xi"));
  mo.def("expectations", &offcenter::expectations, py::arg("pair"), py::arg("offset"),
         py::arg("packet"), py::arg("params"));
  mo.def("expectations_sigma", &offcenter::expectations_sigma, py::arg("shape"),
         py::arg("d_n"), py::arg("params"));
  mo.def("ehrenfest_residual", &offcenter::ehrenfest_residual, py::arg("orbit"),
         py::arg("params"));
  mo.def("energy_split", &offcenter::energy_split, py::arg("pair"), py::arg("offset"),
         py::arg("packet"), py::arg("params"));
  mo.def("energy_direct", &offcenter::energy_direct, py::arg("shape"), py::arg("d_n"),
         py::arg("params"));
  mo.def("d0_from_phase_space", &offcenter::d0_from_phase_space, py::arg("x_bar1"),
         py::arg("p_bar1"), py::arg("eta"), py::arg("params"));

  // --------------------------------------------------------------- polymer
  auto mp = m.def_submodule("polymer");
  py::register_exception<polymer::DeathError>(mp, "DeathError", PyExc_RuntimeError);
  py::class_<polymer::PolymerSpec>(mp, "PolymerSpec")
      .def(py::init([](double nu, double spacing, double g, double a) {
             return polymer::PolymerSpec{nu, spacing, g, a};
           }),
           py::arg("nu"), py::arg("spacing"), py::arg("g"), py::arg("a"))
      .def_readonly("nu", &polymer::PolymerSpec::nu)
      .def_readonly("spacing", &polymer::PolymerSpec::spacing)
      .def_readonly("g", &polymer::PolymerSpec::g)
      .def_readonly("a", &polymer::PolymerSpec::a)
      .def("g_tilde", &polymer::PolymerSpec::g_tilde)
      .def("l", &polymer::PolymerSpec::l)
      .def("chi", &polymer::PolymerSpec::chi)
      .def_static("dimensionless", &polymer::PolymerSpec::dimensionless,
                  py::arg("g_tilde"), py::arg("chi"));
  py::class_<polymer::PolymerProfile>(mp, "PolymerProfile")
      .def_readonly("n", &polymer::PolymerProfile::n)
      .def_readonly("q_n", &polymer::PolymerProfile::q_n)
      .def_readonly("q_prev", &polymer::PolymerProfile::q_prev)
      .def_readonly("gamma_n", &polymer::PolymerProfile::gamma_n);
  py::class_<polymer::PolymerRun>(mp, "PolymerRun")
      .def_readonly("profiles", &polymer::PolymerRun::profiles)
      .def_readonly("death_index", &polymer::PolymerRun::death_index);
  py::class_<polymer::MaxLength>(mp, "MaxLength")
      .def_readonly("n_star", &polymer::MaxLength::n_star)
      .def_readonly("w_star", &polymer::MaxLength::w_star);
  py::class_<polymer::GrowthReport>(mp, "GrowthReport")
      .def_readonly("early_exponent", &polymer::GrowthReport::early_exponent)
      .def_readonly("late_slope", &polymer::GrowthReport::late_slope)
      .def_readonly("early_ok", &polymer::GrowthReport::early_ok)
      .def_readonly("late_ok", &polymer::GrowthReport::late_ok);
  mp.def("q_polymer", &polymer::q_polymer, py::arg("spec"), py::arg("n"));
  mp.def("q_polymer_closed", &polymer::q_polymer_closed, py::arg("spec"), py::arg("n"));
  mp.def("width_profile", &polymer::width_profile, py::arg("spec"), py::arg("n"));
  mp.def("width_saturation", &polymer::width_saturation, py::arg("spec"));
  mp.def("tuned_coupling", &polymer::tuned_coupling, py::arg("chi"));
  mp.def("max_length", &polymer::max_length, py::arg("spec"));
  mp.def("growth_regimes", &polymer::growth_regimes, py::arg("spec"));

  // --------------------------------------------------------------- oracles
  auto mr = m.def_submodule("oracles");
  py::class_<oracles::GridSpec>(mr, "GridSpec")
      .def(py::init([](double half_width, int points, int dt_substeps) {
             return oracles::GridSpec{half_width, points, dt_substeps};
           }),
           py::arg("half_width") = 30.0, py::arg("points") = 4096,
           py::arg("dt_substeps") = 1)
      .def_readonly("half_width", &oracles::GridSpec::half_width)
      .def_readonly("points", &oracles::GridSpec::points);
  py::class_<oracles::SplitStepPropagator>(mr, "SplitStepPropagator")
      .def(py::init<const quantum::InitialPacket&, const quantum::QuantumParams&, cplx,
                    const oracles::GridSpec&>(),
           py::arg("packet"), py::arg("params"), py::arg("d0") = cplx(0.0),
           py::arg("grid") = oracles::GridSpec{})
      .def("step", &oracles::SplitStepPropagator::step)
      .def("width", &oracles::SplitStepPropagator::width)
      .def("width_at_fraction", &oracles::SplitStepPropagator::width_at_fraction,
           py::arg("frac"))
      .def("norm", &oracles::SplitStepPropagator::norm)
      .def("mean_x", &oracles::SplitStepPropagator::mean_x)
      .def("psi_at_origin", &oracles::SplitStepPropagator::psi_at_origin)
      .def("boundary_leak", &oracles::SplitStepPropagator::boundary_leak)
      .def("grid_x", &oracles::SplitStepPropagator::grid_x)
      .def_property_readonly("pulses_done", &oracles::SplitStepPropagator::pulses_done);
  py::class_<oracles::TransferResult>(mr, "TransferResult")
      .def_readonly("widths", &oracles::TransferResult::widths)
      .def_readonly("death_index", &oracles::TransferResult::death_index);
  mr.def("dense_determinant", &oracles::dense_determinant, py::arg("eta"),
         py::arg("beta"), py::arg("n"));
  mr.def("transfer_integral", &oracles::transfer_integral, py::arg("spec"),
         py::arg("n_planes"), py::arg("grid") = oracles::GridSpec{});

  // ------------------------------------------------------------ scan/verify
  auto ms = m.def_submodule("scan");
  py::class_<scan::PolymerProfileResult>(ms, "PolymerProfileResult")
      .def_property_readonly("rows",
                             [](const scan::PolymerProfileResult& r) {
                               py::list out;
                               for (const auto& row : r.rows)
                                 out.append(py::make_tuple(row.n, row.gamma, row.alive));
                               return out;
                             })
      .def_readonly("gamma_inf", &scan::PolymerProfileResult::gamma_inf)
      .def_readonly("n_star", &scan::PolymerProfileResult::n_star);
  ms.def("run_polymer_profile", &scan::run_polymer_profile, py::arg("g_tilde"),
         py::arg("chi"), py::arg("n_iterations"));

  auto mv = m.def_submodule("verify");
  py::class_<verify::CheckResult>(mv, "CheckResult")
      .def_readonly("name", &verify::CheckResult::name)
      .def_readonly("pass_", &verify::CheckResult::pass)
      .def_readonly("residual", &verify::CheckResult::residual)
      .def_readonly("detail", &verify::CheckResult::detail);
  mv.def("run_suite", [](const std::string& suite) {
    return verify::run_suite(verify::suite_from_name(suite));
  }, py::arg("suite") = "all");
}
