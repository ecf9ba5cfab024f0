"""Smoke test for the python bindings: exercise one operation per submodule."""

import math
import sys

import phpot


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol * (1.0 + abs(b)), (a, b)


def main():
    # classical: xi=2 portrait seed alternates 1/8, 25/8
    params = phpot.classical.ClassicalParams.from_xi(2.0)
    state = phpot.classical.initial_state(1.0, 0.5, params).state
    energies = []
    for _ in range(4):
        energies.append(phpot.classical.energy(state, params))
        state = phpot.classical.step(state, 2.0)
    approx(energies[0], 0.125)
    approx(energies[1], 3.125)
    approx(energies[2], 0.125)

    rep = phpot.classical.classify_periodicity(3.0, 16)
    assert rep.kind == phpot.classical.MotionKind.PMI
    assert rep.n_period == 3

    # quantum 1-cycle
    qp = phpot.quantum.QuantumParams.from_xi(2.0)
    packet = phpot.quantum.InitialPacket.make(1 + 1j, qp.b)
    orbit = phpot.quantum.DeterminantOrbit(1 + 1j, 2.0, 50)
    for n in range(1, 51):
        approx(phpot.quantum.mean_energy(orbit.pair(n), packet, qp), 0.5, 1e-12)

    # moebius fixed point
    sigma = phpot.moebius.fixed_point_sigma(2.0)
    approx(sigma.real, 1.0, 1e-12)
    approx(sigma.imag, -1.0, 1e-12)
    shape = phpot.moebius.moebius_step(phpot.moebius.PacketShape(sigma), 2.0)
    approx(abs(shape.sigma - sigma), 0.0, 1e-12)

    # offcenter Ehrenfest residual
    ds = phpot.offcenter.d_sequence(0.5 + 0.2j, orbit)
    exps = [
        phpot.offcenter.expectations(orbit.pair(n), ds[n], packet, qp)
        for n in range(1, 51)
    ]
    assert phpot.offcenter.ehrenfest_residual(exps, qp) <= 1e-9

    # continuum energy partition
    cp = phpot.continuum.ContinuumParams(kappa=1.0, l0=1.0 / math.sqrt(2.0))
    e = phpot.continuum.energies(cp, 0.3)
    approx(e.total, cp.hbar * cp.omega_s() / 4.0 * (cp.r() + 1.0 / cp.r()), 1e-12)

    # polymer saturation and death
    spec = phpot.polymer.PolymerSpec.dimensionless(1.0, 0.5)
    approx(phpot.polymer.width_profile(spec, 200),
           phpot.polymer.width_saturation(spec), 1e-6)
    try:
        phpot.polymer.q_polymer(phpot.polymer.PolymerSpec.dimensionless(-2.5, 1.0), 5)
        raise AssertionError("expected DeathError")
    except RuntimeError:
        pass

    # oracles: split-step width against the analytic orbit
    grid = phpot.oracles.GridSpec(half_width=40.0)
    prop = phpot.oracles.SplitStepPropagator(packet, qp, 0j, grid)
    prop.step()
    approx(prop.width(), phpot.quantum.width(orbit.pair(1), packet), 1e-4)

    # scan + verify plumbing
    profile = phpot.scan.run_polymer_profile(-0.01, 1.0, 40)
    assert profile.n_star == 30
    checks = phpot.verify.run_suite("classical")
    assert checks and all(c.pass_ for c in checks)

    print("python smoke: OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
