"""Acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line (shown in the terminal summary).
Criteria 4 and 11 contain clauses that contradict the exact derivation;
they run unchanged and are marked strict xfail, so they turn the suite red
if they ever start passing.
"""

import math
import random
import subprocess
import sys
import time

import pytest

from ncwell.algebra import run_property_suite, sym
from ncwell.algebra.scalar import I
from ncwell.hamiltonian import (
    MISMATCH,
    UNSPECIFIED,
    derive,
    extract_coefficients,
    full_conformance,
    gravity_collapse_check,
    momentum_shift,
)
from ncwell.spectra import (
    PhysicalParams,
    airy_zero,
    eta_from_field,
    eta_from_omega,
    gravity_well_spectrum,
    omega_charged,
    omega_grav,
    omega_neutral,
    particle,
    perturbation_shifts,
    wkb_level,
)
from ncwell.transform import BoppMap, Direction, Mode, apply_map, expand_C_series, nc_order_range
from ncwell.transform import verify_effective_commutator
from oracles import airy_zeros_by_bisection, neutron_e1_ev

pytestmark = pytest.mark.acceptance

hbar, theta, eta, m, g, k = (sym(s) for s in ("hbar", "theta", "eta", "m", "g", "k"))
xi = theta * eta / (4 * hbar**2)
C = 1 / (1 - xi)


def test_criterion_01_effective_commutator(report_criterion):
    t0 = time.perf_counter()
    c = verify_effective_commutator(BoppMap(Mode.FULL, Direction.NC_TO_AUX))
    elapsed = time.perf_counter() - t0
    checks = {
        "scalar": c.is_scalar(),
        "exact": c.scalar_part() == I * hbar * (1 + theta * eta / (4 * hbar**2)),
        "runtime<1s": elapsed < 1.0,
    }
    assert report_criterion(1, "effective commutator i hbar (1 + theta eta/4 hbar^2)", checks, f"{elapsed:.3f}s")


def test_criterion_02_round_trip(report_criterion):
    t0 = time.perf_counter()
    fwd = BoppMap(Mode.FULL, Direction.NC_TO_AUX)
    back = fwd.inverse()
    ok = {g_: apply_map(back, fwd.substitution.image(g_)) == back.target.gen(g_) for g_ in ("x", "y", "px", "py")}
    elapsed = time.perf_counter() - t0
    checks = {**ok, "C(1-xi)=1": back.C * (1 - back.xi) == 1, "runtime<1s": elapsed < 1.0}
    assert report_criterion(2, "AUX->NC after NC->AUX is the identity", checks, f"{elapsed:.3f}s")


def test_criterion_03_gravity_pipeline(report_criterion):
    t0 = time.perf_counter()
    form = derive("gravity", "full")
    shifted = momentum_shift(form, "eq10")
    collapse = gravity_collapse_check(form)
    elapsed = time.perf_counter() - t0
    a, b = theta / (2 * hbar), eta / (2 * hbar)
    eq9 = {
        "kinetic_x": C**2 / (2 * m), "kinetic_y": C**2 / (2 * m),
        "angular_momentum": C**2 * eta / (2 * m * hbar),
        "confinement": C**2 * eta**2 / (8 * m * hbar**2),
        "gravity_linear": m * g * C, "gravity_momentum": m * g * C * a, "constant": 0,
    }
    eq11 = {
        "kinetic_x": 1 / (2 * m), "kinetic_y": 1 / (2 * m),
        "angular_momentum": C * b / m,
        "confinement": C**2 * b**2 / (2 * m),
        "gravity_linear": m * g * C - m * g * C * xi, "gravity_momentum": 0,
        "constant": -(m**3) * g**2 * theta**2 / (8 * hbar**2),
    }
    checks = {f"eq9 {n}": form[n] == v for n, v in eq9.items()}
    checks.update({f"eq11 {n}": shifted[n] == v for n, v in eq11.items()})
    checks["residuals zero"] = form.residual.is_zero() and shifted.residual.is_zero()
    checks["collapse == m g"] = collapse == m * g
    checks["runtime<5s"] = elapsed < 5.0
    assert report_criterion(3, "gravity pipeline coefficients and collapse to m g", checks, f"{elapsed:.3f}s")


@pytest.mark.xfail(strict=True, reason="E sign: the exact expansion gives + k theta/2 hbar (see decisions ledger)")
def test_criterion_04_full_mode_coefficients(report_criterion):
    form = derive("gravity-oscillator", "full")
    r = extract_coefficients(form)
    gravity = derive("gravity", "full")
    reduced = form.subs({"k": 0})
    checks = {
        "C'": r.C_prime == C**2 * (1 + k * m * theta**2 / (4 * hbar**2)),
        "D": r.D == k * C**2 / 2 + eta**2 * C**2 / (8 * m * hbar**2),
        "E": r.E == C**2 * (eta / (2 * m * hbar) - k * theta / (2 * hbar)),
        "k=0 reduction": reduced.buckets == gravity.buckets,
    }
    detail = f"derived E = {r.E}"
    assert report_criterion(4, "full-mode C', D, E and the k = 0 reduction", checks, detail)


def test_criterion_05_series(report_criterion):
    s2 = expand_C_series(2)
    s4 = expand_C_series(4)
    low, high = nc_order_range(s4 - s2)
    checks = {
        "order 2": s2 == 1 + m * k * theta**2 / (8 * hbar**2) - eta * theta / (4 * hbar**2),
        "order4-order2 only NC order >= 3": (s4 - s2) != 0 and low >= 3,
    }
    assert report_criterion(5, "C expansion to second NC order", checks, f"orders {low}..{high}")


def test_criterion_06_airy_spectrum(report_criterion):
    oracle = airy_zeros_by_bisection(5)
    t0 = time.perf_counter()
    zeros = [airy_zero(n) for n in range(1, 6)]
    wkb_errs = [abs(wkb_level(n) - airy_zero(n)) / airy_zero(n) for n in range(1, 201)]
    e1 = gravity_well_spectrum(particle("neutron"), 1).levels[0].energy_eV * 1e12
    elapsed = time.perf_counter() - t0
    checks = {f"alpha_{n}": abs(z - o) < 1e-8 for n, (z, o) in enumerate(zip(zeros, oracle), 1)}
    checks["wkb < 1% (n <= 200)"] = max(wkb_errs) < 0.01
    checks["wkb error decreasing"] = all(b < a for a, b in zip(wkb_errs, wkb_errs[1:]))
    checks["E_1 = 1.407 +- 0.001 peV"] = abs(e1 - 1.407) <= 1e-3
    checks["E_1 vs oracle"] = math.isclose(e1, neutron_e1_ev() * 1e12, rel_tol=1e-9)
    checks["runtime<5s"] = elapsed < 5.0
    detail = f"E_1 = {e1:.6f} peV, wkb n=1 error {wkb_errs[0] * 100:.3f}%, {elapsed:.3f}s"
    assert report_criterion(6, "Airy zeros, WKB and the neutron ground level", checks, detail)


def test_criterion_07_hbar_eff_shift(report_criterion):
    xi_val = 1e-6
    p = particle("neutron")
    base = gravity_well_spectrum(p, 5).energies()
    shifted = gravity_well_spectrum(p, 5, hbar=p.hbar * (1 + xi_val)).energies()
    target = (1 + xi_val) ** (2 / 3)
    worst = max(abs(b / a / target - 1) for a, b in zip(base, shifted))
    checks = {"ratio (1+xi)^(2/3) to 1e-10": worst < 1e-10,
              "linearization 1 + 2xi/3": abs(target - (1 + 2 * xi_val / 3)) < xi_val**2}
    assert report_criterion(7, "hbar_eff spectral shift", checks, f"worst rel {worst:.2e}")


def test_criterion_08_frequency_algebra(report_criterion):
    rng = random.Random(8)

    def mag():
        return 2 ** rng.uniform(-1, 1)

    def signed():
        return rng.choice([-1, 1]) * mag()

    worst = 0.0
    points = 0
    while points < 100:
        p = PhysicalParams(m=mag(), hbar=mag(), theta=signed(), omega=mag(), q=signed(), B=signed())
        eta_val = eta_from_field(p)
        if eta_val / p.theta < 0:
            continue
        q = p.with_(eta=eta_val)
        w_back = omega_charged(q)
        w0 = omega_charged(q.with_(B=0.0))
        wg = omega_grav(q)
        worst = max(
            worst,
            abs(w_back / p.omega - 1),
            abs(w0 / omega_neutral(q) - 1),
            abs(eta_from_omega(wg, q) / abs(eta_val) - 1),
        )
        points += 1
    checks = {"100-point sweep to 1e-12": worst < 1e-12}
    assert report_criterion(8, "frequency round trips and B = 0 equivalence", checks, f"worst rel {worst:.2e}")


def test_criterion_09_perturbation_vs_oracle(report_criterion):
    t0 = time.perf_counter()
    states = [(1, 1), (1, -1), (2, 2), (2, -2)]
    base = dict(m=1.0, hbar=1.0, k=1.0, g=0.0, theta=0.0)
    worst_level, worst_shift = 0.0, 0.0
    couplings = []
    for s in perturbation_shifts(PhysicalParams(eta=2e-3, **base), states, basis_size=16).states:
        worst_level = max(worst_level, abs(s.oracle_delta_lz) / abs(s.oracle_energy))
        worst_shift = max(worst_shift, abs(s.oracle_delta_lz) / abs(s.lz_shift))
    etas = [2e-3, 1e-3, 5e-4, 2.5e-4]
    residuals = []
    for e in etas:
        rep = perturbation_shifts(PhysicalParams(eta=e, **base), [(1, 1)], basis_size=16)
        couplings.append(rep.coupling_ratio)
        residuals.append(abs(rep.states[0].oracle_delta_lz))
    slopes = [math.log(residuals[i] / residuals[i + 1]) / math.log(etas[i] / etas[i + 1]) for i in range(3)]
    elapsed = time.perf_counter() - t0
    checks = {
        "coupling <= 1e-3": max(couplings) <= 1e-3,
        "first-order levels match oracle to 1e-4": worst_level < 1e-4,
        "slope 2 +- 0.2": all(abs(s - 2) <= 0.2 for s in slopes),
        "runtime<60s": elapsed < 60,
    }
    detail = (f"worst rel to level {worst_level:.2e}, rel to shift {worst_shift:.2e}, "
              f"slopes {', '.join(f'{s:.3f}' for s in slopes)}, {elapsed:.2f}s")
    assert report_criterion(9, "first-order L_z shifts vs 16x16 diagonalization", checks, detail)


def test_criterion_10_property_suite(report_criterion):
    t0 = time.perf_counter()
    summary = run_property_suite(200, seed=10)
    elapsed = time.perf_counter() - t0
    props = summary["properties"]
    checks = {
        name: props[name]["passed"] and props[name]["instances"] >= 200
        for name in ("jacobi", "associativity", "adjoint_involution", "normal_order_idempotence")
    }
    checks["runtime<30s"] = elapsed < 30
    assert report_criterion(10, "Jacobi, associativity, adjoint involution, normal-order idempotence", checks,
                            f"{elapsed:.2f}s")


def _cli(*args) -> bytes:
    cmd = [sys.executable, "-m", "ncwell", *args]
    return subprocess.run(cmd, capture_output=True, check=True).stdout


@pytest.mark.xfail(strict=True, reason="printed typos outside Eq27/Eq18 are reported as MISMATCH (see decisions ledger)")
def test_criterion_11_cli_determinism(report_criterion):
    verify = [_cli("verify", "--format", "json") for _ in range(2)]
    spectrum = [_cli("spectrum", "--particle", "neutron", "--levels", "5", "--format", "csv") for _ in range(2)]
    reports = full_conformance()
    allowed = set()
    for rep in reports:
        for row in rep.rows:
            if rep.target.value == "Eq27" or (rep.target.value == "Eq18" and row.verdict == UNSPECIFIED):
                allowed.add((rep.target.value, row.term))
    flagged = {(rep.target.value, row.term) for rep in reports for row in rep.rows
               if row.verdict in (MISMATCH, UNSPECIFIED)}
    extra = sorted(flagged - allowed)
    checks = {
        "verify byte-identical": verify[0] == verify[1],
        "spectrum byte-identical": spectrum[0] == spectrum[1],
        "MISMATCH only in Eq27 rows and Eq18 (coeffi)": not extra,
    }
    detail = "extra: " + "; ".join(f"{t}:{term}" for t, term in extra) if extra else ""
    assert report_criterion(11, "CLI determinism and documented mismatch set", checks, detail)
