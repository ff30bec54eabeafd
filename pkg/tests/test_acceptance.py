"""Acceptance criteria.  Each test prints one PASS/FAIL line, repeated in the terminal summary."""

import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, random_points
from minkqm import GridSpec, classify_signature, closed_form_curvatures, effective_problem, first_fundamental_form, profiles, shape_data
from minkqm.report import emit_potential_profile
from minkqm.spectral import (
    BoxSpec,
    box_spectrum,
    continuity_residual,
    gaussian_packet,
    lowest_levels,
    poschl_teller_exact,
    propagate,
    solve_bound_states,
    sphere_effective_solve,
    sphere_reference_exact,
)

pytestmark = pytest.mark.acceptance


def report(label: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} [{label}] {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_01_poschl_teller_levels():
    fam = profiles.one_sheeted_hyperboloid(1.0)
    worst, slowest, counts_ok = 0.0, 0.0, True
    for ell in (2, 3, 4):
        t0 = time.perf_counter()
        spec = solve_bound_states(effective_problem(fam, ell, GridSpec(N=12001)))
        slowest = max(slowest, time.perf_counter() - t0)
        exact = poschl_teller_exact(1.0, ell)
        counts_ok &= spec.found == len(exact)
        if spec.found == len(exact):
            worst = max(worst, float(np.max(np.abs(spec.eigenvalues - exact))))
    ok = counts_ok and worst < 5e-3 and slowest < 10.0
    report("1 Poschl-Teller", ok, f"counts exact={counts_ok}, max |E-E_exact|={worst:.2e} (tol 5e-3), slowest ell {slowest:.2f}s (<10s)")


def test_02_no_bound_state_at_ell_zero():
    spec = solve_bound_states(effective_problem(profiles.one_sheeted_hyperboloid(1.0), 0, GridSpec(N=12001)))
    report("2 ell=0 exclusion", spec.found == 0, f"bound states found: {spec.found}")


def test_03_two_sheeted_continuum():
    fam = profiles.two_sheeted_hyperboloid(1.0)
    found = {ell: solve_bound_states(effective_problem(fam, ell, GridSpec(L=60, N=5999))).found for ell in (0, 1, 2)}
    lows = []
    for L in (30, 60, 120):
        prob = effective_problem(fam, 1, GridSpec(L=L, N=round(L / 0.01) - 1))
        lows.append(float(lowest_levels(prob, 1)[0]))
    monotone = lows[0] > lows[1] > lows[2]
    above = all(E > 0.25 - 1e-6 for E in lows)
    ok = not any(found.values()) and monotone and above
    report("3 two-sheeted continuum", ok, f"bound counts {found}, lowest windowed E at L=30/60/120: {', '.join(f'{E:.5f}' for E in lows)} -> 1/4")


def test_04_sphere_reference():
    worst = 0.0
    for ell in (1, 2, 3):
        spec = sphere_effective_solve(1.0, ell, max_states=3)
        worst = max(worst, float(np.max(np.abs(spec.eigenvalues - sphere_reference_exact(1.0, ell, ell + 2)))))
    report("4 Euclidean sphere", worst < 1e-3, f"max |E - n(n+1)| = {worst:.2e} (tol 1e-3)")


def test_05_umbilicity(rng):
    worst = 0.0
    for name in ("one_sheeted_hyperboloid", "two_sheeted_hyperboloid"):
        fam = profiles.make(name)
        chart = fam.chart()
        for q in random_points(fam, rng, 100):
            worst = max(worst, abs(shape_data(chart, q).umbilicity))
    vs_zero = all(
        v == 0.0
        for name in ("one_sheeted_hyperboloid", "two_sheeted_hyperboloid")
        for ell in (0, 1, 2)
        for v in emit_potential_profile(profiles.make(name), ell, GridSpec(L=20, N=401)).column("V_S")
    )
    report("5 umbilicity", worst < 1e-10 and vs_zero, f"max |H^2 - eps K| = {worst:.1e} (tol 1e-10), V_S column identically 0: {vs_zero}")


def test_06_constant_curvature(rng):
    worst = {"analytic partials": 0.0, "finite differences": 0.0}
    for name, K in (("one_sheeted_hyperboloid", 1.0), ("two_sheeted_hyperboloid", -1.0)):
        for R in (0.5, 1.0, 2.0):
            fam = profiles.make(name, R=R)
            charts = {"analytic partials": fam.chart(), "finite differences": fam.chart(analytic=False)}
            for q in random_points(fam, rng, 100):
                for key, chart in charts.items():
                    worst[key] = max(worst[key], abs(shape_data(chart, q).K - K / R**2))
    ok = max(worst.values()) < 1e-6
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    report("6 constant curvature", ok, f"max |K -+ 1/R^2| over 600 points: {detail} (tol 1e-6)")


def test_07_family_causal_classes(rng):
    bad = []
    for name in profiles.FAMILY_SAMPLES:
        fam = profiles.make(name)
        chart = fam.chart()
        for q in random_points(fam, rng, 50):
            g11, g12, g22 = first_fundamental_form(chart, q)
            if classify_signature(np.array([[g11, g12], [g12, g22]])).surface_class is not fam.tag.surface:
                bad.append(name)
    report("7 family causal classes", not bad, f"5 families x 50 points, mismatches: {len(bad)}")


def test_08a_cube_diagonal_modes():
    # faithful evaluation of -(n1/a)^2 + (n2/b)^2 + (n3/c)^2 for a = b = c; see README
    energies = [box_spectrum(BoxSpec(1.0, 1.0, 1.0, n, n, n)) for n in range(1, 6)]
    ok = all(E == 0.0 for E in energies)
    report("8a box E(n,n,n)=0", ok, "E(n,n,n)/pi^2 for n=1..5: " + ", ".join(f"{E / math.pi**2:.6g}" for E in energies))


def test_08b_box_ground_state():
    E = box_spectrum(BoxSpec(1.0, 2.0, 2.0))
    report("8b box (1,2,2)", abs(E + math.pi**2 / 2) < 1e-12, f"E(1,1,1) = {E!r}, |E + pi^2/2| = {abs(E + math.pi**2 / 2):.1e}")


def _packet(N):
    prob = effective_problem(profiles.two_sheeted_hyperboloid(1.0), 1, GridSpec(L=30, N=N))
    return prob, gaussian_packet(prob, 12.0, 1.5, 1.0)


def test_09_probability_conservation():
    prob, wf = _packet(1199)
    drift = abs(propagate(prob, wf, 1e-3, 1000).norm - wf.norm)
    res = []
    for N, dt in [(599, 0.004), (1199, 0.002), (2399, 0.001)]:
        prob, wf = _packet(N)
        wf = propagate(prob, wf, dt, round(0.3 / dt))
        res.append(continuity_residual(wf, propagate(prob, wf, dt, 1), dt))
    orders = np.log2(np.array(res[:-1]) / np.array(res[1:]))
    ok = drift < 1e-10 and np.all(orders >= 1.8)
    report("9 probability conservation", ok, f"norm drift over 1000 steps {drift:.1e} (tol 1e-10), continuity orders {orders[0]:.2f}, {orders[1]:.2f} (>= 1.8)")


def test_10_closed_form_vs_generic(rng):
    worst = 0.0
    for name in profiles.FAMILY_SAMPLES:
        fam = profiles.make(name)
        chart = fam.chart(analytic=False)
        for q in random_points(fam, rng, 100):
            s = shape_data(chart, q)
            k1, k2 = closed_form_curvatures(fam, q[1])
            worst = max(worst, abs(s.a11 - k1), abs(s.a22 - k2), abs(s.a12), abs(s.a21))
    report("10 closed form vs generic", worst < 1e-6, f"max deviation {worst:.1e} over 5 x 100 points (tol 1e-6)")
