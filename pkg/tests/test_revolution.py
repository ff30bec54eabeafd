import math

import numpy as np
import pytest

from conftest import random_points
from minkqm import (
    CausalClass,
    FamilyTag,
    GridSpec,
    ProfileCurve,
    angular_mode,
    build_family,
    classify_signature,
    closed_form_curvatures,
    curve_1d_potential,
    effective_problem,
    first_fundamental_form,
    profiles,
    shape_data,
)
from minkqm.errors import ArcLengthViolation, DivisionByZero, GridTooCoarse, NonIntegerEll, WrongCausalCharacter
from minkqm.finite_diff import derivative, second_derivative
from minkqm.revolution import effective_potential, potential_terms, radial_coefficients, surface_potential

TL, SL = CausalClass.TIMELIKE, CausalClass.SPACELIKE


def test_build_family_examples():
    two = profiles.two_sheeted_hyperboloid(1.0)
    assert two.surface_class is SL and two.eps == -1 and two.periodic
    one = profiles.one_sheeted_hyperboloid(1.0)
    assert one.surface_class is TL and one.eps == 1
    cyl = profiles.pseudo_cylinder(1.0)
    assert cyl.surface_class is TL and not cyl.periodic


def test_build_family_rejects_wrong_character():
    prof = profiles.one_sheeted_hyperboloid(1.0).profile
    with pytest.raises(WrongCausalCharacter):
        build_family(FamilyTag.TIMELIKE_AXIS_SPACELIKE_CURVE, prof)


def test_build_family_rejects_non_unit_speed():
    prof = profiles.one_sheeted_hyperboloid(2.0).profile
    from dataclasses import replace

    with pytest.raises(ArcLengthViolation):
        build_family(FamilyTag.TIMELIKE_AXIS_TIMELIKE_CURVE, replace(prof, du=lambda q: 2 * np.cosh(q / 2)))


def test_build_family_rejects_axis_crossing():
    zero, one = (lambda q: np.zeros_like(q)), (lambda q: np.ones_like(q))
    prof = ProfileCurve(u=lambda q: np.asarray(q, float), v=zero, du=one, dv=zero, d2u=zero, d2v=zero,
                        eta=1, plane=SL, domain=(-1.0, 1.0))
    with pytest.raises(DivisionByZero):
        build_family(FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE, prof)


@pytest.mark.parametrize("R", [0.5, 1.0, 2.0])
def test_closed_form_examples(R):
    for fam in (profiles.one_sheeted_hyperboloid(R), profiles.two_sheeted_hyperboloid(R)):
        k1, k2 = closed_form_curvatures(fam, np.array([0.3, 1.1]) * R)
        np.testing.assert_allclose(k1, -1.0 / R, atol=1e-12)
        np.testing.assert_allclose(k2, -1.0 / R, atol=1e-12)
    assert closed_form_curvatures(profiles.pseudo_cylinder(1.0), 0.4) == (-1.0, 0.0)


def test_closed_form_matches_generic(table_family, rng):
    chart = table_family.chart(analytic=False)
    for q1, q2 in random_points(table_family, rng, 20):
        s = shape_data(chart, (q1, q2))
        k1, k2 = closed_form_curvatures(table_family, q2)
        assert abs(s.a11 - k1) < 1e-6 and abs(s.a22 - k2) < 1e-6
        assert abs(s.a12) < 1e-6 and abs(s.a21) < 1e-6


def test_family_causal_classes(table_family, rng):
    chart = table_family.chart()
    for q1, q2 in random_points(table_family, rng, 50):
        g11, g12, g22 = first_fundamental_form(chart, (q1, q2))
        sig = classify_signature(np.array([[g11, g12], [g12, g22]]))
        assert sig.surface_class is table_family.tag.surface


def test_extra_profiles_consistent(rng):
    for fam in (profiles.polar_plane(), profiles.boosted_circle(2.0, 1.0)):
        chart = fam.chart(analytic=False)
        for q1, q2 in random_points(fam, rng, 10):
            s = shape_data(chart, (q1, q2))
            k1, k2 = closed_form_curvatures(fam, q2)
            assert abs(s.a11 - k1) < 1e-6 and abs(s.a22 - k2) < 1e-6


def test_substitution_removes_first_derivative(table_family):
    """chi = y rho^(-1/2) turns the radial equation into -eta y'' + V_eff y."""
    fam = table_family
    ell = 2.0
    y = lambda q: np.exp(-0.3 * (q - 1.0) ** 2) * (1.0 + 0.2 * q)
    chi = lambda q: y(q) / np.sqrt(fam.rho(q))
    for q in random_points(fam, np.random.default_rng(3), 6)[:, 1]:
        eta, p, c = radial_coefficients(fam, ell, q)
        lhs = -eta * (second_derivative(chi, q) + p * derivative(chi, q)) + c * chi(q)
        rhs = (-eta * second_derivative(y, q) + effective_potential(fam, ell, q) * y(q)) / np.sqrt(fam.rho(q))
        assert lhs == pytest.approx(rhs, abs=1e-6)


@pytest.mark.parametrize("name", ["one_sheeted_hyperboloid", "two_sheeted_hyperboloid"])
def test_umbilical_surfaces_have_no_surface_potential(name):
    fam = profiles.make(name)
    q = np.linspace(0.1, 5.0, 200)
    assert np.max(np.abs(surface_potential(fam, q))) < 1e-12
    for ell in (0, 1, 3):
        np.testing.assert_allclose(
            effective_potential(fam, ell, q), effective_potential(fam, ell, q, include_surface=False), atol=1e-12
        )


def test_terms_decompose_v_eff(table_family):
    q = table_family.profile.sample_points(101)
    for ell in (0.0, 1.0, 2.0):
        t = potential_terms(table_family, ell, q)
        np.testing.assert_allclose(t["centripetal"] + t["curve"], t["V_eff"], atol=1e-10)


def test_one_sheeted_bracket_value():
    fam = profiles.one_sheeted_hyperboloid(1.0)
    assert effective_potential(fam, 2, 0.0) == pytest.approx(3.5, abs=1e-12)
    q = np.linspace(-3, 3, 31)
    np.testing.assert_allclose(effective_potential(fam, 2, q), -0.25 + 3.75 / np.cosh(q) ** 2, atol=1e-12)
    # ell = 0: the centripetal part is attractive
    assert np.all(potential_terms(fam, 0, q)["centripetal"] < 0)


def test_two_sheeted_asymptote():
    fam = profiles.two_sheeted_hyperboloid(1.0)
    assert effective_potential(fam, 0, 40.0) == pytest.approx(0.25, abs=1e-12)
    assert effective_potential(fam, 2, 40.0) == pytest.approx(0.25, abs=1e-12)


def test_closed_form_families_match_reference_potentials():
    q = np.linspace(-2.0, 2.0, 41)
    for u0, R in [(1.0, 1.0), (2.0, 0.5)]:
        fam = profiles.boosted_timelike_hyperbola(u0, R)
        q_ok = q[fam.profile.u(q) > 0]
        u = fam.profile.u(q_ok)
        ell = 1.5
        expected = (ell**2 + 0.25) / u**2 - 0.25 / R**2
        np.testing.assert_allclose(effective_potential(fam, ell, q_ok), expected, atol=1e-10)


def test_curve_1d_potential():
    assert curve_1d_potential(1.0, SL) == -0.25
    assert curve_1d_potential(1.0, TL, -1) == 0.25
    assert curve_1d_potential(1.0, TL, 1) == -0.25
    assert curve_1d_potential(0.0, SL) == 0.0 and curve_1d_potential(0.0, TL, -1) == 0.0


def test_angular_mode():
    m = angular_mode(profiles.one_sheeted_hyperboloid(), 3)
    assert m.E1 == 9 and m.discrete
    m = angular_mode(profiles.pseudo_cylinder(), 1.5)
    assert m.E1 == 2.25 and not m.discrete
    assert angular_mode(profiles.two_sheeted_hyperboloid(), 0).E1 == 0
    with pytest.raises(NonIntegerEll):
        angular_mode(profiles.one_sheeted_hyperboloid(), 1.5)


def test_effective_problem_errors_and_grid():
    fam = profiles.one_sheeted_hyperboloid(1.0)
    with pytest.raises(NonIntegerEll):
        effective_problem(fam, 1.5)
    with pytest.raises(GridTooCoarse):
        effective_problem(fam, 2, GridSpec(L=10, N=63))
    prob = effective_problem(fam, 2, GridSpec(L=10, N=999))
    assert prob.n == 999 and prob.h == pytest.approx(20.0 / 1000)
    assert prob.open_ends == (True, True) and prob.eta == -1
    two = effective_problem(profiles.two_sheeted_hyperboloid(1.0), 1, GridSpec(L=30, N=299))
    assert two.interval == (0.0, 30.0) and two.open_ends == (False, True)
