"""Local geometry of parametrised surfaces in R^3_1.

A :class:`SurfaceChart` wraps a position map ``r(q1, q2)`` and, optionally,
its analytic first and second partials.  Missing partials are replaced by
central differences (see :mod:`minkqm.finite_diff`).

Conventions
-----------
* The unit normal is ``N = (r_1 x r_2) / sqrt|det g|`` with the Lorentzian
  cross product and is never re-oriented.  ``eps = <N, N>`` is -1 on
  space-like surfaces and +1 on time-like ones.
* The Weingarten matrix ``a`` is the one for which
  ``dN/dq_i = sum_j a_ij dr/dq_j``, i.e. ``a = -h g^{-1}`` with
  ``h_ij = <N, r_ij>``.  Mean and Gaussian curvature are
  ``H = eps tr(a) / 2`` and ``K = eps det(a)``.  The sign of ``H`` follows
  the orientation of ``N``; everything downstream uses ``H**2``, ``tr`` or
  ``det`` only.
* Energies are in units with hbar^2 / 2m = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from . import finite_diff as fd
from .errors import DegenerateMetric, FocalPoint, LightLikePoint, OutOfDomain
from .lorentz import CAUSAL_TOL, lorentz_cross, lorentz_inner

Vec = np.ndarray
Interval = tuple[float, float]


@dataclass(frozen=True)
class SurfaceChart:
    """A coordinate patch ``r: [q1 range] x [q2 range] -> R^3_1``.

    ``first_partials(q1, q2)`` must return ``(r_1, r_2)`` and
    ``second_partials(q1, q2)`` must return ``(r_11, r_12, r_22)``.
    Both are optional.
    """

    position: Callable[[float, float], Vec]
    domain: tuple[Interval, Interval] = ((-math.inf, math.inf), (-math.inf, math.inf))
    first_partials: Callable | None = None
    second_partials: Callable | None = None
    name: str = "chart"

    def __call__(self, q1, q2) -> Vec:
        return np.asarray(self.position(q1, q2), dtype=float)

    def numeric(self) -> "SurfaceChart":
        """Same surface with every derivative taken by finite differences."""
        return replace(self, first_partials=None, second_partials=None, name=self.name + " [fd]")

    def check_domain(self, q) -> tuple[float, float]:
        q1, q2 = (float(x) for x in q)
        for val, (lo, hi), label in zip((q1, q2), self.domain, ("q1", "q2")):
            if not (lo <= val <= hi) or not math.isfinite(val):
                raise OutOfDomain(f"{label}={val!r} outside [{lo}, {hi}] for {self.name}")
        return q1, q2


@dataclass(frozen=True)
class FundamentalForms:
    g11: float
    g12: float
    g22: float
    h11: float
    h12: float
    h22: float
    detg: float
    eps: int

    @property
    def g(self) -> np.ndarray:
        return np.array([[self.g11, self.g12], [self.g12, self.g22]])

    @property
    def h(self) -> np.ndarray:
        return np.array([[self.h11, self.h12], [self.h12, self.h22]])


@dataclass(frozen=True)
class ShapeData:
    a11: float
    a12: float
    a21: float
    a22: float
    H: float
    K: float
    eps: int
    diagonalizable: bool

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]])

    @property
    def umbilicity(self) -> float:
        """``H**2 - eps K``: a quarter of the discriminant of the Weingarten matrix."""
        return self.H**2 - self.eps * self.K

    def principal_curvatures(self) -> tuple[float, float] | None:
        """Eigenvalues of the Weingarten matrix in ascending order, or None if complex."""
        tr = self.a11 + self.a22
        disc = 0.25 * tr * tr - (self.a11 * self.a22 - self.a12 * self.a21)
        if disc < 0:
            return None
        r = math.sqrt(disc)
        return (0.5 * tr - r, 0.5 * tr + r)


@dataclass(frozen=True)
class TubularMetric:
    G11: float
    G12: float
    G22: float
    G33: float
    f: float

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.G11, self.G12, 0.0], [self.G12, self.G22, 0.0], [0.0, 0.0, self.G33]]
        )


def partials(chart: SurfaceChart, q) -> tuple[Vec, Vec]:
    q1, q2 = chart.check_domain(q)
    if chart.first_partials is not None:
        r1, r2 = chart.first_partials(q1, q2)
        return np.asarray(r1, float), np.asarray(r2, float)
    r1 = fd.derivative(lambda t: chart(t, q2), q1)
    r2 = fd.derivative(lambda t: chart(q1, t), q2)
    return r1, r2


def second_partials(chart: SurfaceChart, q) -> tuple[Vec, Vec, Vec]:
    q1, q2 = chart.check_domain(q)
    if chart.second_partials is not None:
        return tuple(np.asarray(x, float) for x in chart.second_partials(q1, q2))
    r11 = fd.second_derivative(lambda t: chart(t, q2), q1)
    r22 = fd.second_derivative(lambda t: chart(q1, t), q2)
    r12 = fd.mixed_derivative(chart, q1, q2)
    return r11, r12, r22


def _metric(r1, r2):
    g11 = lorentz_inner(r1, r1)
    g12 = lorentz_inner(r1, r2)
    g22 = lorentz_inner(r2, r2)
    return g11, g12, g22


def first_fundamental_form(chart: SurfaceChart, q) -> tuple[float, float, float]:
    """Induced metric coefficients ``(g11, g12, g22)`` at ``q``."""
    g11, g12, g22 = _metric(*partials(chart, q))
    scale = max(abs(g11), abs(g12), abs(g22))
    detg = g11 * g22 - g12 * g12
    if scale == 0.0 or abs(detg) < CAUSAL_TOL * scale * scale:
        raise DegenerateMetric(f"det g = {detg!r} at q={tuple(q)} on {chart.name}")
    return g11, g12, g22


def unit_normal(chart: SurfaceChart, q) -> tuple[np.ndarray, int]:
    """Unit normal ``N`` and its causal sign ``eps = <N, N>``."""
    r1, r2 = partials(chart, q)
    n = np.asarray(lorentz_cross(r1, r2), dtype=float)
    n2 = lorentz_inner(n, n)
    # <r1 x r2, r1 x r2> = -det g, so this also guards the metric
    if abs(n2) < CAUSAL_TOL * float(np.dot(n, n)) or n2 == 0.0:
        raise LightLikePoint(f"normal is light-like at q={tuple(q)} on {chart.name}")
    return n / math.sqrt(abs(n2)), (1 if n2 > 0 else -1)


def fundamental_forms(chart: SurfaceChart, q) -> FundamentalForms:
    g11, g12, g22 = first_fundamental_form(chart, q)
    N, eps = unit_normal(chart, q)
    r11, r12, r22 = second_partials(chart, q)
    return FundamentalForms(
        g11=g11,
        g12=g12,
        g22=g22,
        h11=lorentz_inner(N, r11),
        h12=lorentz_inner(N, r12),
        h22=lorentz_inner(N, r22),
        detg=g11 * g22 - g12 * g12,
        eps=eps,
    )


def weingarten_matrix(forms: FundamentalForms) -> np.ndarray:
    return -forms.h @ np.linalg.inv(forms.g)


def shape_from_forms(forms: FundamentalForms) -> ShapeData:
    a = weingarten_matrix(forms)
    eps = forms.eps
    tr = a[0, 0] + a[1, 1]
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    disc = 0.25 * tr * tr - det
    scale = max(float(np.max(np.abs(a))), 1e-300)
    if disc > CAUSAL_TOL * scale**2:
        diag = True
    elif disc < -CAUSAL_TOL * scale**2:
        diag = False
    else:
        # repeated eigenvalue: diagonalisable only as a multiple of the identity
        diag = bool(max(abs(a[0, 1]), abs(a[1, 0]), abs(a[0, 0] - a[1, 1])) <= 1e-8 * scale)
    return ShapeData(
        a11=float(a[0, 0]),
        a12=float(a[0, 1]),
        a21=float(a[1, 0]),
        a22=float(a[1, 1]),
        H=0.5 * eps * float(tr),
        K=eps * float(det),
        eps=eps,
        diagonalizable=diag,
    )


def shape_data(chart: SurfaceChart, q) -> ShapeData:
    return shape_from_forms(fundamental_forms(chart, q))


def potential_from_shape(shape: ShapeData) -> float:
    # 0.0 + ... keeps umbilical points from printing as -0.0
    return 0.0 - (shape.eps * shape.H**2 - shape.K)


def geometric_potential(chart: SurfaceChart, q) -> float:
    """Geometry-induced potential ``-(eps H^2 - K)`` (hbar^2/2m = 1).

    Non-negative on space-like surfaces; on time-like surfaces it is
    non-positive exactly where the Weingarten map is diagonalisable.
    """
    return potential_from_shape(shape_data(chart, q))


def volume_factor(shape: ShapeData, q3: float) -> float:
    tr = shape.a11 + shape.a22
    det = shape.a11 * shape.a22 - shape.a12 * shape.a21
    return shape.eps * (1.0 + q3 * tr + q3 * q3 * det)


def tubular_metric(chart: SurfaceChart, q, q3: float) -> TubularMetric:
    """Metric of ``R(q1, q2, q3) = r + q3 N`` in the tubular neighbourhood."""
    forms = fundamental_forms(chart, q)
    shape = shape_from_forms(forms)
    f = volume_factor(shape, q3)
    if abs(f) < CAUSAL_TOL:
        raise FocalPoint(f"volume factor f={f!r} at q={tuple(q)}, q3={q3!r}")
    M = np.eye(2) + q3 * shape.matrix
    G = M @ forms.g @ M.T
    return TubularMetric(
        G11=float(G[0, 0]), G12=float(G[0, 1]), G22=float(G[1, 1]), G33=float(forms.eps), f=f
    )
