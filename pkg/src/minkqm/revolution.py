"""Surfaces of revolution in R^3_1 with a space- or time-like axis.

Five families are covered, distinguished by the causal character of the
axis, of the plane holding the profile curve and of the curve itself:

=====================================  ==========  ==========  ==========  =========
tag                                    axis        plane       curve       surface
=====================================  ==========  ==========  ==========  =========
TimelikeAxis-TimelikeCurve             time-like   time-like   time-like   time-like
TimelikeAxis-SpacelikeCurve            time-like   time-like   space-like  space-like
SpacelikeAxis-TimelikePlane-...Curve   space-like  time-like   time-like   time-like
SpacelikeAxis-TimelikePlane-...Curve   space-like  time-like   space-like  space-like
SpacelikeAxis-SpacelikePlane           space-like  space-like  space-like  time-like
=====================================  ==========  ==========  ==========  =========

Profiles in the time-like plane ``x1 x3`` are ``alpha = (u, 0, v)``; the
space-like plane ``x2 x3`` holds ``alpha = (0, u, v)``.  A time-like axis
(``x1``) gives an elliptic rotation, a space-like one a boost.

After separating ``phi = exp(i ell q1) chi(q2)`` and substituting
``chi = y * rho**-1/2`` (``rho = v`` for a time-like axis, ``u`` otherwise)
the radial equation takes the normal form::

    -(1/eta) y'' + (V_eff - E) y = 0

with ``V_eff = ell^2 / g11 + V_S + eta (2 rho rho'' - rho'^2) / (4 rho^2)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    ArcLengthViolation,
    DivisionByZero,
    GridTooCoarse,
    NonIntegerEll,
    WrongCausalCharacter,
)
from .lorentz import CausalClass
from .surface import SurfaceChart

ARC_LENGTH_TOL = 1e-8
MIN_GRID_POINTS = 64

TIMELIKE = CausalClass.TIMELIKE
SPACELIKE = CausalClass.SPACELIKE


class FamilyTag(str, enum.Enum):
    SPACELIKE_AXIS_TIMELIKE_PLANE_TIMELIKE_CURVE = "SpacelikeAxis-TimelikePlane-TimelikeCurve"
    SPACELIKE_AXIS_TIMELIKE_PLANE_SPACELIKE_CURVE = "SpacelikeAxis-TimelikePlane-SpacelikeCurve"
    SPACELIKE_AXIS_SPACELIKE_PLANE = "SpacelikeAxis-SpacelikePlane"
    TIMELIKE_AXIS_TIMELIKE_CURVE = "TimelikeAxis-TimelikeCurve"
    TIMELIKE_AXIS_SPACELIKE_CURVE = "TimelikeAxis-SpacelikeCurve"

    @property
    def axis(self) -> CausalClass:
        return TIMELIKE if self.value.startswith("Timelike") else SPACELIKE

    @property
    def plane(self) -> CausalClass:
        return SPACELIKE if self is FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE else TIMELIKE

    @property
    def curve(self) -> CausalClass:
        return TIMELIKE if self.value.endswith("TimelikeCurve") else SPACELIKE

    @property
    def surface(self) -> CausalClass:
        """Causal character of the generated surface."""
        if self.plane is SPACELIKE:
            return TIMELIKE
        return self.curve

    @property
    def eta(self) -> int:
        return -1 if self.curve is TIMELIKE else 1


@dataclass(frozen=True)
class ProfileCurve:
    """Arc-length parametrised generatrix with analytic derivatives.

    All callables take and return numpy arrays.  ``plane`` is the causal
    character of the plane holding the curve.  ``kappa`` may supply
    ``v'' u' - v' u''`` in a cancellation-free form; it is computed from
    the derivatives otherwise.
    """

    u: Callable
    v: Callable
    du: Callable
    dv: Callable
    d2u: Callable
    d2v: Callable
    eta: int
    plane: CausalClass = TIMELIKE
    domain: tuple[float, float] = (-math.inf, math.inf)
    scale: float = 1.0
    kappa: Callable | None = None
    name: str = "profile"

    def speed2(self, q):
        """``<alpha', alpha'>_1``."""
        du, dv = self.du(q), self.dv(q)
        if self.plane is SPACELIKE:
            return du * du + dv * dv
        return dv * dv - du * du

    def cross_term(self, q):
        if self.kappa is not None:
            return np.broadcast_to(np.asarray(self.kappa(q), dtype=float), np.shape(q)) * 1.0
        return self.d2v(q) * self.du(q) - self.dv(q) * self.d2u(q)

    def sample_points(self, n: int = 257) -> np.ndarray:
        lo, hi = self.domain
        span = 5.0 * self.scale
        lo_s = lo if math.isfinite(lo) else (hi - 2 * span if math.isfinite(hi) else -span)
        hi_s = hi if math.isfinite(hi) else (lo + 2 * span if math.isfinite(lo) else span)
        # stay off the end points, where profiles typically meet the axis
        return np.linspace(lo_s, hi_s, n + 2)[1:-1]


def check_arc_length(profile: ProfileCurve, q=None) -> None:
    q = profile.sample_points() if q is None else np.asarray(q, dtype=float)
    s2 = profile.speed2(q)
    du, dv = profile.du(q), profile.dv(q)
    tol = ARC_LENGTH_TOL * np.maximum(1.0, du * du + dv * dv)
    bad = np.abs(s2 - profile.eta) > tol
    if np.any(bad):
        if np.all(np.abs(np.abs(s2) - 1.0) <= tol):
            raise WrongCausalCharacter(
                f"{profile.name}: <alpha',alpha'> = {float(s2[bad][0])!r} but eta={profile.eta}"
            )
        raise ArcLengthViolation(
            f"{profile.name}: <alpha',alpha'> = {float(s2[bad][0])!r} at q2={float(q[bad][0])!r}, "
            f"expected {profile.eta}"
        )


@dataclass(frozen=True)
class RevolutionFamily:
    tag: FamilyTag
    profile: ProfileCurve

    @property
    def axis(self) -> CausalClass:
        return self.tag.axis

    @property
    def surface_class(self) -> CausalClass:
        return self.tag.surface

    @property
    def eps(self) -> int:
        return 1 if self.surface_class is TIMELIKE else -1

    @property
    def eta(self) -> int:
        return self.profile.eta

    @property
    def periodic(self) -> bool:
        """Whether the angular coordinate is periodic (ell must be an integer)."""
        return self.axis is TIMELIKE

    @property
    def name(self) -> str:
        return self.profile.name

    # rho is the distance-like coefficient: g11 = +-rho^2
    def rho(self, q2, order: int = 0):
        p = self.profile
        funcs = (p.v, p.dv, p.d2v) if self.axis is TIMELIKE else (p.u, p.du, p.d2u)
        return funcs[order](np.asarray(q2, dtype=float))

    def g11(self, q2):
        r = self.rho(q2)
        return -r * r if self.tag is FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE else r * r

    def chart(self, analytic: bool = True) -> SurfaceChart:
        return _revolution_chart(self, analytic)


def _revolution_chart(fam: RevolutionFamily, analytic: bool) -> SurfaceChart:
    p = fam.profile
    tag = fam.tag
    if tag.axis is TIMELIKE:
        # elliptic rotation about x1 applied to (u, 0, v)
        def pos(a, b):
            return np.array([p.u(b), p.v(b) * math.sin(a), p.v(b) * math.cos(a)])

        def d1(a, b):
            s, c = math.sin(a), math.cos(a)
            return (
                np.array([0.0, p.v(b) * c, -p.v(b) * s]),
                np.array([p.du(b), p.dv(b) * s, p.dv(b) * c]),
            )

        def d2(a, b):
            s, c = math.sin(a), math.cos(a)
            return (
                np.array([0.0, -p.v(b) * s, -p.v(b) * c]),
                np.array([0.0, p.dv(b) * c, -p.dv(b) * s]),
                np.array([p.d2u(b), p.d2v(b) * s, p.d2v(b) * c]),
            )

    elif tag is FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE:
        # boost in the x1 x2 plane applied to (0, u, v)
        def pos(a, b):
            return np.array([p.u(b) * math.sinh(a), p.u(b) * math.cosh(a), p.v(b)])

        def d1(a, b):
            sh, ch = math.sinh(a), math.cosh(a)
            return (
                np.array([p.u(b) * ch, p.u(b) * sh, 0.0]),
                np.array([p.du(b) * sh, p.du(b) * ch, p.dv(b)]),
            )

        def d2(a, b):
            sh, ch = math.sinh(a), math.cosh(a)
            return (
                np.array([p.u(b) * sh, p.u(b) * ch, 0.0]),
                np.array([p.du(b) * ch, p.du(b) * sh, 0.0]),
                np.array([p.d2u(b) * sh, p.d2u(b) * ch, p.d2v(b)]),
            )

    else:
        # boost in the x1 x2 plane applied to (u, 0, v)
        def pos(a, b):
            return np.array([p.u(b) * math.cosh(a), p.u(b) * math.sinh(a), p.v(b)])

        def d1(a, b):
            sh, ch = math.sinh(a), math.cosh(a)
            return (
                np.array([p.u(b) * sh, p.u(b) * ch, 0.0]),
                np.array([p.du(b) * ch, p.du(b) * sh, p.dv(b)]),
            )

        def d2(a, b):
            sh, ch = math.sinh(a), math.cosh(a)
            return (
                np.array([p.u(b) * ch, p.u(b) * sh, 0.0]),
                np.array([p.du(b) * sh, p.du(b) * ch, 0.0]),
                np.array([p.d2u(b) * ch, p.d2u(b) * sh, p.d2v(b)]),
            )

    domain = ((-math.inf, math.inf), p.domain)
    if not analytic:
        return SurfaceChart(pos, domain, name=f"{p.name} [fd]")
    return SurfaceChart(pos, domain, d1, d2, name=p.name)


def build_family(tag, profile: ProfileCurve) -> RevolutionFamily:
    """Validate ``profile`` against ``tag`` and return the family.

    Raises:
        WrongCausalCharacter: the profile's plane or ``eta`` disagree with the tag.
        ArcLengthViolation: the profile is not parametrised by arc length.
        DivisionByZero: the profile touches the rotation axis inside its domain.
    """
    tag = FamilyTag(tag)
    if profile.plane is not tag.plane:
        raise WrongCausalCharacter(
            f"{tag.value} needs a {tag.plane.value} plane, profile lies in a {profile.plane.value} one"
        )
    if profile.eta != tag.eta:
        raise WrongCausalCharacter(
            f"{tag.value} needs a {tag.curve.value} curve (eta={tag.eta}), got eta={profile.eta}"
        )
    check_arc_length(profile)
    fam = RevolutionFamily(tag, profile)
    rho = fam.rho(profile.sample_points())
    if np.any(rho <= 0):
        which = "v" if tag.axis is TIMELIKE else "u"
        raise DivisionByZero(f"{profile.name}: {which} must stay positive on its domain")
    return fam


def closed_form_curvatures(fam: RevolutionFamily, q2):
    """Principal curvatures ``(a11, a22)`` from the profile's closed forms."""
    p = fam.profile
    q2 = np.asarray(q2, dtype=float)
    rho = fam.rho(q2)
    if np.any(rho == 0):
        raise DivisionByZero(f"{p.name}: profile meets the axis at q2={q2!r}")
    if fam.axis is TIMELIKE:
        k1 = -p.du(q2) / rho
    else:
        k1 = -p.dv(q2) / rho
    if fam.tag is FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE:
        k2 = -p.cross_term(q2)
    else:
        k2 = fam.eta * p.cross_term(q2)
    if k1.ndim == 0:
        return float(k1), float(k2)
    return k1, k2


def curve_1d_potential(kappa, plane, eps_curve: int = 1):
    """Geometry-induced potential of a planar curve with curvature ``kappa``.

    ``-kappa^2/4`` in a space-like plane; ``-eps kappa^2/4`` in a time-like
    plane, with ``eps = +1`` for time-like and -1 for space-like curves.
    """
    plane = CausalClass(plane) if not isinstance(plane, CausalClass) else plane
    k2 = np.square(kappa)
    if plane is SPACELIKE:
        return -0.25 * k2
    if eps_curve not in (1, -1):
        raise ValueError(f"eps_curve must be +1 or -1, got {eps_curve!r}")
    return 0.0 - eps_curve * 0.25 * k2


def _check_ell(fam: RevolutionFamily, ell: float) -> float:
    ell = float(ell)
    if not math.isfinite(ell):
        raise ValueError(f"ell must be finite, got {ell!r}")
    if fam.periodic and ell != round(ell):
        raise NonIntegerEll(
            f"{fam.name}: time-like axis makes q1 periodic, ell must be an integer (got {ell!r})"
        )
    return ell


@dataclass(frozen=True)
class AngularMode:
    ell: float
    E1: float
    discrete: bool

    @property
    def description(self) -> str:
        dom = "q1 in [0, 2pi), periodic" if self.discrete else "q1 in (-inf, inf), continuum in ell"
        return f"chi1 = exp(i*{self.ell!r}*q1), {dom}"


def angular_mode(fam: RevolutionFamily, ell) -> AngularMode:
    """Solution of ``-chi1'' = E1 chi1`` for the given angular parameter."""
    ell = _check_ell(fam, ell)
    return AngularMode(ell=ell, E1=ell * ell, discrete=fam.periodic)


def substitution_term(fam: RevolutionFamily, q2):
    """Zero-order term produced by ``chi = y rho^(-1/2)``."""
    r, dr, d2r = (fam.rho(q2, k) for k in range(3))
    return fam.eta * (2.0 * r * d2r - dr * dr) / (4.0 * r * r)


def surface_potential(fam: RevolutionFamily, q2):
    """``V_S = -(eps H^2 - K)`` along the profile (Weingarten matrix is diagonal)."""
    k1, k2 = closed_form_curvatures(fam, q2)
    d = np.asarray(k1) - np.asarray(k2)
    return 0.0 - fam.eps * 0.25 * d * d


def centripetal_term(fam: RevolutionFamily, ell, q2):
    """The ell-dependent share of ``V_eff`` in the family's closed form."""
    r = fam.rho(q2)
    ell2 = float(ell) ** 2
    if fam.axis is TIMELIKE:
        return (ell2 - 0.25) / (r * r)
    if fam.tag is FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE:
        return -(ell2 + 0.25) / (r * r)
    return (ell2 + 0.25) / (r * r)


def curve_term(fam: RevolutionFamily, q2):
    """The profile-curve share of ``V_eff``, i.e. the 1D curve potential."""
    _, k2 = closed_form_curvatures(fam, q2)
    eps_curve = 1 if fam.profile.eta < 0 else -1
    return curve_1d_potential(k2, fam.profile.plane, eps_curve)


def radial_coefficients(fam: RevolutionFamily, ell, q2):
    """Coefficients of the radial equation before the substitution.

    Returns ``(eta, p, c)`` such that the equation reads
    ``-eta (chi'' + p chi') + c chi = E chi``.
    """
    ell = _check_ell(fam, ell)
    r, dr = fam.rho(q2), fam.rho(q2, 1)
    c = ell * ell / fam.g11(q2) + surface_potential(fam, q2)
    return fam.eta, dr / r, c


def effective_potential(fam: RevolutionFamily, ell, q2, include_surface: bool = True):
    ell = _check_ell(fam, ell)
    v = ell * ell / fam.g11(q2) + substitution_term(fam, q2)
    if include_surface:
        v = v + surface_potential(fam, q2)
    return v


def potential_terms(fam: RevolutionFamily, ell, q2) -> dict:
    """``V_eff`` together with its inspectable pieces.

    ``V_eff = centripetal + curve``.  ``V_S`` is the surface's
    geometry-induced potential, which is already absorbed in those two.
    """
    q2 = np.asarray(q2, dtype=float)
    return {
        "V_eff": effective_potential(fam, ell, q2),
        "V_S": surface_potential(fam, q2),
        "centripetal": centripetal_term(fam, ell, q2),
        "curve": curve_term(fam, q2),
    }


@dataclass(frozen=True)
class GridSpec:
    """Truncation half-width ``L`` (default ``60 * scale``) and number of interior points."""

    L: float | None = None
    N: int = 12001


@dataclass(frozen=True)
class EffectiveProblem1D:
    """Radial problem ``-eta y'' + V y = E y`` on interior grid points.

    The grid holds ``N`` interior points of ``[a, b]`` with Dirichlet walls
    at both ends.  ``open_ends`` marks walls that truncate an unbounded
    domain, as opposed to natural boundaries such as the rotation axis.
    """

    x: np.ndarray
    V: np.ndarray
    eta: int
    ell: float
    weight: np.ndarray
    interval: tuple[float, float]
    open_ends: tuple[bool, bool] = (False, False)
    boundary: str = "dirichlet"
    label: str = ""

    def __post_init__(self):
        if self.x.ndim != 1 or self.x.shape != self.V.shape:
            raise ValueError("grid and potential must be 1-D arrays of equal length")
        if not np.all(np.isfinite(self.V)):
            raise ValueError(f"{self.label}: potential is not finite on the grid")
        if not np.all(self.weight > 0):
            raise ValueError(f"{self.label}: substitution weight must be positive")
        if self.eta not in (1, -1):
            raise ValueError(f"eta must be +1 or -1, got {self.eta!r}")

    @property
    def h(self) -> float:
        a, b = self.interval
        return (b - a) / (len(self.x) + 1)

    @property
    def n(self) -> int:
        return len(self.x)

    def with_potential(self, V) -> "EffectiveProblem1D":
        return EffectiveProblem1D(
            self.x, np.asarray(V, float), self.eta, self.ell, self.weight,
            self.interval, self.open_ends, self.boundary, self.label,
        )


def uniform_grid(a: float, b: float, n: int) -> np.ndarray:
    if n < MIN_GRID_POINTS:
        raise GridTooCoarse(f"N={n} < {MIN_GRID_POINTS}")
    h = (b - a) / (n + 1)
    return a + h * np.arange(1, n + 1)


def effective_problem(fam: RevolutionFamily, ell, grid: GridSpec = GridSpec()) -> EffectiveProblem1D:
    """Assemble the family's radial equation on a truncated uniform grid."""
    ell = _check_ell(fam, ell)
    lo, hi = fam.profile.domain
    L = 60.0 * fam.profile.scale if grid.L is None else float(grid.L)
    if L <= 0:
        raise ValueError(f"truncation length must be positive, got {L!r}")
    a = lo if math.isfinite(lo) else -L
    b = hi if math.isfinite(hi) else L
    if math.isfinite(lo) and not math.isfinite(hi):
        b = lo + L
    if math.isfinite(hi) and not math.isfinite(lo):
        a = hi - L
    x = uniform_grid(a, b, int(grid.N))
    return EffectiveProblem1D(
        x=x,
        V=effective_potential(fam, ell, x),
        eta=fam.eta,
        ell=ell,
        weight=fam.rho(x) ** -0.5,
        interval=(float(a), float(b)),
        open_ends=(not math.isfinite(lo), not math.isfinite(hi)),
        label=f"{fam.name} ell={ell:g}",
    )
