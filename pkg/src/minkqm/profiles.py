"""Built-in profile curves, one or more per family.

Each registry entry maps parameter values to a validated
:class:`~minkqm.revolution.RevolutionFamily`.  ``sphere_euclidean`` is the
exception: it describes the round sphere in ordinary R^3 and is only used
as a spectral reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import UnknownProfile
from .lorentz import CausalClass
from .revolution import FamilyTag, ProfileCurve, RevolutionFamily, build_family

TL = CausalClass.TIMELIKE
SL = CausalClass.SPACELIKE


def _const(c):
    return lambda q: np.zeros_like(np.asarray(q, dtype=float)) + c


def one_sheeted_hyperboloid(R: float = 1.0) -> RevolutionFamily:
    """Pseudosphere: ``alpha = (R sinh(q/R), 0, R cosh(q/R))`` about the time-like axis."""
    return build_family(
        FamilyTag.TIMELIKE_AXIS_TIMELIKE_CURVE,
        ProfileCurve(
            u=lambda q: R * np.sinh(q / R),
            v=lambda q: R * np.cosh(q / R),
            du=lambda q: np.cosh(q / R),
            dv=lambda q: np.sinh(q / R),
            d2u=lambda q: np.sinh(q / R) / R,
            d2v=lambda q: np.cosh(q / R) / R,
            eta=-1,
            plane=TL,
            scale=R,
            kappa=_const(1.0 / R),
            name=f"one_sheeted_hyperboloid(R={R:g})",
        ),
    )


def two_sheeted_hyperboloid(R: float = 1.0) -> RevolutionFamily:
    """Hyperbolic plane: ``alpha = (R cosh(q/R), 0, R sinh(q/R))``, ``q > 0``."""
    return build_family(
        FamilyTag.TIMELIKE_AXIS_SPACELIKE_CURVE,
        ProfileCurve(
            u=lambda q: R * np.cosh(q / R),
            v=lambda q: R * np.sinh(q / R),
            du=lambda q: np.sinh(q / R),
            dv=lambda q: np.cosh(q / R),
            d2u=lambda q: np.cosh(q / R) / R,
            d2v=lambda q: np.sinh(q / R) / R,
            eta=1,
            plane=TL,
            domain=(0.0, math.inf),
            scale=R,
            kappa=_const(-1.0 / R),
            name=f"two_sheeted_hyperboloid(R={R:g})",
        ),
    )


def polar_plane(u0: float = 1.0) -> RevolutionFamily:
    """The space-like plane ``x1 = u0`` in polar form: ``alpha = (u0, 0, q)``, ``q > 0``."""
    return build_family(
        FamilyTag.TIMELIKE_AXIS_SPACELIKE_CURVE,
        ProfileCurve(
            u=_const(u0), v=lambda q: np.asarray(q, dtype=float) * 1.0,
            du=_const(0.0), dv=_const(1.0), d2u=_const(0.0), d2v=_const(0.0),
            eta=1, plane=TL, domain=(0.0, math.inf), scale=1.0,
            name=f"polar_plane(u0={u0:g})",
        ),
    )


def pseudo_cylinder(u0: float = 1.0) -> RevolutionFamily:
    """Boost orbit of the line ``alpha = (0, u0, q)``: a time-like flat-ish cylinder."""
    return build_family(
        FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE,
        ProfileCurve(
            u=_const(u0), v=lambda q: np.asarray(q, dtype=float) * 1.0,
            du=_const(0.0), dv=_const(1.0), d2u=_const(0.0), d2v=_const(0.0),
            eta=1, plane=SL, scale=u0,
            name=f"pseudo_cylinder(u0={u0:g})",
        ),
    )


def boosted_timelike_hyperbola(u0: float = 1.0, R: float = 1.0) -> RevolutionFamily:
    """``alpha = (u0 + R sinh(q/R), 0, R cosh(q/R))`` boosted about ``x3``."""
    return build_family(
        FamilyTag.SPACELIKE_AXIS_TIMELIKE_PLANE_TIMELIKE_CURVE,
        ProfileCurve(
            u=lambda q: u0 + R * np.sinh(q / R),
            v=lambda q: R * np.cosh(q / R),
            du=lambda q: np.cosh(q / R),
            dv=lambda q: np.sinh(q / R),
            d2u=lambda q: np.sinh(q / R) / R,
            d2v=lambda q: np.cosh(q / R) / R,
            eta=-1,
            plane=TL,
            domain=(-R * math.asinh(u0 / R), math.inf),
            scale=R,
            kappa=_const(1.0 / R),
            name=f"boosted_timelike_hyperbola(u0={u0:g},R={R:g})",
        ),
    )


def boosted_spacelike_hyperbola(u0: float = 1.0, R: float = 1.0) -> RevolutionFamily:
    """``alpha = (u0 + R cosh(q/R), 0, R sinh(q/R))`` boosted about ``x3``."""
    return build_family(
        FamilyTag.SPACELIKE_AXIS_TIMELIKE_PLANE_SPACELIKE_CURVE,
        ProfileCurve(
            u=lambda q: u0 + R * np.cosh(q / R),
            v=lambda q: R * np.sinh(q / R),
            du=lambda q: np.sinh(q / R),
            dv=lambda q: np.cosh(q / R),
            d2u=lambda q: np.cosh(q / R) / R,
            d2v=lambda q: np.sinh(q / R) / R,
            eta=1,
            plane=TL,
            scale=R,
            kappa=_const(-1.0 / R),
            name=f"boosted_spacelike_hyperbola(u0={u0:g},R={R:g})",
        ),
    )


def boosted_circle(u0: float = 2.0, R: float = 1.0) -> RevolutionFamily:
    """Circle ``alpha = (0, u0 + R cos(q/R), R sin(q/R))`` boosted about ``x3`` (``u0 > R``)."""
    return build_family(
        FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE,
        ProfileCurve(
            u=lambda q: u0 + R * np.cos(q / R),
            v=lambda q: R * np.sin(q / R),
            du=lambda q: -np.sin(q / R),
            dv=lambda q: np.cos(q / R),
            d2u=lambda q: -np.cos(q / R) / R,
            d2v=lambda q: -np.sin(q / R) / R,
            eta=1,
            plane=SL,
            domain=(-math.pi * R, math.pi * R),
            scale=R,
            kappa=_const(1.0 / R),
            name=f"boosted_circle(u0={u0:g},R={R:g})",
        ),
    )


@dataclass(frozen=True)
class SphereReference:
    """Round sphere of radius ``R`` in Euclidean R^3 (spectral reference only)."""

    R: float = 1.0
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", f"sphere_euclidean(R={self.R:g})")


def sphere_euclidean(R: float = 1.0) -> SphereReference:
    return SphereReference(R)


@dataclass(frozen=True)
class ProfileEntry:
    build: Callable
    params: dict  # name -> (default, lower bound, strict)
    family_tag: FamilyTag | None
    note: str = ""


REGISTRY: dict[str, ProfileEntry] = {
    "one_sheeted_hyperboloid": ProfileEntry(
        one_sheeted_hyperboloid, {"R": (1.0, 0.0, True)}, FamilyTag.TIMELIKE_AXIS_TIMELIKE_CURVE
    ),
    "two_sheeted_hyperboloid": ProfileEntry(
        two_sheeted_hyperboloid, {"R": (1.0, 0.0, True)}, FamilyTag.TIMELIKE_AXIS_SPACELIKE_CURVE
    ),
    "sphere_euclidean": ProfileEntry(
        sphere_euclidean, {"R": (1.0, 0.0, True)}, None, "Euclidean reference, spectrum/potential only"
    ),
    "pseudo_cylinder": ProfileEntry(
        pseudo_cylinder, {"u0": (1.0, 0.0, True)}, FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE
    ),
    "polar_plane": ProfileEntry(
        polar_plane, {"u0": (1.0, None, False)}, FamilyTag.TIMELIKE_AXIS_SPACELIKE_CURVE
    ),
    "boosted_timelike_hyperbola": ProfileEntry(
        boosted_timelike_hyperbola,
        {"u0": (1.0, 0.0, True), "R": (1.0, 0.0, True)},
        FamilyTag.SPACELIKE_AXIS_TIMELIKE_PLANE_TIMELIKE_CURVE,
    ),
    "boosted_spacelike_hyperbola": ProfileEntry(
        boosted_spacelike_hyperbola,
        {"u0": (1.0, 0.0, False), "R": (1.0, 0.0, True)},
        FamilyTag.SPACELIKE_AXIS_TIMELIKE_PLANE_SPACELIKE_CURVE,
    ),
    "boosted_circle": ProfileEntry(
        boosted_circle, {"u0": (2.0, None, False), "R": (1.0, 0.0, True)},
        FamilyTag.SPACELIKE_AXIS_SPACELIKE_PLANE, "requires u0 > R",
    ),
}

#: One sample profile for each of the five axis/plane/curve families.
FAMILY_SAMPLES = (
    "one_sheeted_hyperboloid",
    "two_sheeted_hyperboloid",
    "boosted_timelike_hyperbola",
    "boosted_spacelike_hyperbola",
    "pseudo_cylinder",
)


def param_problems(name: str, params: dict) -> list[str]:
    """Range problems with ``params`` for registry entry ``name`` (empty if fine)."""
    entry = lookup(name)
    out = []
    for key in params:
        if key not in entry.params:
            out.append(f"unknown parameter {key!r} for {name}")
    for key, (default, lower, strict) in entry.params.items():
        val = params.get(key, default)
        if isinstance(val, bool) or not isinstance(val, (int, float)) or not math.isfinite(val):
            out.append(f"{name}.{key} must be a finite number, got {val!r}")
            continue
        if lower is not None and (val <= lower if strict else val < lower):
            op = ">" if strict else ">="
            out.append(f"{name}.{key} must be {op} {lower}, got {val!r}")
    if name == "boosted_circle" and not out:
        u0 = params.get("u0", entry.params["u0"][0])
        R = params.get("R", entry.params["R"][0])
        if u0 <= R:
            out.append(f"boosted_circle needs u0 > R, got u0={u0!r}, R={R!r}")
    return out


def lookup(name: str) -> ProfileEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownProfile(f"unknown profile {name!r}; known: {', '.join(sorted(REGISTRY))}") from None


def make(name: str, **params):
    """Build a registry entry by name."""
    entry = lookup(name)
    problems = param_problems(name, params)
    if problems:
        raise ValueError("; ".join(problems))
    return entry.build(**params)
