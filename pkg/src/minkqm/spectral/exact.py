"""Closed-form reference spectra (units hbar = 2m = 1)."""

from __future__ import annotations

import math
from dataclasses import dataclass


def poschl_teller_exact(R: float, ell: float) -> list[float]:
    """Discrete levels of the one-sheeted hyperboloid of radius ``R``.

    ``E = (n - |ell|)(n - |ell| + 1) / R^2`` for integers
    ``0 <= n < |ell| - 1/2``, returned in ascending order.  Empty when
    ``|ell| <= 1/2``.
    """
    if R <= 0:
        raise ValueError(f"R must be positive, got {R!r}")
    a = abs(ell)
    levels = []
    n = 0
    while n < a - 0.5:
        levels.append((n - a) * (n - a + 1) / R**2)
        n += 1
    return sorted(levels)


def sphere_reference_exact(R: float, ell: int, n_max: int) -> list[float]:
    """``n(n+1)/R^2`` for ``|ell| <= n <= n_max`` (round sphere in R^3)."""
    if R <= 0:
        raise ValueError(f"R must be positive, got {R!r}")
    if n_max < abs(ell):
        raise ValueError(f"n_max={n_max} is below |ell|={abs(ell)}")
    return [n * (n + 1) / R**2 for n in range(abs(int(ell)), n_max + 1)]


@dataclass(frozen=True)
class BoxSpec:
    a: float
    b: float
    c: float
    n1: int = 1
    n2: int = 1
    n3: int = 1

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise ValueError(f"box sides must be positive, got {(self.a, self.b, self.c)}")
        for n in (self.n1, self.n2, self.n3):
            if int(n) != n or n < 1:
                raise ValueError(f"mode numbers must be positive integers, got {n!r}")


def box_spectrum(spec: BoxSpec) -> float:
    """Energy of mode ``(n1, n2, n3)`` of ``-box`` in ``[0,a]x[0,b]x[0,c]``.

    The time-like direction ``x1`` enters with a negative sign, so the
    spectrum is unbounded in both directions.
    """
    pi2 = math.pi**2
    return pi2 * (-(spec.n1 / spec.a) ** 2 + (spec.n2 / spec.b) ** 2 + (spec.n3 / spec.c) ** 2)


def box_zero_modes(a: float, b: float, c: float, n_max: int, tol: float = 1e-12) -> list[tuple]:
    """Mode triples in ``[1, n_max]^3`` whose energy vanishes."""
    out = []
    for n1 in range(1, n_max + 1):
        for n2 in range(1, n_max + 1):
            for n3 in range(1, n_max + 1):
                e = box_spectrum(BoxSpec(a, b, c, n1, n2, n3))
                scale = math.pi**2 * max((n1 / a) ** 2, (n2 / b) ** 2, (n3 / c) ** 2)
                if abs(e) <= tol * scale:
                    out.append((n1, n2, n3))
    return out
