"""Finite-difference eigenproblems for the radial equation.

The operator ``-eta d^2/dq^2 + V`` is discretised with the 3-point
stencil on the interior points of a uniform grid with Dirichlet walls.
For ``eta = -1`` the sign-flipped operator ``-d^2/dq^2 - V`` is solved and
its eigenvalues negated, so that a finite window at the top of the
(unbounded below) spectrum is what gets reported.

Eigenpairs come from LAPACK's bisection (``stebz``) and inverse iteration
(``stein``) through :func:`scipy.linalg.eigh_tridiagonal`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.linalg import LinAlgError, eigh_tridiagonal

from ..errors import NotConverged, SingularChannel
from ..revolution import EffectiveProblem1D, uniform_grid

#: bound states must sit this many truncation-error estimates below the floor
BOUND_MARGIN = 10.0


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    kind: str  # "bound" or "window"
    requested: int
    window: tuple[float, float] | None = None
    floor: float | None = None
    error_estimates: np.ndarray = field(default_factory=lambda: np.empty(0))

    @property
    def found(self) -> int:
        return len(self.eigenvalues)

    def __len__(self):
        return self.found


def tridiagonal(prob: EffectiveProblem1D, flip: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of ``H = -eta D2 + V`` (or of ``eta H`` if ``flip``)."""
    h2 = prob.h**2
    s = prob.eta if flip else 1
    kin = -prob.eta * s  # coefficient of D2
    d = -2.0 * kin / h2 + s * prob.V
    e = np.full(prob.n - 1, kin / h2)
    return d, e


def hamiltonian(prob: EffectiveProblem1D) -> sp.csr_matrix:
    d, e = tridiagonal(prob)
    return sp.diags([e, d, e], [-1, 0, 1], format="csr")


def hermiticity_check(prob: EffectiveProblem1D) -> float:
    """Largest ``|H_ij - H_ji|`` of the assembled Hamiltonian."""
    H = hamiltonian(prob)
    diff = (H - H.T).tocoo()
    return float(np.max(np.abs(diff.data))) if diff.nnz else 0.0


def _eigh(d, e, select, select_range, vectors=True):
    try:
        return eigh_tridiagonal(
            d, e, eigvals_only=not vectors, select=select, select_range=select_range,
            lapack_driver="stebz",
        )
    except LinAlgError as exc:
        raise NotConverged(str(exc)) from exc


def _normalize(vecs: np.ndarray, h: float) -> np.ndarray:
    vecs = vecs / math.sqrt(h)
    # fix the overall sign: largest component positive
    idx = np.argmax(np.abs(vecs), axis=0)
    signs = np.sign(vecs[idx, np.arange(vecs.shape[1])])
    signs[signs == 0] = 1.0
    return vecs * signs


def _coarse(prob: EffectiveProblem1D) -> EffectiveProblem1D | None:
    """Every other interior point: same walls, twice the spacing."""
    if prob.n % 2 == 0 or prob.n < 129:
        return None
    sl = slice(1, None, 2)
    return EffectiveProblem1D(
        prob.x[sl], prob.V[sl], prob.eta, prob.ell, prob.weight[sl],
        prob.interval, prob.open_ends, prob.boundary, prob.label,
    )


def _floor(prob: EffectiveProblem1D) -> float:
    """Asymptotic floor of the sign-flipped potential at truncation walls."""
    ends = [prob.V[0], prob.V[-1]]
    vals = [prob.eta * v for v, is_open in zip(ends, prob.open_ends) if is_open]
    return min(vals) if vals else math.inf


def solve_bound_states(prob: EffectiveProblem1D, max_states: int = 10) -> Spectrum:
    """Discrete levels of the radial problem.

    A level of the flipped operator counts as bound when it lies below
    the potential floor at the open walls by more than ten times its
    truncation-error estimate (difference to the half-resolution grid
    divided by 3).  On a domain without open walls every level is bound.
    Energies are returned with their physical sign, ascending.
    """
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    k = min(max_states, prob.n)
    d, e = tridiagonal(prob, flip=True)
    mu, vecs = _eigh(d, e, "i", (0, k - 1))
    err = np.zeros_like(mu)
    coarse = _coarse(prob)
    if coarse is not None:
        dc, ec = tridiagonal(coarse, flip=True)
        mu_c = _eigh(dc, ec, "i", (0, k - 1), vectors=False)
        err = np.abs(mu - mu_c) / 3.0
    floor = _floor(prob)
    keep = mu < floor - BOUND_MARGIN * err
    mu, vecs, err = mu[keep], vecs[:, keep], err[keep]
    energies = prob.eta * mu
    order = np.argsort(energies)
    return Spectrum(
        eigenvalues=energies[order],
        eigenvectors=_normalize(vecs, prob.h)[:, order] if len(mu) else vecs,
        kind="bound",
        requested=max_states,
        floor=prob.eta * floor if math.isfinite(floor) else None,
        error_estimates=err[order],
    )


def solve_window(prob: EffectiveProblem1D, lo: float, hi: float, max_states: int = 50) -> Spectrum:
    """All discretised levels with ``lo < E <= hi`` (at most ``max_states``, lowest first)."""
    if not lo < hi:
        raise ValueError(f"empty window ({lo}, {hi}]")
    d, e = tridiagonal(prob, flip=True)
    # flipped operator has eigenvalues eta * E
    a, b = sorted((prob.eta * lo, prob.eta * hi))
    mu, vecs = _eigh(d, e, "v", (a, b))
    energies = prob.eta * mu
    order = np.argsort(energies)[:max_states]
    return Spectrum(
        eigenvalues=energies[order],
        eigenvectors=_normalize(vecs, prob.h)[:, order] if len(mu) else vecs,
        kind="window",
        requested=max_states,
        window=(lo, hi),
    )


def lowest_levels(prob: EffectiveProblem1D, k: int) -> np.ndarray:
    """The ``k`` lowest eigenvalues of ``H`` (``eta = +1`` only; the operator is unbounded below otherwise)."""
    if prob.eta != 1:
        raise ValueError("lowest levels only exist for eta = +1")
    d, e = tridiagonal(prob)
    return _eigh(d, e, "i", (0, k - 1), vectors=False)


def sphere_problem(R: float, ell: int, n: int = 4001) -> EffectiveProblem1D:
    """Radial problem on the round sphere of radius ``R`` in Euclidean R^3."""
    if R <= 0:
        raise ValueError(f"R must be positive, got {R!r}")
    if int(ell) != ell:
        raise ValueError(f"ell must be an integer on the sphere, got {ell!r}")
    if ell == 0:
        raise SingularChannel(
            "ell=0: (ell^2 - 1/4) csc^2 is attractive and singular at the poles; "
            "no pole boundary condition is prescribed"
        )
    x = uniform_grid(0.0, math.pi * R, n)
    V = -0.25 / R**2 + (ell**2 - 0.25) / (R**2 * np.sin(x / R) ** 2)
    return EffectiveProblem1D(
        x=x, V=V, eta=1, ell=float(ell), weight=np.sqrt(1.0 / (R * np.sin(x / R))),
        interval=(0.0, math.pi * R), open_ends=(False, False), label=f"sphere R={R:g} ell={ell}",
    )


def sphere_effective_solve(R: float, ell: int, max_states: int = 3, n: int = 4001) -> Spectrum:
    """Numerical spectrum of the sphere's radial equation; should reproduce ``n(n+1)/R^2``."""
    return solve_bound_states(sphere_problem(R, ell, n), max_states)
