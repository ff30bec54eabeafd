"""Time evolution of the radial problem and probability-current bookkeeping.

``i d(psi)/dt = H psi`` with ``H = -eta d^2/dq^2 + V`` (hbar = 2m = 1) is
advanced with the implicit midpoint rule, which for a linear Hamiltonian
is the Crank-Nicolson scheme: unitary, time reversible, second order.
The step is accurate (not merely stable) when ``||H|| dt < 0.5``; see
:func:`accurate_time_step`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from ..errors import GridMismatch, UnstableStep
from ..revolution import EffectiveProblem1D
from .solver import tridiagonal


@dataclass(frozen=True)
class Wavefunction1D:
    x: np.ndarray
    psi: np.ndarray
    t: float = 0.0
    mass_sign: int = 1

    @property
    def h(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def norm(self) -> float:
        """Total grid probability ``sum |psi|^2 dq``."""
        return float(np.sum(np.abs(self.psi) ** 2) * self.h)

    def normalized(self) -> "Wavefunction1D":
        return Wavefunction1D(self.x, self.psi / np.sqrt(self.norm), self.t, self.mass_sign)


def gaussian_packet(prob: EffectiveProblem1D, center: float, width: float, momentum: float = 0.0) -> Wavefunction1D:
    x = prob.x
    psi = np.exp(-0.5 * ((x - center) / width) ** 2 + 1j * momentum * x)
    return Wavefunction1D(x, psi, 0.0, prob.eta).normalized()


def from_samples(prob: EffectiveProblem1D, psi, t: float = 0.0) -> Wavefunction1D:
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != prob.x.shape:
        raise GridMismatch(f"psi has shape {psi.shape}, grid has {prob.x.shape}")
    return Wavefunction1D(prob.x, psi, t, prob.eta)


def operator_norm_bound(prob: EffectiveProblem1D) -> float:
    """Gershgorin bound on ``||H||``."""
    d, e = tridiagonal(prob)
    off = np.zeros_like(d)
    off[:-1] += np.abs(e)
    off[1:] += np.abs(e)
    return float(np.max(np.abs(d) + off))


def accurate_time_step(prob: EffectiveProblem1D, target: float = 0.5) -> float:
    """Largest ``dt`` with ``||H|| dt < target``."""
    return target / operator_norm_bound(prob)


def propagate(prob: EffectiveProblem1D, psi0: Wavefunction1D, dt: float, steps: int) -> Wavefunction1D:
    """Advance ``psi0`` by ``steps`` Crank-Nicolson steps of size ``dt``."""
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps!r}")
    if psi0.x.shape != prob.x.shape or not np.array_equal(psi0.x, prob.x):
        raise GridMismatch("initial state is not on the problem grid")
    d, e = tridiagonal(prob)
    H = sp.diags([e, d, e], [-1, 0, 1], format="csc", dtype=complex)
    eye = sp.identity(prob.n, format="csc", dtype=complex)
    A = (eye + 0.5j * dt * H).tocsc()
    B = (eye - 0.5j * dt * H).tocsr()
    try:
        lu = splu(A)
    except RuntimeError as exc:
        raise UnstableStep(f"factorisation failed: {exc}") from exc
    psi = np.asarray(psi0.psi, dtype=complex)
    for _ in range(steps):
        psi = lu.solve(B @ psi)
        if not np.all(np.isfinite(psi)):
            raise UnstableStep("non-finite amplitudes after linear solve")
    return Wavefunction1D(prob.x, psi, psi0.t + steps * dt, prob.eta)


def current_density(wf: Wavefunction1D) -> np.ndarray:
    """``j = eta (psi* psi' - psi psi*') / i`` with central differences.

    The walls carry Dirichlet zeros, so ``j`` vanishes there.
    """
    padded = np.concatenate([[0.0], wf.psi, [0.0]])
    dpsi = (padded[2:] - padded[:-2]) / (2.0 * wf.h)
    return 2.0 * wf.mass_sign * np.imag(np.conj(wf.psi) * dpsi)


def continuity_residual(before: Wavefunction1D, after: Wavefunction1D, dt: float) -> float:
    """Max-norm of ``d(rho)/dt + dj/dq`` between two snapshots ``dt`` apart.

    The time derivative is the forward difference of ``rho = |psi|^2``; the
    current is the average of its values at both ends and its divergence
    a central difference.  For a solution of the Schrodinger equation the
    result is ``O(dt^2 + dq^2)``.
    """
    if before.x.shape != after.x.shape or not np.array_equal(before.x, after.x):
        raise GridMismatch("snapshots live on different grids")
    if before.mass_sign != after.mass_sign:
        raise GridMismatch("snapshots carry different mass signs")
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    rate = (np.abs(after.psi) ** 2 - np.abs(before.psi) ** 2) / dt
    j = 0.5 * (current_density(before) + current_density(after))
    jp = np.concatenate([[0.0], j, [0.0]])
    div = (jp[2:] - jp[:-2]) / (2.0 * before.h)
    return float(np.max(np.abs(rate + div)))
