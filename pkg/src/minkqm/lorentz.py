"""Vector algebra in Minkowski 3-space with signature (-, +, +).

The first coordinate is the time-like one.  Everything here is a pure
function of its arguments; vectors may be passed as :class:`MinkVector`
or any array-like whose last axis has length 3.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from .errors import NonSymmetricMetric

#: Absolute zero tolerance applied after normalising by the largest magnitude.
CAUSAL_TOL = 1e-10


class MinkVector(NamedTuple):
    x1: float
    x2: float
    x3: float

    def norm2(self) -> float:
        return lorentz_inner(self, self)

    def causal_class(self) -> "CausalClass":
        return classify_vector(self)


class CausalClass(enum.Enum):
    SPACELIKE = "space-like"
    TIMELIKE = "time-like"
    LIGHTLIKE = "light-like"


class SignatureLabel(enum.Enum):
    RIEMANNIAN = "Riemannian"
    LORENTZIAN = "Lorentzian"
    DEGENERATE = "Degenerate"
    # sign patterns that no surface in R^3_1 can carry, e.g. (-,-) or (0,0)
    OTHER = "Other"


class Signature2(NamedTuple):
    """Signs of the two eigenvalues of a 2x2 metric, in ascending order."""

    s1: int
    s2: int

    @property
    def label(self) -> SignatureLabel:
        return {
            (1, 1): SignatureLabel.RIEMANNIAN,
            (-1, 1): SignatureLabel.LORENTZIAN,
            (0, 1): SignatureLabel.DEGENERATE,
        }.get((self.s1, self.s2), SignatureLabel.OTHER)

    @property
    def surface_class(self) -> CausalClass | None:
        """Causal character of a surface whose induced metric has this signature."""
        return {
            SignatureLabel.RIEMANNIAN: CausalClass.SPACELIKE,
            SignatureLabel.LORENTZIAN: CausalClass.TIMELIKE,
            SignatureLabel.DEGENERATE: CausalClass.LIGHTLIKE,
        }.get(self.label)

    def __str__(self):
        sym = {-1: "-", 0: "0", 1: "+"}
        return f"({sym[self.s1]},{sym[self.s2]}) {self.label.value}"


def lorentz_inner(a, b):
    """Return ``-a1*b1 + a2*b2 + a3*b3`` (broadcasts over leading axes)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = -a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1] + a[..., 2] * b[..., 2]
    return float(out) if out.ndim == 0 else out


def lorentz_cross(a, b):
    """Lorentzian vector product.

    Defined through the triple product ``<a x b, c> = det(a, b, c)``.
    Returns a :class:`MinkVector` for single vectors, an array otherwise.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.stack(
        [
            -(a[..., 1] * b[..., 2] - a[..., 2] * b[..., 1]),
            -(a[..., 0] * b[..., 2] - a[..., 2] * b[..., 0]),
            a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0],
        ],
        axis=-1,
    )
    if out.ndim == 1:
        return MinkVector(*(float(c) for c in out))
    return out


def classify_vector(v, tol: float = CAUSAL_TOL) -> CausalClass:
    """Causal character of a single vector.

    The zero vector counts as space-like.  The light-like test is done on
    ``v / max|v_i|`` so that the outcome is scale invariant.
    """
    v = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite vector {v!r}")
    scale = np.max(np.abs(v))
    if scale == 0.0:
        return CausalClass.SPACELIKE
    n2 = lorentz_inner(v / scale, v / scale)
    if abs(n2) < tol:
        return CausalClass.LIGHTLIKE
    return CausalClass.SPACELIKE if n2 > 0 else CausalClass.TIMELIKE


def classify_signature(g, tol: float = CAUSAL_TOL) -> Signature2:
    """Signature of a symmetric 2x2 metric.

    Eigenvalues smaller than ``tol`` times the largest magnitude are
    reported as 0.
    """
    g = np.asarray(g, dtype=float)
    if g.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {g.shape}")
    if not np.all(np.isfinite(g)):
        raise ValueError("metric has non-finite entries")
    scale = np.max(np.abs(g))
    if abs(g[0, 1] - g[1, 0]) > 1e-12 * max(scale, 1.0):
        raise NonSymmetricMetric(f"metric is not symmetric: g12={g[0, 1]!r}, g21={g[1, 0]!r}")
    if scale == 0.0:
        return Signature2(0, 0)
    lam = np.linalg.eigvalsh(g / scale)
    signs = [0 if abs(x) < tol else int(np.sign(x)) for x in lam]
    return Signature2(*sorted(signs))
