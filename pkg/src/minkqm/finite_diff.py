"""Central finite differences with one level of Richardson extrapolation.

Used as the fallback when a chart does not provide analytic partials.
The base stencils are fourth order; combining step ``h`` with ``2h``
cancels the ``h**4`` term.
"""

import numpy as np

# fourth-order central weights on offsets -2..2
_D1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_D2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_OFFSETS = np.arange(-2, 3)


def default_step(q: float) -> float:
    return max(1e-3, 1e-3 * abs(q))


def _richardson(fine, coarse):
    return (16.0 * fine - coarse) / 15.0


def derivative(f, x: float, h: float | None = None):
    """First derivative of ``f`` at ``x``; ``f`` may be vector valued."""
    h = default_step(x) if h is None else h

    def stencil(step):
        vals = [np.asarray(f(x + k * step), dtype=float) for k in _OFFSETS if k != 0]
        w = _D1[_OFFSETS != 0]
        return sum(wk * v for wk, v in zip(w, vals)) / step

    return _richardson(stencil(h), stencil(2 * h))


def second_derivative(f, x: float, h: float | None = None):
    h = default_step(x) if h is None else h

    def stencil(step):
        vals = [np.asarray(f(x + k * step), dtype=float) for k in _OFFSETS]
        return sum(wk * v for wk, v in zip(_D2, vals)) / step**2

    return _richardson(stencil(h), stencil(2 * h))


def mixed_derivative(f, x: float, y: float, hx: float | None = None, hy: float | None = None):
    """d^2 f / dx dy using the tensor product of the first-derivative stencil."""
    hx = default_step(x) if hx is None else hx
    hy = default_step(y) if hy is None else hy

    def stencil(sx, sy):
        acc = 0.0
        for i, wi in zip(_OFFSETS, _D1):
            if wi == 0.0:
                continue
            for j, wj in zip(_OFFSETS, _D1):
                if wj == 0.0:
                    continue
                acc = acc + wi * wj * np.asarray(f(x + i * sx, y + j * sy), dtype=float)
        return acc / (sx * sy)

    return _richardson(stencil(hx, hy), stencil(2 * hx, 2 * hy))
