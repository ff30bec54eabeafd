"""Result tables, their CSV form and the per-kind table builders used by the CLI."""

from __future__ import annotations

import csv
import io
import math
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__, profiles
from .config import profile_ref
from .lorentz import classify_signature
from .profiles import SphereReference
from .revolution import (
    GridSpec,
    RevolutionFamily,
    closed_form_curvatures,
    effective_problem,
    potential_terms,
)
from .spectral import (
    BoxSpec,
    box_spectrum,
    gaussian_packet,
    poschl_teller_exact,
    solve_bound_states,
    sphere_problem,
    sphere_reference_exact,
)
from .spectral.dynamics import accurate_time_step, continuity_residual, propagate
from .surface import first_fundamental_form, potential_from_shape, shape_data

UNITS = "hbar = 2m = 1"
TOOL = f"minkqm {__version__}"


def format_value(x) -> str:
    """Shortest round-trip text for numbers, empty for missing values."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if x == 0.0:
            x = 0.0  # drop the sign of -0.0
        return repr(x) if math.isfinite(x) else {math.inf: "inf", -math.inf: "-inf"}.get(x, "nan")
    return str(x)


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.metadata = {"tool": TOOL, "units": UNITS, **self.metadata}
        for row in self.rows:
            self._check(row)

    def _check(self, row):
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} cells, table has {len(self.columns)} columns")

    def append(self, row) -> None:
        row = list(row)
        self._check(row)
        self.rows.append(row)

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        for key, val in self.metadata.items():
            buf.write(f"# {key}: {val}\r\n")
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow([format_value(v) for v in row])
        return buf.getvalue()


def read_csv(path) -> tuple[dict, list[str], list[list[str]]]:
    """Parse a table written by :meth:`ResultTable.to_csv`: ``(metadata, columns, rows)``."""
    meta, body = {}, []
    with open(path, newline="", encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("# "):
                key, _, val = line[2:].rstrip("\r\n").partition(": ")
                meta[key] = val
            else:
                body.append(line)
    rows = list(csv.reader(body))
    return meta, rows[0], rows[1:]


def atomic_write(path, text: str) -> None:
    """Write ``text`` next to ``path`` then rename over it."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------- builders


def build_profile(ref):
    name, params = profile_ref(ref)
    return profiles.make(name, **params)


def _sphere_terms(R: float, ell, q2):
    s2 = np.sin(np.asarray(q2) / R) ** 2
    cent = (float(ell) ** 2 - 0.25) / (R * R * s2)
    curve = np.full_like(cent, -0.25 / R**2)
    return {"V_eff": cent + curve, "V_S": np.zeros_like(cent), "centripetal": cent, "curve": curve}


def emit_potential_profile(fam, ell, grid: GridSpec = GridSpec(N=401)) -> ResultTable:
    """Sample ``V_eff`` and its pieces on the radial grid."""
    if isinstance(fam, SphereReference):
        x = sphere_problem(fam.R, int(ell), grid.N).x
        terms = _sphere_terms(fam.R, ell, x)
    else:
        x = effective_problem(fam, ell, grid).x
        terms = potential_terms(fam, ell, x)
    table = ResultTable(["ell", "q2", "V_eff", "V_S", "centripetal", "curve"])
    for i, q in enumerate(x):
        table.append([float(ell), q] + [terms[k][i] for k in ("V_eff", "V_S", "centripetal", "curve")])
    return table


def _map_ells(fn, ells, workers):
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, ells))


def _grid(job, default_N=12001) -> GridSpec:
    g = job.get("grid", {})
    return GridSpec(L=g.get("L"), N=g.get("N", default_N))


def classify_table(job) -> tuple[ResultTable, dict]:
    refs = job.get("profiles", list(profiles.FAMILY_SAMPLES))
    npts = job.get("points", 50)
    rng = np.random.default_rng(job.get("seed", 0))
    table = ResultTable([
        "profile", "family_tag", "axis", "plane", "curve",
        "expected_surface", "observed_surface", "epsilon", "points", "consistent",
    ])
    ok = True
    for ref in refs:
        fam = build_profile(ref)
        tag = fam.tag
        lo, hi = _finite_span(fam)
        chart = fam.chart()
        observed = set()
        for q1, q2 in zip(rng.uniform(-math.pi, math.pi, npts), rng.uniform(lo, hi, npts)):
            observed.add(classify_signature(_metric_matrix(chart, (q1, q2))).surface_class)
        consistent = observed == {tag.surface}
        ok &= consistent
        obs = ";".join(sorted(c.value if c is not None else "degenerate" for c in observed))
        table.append([
            fam.name, tag.name, tag.axis.value, tag.plane.value, tag.curve.value,
            tag.surface.value, obs, fam.eps, npts, consistent,
        ])
    return table, {"all_consistent": ok}


def _metric_matrix(chart, q):
    g11, g12, g22 = first_fundamental_form(chart, q)
    return np.array([[g11, g12], [g12, g22]])


def _finite_span(fam: RevolutionFamily, width: float = 3.0):
    lo, hi = fam.profile.domain
    s = fam.profile.scale
    if not math.isfinite(lo) and not math.isfinite(hi):
        return -width * s, width * s
    if not math.isfinite(hi):
        return lo + 0.05 * s, lo + width * s
    if not math.isfinite(lo):
        return hi - width * s, hi - 0.05 * s
    pad = 0.05 * (hi - lo)
    return lo + pad, hi - pad


def curvature_table(job) -> tuple[ResultTable, dict]:
    fam = build_profile(job["profile"])
    q1 = float(job.get("q1", 0.3))
    spec = job["q2"]
    q2s = np.linspace(spec["start"], spec["stop"], spec.get("num", 11))
    chart = fam.chart(analytic=False)
    table = ResultTable([
        "q2", "g11", "g22", "epsilon", "k1_closed", "k2_closed",
        "k1_numeric", "k2_numeric", "H", "K", "V_S", "max_abs_diff",
    ])
    worst = 0.0
    for q2 in q2s:
        k1, k2 = closed_form_curvatures(fam, q2)
        sd = shape_data(chart, (q1, float(q2)))
        n1, n2 = sd.matrix[0, 0], sd.matrix[1, 1]
        diff = max(abs(n1 - k1), abs(n2 - k2), abs(sd.matrix[0, 1]), abs(sd.matrix[1, 0]))
        worst = max(worst, diff)
        g11, _, g22 = first_fundamental_form(fam.chart(), (q1, float(q2)))
        table.append([q2, g11, g22, fam.eps, k1, k2, n1, n2, sd.H, sd.K, potential_from_shape(sd), diff])
    return table, {"max_abs_diff": worst}


def potential_table(job, workers=None) -> tuple[ResultTable, dict]:
    fam = build_profile(job["profile"])
    grid = _grid(job, default_N=401)
    parts = _map_ells(lambda ell: emit_potential_profile(fam, ell, grid), job["ell"], workers)
    table = ResultTable(parts[0].columns)
    for p in parts:
        for row in p.rows:
            table.append(row)
    return table, {"rows_per_ell": len(parts[0].rows)}


def spectrum_table(job, workers=None) -> tuple[ResultTable, dict]:
    fam = build_profile(job["profile"])
    grid = _grid(job, default_N=12001 if not isinstance(fam, SphereReference) else 4001)
    max_states = job.get("solver", {}).get("max_states", 10)

    def solve(ell):
        if isinstance(fam, SphereReference):
            spec = solve_bound_states(sphere_problem(fam.R, int(ell), grid.N), max_states)
            exact = sphere_reference_exact(fam.R, int(ell), abs(int(ell)) + spec.found - 1) if spec.found else []
        else:
            spec = solve_bound_states(effective_problem(fam, ell, grid), max_states)
            exact = []
            if profile_ref(job["profile"])[0] == "one_sheeted_hyperboloid":
                exact = poschl_teller_exact(fam.profile.scale, ell)
        return spec, exact

    results = _map_ells(solve, job["ell"], workers)
    table = ResultTable(["ell", "state", "E", "exact", "abs_error", "error_estimate"])
    counts = {}
    for ell, (spec, exact) in zip(job["ell"], results):
        counts[format_value(float(ell))] = spec.found
        for i, E in enumerate(spec.eigenvalues):
            ref = exact[i] if i < len(exact) else None
            table.append([
                float(ell), i, E, ref, None if ref is None else abs(E - ref),
                spec.error_estimates[i] if len(spec.error_estimates) else None,
            ])
    return table, {"bound_states": counts}


def propagate_table(job) -> tuple[ResultTable, dict]:
    fam = build_profile(job["profile"])
    ell = job["ell"][0] if isinstance(job["ell"], list) else job["ell"]
    g = job.get("grid", {})
    grid = GridSpec(L=g.get("L", 30.0 * fam.profile.scale), N=g.get("N", 1199))
    prob = effective_problem(fam, ell, grid)
    pk = job.get("packet", {})
    a, b = prob.interval
    wf = gaussian_packet(prob, pk.get("center", 0.5 * (a + b)), pk.get("width", 0.05 * (b - a)), pk.get("momentum", 0.0))
    dt = job.get("dt") or accurate_time_step(prob)
    steps, every = job.get("steps", 1000), job.get("record_every", 100)
    table = ResultTable(["step", "t", "norm", "norm_drift", "mean_q", "continuity_residual"])
    n0 = wf.norm
    done = 0
    drift = 0.0
    while True:
        nxt = propagate(prob, wf, dt, 1)
        res = continuity_residual(wf, nxt, dt)
        mean_q = float(np.sum(prob.x * np.abs(wf.psi) ** 2) * prob.h / wf.norm)
        drift = max(drift, abs(wf.norm - n0))
        table.append([done, wf.t, wf.norm, wf.norm - n0, mean_q, res])
        if done >= steps:
            break
        k = min(every, steps - done)
        wf = propagate(prob, wf, dt, k)
        done += k
    return table, {"dt": dt, "steps": steps, "max_norm_drift": drift}


def box_table(job) -> tuple[ResultTable, dict]:
    a, b, c = (float(s) for s in job["sides"])
    n_max = job.get("n_max", 3)
    table = ResultTable(["n1", "n2", "n3", "E", "zero_mode"])
    zeros = 0
    scale = math.pi**2
    for n1 in range(1, n_max + 1):
        for n2 in range(1, n_max + 1):
            for n3 in range(1, n_max + 1):
                E = box_spectrum(BoxSpec(a, b, c, n1, n2, n3))
                ref = scale * max((n1 / a) ** 2, (n2 / b) ** 2, (n3 / c) ** 2)
                zero = abs(E) <= 1e-12 * ref
                zeros += zero
                table.append([n1, n2, n3, 0.0 if zero else E, zero])
    return table, {"zero_modes": zeros}


BUILDERS = {
    "classify": classify_table,
    "curvature": curvature_table,
    "potential": potential_table,
    "spectrum": spectrum_table,
    "propagate": propagate_table,
    "box": box_table,
}
