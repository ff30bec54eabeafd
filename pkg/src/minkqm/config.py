"""Job configuration: loading, hashing and validation.

A config is one JSON document::

    {
      "schema": "1",
      "jobs": [
        {"id": "pt", "kind": "spectrum",
         "profile": {"name": "one_sheeted_hyperboloid", "params": {"R": 1.0}},
         "ell": [2, 3], "grid": {"L": 60, "N": 12001},
         "solver": {"max_states": 10}}
      ]
    }

See README.md for every job kind and its keys.  A run summary written by
the CLI embeds the config under ``"config"`` and can be fed back in.
"""

from __future__ import annotations

import hashlib
import json
import math
import re
from pathlib import Path

from . import profiles
from .errors import ConfigParse, UnknownProfile

SCHEMA_VERSION = "1"
SUMMARY_KIND = "minkqm-summary"
JOB_KINDS = ("classify", "curvature", "potential", "spectrum", "propagate", "box")

_ID_RE = re.compile(r"^[A-Za-z0-9_.-]+$")
_TOP_KEYS = {"schema", "jobs", "description"}
_JOB_KEYS = {
    "classify": {"profiles", "points", "seed"},
    "curvature": {"profile", "q1", "q2"},
    "potential": {"profile", "ell", "grid"},
    "spectrum": {"profile", "ell", "grid", "solver"},
    "propagate": {"profile", "ell", "grid", "packet", "dt", "steps", "record_every"},
    "box": {"sides", "n_max"},
}
_COMMON_KEYS = {"id", "kind", "output"}

MAX_GRID_POINTS = 2_000_001


def load(path) -> dict:
    """Read a config (or a run summary) and return the config document."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigParse(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParse(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigParse(f"{path}: top level must be a JSON object")
    if doc.get("kind") == SUMMARY_KIND:
        doc = doc.get("config")
        if not isinstance(doc, dict):
            raise ConfigParse(f"{path}: summary has no embedded config")
    return doc


def config_hash(cfg: dict) -> str:
    canon = json.dumps(cfg, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(canon.encode("ascii")).hexdigest()


def profile_ref(ref) -> tuple[str, dict]:
    """Normalise ``"name"`` or ``{"name": ..., "params": {...}}``."""
    if isinstance(ref, str):
        return ref, {}
    if isinstance(ref, dict) and isinstance(ref.get("name"), str):
        params = ref.get("params", {})
        if not isinstance(params, dict):
            raise TypeError("profile params must be an object")
        return ref["name"], params
    raise TypeError(f"bad profile reference {ref!r}")


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check_profile(ref, where: str, diags: list, allow_sphere: bool = True):
    try:
        name, params = profile_ref(ref)
    except TypeError as exc:
        diags.append(f"ConfigSchema: {where}: {exc}")
        return None
    try:
        entry = profiles.lookup(name)
    except UnknownProfile as exc:
        diags.append(f"UnknownProfile: {where}: {exc}")
        return None
    if entry.family_tag is None and not allow_sphere:
        diags.append(f"ConfigSchema: {where}: {name} is a Euclidean reference, not a surface in R^3_1")
        return None
    for p in profiles.param_problems(name, params):
        diags.append(f"RangeError: {where}: {p}")
    return entry


def _check_ells(job: dict, where: str, entry, diags: list, single: bool = False):
    ells = job.get("ell")
    if single and _is_number(ells):
        ells = [ells]
    if not isinstance(ells, list) or not ells:
        diags.append(f"ConfigSchema: {where}: 'ell' must be a non-empty list of numbers")
        return
    if single and len(ells) != 1:
        diags.append(f"ConfigSchema: {where}: 'ell' must hold exactly one value")
    for ell in ells:
        if not _is_number(ell):
            diags.append(f"ConfigSchema: {where}: ell={ell!r} is not a finite number")
            continue
        periodic = entry is not None and (
            entry.family_tag is None or entry.family_tag.axis.value == "time-like"
        )
        if periodic and ell != round(ell):
            diags.append(
                f"NonIntegerEll: {where}: ell={ell!r} but the rotation axis is time-like (ell must be an integer)"
            )


def _check_grid(job: dict, where: str, diags: list):
    grid = job.get("grid", {})
    if not isinstance(grid, dict):
        diags.append(f"ConfigSchema: {where}: 'grid' must be an object")
        return
    for key in grid:
        if key not in ("L", "N"):
            diags.append(f"ConfigSchema: {where}: unknown grid key {key!r}")
    if "L" in grid and (not _is_number(grid["L"]) or grid["L"] <= 0):
        diags.append(f"RangeError: {where}: grid.L must be > 0, got {grid['L']!r}")
    if "N" in grid:
        N = grid["N"]
        if not _is_int(N):
            diags.append(f"ConfigSchema: {where}: grid.N must be an integer")
        elif N < 64:
            diags.append(f"GridTooCoarse: {where}: grid.N={N} < 64")
        elif N > MAX_GRID_POINTS:
            diags.append(f"RangeError: {where}: grid.N={N} exceeds {MAX_GRID_POINTS}")


def _check_positive(job, key, where, diags, integer=False, default=None, upper=None):
    val = job.get(key, default)
    ok = _is_int(val) if integer else _is_number(val)
    if not ok:
        diags.append(f"ConfigSchema: {where}: {key!r} must be {'an integer' if integer else 'a number'}")
        return
    if val <= 0:
        diags.append(f"RangeError: {where}: {key} must be > 0, got {val!r}")
    elif upper is not None and val > upper:
        diags.append(f"RangeError: {where}: {key} must be <= {upper}, got {val!r}")


def validate(cfg: dict) -> list[str]:
    """Schema and range diagnostics for a loaded config; empty means valid."""
    diags: list[str] = []
    if cfg.get("schema") != SCHEMA_VERSION:
        diags.append(f"ConfigSchema: 'schema' must be {SCHEMA_VERSION!r}, got {cfg.get('schema')!r}")
    for key in cfg:
        if key not in _TOP_KEYS:
            diags.append(f"ConfigSchema: unknown top-level key {key!r}")
    jobs = cfg.get("jobs")
    if not isinstance(jobs, list) or not jobs:
        diags.append("ConfigSchema: 'jobs' must be a non-empty list")
        return diags
    seen = set()
    for i, job in enumerate(jobs):
        where = f"jobs[{i}]"
        if not isinstance(job, dict):
            diags.append(f"ConfigSchema: {where}: job must be an object")
            continue
        jid = job.get("id")
        if not isinstance(jid, str) or not _ID_RE.match(jid):
            diags.append(f"ConfigSchema: {where}: 'id' must match {_ID_RE.pattern}")
        elif jid in seen:
            diags.append(f"ConfigSchema: {where}: duplicate id {jid!r}")
        else:
            seen.add(jid)
            where = f"job {jid!r}"
        kind = job.get("kind")
        if kind not in JOB_KINDS:
            diags.append(f"ConfigSchema: {where}: unknown kind {kind!r}; expected one of {', '.join(JOB_KINDS)}")
            continue
        if "output" in job and (not isinstance(job["output"], str) or not _ID_RE.match(job["output"])):
            diags.append(f"ConfigSchema: {where}: 'output' must be a plain file stem")
        for key in job:
            if key not in _JOB_KEYS[kind] | _COMMON_KEYS:
                diags.append(f"ConfigSchema: {where}: unknown key {key!r} for kind {kind}")
        _validate_kind(kind, job, where, diags)
    return diags


def _validate_kind(kind: str, job: dict, where: str, diags: list):
    if kind == "classify":
        refs = job.get("profiles", list(profiles.FAMILY_SAMPLES))
        if not isinstance(refs, list) or not refs:
            diags.append(f"ConfigSchema: {where}: 'profiles' must be a non-empty list")
        else:
            for ref in refs:
                _check_profile(ref, where, diags, allow_sphere=False)
        _check_positive(job, "points", where, diags, integer=True, default=50, upper=100_000)
        if not _is_int(job.get("seed", 0)):
            diags.append(f"ConfigSchema: {where}: 'seed' must be an integer")
    elif kind == "curvature":
        _check_profile(job.get("profile"), where, diags, allow_sphere=False)
        if not _is_number(job.get("q1", 0.3)):
            diags.append(f"ConfigSchema: {where}: 'q1' must be a number")
        q2 = job.get("q2")
        if not isinstance(q2, dict) or not all(_is_number(q2.get(k)) for k in ("start", "stop")):
            diags.append(f"ConfigSchema: {where}: 'q2' must be {{start, stop, num}}")
        else:
            _check_positive(q2, "num", where + ".q2", diags, integer=True, default=11, upper=100_000)
    elif kind in ("potential", "spectrum", "propagate"):
        entry = _check_profile(job.get("profile"), where, diags, allow_sphere=kind != "propagate")
        _check_ells(job, where, entry, diags, single=kind == "propagate")
        _check_grid(job, where, diags)
        if kind == "spectrum":
            solver = job.get("solver", {})
            if not isinstance(solver, dict):
                diags.append(f"ConfigSchema: {where}: 'solver' must be an object")
            else:
                for key in solver:
                    if key != "max_states":
                        diags.append(f"ConfigSchema: {where}: unknown solver key {key!r}")
                _check_positive(solver, "max_states", where, diags, integer=True, default=10, upper=1000)
        if kind == "propagate":
            packet = job.get("packet", {})
            if not isinstance(packet, dict) or not all(
                _is_number(packet.get(k, 0.0)) for k in ("center", "width", "momentum")
            ):
                diags.append(f"ConfigSchema: {where}: 'packet' must hold numeric center/width/momentum")
            elif "width" in packet and packet["width"] <= 0:
                diags.append(f"RangeError: {where}: packet.width must be > 0")
            if "dt" in job:
                _check_positive(job, "dt", where, diags)
            _check_positive(job, "steps", where, diags, integer=True, default=1000, upper=10_000_000)
            _check_positive(job, "record_every", where, diags, integer=True, default=100)
    elif kind == "box":
        sides = job.get("sides")
        if not isinstance(sides, list) or len(sides) != 3 or not all(_is_number(s) for s in sides):
            diags.append(f"ConfigSchema: {where}: 'sides' must be three numbers")
        elif min(sides) <= 0:
            diags.append(f"RangeError: {where}: box sides must be > 0, got {sides!r}")
        _check_positive(job, "n_max", where, diags, integer=True, default=3, upper=100)


def validate_config(path) -> list[str]:
    """Diagnostics for the config file at ``path`` without running anything."""
    return validate(load(path))
