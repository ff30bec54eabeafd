"""minkqm: run classification, curvature, potential, spectrum, propagation and box jobs from a JSON config.

Exit codes: 0 success, 1 a job failed with a domain error, 2 the config is
unreadable or invalid.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import config as cfgmod
from .errors import ConfigParse, MinkqmError
from .report import BUILDERS, TOOL, UNITS, atomic_write

EXIT_OK, EXIT_DOMAIN, EXIT_CONFIG = 0, 1, 2


def _say(msg: str, quiet: bool) -> None:
    if not quiet:
        print(msg)


def _err(msg: str) -> None:
    print(f"minkqm: error: {msg}", file=sys.stderr)


def run_job(config_path, out_dir=".", quiet: bool = False, workers: int | None = None) -> int:
    """Run every job of a config; return the exit status."""
    try:
        cfg = cfgmod.load(config_path)
    except ConfigParse as exc:
        _err(f"ConfigParse: {exc}")
        return EXIT_CONFIG
    diags = cfgmod.validate(cfg)
    if diags:
        for d in diags:
            _err(d)
        return EXIT_CONFIG

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    digest = cfgmod.config_hash(cfg)
    summary = {
        "kind": cfgmod.SUMMARY_KIND,
        "tool": TOOL,
        "units": UNITS,
        "config_sha256": digest,
        "config": cfg,
        "jobs": [],
    }
    status = EXIT_OK
    for job in cfg["jobs"]:
        kind = job["kind"]
        entry = {"id": job["id"], "kind": kind}
        try:
            builder = BUILDERS[kind]
            if kind in ("potential", "spectrum"):
                table, info = builder(job, workers=workers)
            else:
                table, info = builder(job)
        except (MinkqmError, ValueError, ZeroDivisionError) as exc:
            name = type(exc).__name__
            _err(f"job {job['id']!r}: {name}: {exc}")
            entry.update(status="error", error=name, message=str(exc))
            summary["jobs"].append(entry)
            status = EXIT_DOMAIN
            continue
        table.metadata.update(config_sha256=digest, job=f"{job['id']} ({kind})")
        fname = f"{job.get('output', job['id'])}.csv"
        atomic_write(out / fname, table.to_csv())
        entry.update(status="ok", file=fname, rows=len(table.rows), info=info)
        summary["jobs"].append(entry)
        _say(f"{job['id']}: {kind} -> {out / fname} ({len(table.rows)} rows)", quiet)

    atomic_write(out / "summary.json", json.dumps(summary, indent=2, sort_keys=True) + "\n")
    _say(f"summary -> {out / 'summary.json'}", quiet)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minkqm", description=__doc__.splitlines()[0])
    p.add_argument("--config", required=True, help="JSON config, or a summary.json from an earlier run")
    p.add_argument("--out-dir", default=".", help="directory for CSV tables and summary.json")
    p.add_argument("--validate-only", action="store_true", help="check the config and exit")
    p.add_argument("--quiet", action="store_true", help="suppress progress output")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.validate_only:
        try:
            diags = cfgmod.validate_config(args.config)
        except ConfigParse as exc:
            _err(f"ConfigParse: {exc}")
            return EXIT_CONFIG
        for d in diags:
            _err(d)
        if not diags:
            _say(f"{args.config}: ok", args.quiet)
        return EXIT_CONFIG if diags else EXIT_OK
    return run_job(args.config, args.out_dir, args.quiet)


if __name__ == "__main__":
    sys.exit(main())
