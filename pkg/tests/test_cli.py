import json
from pathlib import Path

import numpy as np
import pytest

from minkqm import __version__, profiles
from minkqm.cli import main, run_job
from minkqm.config import config_hash, validate_config
from minkqm.errors import ConfigParse
from minkqm.report import ResultTable, emit_potential_profile, format_value, read_csv
from minkqm.revolution import GridSpec

GOLDEN = Path(__file__).parent / "golden"


def write(tmp_path, cfg, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(cfg))
    return p


def job_cfg(*jobs):
    return {"schema": "1", "jobs": list(jobs)}


SPECTRUM = {
    "id": "pt", "kind": "spectrum",
    "profile": {"name": "one_sheeted_hyperboloid", "params": {"R": 1.0}}, "ell": [2, 3],
}


def test_golden_files(tmp_path):
    assert main(["--config", str(GOLDEN / "box_cube.json"), "--out-dir", str(tmp_path), "--quiet"]) == 0
    for name in ("box_cube", "box_slab"):
        produced = (tmp_path / f"{name.split('_')[1]}.csv").read_bytes()
        assert produced == (GOLDEN / f"{name}.csv").read_bytes().replace(b"minkqm 0.1.0", f"minkqm {__version__}".encode())


def test_header_format():
    t = ResultTable(["a", "b"], [[1, 0.1]], {"config_sha256": "x", "job": "j (box)"})
    lines = t.to_csv().split("\r\n")
    assert lines[:5] == [f"# tool: minkqm {__version__}", "# units: hbar = 2m = 1", "# config_sha256: x", "# job: j (box)", "a,b"]
    assert lines[5] == "1,0.1"
    with pytest.raises(ValueError):
        t.append([1, 2, 3])


def test_format_value_round_trips(rng):
    for x in rng.normal(size=200) * 10.0 ** rng.integers(-300, 300, 200):
        assert float(format_value(x)) == x
    assert format_value(-0.0) == "0.0" and format_value(None) == "" and format_value(True) == "true"


def test_spectrum_job_rows(tmp_path):
    assert run_job(write(tmp_path, job_cfg(SPECTRUM)), tmp_path, quiet=True) == 0
    meta, cols, rows = read_csv(tmp_path / "pt.csv")
    assert meta["units"] == "hbar = 2m = 1"
    got = {}
    for r in rows:
        got.setdefault(float(r[0]), []).append(float(r[cols.index("E")]))
    np.testing.assert_allclose(got[2.0], [0, 2], atol=5e-3)
    np.testing.assert_allclose(got[3.0], [0, 2, 6], atol=5e-3)
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["jobs"][0]["info"]["bound_states"] == {"2.0": 2, "3.0": 3}


def test_classify_job_matches_table(tmp_path):
    assert run_job(write(tmp_path, job_cfg({"id": "cls", "kind": "classify"})), tmp_path, quiet=True) == 0
    _, cols, rows = read_csv(tmp_path / "cls.csv")
    assert len(rows) == 5
    for r in rows:
        assert r[cols.index("observed_surface")] == r[cols.index("expected_surface")]
        assert r[cols.index("consistent")] == "true"


def test_round_trip_is_bit_identical(tmp_path):
    cfg = job_cfg(
        SPECTRUM,
        {"id": "cls", "kind": "classify", "points": 10},
        {"id": "pot", "kind": "potential", "profile": "two_sheeted_hyperboloid", "ell": [0, 1], "grid": {"N": 101}},
        {"id": "cur", "kind": "curvature", "profile": "boosted_circle", "q2": {"start": -1, "stop": 1, "num": 4}},
        {"id": "prop", "kind": "propagate", "profile": "two_sheeted_hyperboloid", "ell": 1,
         "grid": {"L": 30, "N": 299}, "packet": {"center": 12, "width": 1.5, "momentum": 1}, "steps": 20, "record_every": 10},
        {"id": "box", "kind": "box", "sides": [1, 2, 2]},
    )
    first, second = tmp_path / "a", tmp_path / "b"
    assert run_job(write(tmp_path, cfg), first, quiet=True) == 0
    assert run_job(first / "summary.json", second, quiet=True) == 0
    names = sorted(p.name for p in first.iterdir())
    assert names == sorted(p.name for p in second.iterdir())
    for n in names:
        assert (first / n).read_bytes() == (second / n).read_bytes(), n
    assert json.loads((first / "summary.json").read_text())["config_sha256"] == config_hash(cfg)


def test_no_temporary_files_left(tmp_path):
    run_job(write(tmp_path, job_cfg({"id": "b", "kind": "box", "sides": [1, 1, 1]})), tmp_path / "o", quiet=True)
    assert sorted(p.name for p in (tmp_path / "o").iterdir()) == ["b.csv", "summary.json"]


def test_validate_config(tmp_path):
    assert validate_config(write(tmp_path, job_cfg(SPECTRUM))) == []
    bad = dict(SPECTRUM, ell=[1.5])
    diags = validate_config(write(tmp_path, job_cfg(bad)))
    assert len(diags) == 1 and "NonIntegerEll" in diags[0]
    zero = dict(SPECTRUM, profile={"name": "one_sheeted_hyperboloid", "params": {"R": 0}})
    diags = validate_config(write(tmp_path, job_cfg(zero)))
    assert len(diags) == 1 and diags[0].startswith("RangeError") and "R must be > 0" in diags[0]
    # a non-integer ell is fine when the axis is space-like
    ok = {"id": "p", "kind": "potential", "profile": "pseudo_cylinder", "ell": [1.5]}
    assert validate_config(write(tmp_path, job_cfg(ok))) == []


@pytest.mark.parametrize(
    "job, name",
    [
        ({"id": "u", "kind": "spectrum", "profile": "nope", "ell": [1]}, "UnknownProfile"),
        ({"id": "g", "kind": "spectrum", "profile": "two_sheeted_hyperboloid", "ell": [1], "grid": {"N": 10}}, "GridTooCoarse"),
        ({"id": "k", "kind": "frobnicate"}, "ConfigSchema"),
        ({"id": "b", "kind": "box", "sides": [1, -1, 1]}, "RangeError"),
    ],
)
def test_config_errors_exit_2(tmp_path, capsys, job, name):
    assert main(["--config", str(write(tmp_path, job_cfg(job))), "--out-dir", str(tmp_path / "o")]) == 2
    assert name in capsys.readouterr().err
    assert not (tmp_path / "o").exists()


@pytest.mark.parametrize(
    "job, name",
    [
        ({"id": "s", "kind": "spectrum", "profile": "sphere_euclidean", "ell": [0]}, "SingularChannel"),
        ({"id": "c", "kind": "curvature", "profile": "two_sheeted_hyperboloid",
          "q2": {"start": -1, "stop": 1, "num": 3}}, "OutOfDomain"),
    ],
)
def test_domain_errors_exit_1(tmp_path, capsys, job, name):
    cfg = job_cfg(job, {"id": "box", "kind": "box", "sides": [1, 1, 1], "n_max": 1})
    assert main(["--config", str(write(tmp_path, cfg)), "--out-dir", str(tmp_path), "--quiet"]) == 1
    assert f"{name}:" in capsys.readouterr().err
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["jobs"][0]["error"] == name
    assert summary["jobs"][1]["status"] == "ok" and (tmp_path / "box.csv").exists()


def test_config_parse(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{")
    with pytest.raises(ConfigParse):
        validate_config(p)
    assert main(["--config", str(p), "--validate-only"]) == 2
    assert "ConfigParse" in capsys.readouterr().err
    assert main(["--config", str(tmp_path / "missing.json")]) == 2


def test_validate_only_runs_nothing(tmp_path, capsys):
    assert main(["--config", str(write(tmp_path, job_cfg(SPECTRUM))), "--validate-only", "--out-dir", str(tmp_path / "o")]) == 0
    assert not (tmp_path / "o").exists()
    assert "ok" in capsys.readouterr().out


def test_potential_profile_columns():
    two = emit_potential_profile(profiles.two_sheeted_hyperboloid(1.0), 0, GridSpec(L=30, N=101))
    assert two.columns == ["ell", "q2", "V_eff", "V_S", "centripetal", "curve"]
    assert all(v == 0.0 for v in two.column("V_S"))
    one = emit_potential_profile(profiles.one_sheeted_hyperboloid(1.0), 2, GridSpec(L=10, N=101))
    i = int(np.argmin(np.abs(one.column("q2"))))
    assert one.column("q2")[i] == pytest.approx(0.0, abs=1e-12)
    assert one.column("V_eff")[i] == pytest.approx(3.5, abs=1e-12)
    flat = emit_potential_profile(profiles.polar_plane(1.0), 2, GridSpec(L=10, N=101))
    assert all(v == 0.0 for v in flat.column("V_S")) and all(v == 0.0 for v in flat.column("curve"))
    assert flat.column("V_eff") == pytest.approx(flat.column("centripetal"), abs=1e-12)
    assert any(v != 0.0 for v in flat.column("centripetal"))


def test_shipped_sample_config_is_valid():
    assert validate_config(Path(__file__).parents[1] / "configs" / "sample.json") == []
