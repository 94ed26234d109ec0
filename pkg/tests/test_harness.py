"""Campaign runner, report serialization, and the command-line interface."""

import json
import subprocess
import sys

import numpy as np
import pytest

from grasscut import cli, harness
from grasscut.errors import ConfigError
from grasscut.geodesics import CutVerdict

HALF_PI = np.pi / 2


def test_config_validation():
    cfg = harness.config_new("cauchy", n=2, m=3, trials=10, seed=7, tol=1e-8)
    assert (cfg.n, cfg.m, cfg.trials, cfg.seed) == (2, 3, 10, 7)
    assert harness.config_new("cpn", n=5, m=3).n == 1  # projective line count
    atlas = harness.config_new("atlas", n=3, m=4)
    assert (atlas.n, atlas.m) == (2, 2)
    with pytest.raises(ConfigError):
        harness.config_new("nope")
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", trials=0)
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", trials=1.5)
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", seed=-1)
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", seed=2**64)
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", tol=0.0)
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", tol=0.5)
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", n=0)
    with pytest.raises(ConfigError):
        harness.config_new("cauchy", fmt="xml")


def test_classify_band_rule():
    def verdict(o, d, r, angle):
        return CutVerdict(
            by_overlap=o, by_distance=d, by_rank=r, max_principal_angle=angle
        )

    tol = 1e-8
    agree_false = verdict(False, False, False, 0.3)
    assert harness._classify(agree_false, None, tol) == "pass"
    assert harness._classify(agree_false, False, tol) == "pass"
    # agreement with the wrong expectation: only excusable inside the band
    near = HALF_PI - 5 * tol
    assert harness._classify(verdict(False, False, False, near), True, tol) == "skipped"
    assert harness._classify(agree_false, True, tol) == "fail"
    # criteria disagreeing: a numerical tie inside the band, else a failure
    split = verdict(True, False, False, near)
    assert harness._classify(split, None, tol) == "skipped"
    far = verdict(True, False, False, 0.3)
    assert harness._classify(far, None, tol) == "fail"


def test_digest_properties():
    a = np.arange(6, dtype=np.complex128)
    assert harness._digest(a) == harness._digest(a.copy())
    assert harness._digest(a) != harness._digest(a + 1)
    assert len(harness._digest(a)) == 16
    int(harness._digest(a), 16)


@pytest.mark.parametrize("campaign", ["cpn", "polar-vs-cutlocus", "cauchy", "wong", "atlas"])
def test_small_campaigns_pass(campaign):
    cfg = harness.config_new(campaign, n=2, m=2, trials=25, seed=11)
    report = harness.run_campaign(cfg)
    assert report.failed == 0
    assert report.passed >= 1
    assert report.passed + report.failed + report.skipped == len(report.checks)
    assert report.max_residual == max(r.residual for r in report.checks)


def test_record_counts_and_names():
    report = harness.run_campaign(harness.config_new("cpn", m=2, trials=3, seed=0))
    assert len(report.checks) == 6
    assert report.checks[0].check == "cpn/m2/t00000/on-divisor"
    assert report.checks[1].check == "cpn/m2/t00000/generic"

    report = harness.run_campaign(harness.config_new("atlas", trials=2, seed=0))
    # five one-off structural checks plus nine rows per trial
    assert len(report.checks) == 5 + 9 * 2
    names = [r.check for r in report.checks]
    assert "atlas/global/vertex-on-divisor" in names
    assert "atlas/t00000/cone-decomposition" in names


def test_runs_are_reproducible():
    cfg = harness.config_new("wong", n=2, m=3, trials=10, seed=99)
    a = harness.run_campaign(cfg)
    b = harness.run_campaign(cfg)
    assert a.checks == b.checks
    # wall time differs between runs but never reaches the payload
    assert harness.render_report(a, "json") == harness.render_report(b, "json")
    assert harness.render_report(a, "csv") == harness.render_report(b, "csv")


def test_seed_changes_the_stream():
    cfg1 = harness.config_new("cauchy", trials=5, seed=1)
    cfg2 = harness.config_new("cauchy", trials=5, seed=2)
    a = harness.run_campaign(cfg1)
    b = harness.run_campaign(cfg2)
    assert [r.digest for r in a.checks] != [r.digest for r in b.checks]


def test_all_campaign_embeds_standalone_runs():
    cfg = harness.config_new("all", trials=4, seed=13)
    combined = harness.run_campaign(cfg)
    for name, n, m, prefix in (
        ("cpn", 1, 2, "cpn/m2/"),
        ("cauchy", 2, 3, "cauchy/n2m3/"),
        ("wong", 2, 2, "wong/n2m2/"),
        ("atlas", 2, 2, "atlas/"),
    ):
        sub = harness.run_campaign(
            harness.config_new(name, n=n, m=m, trials=4, seed=13)
        )
        embedded = [r for r in combined.checks if r.check.startswith(prefix)]
        assert embedded == list(sub.checks)


def test_json_report_shape():
    report = harness.run_campaign(harness.config_new("cauchy", trials=3, seed=5, tol=1e-7))
    payload = json.loads(harness.render_report(report, "json"))
    assert payload["schema_version"] == harness.SCHEMA_VERSION
    assert payload["tool"] == "grasscut"
    assert payload["config"] == {
        "campaign": "cauchy",
        "n": 2,
        "m": 2,
        "trials": 3,
        "seed": 5,
        "tol": 1e-7,
    }
    agg = payload["aggregate"]
    assert agg["total"] == len(payload["checks"]) == 6
    assert agg["passed"] + agg["failed"] + agg["skipped"] == agg["total"]
    assert set(payload["checks"][0]) == {"check", "digest", "residual", "verdict"}
    # the sizes are meaningless for the combined run and render as null
    combined = harness.run_campaign(harness.config_new("all", trials=1, seed=5))
    payload = json.loads(harness.render_report(combined, "json"))
    assert payload["config"]["n"] is None and payload["config"]["m"] is None


def test_csv_report_shape():
    report = harness.run_campaign(harness.config_new("cpn", m=2, trials=2, seed=5))
    lines = harness.render_report(report, "csv").decode().splitlines()
    assert lines[0] == "check,digest,residual,verdict"
    assert len(lines) == 1 + len(report.checks)
    check, digest, residual, verdict = lines[1].split(",")
    assert check == report.checks[0].check
    assert float(residual) == report.checks[0].residual
    assert verdict in ("pass", "fail", "skipped")
    # aggregates recomputed from the rows match the json report
    payload = json.loads(harness.render_report(report, "json"))
    verdicts = [line.rsplit(",", 1)[1] for line in lines[1:]]
    assert verdicts.count("pass") == payload["aggregate"]["passed"]
    assert verdicts.count("fail") == payload["aggregate"]["failed"]


def test_emit_report_to_file(tmp_path):
    report = harness.run_campaign(harness.config_new("cauchy", trials=2, seed=5))
    out = tmp_path / "report.json"
    blob = harness.emit_report(report, "json", str(out))
    assert out.read_bytes() == blob == harness.render_report(report, "json")


def test_cli_exit_codes(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["cauchy", "--trials", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["aggregate"]["failed"] == 0
    assert cli.main(["cauchy", "--trials", "0", "--out", str(out)]) == 2
    missing = tmp_path / "no" / "such" / "dir" / "r.json"
    assert cli.main(["cauchy", "--trials", "3", "--out", str(missing)]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    with pytest.raises(SystemExit):
        cli.main(["not-a-campaign"])


def test_cli_defaults_and_env_tol(tmp_path, monkeypatch):
    out = tmp_path / "r.json"
    assert cli.main(["cpn", "--trials", "2", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["config"]["n"] == 1 and payload["config"]["m"] == 2
    assert payload["config"]["tol"] == 1e-8
    monkeypatch.setenv("GRASSCUT_DEFAULT_TOL", "1e-7")
    assert cli.main(["cpn", "--trials", "2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["config"]["tol"] == 1e-7
    # an explicit flag still wins over the environment
    assert cli.main(["cpn", "--trials", "2", "--tol", "1e-6", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["config"]["tol"] == 1e-6
    monkeypatch.setenv("GRASSCUT_DEFAULT_TOL", "banana")
    assert cli.main(["cpn", "--trials", "2", "--out", str(out)]) == 2


def test_cli_subprocess_byte_identity(tmp_path):
    cmd = [
        sys.executable,
        "-m",
        "grasscut",
        "cauchy",
        "--trials",
        "5",
        "--seed",
        "3",
    ]
    runs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        proc = subprocess.run(
            cmd + ["--out", str(out)], capture_output=True, text=True
        )
        assert proc.returncode == 0, proc.stderr
        assert "cauchy:" in proc.stderr  # the summary goes to stderr
        assert proc.stdout == ""  # and the report only to the file
        runs.append(out.read_bytes())
    assert runs[0] == runs[1]
