from __future__ import annotations

import json

import pytest

from gincalc import cli
from gincalc import report as rp


def test_default_run_has_no_mismatch(default_report):
    s = default_report.summary
    assert s["mismatch"] == 0
    assert s["total"] == len(default_report.claims) == len(rp.CLAIMS)
    documented = {c.id for c in default_report.claims if c.status == "documented-discrepancy"}
    assert documented == set(rp.DISCREPANCIES)
    assert rp.exit_code(default_report) == 0


def test_status_invariant(default_report):
    for c in default_report.claims:
        assert (c.status == "match") == (c.computed == c.expected)
        if c.status == "documented-discrepancy":
            assert c.id in rp.DISCREPANCIES


def test_anchor_quotes_come_from_the_bundled_list(default_report):
    quotes = {q for _, q in rp.ANCHORS.values()}
    assert all(c.anchor.quote in quotes for c in default_report.claims)
    assert set(rp.ANCHORS) == set(rp.CLAIM_IDS)


def test_structured_round_trip(default_report):
    text = rp.to_structured(default_report)
    back = rp.from_structured(text)
    assert back.claims == default_report.claims
    assert back.summary == default_report.summary and back.config == default_report.config
    assert rp.to_structured(back) == text


def test_same_seed_gives_identical_reports():
    cfg = dict(only=("quartic-gin", "union-leadterm-claim", "generic-curve-6-regular"), pairs=5, curves=3)
    a = rp.verify_paper(rp.VerifyConfig(**cfg))
    b = rp.verify_paper(rp.VerifyConfig(**cfg))
    assert rp.to_structured(a) == rp.to_structured(b)
    assert rp.to_text(a) == rp.to_text(b)


def test_stricter_cap_is_flagged():
    caps = dict(rp.DEFAULT_REG_CAPS, **{"2": 6})
    r = rp.verify_paper(rp.VerifyConfig(reg_caps=caps, only=("case2-genus1-max-i", "case2-genus2-max-i")))
    assert r.summary["mismatch"] >= 1 and rp.exit_code(r) == 1


def test_errors_are_reported_per_claim(monkeypatch):
    def boom(cx):
        raise OSError("disk gone")

    claims = [rp.Claim("ci-genus-223", boom, lambda cfg: [12, 13])]
    monkeypatch.setattr(rp, "CLAIMS", claims)
    r = rp.verify_paper(rp.VerifyConfig(only=("ci-genus-223",)))
    (c,) = r.claims
    assert c.status == "mismatch" and c.computed.startswith("error: OSError")


def test_empty_report_and_unknown_ids():
    empty = rp.Report([], {}, rp.summarize([]))
    assert rp.from_structured(rp.to_structured(empty)).claims == []
    assert "0 claims" in rp.to_text(empty)
    with pytest.raises(ValueError):
        rp.verify_paper(rp.VerifyConfig(only=("no-such-claim",)))


def test_dot_bundle(default_report, tmp_path):
    paths = rp.emit(default_report, "dot-bundle", tmp_path / "dots")
    assert sorted(p.name for p in paths) == ["figure6-witness.dot", "figure7-witness.dot", "quartic-gin.dot"]
    assert all(p.read_text().startswith("digraph") for p in paths)
    with pytest.raises(ValueError):
        rp.emit(default_report, "dot-bundle")
    with pytest.raises(ValueError):
        rp.emit(default_report, "yaml")


def test_cli_verify_subset(tmp_path, capsys):
    rc = cli.main(["verify-paper", "--only", "cone-genus-1", "--out", str(tmp_path), "--format", "structured"])
    assert rc == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["config"]["p"] == 32003 and doc["config"]["seed"] == 0
    assert (tmp_path / "witnesses" / "figure7-witness.dot").exists()
    capsys.readouterr()


def test_cli_exit_codes(capsys):
    assert cli.main(["verify-paper", "--only", "case2-genus1-max-i", "--reg-cap", "2=6"]) == 1
    assert cli.main(["verify-paper", "--reg-cap", "nine=6"]) == 2
    assert cli.main(["geometry"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze", "--case", "7", "--genus", "0", "--reg-cap", "7"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_cli_analyze_and_enumerate(tmp_path, capsys):
    dot = tmp_path / "w.dot"
    assert cli.main(["analyze", "--case", "1", "--genus", "0", "--reg-cap", "7",
                     "--witness-dot", str(dot), "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["max_i"] == 1 and doc["replay"]["cap"] == 7 and dot.exists()
    assert cli.main(["enumerate", "--ambient", "planar", "--degree", "10", "--reg-cap", "5",
                     "--format", "structured", "--out", str(tmp_path / "e")]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 2
    assert len(list((tmp_path / "e").glob("*.dot"))) == 2


def test_cli_geometry(capsys):
    assert cli.main(["geometry", "--scroll", "s12", "--genus", "9", "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["quadratic_roots"] == [3, 4]
    assert cli.main(["geometry", "--chi", "5", "5", "1", "--format", "structured"]) == 0
    assert json.loads(capsys.readouterr().out)["dimension_caps"] == [50, 44, 38]


def test_cli_gin_curve_union(tmp_path, capsys):
    ideal_file = tmp_path / "q.txt"
    ideal_file.write_text("vars: 4\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n")
    assert cli.main(["gin", "--input", str(ideal_file), "--trials", "2", "--cap", "4",
                     "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["gin"] == "(x0^2, x0*x1, x1^2)" and doc["replay"]["seed"] == 0
    param = tmp_path / "p.txt"
    param.write_text("\n".join(" ".join("1" if k == i else "0" for k in range(5)) for i in range(5)))
    assert cli.main(["curve", "--param", str(param), "--cap", "4", "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["degree"], doc["genus"], doc["regularity"]) == (4, 0, 2)
    assert cli.main(["union-quintics", "--random", "3", "--seed", "4"]) == 0
    assert cli.main(["gin", "--input", str(tmp_path / "missing.txt")]) == 2
    capsys.readouterr()
