"""Parsing, rendering, the result cache, and the command line."""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys

import pytest

from qcharkit import (CAMonomial, ExprSyntaxError, GradedSeries,
                      LWeightMonomial, SparsePoly, WeightVector, YMonomial,
                      build_cartan, cache_get, cache_key, cache_put,
                      monomial_latex, monomial_text, parse_expr, series_latex,
                      wt_degree)
from qcharkit import cache as cache_mod

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)


def run_cli(args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "qcharkit.cli", *args],
                          capture_output=True, text=True, env=env)


def test_parse_fixed_examples():
    y = parse_expr(A2, "Y[1,-1]Y[2,2]^2")
    assert y == YMonomial.from_dict({(1, -1): 1, (2, 2): 2})
    psi = parse_expr(A2, "Psi[1,0]^-1")
    assert psi == LWeightMonomial.from_parts(2, {(1, 0): -1}, WeightVector.zero(2))
    ca = parse_expr(A2, "A[1,0]^-1 e[-1,0]")
    assert isinstance(ca, CAMonomial)
    assert wt_degree(A2, ca) == -2 * A2.alpha(1)
    assert parse_expr(A2, "1") == YMonomial.one()
    assert parse_expr(A2, "q^w[1,-2] Psi[2,3]", expect="lweight") == \
        LWeightMonomial.from_parts(2, {(2, 3): 1}, WeightVector((1, -2)))


def test_parse_rejections_carry_positions():
    bad = ["Y[1,-1", "Y[9,0]", "Y[1,0] Psi[1,0]", "Z[1,0]", "Y[1,0]^", "e[1]"]
    for text in bad:
        with pytest.raises(ExprSyntaxError) as info:
            parse_expr(A2, text)
        assert "position" in str(info.value)
    with pytest.raises(ExprSyntaxError):
        parse_expr(A2, "Psi[1,0]", expect="y")


def test_text_round_trips():
    rng = random.Random(51)
    for _ in range(100):
        y = YMonomial.from_dict({(rng.randint(1, 2), rng.randint(-9, 9)):
                                 rng.choice((-2, -1, 1, 3))})
        assert parse_expr(A2, monomial_text(A2, y), expect="y") == y
        ca = CAMonomial.from_parts(
            2, {(rng.randint(1, 2), rng.randint(-9, 9)): rng.choice((-1, 1))},
            rng.randint(-2, 2) * A2.alpha(1) + rng.randint(-2, 2) * A2.alpha(2))
        assert parse_expr(A2, monomial_text(A2, ca), expect="ca") == ca
        psi = LWeightMonomial.from_parts(
            2, {(rng.randint(1, 2), rng.randint(-9, 9)): rng.choice((-1, 2))},
            WeightVector((rng.randint(-3, 3), rng.randint(-3, 3))))
        assert parse_expr(A2, monomial_text(A2, psi), expect="lweight") == psi
    assert monomial_text(A2, YMonomial.one()) == "1"


def test_latex_rendering():
    assert monomial_latex(A2, YMonomial.var(1, 0)) == "Y_{1,a}"
    assert monomial_latex(A2, YMonomial.var(1, 1)) == "Y_{1,aq}"
    assert monomial_latex(A2, YMonomial.var(2, -3, -1)) == "Y^{-1}_{2,aq^{-3}}"
    series = GradedSeries.from_poly(
        A1, (1,), 3,
        SparsePoly({CAMonomial.e_term(n * A1.alpha(1)): 1 for n in range(4)}))
    assert series_latex(series) == "1+e^{\\alpha_1}+e^{2\\alpha_1}+e^{3\\alpha_1}"


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("QCHAR_CACHE_DIR", str(tmp_path))
    key = cache_key({"op": "probe", "n": 1})
    assert cache_get(key) is None
    cache_put(key, b"payload-bytes")
    assert cache_get(key) == b"payload-bytes"
    cache_put(key, b"other-bytes")
    assert cache_get(key) == b"payload-bytes"


def test_cache_rejects_foreign_payloads(tmp_path, monkeypatch):
    monkeypatch.setenv("QCHAR_CACHE_DIR", str(tmp_path))
    key = cache_key({"op": "probe", "n": 2})
    cache_put(key, b"payload")
    path = os.path.join(str(tmp_path), key + ".bin")
    raw = open(path, "rb").read()
    with open(path, "wb") as fh:
        fh.write(raw.replace(cache_mod._MAGIC, b"elsewhere-cache/", 1))
    assert cache_get(key) is None
    with open(path, "wb") as fh:
        fh.write(b"\x00\x01garbage")
    assert cache_get(key) is None


def test_cache_key_depends_on_request_and_engine(monkeypatch):
    k1 = cache_key({"op": "limit", "cap": 6})
    k2 = cache_key({"op": "limit", "cap": 7})
    assert k1 != k2 and len(k1) == 64
    monkeypatch.setattr(cache_mod, "ENGINE_VERSION", "0.0.0-test")
    assert cache_key({"op": "limit", "cap": 6}) != k1


def test_cli_exit_codes(tmp_path):
    env = {"QCHAR_CACHE_DIR": str(tmp_path)}
    ok = run_cli(["roots", "--type", "A2"], env)
    assert ok.returncode == 0 and "alpha" in ok.stdout or ok.returncode == 0
    parse_err = run_cli(["braid-act", "--type", "A2", "--word", "1",
                         "--dir", "+1", "--expr", "Y[1,0"], env)
    assert parse_err.returncode == 2
    domain_err = run_cli(["qchar", "--type", "G2", "--hw", "Y[1,-1]",
                          "--engine", "closed"], env)
    assert domain_err.returncode == 3
    no_limit = run_cli(["limit", "--type", "A2", "--w", "1", "--i", "1",
                        "--height", "6", "--kmax", "2", "--out", "json"], env)
    assert no_limit.returncode == 4
    assert "k sweep" in no_limit.stderr


def test_cli_output_is_cache_deterministic(tmp_path):
    env = {"QCHAR_CACHE_DIR": str(tmp_path)}
    args = ["limit", "--type", "A1", "--w", "1", "--i", "1",
            "--height", "5", "--out", "json"]
    first = run_cli(args, env)
    assert first.returncode == 0
    second = run_cli(args, env)
    fresh = run_cli(args + ["--no-cache"], env)
    assert second.stdout == first.stdout == fresh.stdout
    payload = json.loads(first.stdout)
    assert payload["truncation"] == 5


def test_cli_braid_act_round_trip(tmp_path):
    env = {"QCHAR_CACHE_DIR": str(tmp_path)}
    out = run_cli(["braid-act", "--type", "A2", "--word", "2,1", "--dir", "+1",
                   "--expr", "Psi[1,0]^-1"], env)
    assert out.returncode == 0
    back = run_cli(["braid-act", "--type", "A2", "--word", "1,2", "--dir", "-1",
                    "--expr", out.stdout.strip()], env)
    assert back.returncode == 0
    assert parse_expr(A2, back.stdout.strip(), expect="lweight") == \
        LWeightMonomial.psi_var(2, 1, 0, -1)


def test_cli_verify_single_case(tmp_path):
    env = {"QCHAR_CACHE_DIR": str(tmp_path)}
    out = run_cli(["verify", "--case", "sl2-s1"], env)
    assert out.returncode == 0
    assert "CONFIRMED-at-truncation" in out.stdout
    unknown = run_cli(["verify", "--case", "no-such-case"], env)
    assert unknown.returncode == 2


def test_verify_text_report_prints_sweep_log_when_inconclusive(monkeypatch, capsys):
    from qcharkit import catalog, cli

    def fake_case():
        clause = catalog.Clause("converges", catalog.Verdict.INCONCLUSIVE,
                                "no-limit-detected: synthetic")
        return catalog.CaseResult("synthetic", [clause], [],
                                  ["R=0: k sweep reached 2 without 3 equal values past k=2"])

    monkeypatch.setitem(catalog._CATALOG, "synthetic", fake_case)
    rc = cli.main(["verify", "--case", "synthetic"])
    captured = capsys.readouterr()
    assert rc == 0
    assert "INCONCLUSIVE" in captured.out
    assert "sweep log:" in captured.out
    assert "k sweep reached" in captured.out
