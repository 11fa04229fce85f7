"""Command-line entry point.

Subcommands: roots, braid-act, qchar, wnorm, project, limit, factorize,
verify, cache. Exit codes: 0 success, 1 refuted verification, 2 expression or
argument error, 3 mathematical domain error, 4 no limit detected within the
sweep budget. The expensive commands (qchar, limit, factorize) consult the
on-disk cache unless --no-cache is given; a hit and a recomputation produce
identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import braid_act_word
from .cache import cache_clear, cache_get, cache_info, cache_key, cache_put
from .cartan import CartanDatum, parse_type_label
from .catalog import Verdict, case_names, verify_report
from .errors import EngineError, ExprSyntaxError, NoLimitError
from .expr import parse_expr
from .limits import factor_const_nonconst, const_flip, project_piR, projected_limit
from .qchar import QCharacter, fm_expand, kr_shape_of, kr_qchar_closed, w_normalized_qchar
from .rings import CAMonomial, GradedSeries, SparsePoly, YMonomial
from .serialize import (canonical_json_bytes, monomial_latex, monomial_text,
                        poly_json_obj, poly_latex, pretty_json, qchar_json_obj,
                        series_json_obj, series_latex)


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text == "e":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ExprSyntaxError("a word is a comma-separated list of node indices", text, 0)


def _datum(args) -> CartanDatum:
    return parse_type_label(args.type)


def _emit(args, obj: dict, latex: str | None = None, text: str | None = None) -> None:
    if args.out == "json":
        print(pretty_json(obj))
    elif args.out == "latex":
        print(latex if latex is not None else "")
    else:
        print(text if text is not None else pretty_json(obj))


def _terms_text(obj: dict) -> str:
    lines = [f"datum: {obj['datum']}"]
    if obj.get("head"):
        lines.append(f"head: {obj['head']}")
    if obj.get("truncation") is not None:
        lines.append(f"grading: {obj['grading']}  cap: {obj['truncation']}")
    meta = obj.get("meta")
    if meta:
        lines.append("  ".join(f"{k}: {v}" for k, v in meta.items()))
    lines.append(f"{len(obj['terms'])} term(s):")
    for t in obj["terms"]:
        lines.append(f"  {t['coeff']:>4d}  {t['mono']}")
    return "\n".join(lines)


def cmd_roots(args) -> int:
    datum = _datum(args)
    obj = {
        "datum": datum.label,
        "cartan_matrix": [[datum.c(i, j) for j in datum.nodes()] for i in datum.nodes()],
        "symmetrizers": [datum.d(i) for i in datum.nodes()],
        "simple_roots_omega": [list(datum.alpha(i).omega) for i in datum.nodes()],
        "positive_roots": [list(rc) for rc in datum.pos_roots],
        "longest_word": list(datum.longest_word),
        "bar_involution": [datum.bar_node(i) for i in datum.nodes()],
    }
    if args.out == "json":
        print(pretty_json(obj))
    else:
        print(f"datum: {datum.label}")
        print(f"cartan matrix: {obj['cartan_matrix']}")
        print(f"symmetrizers d_i: {obj['symmetrizers']}")
        print(f"positive roots (root coords): {obj['positive_roots']}")
        print(f"longest word: {obj['longest_word']}")
        print(f"bar involution: {obj['bar_involution']}")
    return 0


def cmd_braid_act(args) -> int:
    datum = _datum(args)
    word = _parse_word(args.word)
    x = parse_expr(datum, args.expr)
    if isinstance(x, CAMonomial):
        raise ExprSyntaxError("braid-act expects a Y or Psi expression", args.expr, 0)
    direction = 1 if args.dir in ("+1", "1") else -1
    y = braid_act_word(datum, word, direction, x)
    obj = {"datum": datum.label, "word": list(word), "dir": direction,
           "input": monomial_text(datum, x), "output": monomial_text(datum, y)}
    _emit(args, obj, latex=monomial_latex(datum, y), text=obj["output"])
    return 0


def _qchar_of(datum: CartanDatum, head: YMonomial, engine: str, step_cap: int) -> QCharacter:
    if engine == "closed":
        shape = kr_shape_of(datum, head)
        if shape is None:
            raise EngineError(f"head {monomial_text(datum, head)} is not a KR string")
        i, k, base = shape
        return kr_qchar_closed(datum, i, k, base)
    return fm_expand(datum, head, step_cap)


def cmd_qchar(args) -> int:
    datum = _datum(args)
    head = parse_expr(datum, args.hw, expect="y")
    engine = args.engine
    if engine == "auto":
        engine = "closed" if (kr_shape_of(datum, head) and datum.label in ("A1", "A2")) else "fm"
    request = {"cmd": "qchar", "type": datum.label, "hw": monomial_text(datum, head),
               "engine": engine, "step_cap": args.step_cap}
    obj = _cached_json(args, request,
                       lambda: qchar_json_obj(datum, _qchar_of(datum, head, engine, args.step_cap)))
    terms = _parse_terms(datum, obj, "y")
    poly = SparsePoly.from_terms(terms)
    _emit(args, obj, latex=poly_latex(datum, poly), text=_terms_text(obj))
    return 0


def cmd_wnorm(args) -> int:
    datum = _datum(args)
    head = parse_expr(datum, args.hw, expect="y")
    word = _parse_word(args.word)
    engine = args.engine
    if engine == "auto":
        engine = "closed" if (kr_shape_of(datum, head) and datum.label in ("A1", "A2")) else "fm"
    qc = _qchar_of(datum, head, engine, args.step_cap)
    poly = w_normalized_qchar(datum, qc, word)
    obj = poly_json_obj(datum, poly, grading=f"cone:{args.word or 'e'}", head=head)
    _emit(args, obj, latex=poly_latex(datum, poly), text=_terms_text(obj))
    return 0


def cmd_project(args) -> int:
    datum = _datum(args)
    mono = parse_expr(datum, args.expr, expect="ca")
    poly = project_piR(datum, args.threshold, SparsePoly.from_terms([(mono, 1)]))
    obj = poly_json_obj(datum, poly, grading="A/e")
    obj["threshold"] = args.threshold
    out = monomial_text(datum, next(iter(poly.terms)))
    _emit(args, obj, latex=poly_latex(datum, poly), text=out)
    return 0


def _limit_request(args, datum: CartanDatum, m: YMonomial) -> dict:
    return {
        "cmd": "limit", "type": datum.label, "w": list(_parse_word(args.w)),
        "i": args.i, "m": monomial_text(datum, m), "height": args.height,
        "kmax": args.kmax, "rmin": args.rmin, "window": args.window,
        "engine": args.engine, "step_cap": args.step_cap,
    }


def _cached_json(args, request: dict, compute) -> dict:
    key = cache_key(request)
    if not args.no_cache:
        hit = cache_get(key)
        if hit is not None:
            return json.loads(hit.decode("utf-8"))
    obj = compute()
    if not args.no_cache:
        cache_put(key, canonical_json_bytes(obj))
        hit = cache_get(key)
        if hit is not None:
            return json.loads(hit.decode("utf-8"))
    return obj


def _parse_terms(datum: CartanDatum, obj: dict, expect: str) -> list[tuple]:
    return [(parse_expr(datum, t["mono"], expect=expect), t["coeff"]) for t in obj["terms"]]


def _series_from_json(datum: CartanDatum, obj: dict, word) -> GradedSeries:
    terms = dict(_parse_terms(datum, obj, "ca"))
    return GradedSeries(datum, tuple(word), obj["truncation"], terms)


def _run_limit_json(args, datum: CartanDatum, word, m: YMonomial) -> dict:
    rep = projected_limit(datum, word, args.i, m, args.height, k_max=args.kmax,
                          r_min=args.rmin, window=args.window, engine=args.engine,
                          step_cap=args.step_cap)
    meta = {"stable_k": rep.stable_k, "stable_R": rep.stable_R,
            "k_max": rep.params["k_max"], "r_min": rep.params["r_min"],
            "engine": rep.params["engine"]}
    return series_json_obj(rep.value, meta)


def cmd_limit(args) -> int:
    datum = _datum(args)
    word = _parse_word(args.w)
    m = parse_expr(datum, args.m, expect="y")
    request = _limit_request(args, datum, m)
    obj = _cached_json(args, request, lambda: _run_limit_json(args, datum, word, m))
    series = _series_from_json(datum, obj, datum.reduce_word(word))
    _emit(args, obj, latex=series_latex(series), text=_terms_text(obj))
    return 0


def cmd_factorize(args) -> int:
    datum = _datum(args)
    word = _parse_word(args.w)
    m = parse_expr(datum, args.m, expect="y")
    request = _limit_request(args, datum, m)
    obj = _cached_json(args, request, lambda: _run_limit_json(args, datum, word, m))
    series = _series_from_json(datum, obj, datum.reduce_word(word))
    c, a = factor_const_nonconst(series)
    out = {"limit": obj, "constant": series_json_obj(c), "nonconstant": series_json_obj(a)}
    try:
        out["constant_flip"] = series_json_obj(const_flip(c))
    except EngineError:
        out["constant_flip"] = None
    if args.out == "latex":
        print(f"c = {series_latex(c)}")
        print(f"a = {series_latex(a)}")
    elif args.out == "json":
        print(pretty_json(out))
    else:
        print("constant part:")
        print(_terms_text(out["constant"]))
        print("nonconstant part:")
        print(_terms_text(out["nonconstant"]))
    return 0


def cmd_verify(args) -> int:
    if args.all:
        names = None
    elif args.case:
        names = args.case
    else:
        print("verify needs --all or --case NAME (available: "
              + ", ".join(case_names()) + ")", file=sys.stderr)
        return 2
    try:
        results = verify_report(names)
    except KeyError as exc:
        print(f"{exc.args[0]}", file=sys.stderr)
        return 2
    refuted = False
    if args.out == "json":
        obj = [{
            "case": r.name, "verdict": r.verdict.value,
            "clauses": [{"name": cl.name, "status": cl.status.value, "detail": cl.detail}
                        for cl in r.clauses],
            "notes": r.notes, "sweep_log": r.sweep_log,
        } for r in results]
        print(pretty_json(obj))
        refuted = any(r.verdict == Verdict.REFUTED for r in results)
    else:
        for r in results:
            print(f"{r.name}: {r.verdict.value}")
            for cl in r.clauses:
                mark = "ok" if cl.status == Verdict.CONFIRMED else cl.status.value
                detail = f"  ({cl.detail})" if cl.detail else ""
                print(f"  - {cl.name}: {mark}{detail}")
            for note in r.notes:
                print(f"  note: {note}")
            if r.verdict == Verdict.INCONCLUSIVE and r.sweep_log:
                print("  sweep log:")
                for line in r.sweep_log:
                    print(f"    {line}")
            if r.verdict == Verdict.REFUTED:
                refuted = True
    return 1 if refuted else 0


def cmd_cache(args) -> int:
    if args.action == "info":
        info = cache_info()
        print(f"dir: {info['dir']}")
        print(f"entries: {info['entries']}")
        print(f"bytes: {info['bytes']}")
    else:
        removed = cache_clear()
        print(f"removed {removed} entr{'y' if removed == 1 else 'ies'}")
    return 0


def _add_common(p, with_out: bool = True) -> None:
    p.add_argument("--type", required=True, help="Cartan type label, e.g. A2, B2, G2")
    if with_out:
        p.add_argument("--out", choices=("text", "json", "latex"), default="text")


def _add_limit_flags(p) -> None:
    p.add_argument("--w", default="", help="reduced word, comma-separated (empty or 'e' for identity)")
    p.add_argument("--i", type=int, required=True, help="node of the tower")
    p.add_argument("--m", default="1", help="extra Y-monomial factor of the heads")
    p.add_argument("--height", type=int, default=6, help="cone-height truncation cap")
    p.add_argument("--kmax", type=int, default=None, help="tallest tower to try")
    p.add_argument("--rmin", type=int, default=None, help="deepest threshold to try")
    p.add_argument("--window", type=int, default=3, help="consecutive equal values required")
    p.add_argument("--engine", choices=("auto", "closed", "fm"), default="auto")
    p.add_argument("--step-cap", type=int, default=500_000)
    p.add_argument("--no-cache", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qchar", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="print root-system data for a type")
    _add_common(p)
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("braid-act", help="apply a braid word to a Y or Psi monomial")
    _add_common(p)
    p.add_argument("--word", default="", help="braid word, rightmost letter acts first")
    p.add_argument("--dir", choices=("+1", "1", "-1"), default="+1")
    p.add_argument("--expr", required=True)
    p.set_defaults(fn=cmd_braid_act)

    p = sub.add_parser("qchar", help="q-character of a dominant highest weight")
    _add_common(p)
    p.add_argument("--hw", required=True, help="dominant Y-monomial")
    p.add_argument("--engine", choices=("auto", "closed", "fm"), default="auto")
    p.add_argument("--step-cap", type=int, default=500_000)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(fn=cmd_qchar)

    p = sub.add_parser("wnorm", help="w-normalized q-character in A-variables")
    _add_common(p)
    p.add_argument("--hw", required=True)
    p.add_argument("--word", default="")
    p.add_argument("--engine", choices=("auto", "closed", "fm"), default="auto")
    p.add_argument("--step-cap", type=int, default=500_000)
    p.set_defaults(fn=cmd_wnorm)

    p = sub.add_parser("project", help="push generators below a threshold to the lattice")
    _add_common(p)
    p.add_argument("--threshold", type=int, required=True)
    p.add_argument("--expr", required=True, help="an A/e monomial")
    p.set_defaults(fn=cmd_project)

    p = sub.add_parser("limit", help="projected limit of twisted normalized characters")
    _add_common(p)
    _add_limit_flags(p)
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("factorize", help="limit plus constant/nonconstant factorization")
    _add_common(p)
    _add_limit_flags(p)
    p.set_defaults(fn=cmd_factorize)

    p = sub.add_parser("verify", help="run the built-in verification catalog")
    p.add_argument("--all", action="store_true")
    p.add_argument("--case", action="append", help="catalog case name (repeatable)")
    p.add_argument("--out", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("cache", help="inspect or clear the on-disk cache")
    p.add_argument("action", choices=("info", "clear"))
    p.set_defaults(fn=cmd_cache)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ExprSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NoLimitError as exc:
        print(f"no-limit: {exc}", file=sys.stderr)
        for line in exc.sweep_log:
            print(f"  {line}", file=sys.stderr)
        return 4
    except (EngineError, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
