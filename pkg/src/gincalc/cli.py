"""``gincalc`` command line.

Exit codes: 0 success, 1 a check failed (mismatch), 2 usage or input error.
Every document written carries the field prime, seed and degree cap used.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from gincalc import report as rp
from gincalc.cohomology import CASE_GINS, analyze_case
from gincalc.enumeration import hyperplane_gins, quadratic_generator_count
from gincalc.groebner import curves as gcurves
from gincalc.groebner.field import DEFAULT_PRIME, PrimeField
from gincalc.groebner.gin import DEFAULT_CAP, gin_estimate
from gincalc.groebner.poly import read_polynomials
from gincalc.monomials import DimensionError, colength, hilbert_polynomial_curve, regularity_borel, sheaf_h1_oracle
from gincalc.surfaces import (
    F1,
    F3,
    degree10_classes,
    enumerate_splittings,
    reducible_chi_bounds,
    solve_scroll_quadratic,
    vertex_multiplicity_table,
)
from gincalc.trees import to_dot, tree_from_ideal


class UsageError(Exception):
    pass


def _dump(doc: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    lines = []
    for k, v in doc.items():
        if isinstance(v, list):
            lines.append(f"{k}:")
            lines += [f"  {json.dumps(x) if not isinstance(x, str) else x}" for x in v]
        else:
            lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(v)}")
    return "\n".join(lines) + "\n"


def _replay(p: int | None, seed: int | None, cap: int | None) -> dict:
    return {"p": p, "seed": seed, "cap": cap}


# ---------------------------------------------------------------------------
# subcommands


def cmd_enumerate(args) -> int:
    found = hyperplane_gins(args.ambient, args.degree, args.reg_cap, ellia_peskine=not args.no_ep)
    doc = {
        "replay": _replay(None, None, args.reg_cap),
        "ambient": args.ambient,
        "degree": args.degree,
        "count": len(found),
        "ideals": [{"ideal": str(J), "regularity": regularity_borel(J), "colength": colength(J),
                    "quadrics": quadratic_generator_count(J)} for J in found],
    }
    sys.stdout.write(_dump(doc, args.format))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k, J in enumerate(found):
            (out / f"gin{k:02d}.dot").write_text(to_dot(tree_from_ideal(J), f"gin{k:02d}"))
    return 0


def cmd_analyze(args) -> int:
    if args.case not in CASE_GINS:
        raise UsageError(f"unknown case {args.case!r}")
    v = analyze_case(args.case, args.genus, args.reg_cap)
    doc = {
        "replay": _replay(None, None, args.reg_cap),
        "case": v.case,
        "genus": v.genus,
        "max_i": v.max_i,
        "nonproblematic": v.nonproblematic,
        "condition": v.condition_met,
        "witness_end": str(v.witness.end) if v.witness else None,
        "witness_steps": v.witness.to_records() if v.witness else [],
    }
    sys.stdout.write(_dump(doc, args.format))
    if args.witness_dot:
        if v.witness is None:
            raise UsageError("no admissible trace, so no witness to draw")
        Path(args.witness_dot).write_text(to_dot(tree_from_ideal(v.witness.end), "witness"))
    return 0


def _parse_splittings(text: str) -> tuple[int, int]:
    try:
        total, rank = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"--splittings expects TOTALxRANK, got {text!r}") from None
    return total, rank


def cmd_geometry(args) -> int:
    doc: dict = {"replay": _replay(None, None, None)}
    if not (args.scroll or args.splittings or args.chi):
        raise UsageError("geometry needs --scroll, --splittings or --chi")
    if args.scroll:
        if args.genus is None:
            raise UsageError("--scroll needs --genus")
        S = F1 if args.scroll == "s12" else F3
        doc["scroll"] = args.scroll
        doc["genus"] = args.genus
        doc["classes"] = [f"{D}: genus {g}" for D, g in degree10_classes(S) if g == args.genus]
        if args.scroll == "s12":
            doc["quadratic_roots"] = sorted(solve_scroll_quadratic(args.genus))
        else:
            doc["through_vertex"] = [[a, m, int(gt)] for a, m, gt in vertex_multiplicity_table(args.genus)]
    if args.splittings:
        total, rank = _parse_splittings(args.splittings)
        found = enumerate_splittings(total, rank)
        doc["splittings"] = [{"type": list(t), "codim": c, "special_below_4": 0 < c < 4} for t, c in found]
    if args.chi:
        a, b, n = args.chi
        cb = reducible_chi_bounds(a, b, n)
        doc["chi_bounds"] = list(cb.bounds)
        doc["dimension_caps"] = list(cb.caps)
    sys.stdout.write(_dump(doc, args.format))
    return 0


def cmd_gin(args) -> int:
    fld = PrimeField(args.field)
    polys, _ = read_polynomials(Path(args.input).read_text(), fld)
    est = gin_estimate(polys, trials=args.trials, seed=args.seed, cap=args.cap, method=args.method)
    doc = {
        "replay": _replay(args.field, args.seed, args.cap),
        "gin": str(est.ideal),
        "stable": est.stable,
        "trials": [str(J) for J in est.trials],
        "resampled": est.resampled,
    }
    sys.stdout.write(_dump(doc, args.format))
    return 0


def cmd_curve(args) -> int:
    forms = gcurves.read_param(Path(args.param).read_text())
    if len(forms) != 5:
        raise UsageError("a parameterization file needs five forms")
    J, stable = gcurves.curve_gin(forms, cap=args.cap, seed=args.seed, trials=args.trials, p=args.field)
    doc = {"replay": _replay(args.field, args.seed, args.cap), "gin": str(J), "stable": stable,
           "regularity": regularity_borel(J)}
    try:
        d, g = hilbert_polynomial_curve(J)
        doc.update(degree=d, genus=g, h1_twist5=sheaf_h1_oracle(J, 5).value)
    except DimensionError as exc:
        doc["hilbert_polynomial"] = f"unavailable below the cap: {exc}"
    sys.stdout.write(_dump(doc, args.format))
    return 0


def cmd_union(args) -> int:
    fld = PrimeField(args.field)
    rng = np.random.default_rng(args.seed)
    failures = []
    for k in range(args.random):
        f = gcurves.random_admissible_quintic((0, 1, 2), rng, fld)
        g = gcurves.random_admissible_quintic((2, 3, 4), rng, fld)
        if not gcurves.verify_leadterm_claim(f, g):
            failures.append(k)
    doc = {"replay": _replay(args.field, args.seed, None), "pairs": args.random,
           "passed": args.random - len(failures), "failed_pairs": failures}
    sys.stdout.write(_dump(doc, args.format))
    return 1 if failures else 0


def _reg_caps(pairs: list[str]) -> dict:
    caps = dict(rp.DEFAULT_REG_CAPS)
    for item in pairs:
        case, _, val = item.partition("=")
        if case not in caps or not val.isdigit():
            raise UsageError(f"--reg-cap expects CASE=R with CASE in {sorted(caps)}, got {item!r}")
        caps[case] = int(val)
    return caps


def cmd_verify(args) -> int:
    cfg = rp.VerifyConfig(seed=args.seed, p=args.field, reg_caps=_reg_caps(args.reg_cap),
                          traces=args.traces, timings=args.timings, only=tuple(args.only or ()))
    try:
        report = rp.verify_paper(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        rp.emit(report, args.format, args.out)
        rp.emit(report, "dot-bundle", Path(args.out) / "witnesses")
    sys.stdout.write(rp.to_text(report) if args.format == "text" or args.out else rp.to_structured(report))
    return rp.exit_code(report)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gincalc", description="Generic initial ideals of degree-10 curves.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["text", "structured"], default="text")

    p = sub.add_parser("enumerate", help="hyperplane gins of a given degree")
    p.add_argument("--ambient", choices=["p3", "planar"], required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--reg-cap", type=int, required=True)
    p.add_argument("--no-ep", action="store_true", help="skip the planar gap condition")
    p.add_argument("--out", help="directory for one DOT tree per ideal")
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("analyze", help="max i over C-rewrite traces for one case")
    p.add_argument("--case", choices=sorted(CASE_GINS), required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--reg-cap", type=int, required=True)
    p.add_argument("--witness-dot")
    fmt(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("geometry", help="scroll classes, splitting strata, Euler characteristic bounds")
    p.add_argument("--scroll", choices=["s12", "s03"])
    p.add_argument("--genus", type=int)
    p.add_argument("--splittings")
    p.add_argument("--chi", nargs=3, type=int, metavar=("A", "B", "N"))
    fmt(p)
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("gin", help="gin of an ideal given by polynomials")
    p.add_argument("--input", required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--field", type=int, default=DEFAULT_PRIME)
    p.add_argument("--method", choices=["buchberger", "linear"], default="buchberger")
    fmt(p)
    p.set_defaults(func=cmd_gin)

    p = sub.add_parser("curve", help="gin of a parameterized rational curve")
    p.add_argument("--param", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=2)
    p.add_argument("--field", type=int, default=DEFAULT_PRIME)
    fmt(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("union-quintics", help="lead terms of unions of plane quintics")
    p.add_argument("--random", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", type=int, default=DEFAULT_PRIME)
    fmt(p)
    p.set_defaults(func=cmd_union)

    p = sub.add_parser("verify-paper", help="run the claim registry")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", type=int, default=DEFAULT_PRIME)
    p.add_argument("--out")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--reg-cap", action="append", default=[], metavar="CASE=R")
    p.add_argument("--traces", type=int, default=1000)
    p.add_argument("--only", action="append", metavar="CLAIM_ID")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"gincalc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
