"""Command line front end.

Exit codes: 0 decisive result, 1 usage/parse/IO error, 2 boundary or
indeterminate input, 3 an exact identity or agreement check failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .criteria import classify
from .errors import DegenerateError, DomainError, ParseError, SIError
from .generate import binomial_dual, random_si, random_stable
from .hankel import associated_phi, hurwitz_formula_check, lemma51_check, phi_hankel, r_hankel
from .hurwitz import leading_minors, minor_sign_relation_check, sample_indices
from .poly import (
    Polynomial,
    TridiagonalSpec,
    dual,
    dual_via_rotation,
    from_roots,
    gcd,
    parse_poly,
    reflect,
    square_free_check,
    square_free_part,
    tridiagonal_char_poly,
)
from .realroots import isolate_real_roots, refine
from .stieltjes import cf_coeffs_from_minors, cf_expand, cf_sign_check, phi_continued_fraction

EXIT_OK, EXIT_USAGE, EXIT_BOUNDARY, EXIT_IDENTITY = 0, 1, 2, 3


def _emit(doc, out=None) -> None:
    text = json.dumps(doc, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _read_poly(args) -> Polynomial:
    text = args.poly if args.poly not in (None, "-") else sys.stdin.read()
    return parse_poly(text)


def _rationals(text: str) -> list[Fraction]:
    return list(parse_poly("1 " + text).coeffs[1:]) if text.strip() else []


def cmd_classify(args) -> int:
    report = classify(_read_poly(args))
    _emit(report.to_json())
    if not report.consistent:
        return EXIT_IDENTITY
    return EXIT_OK if report.decisive else EXIT_BOUNDARY


def cmd_minors(args) -> int:
    p = _read_poly(args)
    if p.leading < 0:
        p = -p
    if p.degree < 1:
        raise DomainError("needs degree >= 1")
    delta = leading_minors(p)
    notes = []
    if any(d == 0 for d in delta):
        notes.append("zero Hurwitz minor")
    if gcd(p, reflect(p)).degree > 0:
        notes.append("p(z) and p(-z) share roots: Hankel rank collapses")
    _emit(
        {
            "input": str(p),
            "hurwitz": [str(d) for d in delta],
            "R": r_hankel(p).to_json(),
            "phi": phi_hankel(p).to_json(),
            "notes": notes,
        }
    )
    return EXIT_OK


def cmd_cf(args) -> int:
    p = _read_poly(args)
    if p.leading < 0:
        p = -p
    doc: dict = {"input": str(p)}
    try:
        expanded = phi_continued_fraction(p)
        doc["expand"] = expanded.to_json()
        minors_path = cf_coeffs_from_minors(p)
        doc["from_minors"] = minors_path.to_json()
    except DegenerateError as exc:
        doc["error"] = "no expansion"
        doc["detail"] = str(exc)
        _emit(doc)
        return EXIT_BOUNDARY
    doc["agree"] = expanded == minors_path
    doc["si_i_sign_pattern"] = cf_sign_check(expanded, p.degree)
    _emit(doc)
    return EXIT_OK if doc["agree"] else EXIT_IDENTITY


def cmd_dual(args) -> int:
    p = _read_poly(args)
    q, q2 = dual(p), dual_via_rotation(p)
    _emit({"input": str(p), "dual": str(q), "dual_via_rotation": str(q2), "agree": q == q2})
    return EXIT_OK if q == q2 else EXIT_IDENTITY


def cmd_roots(args) -> int:
    p = _read_poly(args)
    if p.degree < 1:
        raise DomainError("needs degree >= 1")
    width = Fraction(args.width)
    flags = []
    base = p
    if not square_free_check(p):
        flags.append("repeated_roots")
        base = square_free_part(p)
    ivs = [refine(base, iv, width) for iv in isolate_real_roots(base)]
    _emit(
        {
            "input": str(p),
            "width": str(width),
            "intervals": [iv.to_json() for iv in ivs],
            "approx": [float(iv.midpoint) for iv in ivs],
            "flags": flags,
        }
    )
    return EXIT_OK


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    doc: dict = {"mode": args.mode}
    if args.mode == "from-roots":
        if args.roots is None:
            raise DomainError("--roots is required")
        p = from_roots(_rationals(args.roots), Fraction(args.leading))
    elif args.mode == "tridiagonal":
        if args.b is None:
            raise DomainError("--b is required")
        p = tridiagonal_char_poly(TridiagonalSpec(_rationals(args.b)))
    elif args.mode == "binomial-dual":
        if args.n is None:
            raise DomainError("--n is required")
        p, roots = binomial_dual(args.n, Fraction(args.a))
        doc["expected_roots"] = roots
    elif args.mode == "random-si":
        p = random_si(rng, args.degree, 2 if args.kind.upper() == "II" else 1)
        doc["seed"] = args.seed
    else:
        p = random_stable(rng, args.degree)
        doc["seed"] = args.seed
    doc["polynomial"] = str(p)
    _emit(doc)
    return EXIT_OK


FAMILIES = (
    "dual_involution",
    "dual_rotation",
    "hankel_r_minors",
    "hurwitz_formula",
    "minor_relation",
    "cf_cross_path",
    "agreement",
)


def verify_line(p: Polynomial, budget: int = 100, seed: int = 0) -> dict:
    """Run every identity family on one polynomial; values are 'pass', 'fail' or 'skipped'."""
    res: dict[str, str] = {}

    def put(name: str, ok: bool) -> None:
        res[name] = "pass" if ok else "fail"

    put("dual_involution", dual(dual(p)) == p)
    put("dual_rotation", dual_via_rotation(p) == dual(p))
    put("hankel_r_minors", lemma51_check(p).passed)
    put("hurwitz_formula", hurwitz_formula_check(p).passed)
    idx = sample_indices(p.degree, 3, budget, seed)
    put("minor_relation", all(minor_sign_relation_check(p, i) for i in idx))
    try:
        put("cf_cross_path", cf_expand(associated_phi(p)) == cf_coeffs_from_minors(p))
    except DegenerateError:
        res["cf_cross_path"] = "skipped"
    report = classify(p)
    put("agreement", report.consistent)
    return {"checks": res, "si_kind": report.si_kind.value, "oracle": report.to_json()["oracle"], "flags": report.flags}


def _verify_record(item: tuple[int, str, int, int]) -> dict:
    lineno, text, budget, seed = item
    rec: dict = {"line": lineno, "input": text}
    try:
        p = parse_poly(text)
        if p.degree < 1:
            raise DomainError("degree must be >= 1")
        rec.update(verify_line(p, budget, seed))
        rec["status"] = "ok"
    except SIError as exc:
        rec["status"] = "error"
        rec["error"] = str(exc)
    return rec


def cmd_verify_batch(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        _emit({"error": f"cannot read {args.input}: {exc}"})
        return EXIT_USAGE
    items = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            items.append((lineno, text, args.budget, args.seed))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_verify_record, items))
    else:
        records = [_verify_record(it) for it in items]

    summary = {name: {"pass": 0, "fail": 0, "skipped": 0} for name in FAMILIES}
    errors = degenerate = 0
    for rec in records:
        if rec["status"] == "error":
            errors += 1
            continue
        if "shares_roots_with_reflection" in rec["flags"] or "boundary" in rec["flags"]:
            degenerate += 1
        for name, outcome in rec["checks"].items():
            summary[name][outcome] += 1
    failed = any(v["fail"] for v in summary.values())
    doc = {
        "records": records,
        "summary": {"lines": len(records), "errors": errors, "degenerate": degenerate, "families": summary},
    }
    _emit(doc, args.output)
    if failed:
        return EXIT_IDENTITY
    if errors and args.policy == "strict":
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=True, help="JSON output (the default)")
    common.add_argument("--width", default="1/1000000", help="root refinement width (rational)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--budget", type=int, default=100, help="random large minors per polynomial")

    parser = argparse.ArgumentParser(prog="selfinterlacing", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in (
        ("classify", cmd_classify, "full classification report"),
        ("minors", cmd_minors, "Hurwitz and Hankel minors"),
        ("cf", cmd_cf, "continued fraction of the associated function"),
        ("dual", cmd_dual, "dual polynomial"),
        ("roots", cmd_roots, "isolate and refine real roots"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("poly", nargs="?", help='coefficients, highest power first, e.g. "1 -2 -5 6"; "-" reads stdin')
        sp.set_defaults(func=func)

    gp = sub.add_parser("generate", parents=[common], help="emit test polynomials")
    gp.add_argument("mode", choices=["from-roots", "tridiagonal", "binomial-dual", "random-si", "random-stable"])
    gp.add_argument("--roots")
    gp.add_argument("--leading", default="1")
    gp.add_argument("--b")
    gp.add_argument("--n", type=int)
    gp.add_argument("--a", default="1")
    gp.add_argument("--degree", type=int, default=4)
    gp.add_argument("--kind", default="I", choices=["I", "II", "i", "ii"])
    gp.set_defaults(func=cmd_generate)

    vp = sub.add_parser("verify-batch", parents=[common], help="run identity suites over a file")
    vp.add_argument("input")
    vp.add_argument("--output")
    vp.add_argument("--policy", choices=["continue", "strict"], default="continue")
    vp.add_argument("--jobs", type=int, default=1)
    vp.set_defaults(func=cmd_verify_batch)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DomainError, ValueError, ZeroDivisionError) as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
