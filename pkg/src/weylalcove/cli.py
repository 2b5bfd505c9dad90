"""Command-line front end.

Exit codes: 0 success, 1 acceptance failure, 2 usage error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import acceptance
from .characters import default_cache_dir
from .closed_subsets import (
    DEFAULT_MAX_ALCOVE,
    ClosedSubset,
    classify,
    closure,
    enumerate_closed,
    is_closed,
)
from .cyclotomic import CyclotomicNumber
from .fusion import AlcoveCtx, alcove_context, fusion_product
from .modular import ModularData, modular_data
from .notation import format_labels, format_weight, parse_labels
from .root_system import AlgebraId, InvariantViolation, build_root_system

SCHEMA_VERSION = 1

EXIT_OK, EXIT_ACCEPTANCE, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


# --- JSON encoding ------------------------------------------------------------


def rational(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def fusion_vector_json(ctx: AlcoveCtx, vec: dict) -> list:
    return [[list(w), m] for w, m in sorted(vec.items(), key=lambda kv: ctx.index[kv[0]])]


def subset_json(s: ClosedSubset) -> dict:
    return {"members": [list(w) for w in s.members], "classification": s.classification.as_dict()}


def cyclotomic_json(z: CyclotomicNumber) -> dict:
    return {"order": z.order, "coeffs": [rational(c) for c in z.coeffs]}


def modular_json(data: ModularData, exact: bool) -> dict:
    if exact:
        s = [[cyclotomic_json(z) for z in row] for row in data.s_matrix]
    else:
        s = [[[float(z.real), float(z.imag)] for z in row] for row in data.s_matrix]
    v = data.verdict
    return {
        "subset": [list(w) for w in data.subset],
        "qdims": [[list(w), data.qdims[w]] for w in data.subset],
        "twists": [[list(w), rational(data.twists[w])] for w in data.subset],
        "s_matrix": s,
        "degenerates": [{"weight": list(d.weight), "parity": d.parity, "invertible": d.invertible}
                        for d in data.degenerates],
        "verdict": v.verdict,
        "ring": {"kind": v.ring.kind, "order": v.ring.order, "description": str(v.ring)},
    }


def emit_json(algebra: str | None, level: int | None, command: str, payload) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "algebra": algebra, "level": level,
           "command": command, "payload": payload}
    return json.dumps(doc, ensure_ascii=False, sort_keys=False)


# --- argument handling -------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--algebra", help="simple type and rank, e.g. E7 or B13")
    p.add_argument("--level", type=int, help="level k >= 0")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--cache-dir", help="directory for cached character tables")
    p.add_argument("--max-alcove", type=int, default=DEFAULT_MAX_ALCOVE,
                   help="largest alcove enumerate-closed will accept")
    p.add_argument("--exact-s", action="store_true", help="exact cyclotomic S-matrix in modular")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="weylalcove", description="Fusion rings over the level-k Weyl alcove.")
    sub = parser.add_subparsers(dest="command", required=True)
    weight_help = "weight as comma-separated Dynkin labels, e.g. 1,0,0"
    sub.add_parser("alcove", parents=[common], help="list the alcove weights")
    p = sub.add_parser("fuse", parents=[common], help="truncated tensor product of two weights")
    p.add_argument("left", help=weight_help)
    p.add_argument("right", help=weight_help)
    for name, text in [("closure", "smallest closed subset containing the weights"),
                       ("classify", "classification tag of a closed subset"),
                       ("modular", "twists, quantum dimensions, S-matrix and degeneracy verdict")]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("weights", nargs="*", help=weight_help + " (one argument per weight)")
    sub.add_parser("enumerate-closed", parents=[common], help="all closed subsets with classification")
    sub.add_parser("chart", parents=[common], help="root shifts of dull weights against stored expectations")
    sub.add_parser("verify-paper", parents=[common], help="run the full regression suite")
    return parser


def _context(args) -> AlcoveCtx:
    if not args.algebra or args.level is None:
        raise UsageError(f"{args.command} requires --algebra and --level")
    if args.level < 0:
        raise UsageError("--level must be nonnegative")
    try:
        alg = AlgebraId.parse(args.algebra)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return alcove_context(alg, args.level, args.cache_dir or default_cache_dir())


def _weights(ctx: AlcoveCtx, texts: Sequence[str]) -> list[tuple[int, ...]]:
    try:
        ws = [parse_labels(t, ctx.rs.rank) for t in texts]
        return ctx.require(*ws)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --- commands ---------------------------------------------------------------------


def cmd_alcove(args, out):
    ctx = _context(args)
    if args.json:
        return [list(w) for w in ctx.alcove]
    for w in ctx.alcove:
        out(f"{format_labels(w)}  {format_weight(w)}")


def cmd_fuse(args, out):
    ctx = _context(args)
    lam, gam = _weights(ctx, [args.left, args.right])
    vec = fusion_product(ctx, lam, gam)
    if args.json:
        return fusion_vector_json(ctx, vec)
    for w, m in vec.items():
        out(f"{format_labels(w)} ×{m}")


def _print_subset(out, s: ClosedSubset):
    out("{" + ", ".join(format_weight(w) for w in s.members) + "}  " + str(s.classification))


def cmd_closure(args, out):
    ctx = _context(args)
    s = closure(ctx, _weights(ctx, args.weights))
    s = ClosedSubset(s.members, classify(ctx, s))
    if args.json:
        return subset_json(s)
    _print_subset(out, s)


def cmd_classify(args, out):
    ctx = _context(args)
    ws = _weights(ctx, args.weights)
    if not is_closed(ctx, ws):
        raise UsageError("the given weights do not form a closed subset (try the closure command)")
    s = ClosedSubset(tuple(sorted(set(ws), key=ctx.index.__getitem__)), classify(ctx, ws))
    if args.json:
        return subset_json(s)
    _print_subset(out, s)


def cmd_enumerate(args, out):
    ctx = _context(args)
    try:
        subsets = enumerate_closed(ctx, max_alcove=args.max_alcove)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        return [subset_json(s) for s in subsets]
    for s in subsets:
        _print_subset(out, s)


def cmd_modular(args, out):
    ctx = _context(args)
    ws = _weights(ctx, args.weights) if args.weights else list(ctx.alcove)
    if not is_closed(ctx, ws):
        raise UsageError("the given weights do not form a closed subset (try the closure command)")
    data = modular_data(ctx, sorted(set(ws), key=ctx.index.__getitem__), exact=args.exact_s)
    if args.json:
        return modular_json(data, args.exact_s)
    out(f"{'weight':<24}{'qdim':>14}  twist t (C = exp(iπt))")
    for w in data.subset:
        out(f"{format_weight(w):<24}{data.qdims[w]:>14.9f}  {data.twists[w]}")
    out("S-matrix:")
    for row in data.s_matrix:
        vals = [complex(z) for z in row]
        out("  " + "  ".join(f"{z.real:+.6f}{z.imag:+.6f}i" for z in vals))
    out("degenerate objects:")
    for d in data.degenerates:
        out(f"  {format_weight(d.weight)}  {d.parity}  {'invertible' if d.invertible else 'non-invertible'}")
    out(f"degenerate ring: {data.verdict.ring}")
    out(f"verdict: {data.verdict.verdict}")


def cmd_chart(args, out):
    if args.algebra:
        try:
            names = [str(AlgebraId.parse(args.algebra))]
            build_root_system(names[0])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        names = list(acceptance.CHART) + list(acceptance.CHART_FLAGGED)
    payload = []
    for name in names:
        flagged = name in acceptance.CHART_FLAGGED
        printed = acceptance.CHART_FLAGGED[name] if flagged else acceptance.CHART.get(name)
        rows = acceptance.chart_comparison(name, printed or {}, require_dull=not flagged)
        for i, exp, got in rows:
            payload.append({"algebra": name, "index": i, "computed": [list(r) for r in got],
                            "expected": None if printed is None else [list(r) for r in exp],
                            "match": printed is not None and exp == got, "flagged": flagged})
    if args.json:
        return payload
    for row in payload:
        if row["expected"] is None:
            status = "no stored expectation"
        else:
            status = "flagged" if row["flagged"] else ("match" if row["match"] else "MISMATCH")
        out(f"{row['algebra']} λ{row['index']}: {status}")
        out(f"  computed {row['computed']}")
        out(f"  expected {row['expected']}")


def cmd_verify(args, out):
    cache = args.cache_dir or default_cache_dir()
    results = acceptance.run_all(cache, report=None if args.json else (lambda r: out(r.line())))
    if args.json:
        payload = [{"criterion": r.number, "name": r.name, "ok": r.ok, "detail": r.detail,
                    "failures": r.failures} for r in results]
        return payload, all(r.ok for r in results)
    for r in results:
        for f in r.failures:
            out(f"  criterion {r.number}: {f}")
    return None, all(r.ok for r in results)


COMMANDS = {
    "alcove": cmd_alcove,
    "fuse": cmd_fuse,
    "closure": cmd_closure,
    "classify": cmd_classify,
    "enumerate-closed": cmd_enumerate,
    "modular": cmd_modular,
    "chart": cmd_chart,
    "verify-paper": cmd_verify,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def out(line: str):
        print(line, file=stdout)

    try:
        result = COMMANDS[args.command](args, out)
        ok = True
        if args.command == "verify-paper":
            result, ok = result
        if args.json:
            alg = str(AlgebraId.parse(args.algebra)) if args.algebra else None
            out(emit_json(alg, args.level, args.command, result))
        return EXIT_OK if ok else EXIT_ACCEPTANCE
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"weylalcove: error: {exc}", file=stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"weylalcove: invariant violation: {exc}", file=stderr)
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run())
