"""Command-line front end.

Matrices are exchanged as JSON documents ``{"dim": n, "rows": [[...], ...]}``.
Floats are written in shortest round-trip form, so a document read back
reproduces the in-memory matrix bit for bit.

Exit codes: 0 success, 1 relation absent or suite failure, 2 usage or parse
error, 3 numerical failure (e.g. an input that is not positive definite).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .gen import GenSpec, commuting_pair, loewner_ordered_pair, near_ordered_pair, random_spd
from .linalg import InvalidInput, NotPositiveDefinite, NumericalFailure, Tolerance, as_spd, as_sym
from .means import MeanKind, mean, sample_curve
from .orders import OrderRelationKind, classify, near_cmp
from .verify.suites import SUITES, SuiteConfig, iter_suite, summarize

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

RELATIONS = ("none", "near", "loewner", "commuting")


class ParseError(ValueError):
    pass


# --- MatrixDocument -------------------------------------------------------


def parse_document(text: str) -> np.ndarray:
    """Parse a MatrixDocument into a symmetric float matrix."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "dim" not in doc or "rows" not in doc:
        raise ParseError('expected an object with "dim" and "rows"')
    dim, rows = doc["dim"], doc["rows"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f'"dim" must be a positive integer, got {dim!r}')
    if not isinstance(rows, list) or len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise ParseError(f'"rows" must be {dim} rows of {dim} numbers')
    if any(not isinstance(x, (int, float)) or isinstance(x, bool) for r in rows for x in r):
        raise ParseError('"rows" entries must be numbers')
    try:
        return as_sym(np.array(rows, dtype=float))
    except InvalidInput as exc:
        raise ParseError(str(exc)) from exc


def render_document(M: np.ndarray) -> str:
    M = np.asarray(M, dtype=float)
    return json.dumps({"dim": int(M.shape[0]), "rows": [[float(x) for x in row] for row in M]})


def read_matrix(path: str) -> np.ndarray:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    try:
        return parse_document(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def read_pd_pair(path_a: str, path_b: str) -> tuple[np.ndarray, np.ndarray]:
    A, B = read_matrix(path_a), read_matrix(path_b)
    if A.shape != B.shape:
        raise ParseError(f"dimension mismatch: {A.shape[0]} vs {B.shape[0]}")
    return as_spd(A), as_spd(B)


def _num(x: float) -> str:
    return repr(float(x))


# --- commands -------------------------------------------------------------


def cmd_mean(args: argparse.Namespace) -> int:
    A, B = read_pd_pair(args.a, args.b)
    print(render_document(mean(args.kind, A, B, args.t)))
    return EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    A, B = read_pd_pair(args.a, args.b)
    c = classify(A, B, Tolerance(args.tol_abs, args.tol_rel))
    out = {
        "relation": str(c.relation),
        "indeterminate": c.indeterminate,
        "verdicts": {
            str(kind): {"verdict": str(v.verdict), "margin": v.margin, "band": v.band, "witness": v.witness}
            for kind, v in c.verdicts.items()
        },
    }
    print(json.dumps(out, sort_keys=True))
    return EXIT_ABSENT if c.relation is OrderRelationKind.NO_RELATION else EXIT_OK


def cmd_curve(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise InvalidInput("--steps must be >= 2")
    A, B = read_pd_pair(args.a, args.b)
    grid = np.linspace(args.t_start, args.t_end, args.steps)
    samples = sample_curve(args.kind, A, B, grid)
    tol = Tolerance(args.tol_abs, args.tol_rel)
    n = A.shape[0]
    lines = [",".join(["t", *(f"lambda_{i}" for i in range(1, n + 1)), "det", "near_vs_prev"])]
    prev = None
    for s in samples:
        near = "" if prev is None else str(near_cmp(prev, s.value, tol).verdict)
        lines.append(",".join([_num(s.t), *map(_num, s.eigenvalues), _num(s.determinant), near]))
        prev = s.value
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all", file=sys.stderr)
        return EXIT_USAGE
    config = SuiteConfig(seed=args.seed, trials=args.trials, n=args.n, kappa=args.kappa)
    reports = []
    for r in iter_suite(args.suite, config):
        print(r.to_line())
        reports.append(r)
    summary = summarize(args.suite, reports)
    print(json.dumps(summary, sort_keys=True))
    return EXIT_ABSENT if summary["fails"] else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(args.n, args.kappa, args.seed, "commuting" if args.relation == "commuting" else "generic")
    if args.relation == "none":
        mats = (random_spd(spec),)
    elif args.relation == "near":
        mats = near_ordered_pair(spec, args.gap)
    elif args.relation == "loewner":
        mats = loewner_ordered_pair(spec, args.gap)
    else:
        mats = commuting_pair(spec)
    for M, dest in zip(mats, (args.out_a, args.out_b)):
        doc = render_document(M)
        if dest is None:
            print(doc)
        else:
            Path(dest).write_text(doc + "\n")
    return EXIT_OK


# --- parser ---------------------------------------------------------------


def _kind(name: str) -> MeanKind:
    try:
        return MeanKind.parse(name)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _add_tol(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol-abs", type=float, default=Tolerance.abs, help="absolute tolerance (default %(default)g)")
    p.add_argument("--tol-rel", type=float, default=Tolerance.rel, help="relative tolerance (default %(default)g)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spdmeans", description="Means of positive definite matrices and their orders.")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = ", ".join(k.value for k in MeanKind)

    p = sub.add_parser("mean", help="print the weighted mean of two matrices")
    p.add_argument("a", help="MatrixDocument for A ('-' for stdin)")
    p.add_argument("b", help="MatrixDocument for B")
    p.add_argument("--kind", type=_kind, default=MeanKind.METRIC_GEOMETRIC, help=f"one of {kinds}")
    p.add_argument("--t", type=float, default=0.5)
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("order", help="classify the strongest order relation A R B")
    p.add_argument("a")
    p.add_argument("b")
    _add_tol(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("curve", help="sample a mean curve t -> A m_t B as CSV")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--kind", type=_kind, default=MeanKind.METRIC_GEOMETRIC, help=f"one of {kinds}")
    p.add_argument("--t-start", type=float, default=0.0)
    p.add_argument("--t-end", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=11)
    _add_tol(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", help="run randomized property suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n", type=int, default=None, help="fixed dimension (default cycles 2..6)")
    p.add_argument("--kappa", type=float, default=1e4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random matrix or an ordered pair")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--kappa", type=float, default=1e4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--relation", choices=RELATIONS, default="none")
    p.add_argument("--gap", type=float, default=0.0)
    p.add_argument("--out-a", default=None, help="path for A (default stdout)")
    p.add_argument("--out-b", default=None, help="path for B (default stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotPositiveDefinite, NumericalFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
