"""Command-line front end: run checks and sweeps, dump sequences and cubic
classifications, and decompose 4q = L^2 + 27M^2."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .congruences import REGISTRY, Report, resolve_selector, run_check, sweep
from .eisenstein import CjClass, classify_c, cornacchia_4p
from .errors import CatcongError
from .modarith import fp, require_prime
from .report import render
from .sequences import SeqKind, seq_exact


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catcong",
        description="verify congruences of Catalan-like binomial sums modulo primes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list every registered theorem id")

    p_check = sub.add_parser("check", help="run one theorem at explicit parameters")
    p_check.add_argument("theorem", help="registry id or family name")
    p_check.add_argument("--p", type=int, required=True, help="prime modulus")
    p_check.add_argument("--m", type=int, help="modulus parameter in {3,4,6}")
    p_check.add_argument("--t", type=_fraction, help="evaluation point (integer or fraction)")
    p_check.add_argument("--c", type=_fraction, help="cubic-class parameter")
    p_check.add_argument("--a", type=int, help="first two-parameter value")
    p_check.add_argument("--b", type=int, help="second two-parameter value")
    p_check.add_argument("--q", type=int, help="prime congruent to 1 mod 3")

    p_sweep = sub.add_parser("sweep", help="check theorems over a prime range")
    p_sweep.add_argument("--theorem", default="all", help="registry id, family, or 'all'")
    p_sweep.add_argument("--p-lo", type=int, default=5)
    p_sweep.add_argument("--p-hi", type=int, default=500)
    p_sweep.add_argument("--samples", type=int, default=25,
                         help="sampled parameter values per theorem and prime")
    p_sweep.add_argument("--exhaustive", action="store_true",
                         help="sweep every parameter residue instead of sampling")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_sweep.add_argument("--out", help="write the report to this path instead of stdout")

    p_seq = sub.add_parser("seq", help="print exact sequence values")
    p_seq.add_argument("kind", help="catalan, catalan_even, catalan2, binom3k_k, "
                                    "binom4k_2k, s, s_weighted, or t")
    p_seq.add_argument("n", type=int, help="largest index to print")

    p_cls = sub.add_parser("classify", help="partition residues mod m into cubic classes")
    p_cls.add_argument("m", type=int, help="modulus coprime to 3")

    p_cor = sub.add_parser("cornacchia", help="solve 4q = L^2 + 27M^2 with L = 1 mod 3, M > 0")
    p_cor.add_argument("q", type=int, help="prime congruent to 1 mod 3")
    return parser


def _cmd_list() -> int:
    width = max(len(i) for i in REGISTRY)
    for fam in REGISTRY.values():
        print(f"{fam.id:{width}}  {fam.description}")
    return 0


def _cmd_check(args) -> int:
    require_prime(args.p)
    params = {}
    if args.m is not None:
        params["m"] = args.m
    if args.t is not None:
        params["t"] = fp(args.t, args.p)
    if args.c is not None:
        params["c"] = fp(args.c, args.p)
    if args.a is not None:
        params["a"] = args.a
    if args.b is not None:
        params["b"] = args.b
    if args.q is not None:
        params["q"] = args.q
    results = run_check(args.theorem, args.p, **params)
    report = Report(meta={"selector": args.theorem, "p": args.p}, results=tuple(results))
    sys.stdout.write(render(report, "table"))
    if any(not r.passed and not r.skipped for r in results):
        return 1
    if all(r.skipped for r in results):
        return 2
    return 0


def _cmd_sweep(args) -> int:
    if args.p_lo > args.p_hi or args.p_lo < 2:
        raise CatcongError(f"malformed prime range [{args.p_lo}, {args.p_hi}]")
    resolve_selector(args.theorem)
    report = sweep(
        args.theorem, args.p_lo, args.p_hi,
        samples=args.samples, seed=args.seed,
        exhaustive=args.exhaustive, workers=args.workers,
    )
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        s = report.summary
        print(f"wrote {args.out}: total={s['total']} passed={s['passed']} "
              f"skipped={s['skipped']} failed={s['failed']}")
    else:
        sys.stdout.write(text)
    return 0 if report.summary["failed"] == 0 else 1


def _cmd_seq(args) -> int:
    try:
        kind = SeqKind(args.kind.lower())
    except ValueError:
        raise CatcongError(f"unknown sequence kind {args.kind!r}")
    start = 1 if kind is SeqKind.T else 0
    values = [seq_exact(kind, k) for k in range(start, args.n + 1)]
    print(" ".join(str(v) for v in values))
    return 0


def _cmd_classify(args) -> int:
    m = args.m
    if m <= 1 or m % 3 == 0:
        raise CatcongError(f"modulus must be > 1 and coprime to 3, got {m}")
    buckets: dict[str, list[int]] = {"C0": [], "C1": [], "C2": [], "excluded": []}
    for c in range(m):
        cls = classify_c(c, m)
        key = "excluded" if cls is CjClass.EXCLUDED else cls.name
        buckets[key].append(c)
    for name in ("C0", "C1", "C2", "excluded"):
        print(f"{name}: {' '.join(map(str, buckets[name]))}")
    return 0


def _cmd_cornacchia(args) -> int:
    L, M = cornacchia_4p(args.q)
    print(f"L={L} M={M}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list()
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "seq":
            return _cmd_seq(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "cornacchia":
            return _cmd_cornacchia(args)
    except (CatcongError, KeyError, ValueError) as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
