"""Command-line interface.

Exit status: 0 on success, 1 on verification failure (catalog mismatch,
forbidden windows, property violations, search miss), 2 on usage or parse
errors.  Machine-readable output is tab-separated on stdout; diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .catalog import verify_all
from .classify import Field, classify_sequence, epr_forbidden_order3, forbidden_order2, forbidden_order3, scan_for_forbidden
from .exact import GaussianRational, ScalarParseError
from .matrix import MatrixFormatError, load_matrix, matrix_to_json
from .search import (
    COMPLEX_DEFAULT_POOL,
    DEFAULT_SEED,
    REAL_DEFAULT_POOL,
    SearchConfig,
    attainability_census,
    find_witness,
    hunt_counterexamples,
)
from .sepr import SequenceParseError, compute_epr, compute_sepr, parse_sequence

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1

_IMAG_ONLY = re.compile(r"^(?P<sign>[+-])?(?P<coef>\d+(?:/\d+)?)?i$")
_REAL_MAYBE_IMAG = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)"
    r"(?:(?P<isign>[+-])(?P<icoef>\d+(?:/\d+)?)?i)?$"
)


def _imag_value(sign, coef) -> Fraction:
    mag = Fraction(coef) if coef else Fraction(1)
    return -mag if sign == "-" else mag


def parse_pool_token(token: str) -> GaussianRational:
    """One pool entry: '2', '-1/2', 'i', '-i', '2i', '1+i', '1-2i', ..."""
    token = token.strip()
    m = _IMAG_ONLY.match(token)
    if m:
        return GaussianRational(0, _imag_value(m.group("sign"), m.group("coef")))
    m = _REAL_MAYBE_IMAG.match(token)
    if m:
        re_part = Fraction(m.group("re"))
        if m.group("isign") is None:
            return GaussianRational(re_part)
        return GaussianRational(
            re_part, _imag_value(m.group("isign"), m.group("icoef"))
        )
    raise ValueError(f"bad pool entry {token!r}")


def parse_pool(spec: str, field: Field):
    if spec == "real-default":
        return REAL_DEFAULT_POOL
    if spec == "complex-default":
        return COMPLEX_DEFAULT_POOL
    if spec == "default":
        return REAL_DEFAULT_POOL if field is Field.REAL_SYMMETRIC else COMPLEX_DEFAULT_POOL
    return tuple(parse_pool_token(t) for t in spec.split(",") if t.strip())


def _field_arg(parser, required=True, default=None):
    parser.add_argument(
        "--field",
        type=str,
        required=required,
        default=default,
        help="matrix field: 'hermitian' (complex) or 'real' (real symmetric)",
    )


def cmd_compute(args) -> int:
    matrix = load_matrix(args.file)
    if args.field == "auto":
        field = Field.REAL_SYMMETRIC if matrix.is_real else Field.HERMITIAN
    else:
        field = Field.parse(args.field)
        if field is Field.REAL_SYMMETRIC and not matrix.is_real:
            print("error: --field real given for a non-real matrix", file=sys.stderr)
            return USAGE_ERROR
    seq = compute_sepr(matrix)
    coarse = compute_epr(matrix)
    hits = scan_for_forbidden(seq, field)
    shown = "none" if not hits else "; ".join(str(h) for h in hits)
    print(f"epr: {coarse} / sepr: {seq} / forbidden windows: {shown}")
    return 0 if not hits else VERIFICATION_FAILURE


def cmd_classify(args) -> int:
    field = Field.parse(args.field)
    pattern = parse_sequence(args.sequence)
    if len(pattern) not in (2, 3):
        print(
            f"error: classification supports orders 2 and 3, got {len(pattern)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    verdict = classify_sequence(pattern, field)
    if verdict.forbidden:
        print(f"FORBIDDEN ({field.human}): {verdict.rule}")
    else:
        print(f"NOT FORBIDDEN ({field.human})")
    return 0


def cmd_enumerate(args) -> int:
    field = Field.parse(args.field)
    if args.epr:
        if args.order != 3:
            print("error: coarse-level sets are available for order 3", file=sys.stderr)
            return USAGE_ERROR
        patterns = sorted(epr_forbidden_order3(field), key=str)
    elif args.order == 2:
        patterns = sorted(forbidden_order2(field), key=str)
    else:
        patterns = sorted(forbidden_order3(field), key=str)
    for p in patterns:
        print(p)
    return 0


def cmd_catalog(args) -> int:
    if args.action != "verify":
        print(f"error: unknown catalog action {args.action!r}", file=sys.stderr)
        return USAGE_ERROR
    try:
        report = verify_all(family=args.family, witness_id=args.id)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for line in report.lines():
        print(line)
    print(report.summary())
    if not report.all_ok:
        for wid, claimed, computed, ok in report.rows:
            if not ok:
                print(f"mismatch: {wid} claimed {claimed} computed {computed}", file=sys.stderr)
        return VERIFICATION_FAILURE
    return 0


def _parse_order_spec(text: str):
    if ":" in text:
        lo, hi = text.split(":", 1)
        return (int(lo), int(hi))
    return int(text)


def cmd_search(args) -> int:
    field = Field.parse(args.field)
    pool = parse_pool(args.pool, field)
    if args.census:
        if args.order is None:
            print("error: --census needs --order 2 or 3", file=sys.stderr)
            return USAGE_ERROR
        report = attainability_census(
            args.order,
            field,
            search_budget=args.budget,
            seed=args.seed,
            search_pool=pool if args.pool != "default" else None,
        )
        for line in report.lines():
            print(line)
        print(report.summary(), file=sys.stderr)
        if report.violations:
            for v in report.violations:
                print(f"violation: {v}", file=sys.stderr)
            return VERIFICATION_FAILURE
        return 0
    if args.target is None:
        print("error: search needs --target SEQ (or --census)", file=sys.stderr)
        return USAGE_ERROR
    target = parse_sequence(args.target)
    if args.order_n is None:
        print("error: search needs --order-n", file=sys.stderr)
        return USAGE_ERROR
    cfg = SearchConfig(
        n=_parse_order_spec(args.order_n),
        pool=pool,
        field=field,
        target=target,
        mode=args.mode,
        budget=args.budget,
        seed=args.seed,
        subsequence=args.subsequence,
    )
    hit = find_witness(cfg)
    if hit is None:
        print(f"not-found\tbudget={args.budget}")
        return VERIFICATION_FAILURE
    print(f"found\t{hit.sepr}\t{hit.position}")
    print(matrix_to_json(hit.matrix))
    return 0


def cmd_properties(args) -> int:
    field = Field.parse(args.field)
    pool = parse_pool(args.pool, field)
    if args.mode == "exhaustive":
        if args.order_n is None:
            print("error: exhaustive mode needs --order-n", file=sys.stderr)
            return USAGE_ERROR
        n = _parse_order_spec(args.order_n)
    else:
        n = (1, args.max_n) if args.order_n is None else _parse_order_spec(args.order_n)
    cfg = SearchConfig(
        n=n,
        pool=pool,
        field=field,
        mode=args.mode,
        budget=args.samples,
        seed=args.seed,
    )
    report = hunt_counterexamples(cfg)
    for line in report.lines():
        print(line)
    print(report.summary(), file=sys.stderr)
    return 0 if report.clean else VERIFICATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seprkit",
        description="Exact sign patterns of principal minors of Hermitian matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="sequences and forbidden-window scan of a matrix file")
    p.add_argument("file", help="matrix JSON document")
    p.add_argument("--field", default="auto", help="auto (default), hermitian, or real")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="is a length-2/3 pattern forbidden?")
    p.add_argument("sequence", help="pattern text, e.g. \"NA+A*\"")
    _field_arg(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate-forbidden", help="print a forbidden set, sorted")
    p.add_argument("--order", type=int, choices=(2, 3), required=True)
    _field_arg(p)
    p.add_argument("--epr", action="store_true", help="coarse three-letter level")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="witness catalog operations")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--family", default=None)
    p.add_argument("--id", default=None)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("search", help="find witnesses / attainability census")
    p.add_argument("--target", default=None, help="target pattern text")
    p.add_argument("--census", action="store_true", help="attainability census mode")
    p.add_argument("--order", type=int, choices=(2, 3), default=None, help="census pattern order")
    p.add_argument("--order-n", default=None, help="matrix order, N or LO:HI")
    _field_arg(p)
    p.add_argument("--pool", default="default", help="comma-separated entries, or real-default/complex-default")
    p.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--subsequence", action="store_true", help="match as a window instead of the full sequence")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("properties", help="randomized property suite / counterexample hunt")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--order-n", default=None, help="fix the matrix order (or LO:HI)")
    _field_arg(p)
    p.add_argument("--pool", default="default")
    p.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_properties)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (SequenceParseError, ScalarParseError, MatrixFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
