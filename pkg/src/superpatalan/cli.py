"""Command line front end.

    $ superpatalan seq --kind patalan --p 3 --count 5
    $ superpatalan table --p 3 --q 1 --rows 4 --cols 4 --format csv
    $ superpatalan verify --suite all --p 2 --q 1 --size 12
    $ superpatalan bfile check --file b025748.txt --kind patalan --p 3 --prefix-skip 1

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import matrixlab, powerseries, sequences
from .exact import Params
from .oeis import (
    BFileError,
    CheckConfig,
    cross_check,
    linearize,
    load_anumber_map,
    read_bfile_path,
    write_bfile,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

MAX_TABLE = 64
MAX_MATRIX = 32

SEQ_KINDS = ("patalan", "pq-patalan", "super-catalan-row")
BFILE_KINDS = SEQ_KINDS + ("super-patalan",)
FORMATS = ("plain", "csv", "json", "bfile")

MATRIX_SUITES = ("involution", "factorization", "hadamard")
SUITES = (
    "closed-form",
    "transpose",
    "rubenstein",
    "gf2var",
    "involution",
    "factorization",
    "hadamard",
    "convolution",
    "comp-inverse",
)


class UsageError(Exception):
    pass


def _params(args) -> Params:
    try:
        return Params(args.p, args.q)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _check_limit(value: int, limit: int, what: str, allow_large: bool):
    if value < 1:
        raise UsageError(f"{what} must be >= 1")
    if value > limit and not allow_large:
        raise UsageError(f"{what}={value} exceeds the default limit {limit}; pass --allow-large")


def generate_sequence(
    kind: str, p: int, q: int, count: int, row: int = 0, leading_one: bool = False
) -> sequences.SequenceSlice:
    """``count`` terms in total; with ``leading_one`` the extra 1 is one of them."""
    if count < 1:
        raise UsageError("count must be >= 1")
    if leading_one:
        if count == 1:
            return sequences.SequenceSlice([1], 0, "custom")
        return generate_sequence(kind, p, q, count - 1, row).with_leading_one()
    if kind == "patalan":
        if p < 2:
            raise UsageError(f"p must be >= 2, got {p}")
        return sequences.patalan_seq(p, count)
    if kind == "pq-patalan":
        try:
            params = Params(p, q)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return sequences.pq_patalan_seq(params, count)
    if kind == "super-catalan-row":
        if row < 0:
            raise UsageError("row must be >= 0")
        return sequences.super_catalan_row(row, count)
    raise UsageError(f"unknown kind {kind!r}")


def _json_header(kind: str, args) -> dict:
    if kind == "super-catalan-row":
        return {"kind": kind, "p": 2, "q": 1, "row": args.row}
    if kind == "patalan":
        return {"kind": kind, "p": args.p, "q": 1}
    return {"kind": kind, "p": args.p, "q": args.q}


def format_sequence(values, fmt: str, offset: int = 0, header: dict | None = None) -> str:
    values = list(values)
    if fmt == "plain":
        return " ".join(str(v) for v in values) + "\n"
    if fmt == "bfile":
        return write_bfile(values, offset)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "value"])
        writer.writerows((offset + k, str(v)) for k, v in enumerate(values))
        return buf.getvalue()
    if fmt == "json":
        doc = dict(header or {})
        doc["values"] = [str(v) for v in values]
        return json.dumps(doc) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def format_table(table: sequences.NumberTable, fmt: str, header: dict, read_order: str) -> str:
    if fmt == "plain":
        return "".join(" ".join(str(v) for v in row) + "\n" for row in table)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows([[str(v) for v in row] for row in table])
        return buf.getvalue()
    if fmt == "json":
        doc = dict(header)
        doc["values"] = [[str(v) for v in row] for row in table]
        return json.dumps(doc) + "\n"
    if fmt == "bfile":
        return write_bfile(linearize(table, read_order))
    raise UsageError(f"unknown format {fmt!r}")


def cmd_seq(args, out) -> int:
    seq = generate_sequence(args.kind, args.p, args.q, args.count, args.row, args.leading_one)
    out.write(format_sequence(seq.values, args.format, args.offset, _json_header(args.kind, args)))
    return EXIT_OK


def cmd_table(args, out) -> int:
    params = _params(args)
    _check_limit(args.rows, MAX_TABLE, "rows", args.allow_large)
    _check_limit(args.cols, MAX_TABLE, "cols", args.allow_large)
    table = sequences.super_patalan_table(params, args.rows, args.cols)
    header = {"kind": "super-patalan", "p": params.p, "q": params.q}
    out.write(format_table(table, args.format, header, args.read_order))
    return EXIT_OK


def run_suite(suite: str, params: Params, size: int) -> list:
    p, q = params.p, params.q
    if suite == "closed-form":
        return [sequences.closed_form_check(params, size)]
    if suite == "transpose":
        return [sequences.twisted_transpose_check(params, size)]
    if suite == "rubenstein":
        return [powerseries.verify_rubenstein_recurrence(params, max(size, 2))]
    if suite == "gf2var":
        return [powerseries.verify_two_var_gf(params, max(size, 2))]
    if suite == "involution":
        return [matrixlab.verify_involution(params, size)]
    if suite == "factorization":
        return [matrixlab.verify_factorization(params, size)]
    if suite == "hadamard":
        return [matrixlab.verify_hadamard_inverse_integral(params, size)]
    if suite == "convolution":
        return [powerseries.verify_convolution(p, size, q)]
    if suite == "comp-inverse":
        return [powerseries.verify_comp_inverse(p, max(size, 2), q)]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args, out) -> int:
    params = _params(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    for suite in suites:
        limit = MAX_MATRIX if suite in MATRIX_SUITES else MAX_TABLE
        _check_limit(args.size, limit, "size", args.allow_large)
    results = []
    for suite in suites:
        for result in run_suite(suite, params, args.size):
            out.write(result.line() + "\n")
            results.append(result)
    return EXIT_OK if all(results) else EXIT_MISMATCH


def _generated_values(kind: str, args) -> list[int]:
    if kind == "super-patalan":
        params = _params(args)
        _check_limit(args.count, MAX_TABLE, "count", args.allow_large)
        table = sequences.super_patalan_table(params, args.count, args.count)
        return linearize(table, args.read_order)
    seq = generate_sequence(kind, args.p, args.q, args.count, args.row, args.leading_one)
    return list(seq.values)


def _apply_anumber(args):
    mapping = load_anumber_map(args.config)
    key = args.anumber.upper()
    if key not in mapping:
        raise UsageError(f"{key} is not in the A-number mapping")
    entry = mapping[key]
    family = entry.get("family", "").replace("_", "-")
    if family not in BFILE_KINDS or not entry.get("p"):
        raise UsageError(f"{key} mapping is incomplete ({entry.get('status', '')})")
    args.kind = family
    args.p = int(entry["p"])
    args.q = int(entry.get("q") or 1)
    args.prefix_skip = int(entry.get("prefix_skip") or 0)
    args.offset = int(entry["offset"]) if entry.get("offset") else None
    if entry.get("read_order"):
        args.read_order = entry["read_order"]


def cmd_bfile(args, out) -> int:
    if args.action == "emit":
        values = _generated_values(args.kind, args)
        text = write_bfile(values, args.offset or 0)
        if args.file in (None, "-"):
            out.write(text)
        else:
            with open(args.file, "w") as fh:
                fh.write(text)
        return EXIT_OK

    if args.file in (None, "-"):
        raise UsageError("bfile check needs --file")
    if args.anumber:
        _apply_anumber(args)
    reference = read_bfile_path(args.file)
    if not reference.pairs:
        raise UsageError(f"{args.file} contains no terms")
    if args.count is None:
        # enough generated terms to cover the reference
        if args.kind == "super-patalan":
            n = 1
            while n * (n + 1) // 2 < len(reference):
                n += 1
            args.count = n
        else:
            args.count = reference.pairs[-1][0] + 1 - (args.offset or 0)
            args.count = max(args.count, len(reference), 1)
    values = _generated_values(args.kind, args)
    config = CheckConfig(
        family=args.kind,
        offset=args.offset,
        prefix_skip=args.prefix_skip,
        read_order=args.read_order,
    )
    report = cross_check(values, reference, config)
    out.write(report.line() + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superpatalan", description="Exact Patalan and super Patalan number tools."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(sp, q_default=1):
        sp.add_argument("--p", type=int, default=2, help="order p >= 2 (default: 2)")
        sp.add_argument("--q", type=int, default=q_default, help="shift 1 <= q < p (default: 1)")

    seq = sub.add_parser("seq", help="emit a one-dimensional sequence")
    seq.add_argument("--kind", choices=SEQ_KINDS, default="patalan")
    add_params(seq)
    seq.add_argument("--count", type=int, default=10)
    seq.add_argument("--row", type=int, default=0, help="row m for super-catalan-row")
    seq.add_argument("--format", choices=FORMATS, default="plain")
    seq.add_argument("--offset", type=int, default=0, help="first index for bfile/csv output")
    seq.add_argument("--leading-one", action="store_true", help="prepend 1 (1, 1, C(p,2), ... convention)")
    seq.set_defaults(func=cmd_seq)

    table = sub.add_parser("table", help="emit the (p,q) super Patalan table")
    add_params(table)
    table.add_argument("--rows", type=int, default=8)
    table.add_argument("--cols", type=int, default=8)
    table.add_argument("--format", choices=FORMATS, default="plain")
    table.add_argument("--read-order", choices=("antidiagonal", "row"), default="antidiagonal")
    table.add_argument("--allow-large", action="store_true")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="check identities exactly")
    verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    add_params(verify)
    verify.add_argument("--size", type=int, default=12)
    verify.add_argument("--allow-large", action="store_true")
    verify.set_defaults(func=cmd_verify)

    bfile = sub.add_parser("bfile", help="write or check OEIS b-files")
    bfile.add_argument("action", choices=("emit", "check"))
    bfile.add_argument("--file", help="output path for emit (default stdout), reference for check")
    bfile.add_argument("--kind", choices=BFILE_KINDS, default="patalan")
    add_params(bfile)
    bfile.add_argument("--count", type=int, default=None, help="terms (table size for super-patalan)")
    bfile.add_argument("--row", type=int, default=0)
    bfile.add_argument("--offset", type=int, default=None)
    bfile.add_argument("--prefix-skip", type=int, default=0)
    bfile.add_argument("--read-order", choices=("antidiagonal", "row"), default="antidiagonal")
    bfile.add_argument("--leading-one", action="store_true")
    bfile.add_argument("--anumber", help="take kind/p/q/skip/offset from the A-number mapping")
    bfile.add_argument("--config", help="A-number mapping file (INI); defaults to the bundled one")
    bfile.add_argument("--allow-large", action="store_true")
    bfile.set_defaults(func=cmd_bfile)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "prefix_skip", 0) < 0:
        print("error: --prefix-skip must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "bfile" and args.action == "emit" and args.count is None:
        args.count = 10
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, BFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
