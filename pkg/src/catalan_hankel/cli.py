"""Command line front end.

Subcommands: ``seq`` prints family values, ``hankel`` prints Hankel
determinants (or the matrix itself), ``verify`` streams NDJSON check
reports, ``paths`` enumerates weighted lattice paths.  Exit codes: 0 ok,
1 verification failures, 2 usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .families import CATALAN_CONV, FAMILY_KINDS, Family
from .hankel import det_fraction_free, hankel_matrix
from .paths import (
    DEFAULT_CAP,
    enumerate_paths,
    path_heights,
    path_weight,
    path_weight_sum,
)
from .polyring import ExactDivisionError, UniPoly
from .report import encode_value, render_value, summarize
from .series import TruncationError
from .verify import DEFAULT_SEED, SUITE_ORDER, run_suite

FORMATS = ("plain", "csv", "json")


def _csv_value(v) -> str:
    if isinstance(v, UniPoly):
        return json.dumps(list(v.coeffs), separators=(",", ":"))
    return str(v)


def _emit_rows(rows, fmt: str) -> None:
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "value"])
        for n, v in rows:
            writer.writerow([n, _csv_value(v)])
    elif fmt == "json":
        for n, v in rows:
            print(json.dumps({"n": n, "value": encode_value(v)}, separators=(",", ":")))
    else:
        for n, v in rows:
            print(f"{n}: {render_value(v)}")


def _maybe_eval(value, t_eval):
    if t_eval is None:
        return value
    if isinstance(value, UniPoly):
        return value(t_eval)
    raise ValueError("--t-eval only applies to polynomial-valued output")


def _parse_sizes(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        start, stop = int(lo), int(hi)
        if stop < start:
            raise ValueError(f"empty size range {text!r}")
        return list(range(start, stop + 1))
    return [int(text)]


def _cmd_seq(args) -> int:
    family = Family(args.family, args.k)
    rows = []
    for n in range(args.n_max + 1):
        rows.append((n, _maybe_eval(family.value(n), args.t_eval)))
    _emit_rows(rows, args.format)
    return 0


def _cmd_hankel(args) -> int:
    family = Family(args.family, args.k)
    sizes = _parse_sizes(args.sizes)
    if any(s < 0 for s in sizes):
        raise ValueError("matrix sizes must be >= 0")
    if args.matrix:
        if len(sizes) != 1:
            raise ValueError("--matrix wants exactly one size")
        m = hankel_matrix(family.value, args.shift, sizes[0])
        if args.t_eval is not None:
            m = m.map_entries(lambda e: _maybe_eval(e, args.t_eval))
        print(json.dumps(m.to_json(), separators=(",", ":")))
        return 0
    rows = []
    for size in sizes:
        d = det_fraction_free(hankel_matrix(family.value, args.shift, size))
        if family.polynomial and isinstance(d, int):
            d = UniPoly((d,))
        rows.append((size, _maybe_eval(d, args.t_eval)))
    _emit_rows(rows, args.format)
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, seed=args.seed)
    for r in reports:
        print(json.dumps(r.to_json(), separators=(",", ":")))
    total, failed = summarize(reports)
    print(
        f"{args.suite}: {total} checks, {total - failed} passed, {failed} failed",
        file=sys.stderr,
    )
    return 1 if failed else 0


def _cmd_paths(args) -> int:
    cap = args.cap
    if cap is None:
        cap = int(os.environ.get("HANKEL_PATH_CAP", DEFAULT_CAP))
    if args.list:
        for path in enumerate_paths(args.length, args.height, cap):
            heights = path_heights(path)
            weight = path_weight(path)
            if args.format == "json":
                print(
                    json.dumps(
                        {"heights": list(heights), "weight": encode_value(weight)},
                        separators=(",", ":"),
                    )
                )
            else:
                pretty = "(" + ",".join(str(h) for h in heights) + ")"
                print(f"{pretty}: {render_value(weight)}")
        return 0
    total = path_weight_sum(args.length, args.height, cap)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "length": args.length,
                    "height": args.height,
                    "count": total(1),
                    "weight": encode_value(total),
                },
                separators=(",", ":"),
            )
        )
    else:
        print(render_value(total))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-hankel",
        description=(
            "Exact Hankel determinants of Catalan and Narayana convolution "
            "powers, and the verification suites for their identities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument(
            "--family", choices=FAMILY_KINDS, default=CATALAN_CONV,
            help="integer or polynomial convolution family",
        )
        p.add_argument("--k", type=int, default=1, help="convolution power, k >= 1")
        p.add_argument(
            "--t-eval", type=int, default=None, metavar="T",
            help="evaluate polynomial values at an integer t",
        )
        p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("seq", help="print family values for n = 0..n-max")
    add_family(p)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(fn=_cmd_seq)

    p = sub.add_parser("hankel", help="Hankel determinants over a size range")
    add_family(p)
    p.add_argument("--shift", type=int, default=0, help="index shift, may be negative")
    p.add_argument(
        "--sizes", "--size", dest="sizes", required=True,
        help="matrix size N, or an inclusive range A..B",
    )
    p.add_argument(
        "--matrix", action="store_true",
        help="print the matrix itself (single size, JSON) instead of its determinant",
    )
    p.set_defaults(fn=_cmd_hankel)

    p = sub.add_parser("verify", help="run a verification suite, NDJSON reports on stdout")
    p.add_argument(
        "--suite", choices=SUITE_ORDER + ("all",), default="all",
        help="thm1/thm3: even powers over Z / Z[t]; thm2/thm4: odd powers",
    )
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("paths", help="weighted non-negative up-down paths")
    p.add_argument("--length", type=int, required=True, help="number of steps")
    p.add_argument("--height", type=int, required=True, help="end height")
    p.add_argument(
        "--cap", type=int, default=None,
        help=f"enumeration cap on length (default {DEFAULT_CAP}, env HANKEL_PATH_CAP)",
    )
    p.add_argument("--list", action="store_true", help="one line per path")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(fn=_cmd_paths)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.fn(args)
    except (ValueError, TruncationError, ExactDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
