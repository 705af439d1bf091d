"""Command line interface: ``compute``, ``table``, ``triangle`` and ``selftest``.

    $ su2hodge compute --r 5 --s 3 --genus 0 --colors 2,2,2,2
    $ su2hodge table --r 7 --s 3 --genus-max 2 --n-max 5 --format csv
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction
from typing import Iterable, Iterator

from .hodge import (
    ColorOutOfRange,
    HodgeResult,
    SurfaceDatum,
    evaluate,
    parity_vanishes,
)
from .laurent import parse
from .oracles import multisets
from .su2_model import InvalidParams, ModelParams, validate
from .sweep import selftest

CSV_HEADER = ["r", "s", "genus", "colors", "weight", "dimension", "signature", "polynomial"]


class InvariantViolation(RuntimeError):
    pass


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_record(res: HodgeResult) -> dict:
    d = res.datum
    return {
        "r": res.params.r,
        "s": res.params.s,
        "genus": d.genus,
        "colors": list(d.colors),
        "output_color": d.output_color,
        "weight": _fraction_text(res.weight),
        "polynomial": str(res.polynomial),
        "terms": [{"p": p, "q": q, "c": str(c)} for p, q, c in res.polynomial.items()],
        "dimension": str(res.dimension),
        "signature": None if res.signature is None else str(res.signature),
        "type2_gap": res.gaps.has_type2_gap,
        "formal_value": res.formal_value,
    }


def check_invariants(res: HodgeResult) -> None:
    e = res.polynomial
    if any(p + q != res.weight for p, q, _ in e.items()):
        raise InvariantViolation(f"{e} is not homogeneous of weight {res.weight}")
    if parity_vanishes(res.datum) and e:
        raise InvariantViolation(f"odd color sum but polynomial {e} is nonzero")
    if res.signature is not None and abs(res.signature) > res.dimension:
        raise InvariantViolation(f"|signature| {res.signature} exceeds dimension {res.dimension}")
    if parse(str(e)) != e:
        raise InvariantViolation(f"text form of {e} does not round-trip")


def csv_row(rec: dict) -> list[str]:
    return [
        str(rec["r"]), str(rec["s"]), str(rec["genus"]),
        ",".join(map(str, rec["colors"])), rec["weight"], rec["dimension"],
        "" if rec["signature"] is None else rec["signature"], rec["polynomial"],
    ]


def format_text(rec: dict) -> str:
    colors = ",".join(map(str, rec["colors"]))
    head = f"r={rec['r']} s={rec['s']} g={rec['genus']} colors=({colors})"
    if rec["output_color"] is not None:
        head += f" output={rec['output_color']}"
    lines = [
        head,
        f"  e = {rec['polynomial']}",
        f"  weight = {rec['weight']}  dimension = {rec['dimension']}  "
        f"signature = {'n/a' if rec['signature'] is None else rec['signature']}",
        f"  type 2 gap: {'yes' if rec['type2_gap'] else 'no'}",
    ]
    if rec["formal_value"]:
        lines.append("  (formal value: outside the tangent-stable range)")
    return "\n".join(lines)


def emit(records: Iterable[dict], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, separators=(", ", ": ")) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow(csv_row(rec))
    else:
        for rec in records:
            out.write(format_text(rec) + "\n")


def parse_colors(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"colors must be comma-separated integers, got {text!r}")


def compute_record(params: ModelParams, datum: SurfaceDatum) -> dict:
    res = evaluate(params, datum)
    check_invariants(res)
    return to_record(res)


def table_data(params: ModelParams, genus_max: int, n_max: int,
               ordered: bool = False) -> Iterator[SurfaceDatum]:
    """Closed data with even color sum: genus ascending, then size, then colex."""
    n = params.rank
    for g in range(genus_max + 1):
        if ordered:
            tuples = (t for size in range(n_max + 1)
                      for t in itertools.product(range(n), repeat=size))
        else:
            tuples = multisets(n, n_max)
        for colors in tuples:
            if sum(colors) % 2 == 0:
                yield SurfaceDatum(g, colors)


def table_records(params: ModelParams, genus_max: int, n_max: int,
                  ordered: bool = False) -> Iterator[dict]:
    for d in table_data(params, genus_max, n_max, ordered):
        yield compute_record(params, d)


def triangle_text(n_max: int) -> str:
    """Hodge numbers of V_0(2, ..., 2) for (r, s) = (5, 3) as a Pascal triangle."""
    params = ModelParams(5, 3)
    rows = []
    for n in range(2, n_max + 1):
        res = evaluate(params, SurfaceDatum(0, (2,) * n))
        ps = [p for p, _, _ in res.polynomial.items()]
        entries = [res.polynomial.coefficient(p, n - p) for p in range(min(ps), max(ps) + 1)]
        rows.append((n, entries, res.dimension, res.signature))
    width = max(len(" ".join(map(str, e))) for _, e, _, _ in rows)
    out = []
    for n, entries, dim, sig in rows:
        body = " ".join(map(str, entries)).center(width)
        out.append(f"n={n:<3d} {body}   sum={dim}  alt={sig}")
    return "\n".join(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2hodge",
        description="Hodge numbers of SU(2) modular functors of level 2r (r odd).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("--r", type=int, required=True, help="odd integer >= 3")
        p.add_argument("--s", type=int, required=True, help="odd, 0 < s < r, prime to r")

    def add_format(p, default):
        p.add_argument("--format", choices=["json", "csv", "text"], default=default)

    p = sub.add_parser("compute", help="evaluate one colored surface")
    add_params(p)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--colors", type=parse_colors, default=(),
                   help="comma-separated colors; empty string for none")
    p.add_argument("--output-color", type=int, default=None)
    add_format(p, "json")

    p = sub.add_parser("table", help="evaluate all closed data up to given bounds")
    add_params(p)
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--ordered", action="store_true",
                   help="enumerate ordered color tuples instead of multisets")
    add_format(p, "csv")

    p = sub.add_parser("triangle", help="Pascal triangle of Hodge numbers for (r, s) = (5, 3)")
    p.add_argument("--n-max", type=int, default=12)

    p = sub.add_parser("selftest", help="cross-check the evaluation paths")
    p.add_argument("--depth", choices=["quick", "full"], default="quick")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "compute":
            params = validate(ModelParams(args.r, args.s))
            if args.genus < 0:
                raise ValueError("genus must be non-negative")
            datum = SurfaceDatum(args.genus, args.colors, args.output_color)
            emit([compute_record(params, datum)], args.format, out)
        elif args.command == "table":
            params = validate(ModelParams(args.r, args.s))
            if args.genus_max < 0 or args.n_max < 0:
                raise ValueError("--genus-max and --n-max must be non-negative")
            # buffer so a failure part-way leaves no partial table
            buf = io.StringIO()
            emit(table_records(params, args.genus_max, args.n_max, args.ordered), args.format, buf)
            out.write(buf.getvalue())
        elif args.command == "triangle":
            if args.n_max < 2:
                raise ValueError("--n-max must be at least 2")
            out.write(triangle_text(args.n_max) + "\n")
        elif args.command == "selftest":
            ok, msgs, count = selftest(args.depth)
            if not ok:
                print("selftest FAILED: " + msgs[0], file=sys.stderr)
                return 1
            out.write(f"selftest {args.depth}: {count} points, all identities hold\n")
    except (InvalidParams, ColorOutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
