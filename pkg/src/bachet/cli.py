"""Command line interface: ``bachet <command> ...``.

Exit codes: 0 success or verified, 1 verification or cross-check failure,
2 usage error. ``BACHET_FORMAT`` sets the default output format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .enumeration import enumerate_bachet, enumerate_er, minimal_part_count
from .macmahon import (
    ordered_factorizations,
    perfect_from_factorization,
    subperfect_from_factorization,
)
from .partition import BACHET, ErParams, Partition, canonical_w, reachable_sums
from .series import ary_count, count_bachet
from .weighing import Mode, plan, render_table

FORMATS = ("json", "table")


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> list[int]:
    """``"1,3,5..7"`` -> ``[1, 3, 5, 6, 7]``; ranges are inclusive."""
    out = []
    for item in text.split(","):
        item = item.strip()
        try:
            if ".." in item:
                a, b = item.split("..")
                lo, hi = int(a), int(b)
                if lo > hi:
                    raise argparse.ArgumentTypeError(f"empty range {item!r}")
                out.extend(range(lo, hi + 1))
            elif item:
                out.append(int(item))
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer or a..b range: {item!r}")
    return out


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def positive_list(text: str) -> list[int]:
    values = parse_int_list(text)
    if not values or any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _params(args) -> ErParams:
    try:
        return ErParams(args.e, args.r)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parts(values: list[int]) -> Partition:
    if values != sorted(values):
        print(f"warning: parts {values} were sorted", file=sys.stderr)
    return Partition.of(values)


def cmd_enumerate(args):
    params = _params(args)
    res = enumerate_bachet(args.m) if params == BACHET else enumerate_er(args.m, params)
    result = {
        "m": res.m,
        "e": params.e,
        "r": params.r,
        "num_parts": res.num_parts,
        "count": str(res.count),
        "partitions": [list(p.parts) for p in res.partitions],
    }
    lines = [f"{res.m} = {p}" for p in res.partitions]
    lines.append(f"count: {res.count}")
    return 0, result, "\n".join(lines) + "\n"


def cmd_count(args):
    rows, status = [], 0
    for m in args.m:
        row = {"m": m}
        if args.method in ("formula", "both"):
            row["formula"] = str(count_bachet(m))
        if args.method in ("enumerate", "both"):
            row["enumerate"] = str(enumerate_bachet(m).count)
        if args.method == "both" and row["formula"] != row["enumerate"]:
            row["mismatch"] = True
            status = 1
        row["count"] = row.get("formula", row.get("enumerate"))
        rows.append(row)
    result = rows[0] if len(rows) == 1 else {"counts": rows}
    text = "".join(
        f"{r['m']}: {r['count']}" + (f" (enumeration gives {r['enumerate']})" if r.get("mismatch") else "") + "\n"
        for r in rows
    )
    return status, result, text


def cmd_verify(args):
    params = _params(args)
    p = _parts(args.parts)
    need = minimal_part_count(args.m, params)
    reason = None
    if p.m != args.m:
        reason = f"wrong sum: parts sum to {p.m}, not {args.m}"
    else:
        gaps = reachable_sums(p, params)
        if gaps.longest_gap() > params.e:
            reason = (
                f"fails completeness: values in 0..{gaps.limit} missing, "
                f"first at {gaps.missing()[0]}"
            )
        elif len(p) > need:
            reason = f"not minimal: {len(p)} parts, {need} suffice"
    result = {"verified": reason is None, "reason": reason, "parts": list(p.parts), "minimal_parts": need}
    text = f"{args.m} = {p}: " + ("verified\n" if reason is None else f"{reason}\n")
    return (0 if reason is None else 1), result, text


def cmd_ternary(args):
    value = ary_count(3, args.k)
    return 0, {"k": args.k, "base": 3, "value": str(value)}, f"{value}\n"


def cmd_ary(args):
    if args.base < 2:
        raise UsageError(f"base must be >= 2, got {args.base}")
    value = ary_count(args.base, args.k)
    return 0, {"k": args.k, "base": args.base, "value": str(value)}, f"{value}\n"


def _macmahon(n: int, build, m: int):
    rows = []
    for f in ordered_factorizations(n):
        p = build(f)
        rows.append({"parts": list(p.parts), "shorthand": str(p), "factorization": list(f.factors)})
    result = {"m": m, "count": str(len(rows)), "partitions": rows}
    text = "".join(f"{r['shorthand']}  <->  {'x'.join(map(str, r['factorization']))}\n" for r in rows)
    return 0, result, text + f"count: {len(rows)}\n"


def cmd_perfect(args):
    return _macmahon(args.m + 1, perfect_from_factorization, args.m)


def cmd_subperfect(args):
    return _macmahon(2 * args.m + 1, subperfect_from_factorization, args.m)


def cmd_factorizations(args):
    if args.n < 2:
        raise UsageError(f"n must be >= 2, got {args.n}")
    facs = ordered_factorizations(args.n)
    result = {"n": args.n, "count": str(len(facs)), "factorizations": [list(f.factors) for f in facs]}
    return 0, result, "".join(f"{f}\n" for f in facs) + f"count: {len(facs)}\n"


def cmd_plan(args):
    if (args.m is None) == (args.weights is None):
        raise UsageError("give exactly one of --m or --weights")
    weights = canonical_w(args.m) if args.weights is None else _parts(args.weights)
    targets = args.targets if args.targets is not None else range(1, weights.m + 1)
    p = plan(weights, Mode(args.mode), targets, r=args.r)
    text = render_table(p) + "".join(f"note: {n}\n" for n in p.notes)
    return 0, p.to_dict(), text


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get("BACHET_FORMAT", "table")
    if default_format not in FORMATS:
        default_format = "table"
    parser = argparse.ArgumentParser(prog="bachet", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=FORMATS, default=default_format)
        p.set_defaults(func=func)
        return p

    def add_er(p):
        p.add_argument("--e", type=int, default=0)
        p.add_argument("--r", type=int, default=2)

    p = add("enumerate", cmd_enumerate, "list minimal (e, r)-complete partitions of m")
    p.add_argument("--m", type=positive_int, required=True)
    add_er(p)

    p = add("count", cmd_count, "count Bachet partitions of m (or of each m in a..b)")
    p.add_argument("--m", type=positive_list, required=True)
    p.add_argument("--method", choices=("formula", "enumerate", "both"), default="formula")

    p = add("verify", cmd_verify, "check a partition is a minimal (e, r)-complete partition of m")
    p.add_argument("--m", type=positive_int, required=True)
    p.add_argument("--parts", type=positive_list, required=True)
    add_er(p)

    p = add("ternary", cmd_ternary, "number of partitions of k into powers of 3")
    p.add_argument("--k", type=int, required=True)

    p = add("ary", cmd_ary, "number of partitions of k into powers of a base")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--base", type=int, default=3)

    p = add("perfect", cmd_perfect, "perfect partitions of m")
    p.add_argument("--m", type=positive_int, required=True)

    p = add("subperfect", cmd_subperfect, "subperfect partitions of m")
    p.add_argument("--m", type=positive_int, required=True)

    p = add("factorizations", cmd_factorizations, "ordered factorizations of n")
    p.add_argument("--n", type=int, required=True)

    p = add("plan", cmd_plan, "weighing instructions for each target")
    p.add_argument("--m", type=positive_int)
    p.add_argument("--weights", type=positive_list)
    p.add_argument("--mode", choices=[mode.value for mode in Mode], default=Mode.TWO_PAN.value)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--targets", type=parse_int_list)
    return parser


def _echo(args) -> dict:
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in ("func", "command", "format"):
            continue
        if isinstance(value, range):
            value = list(value)
        out[key] = value
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, result, text = args.func(args)
    except UsageError as exc:
        parser.error(f"{args.command}: {exc}")
    if args.format == "json":
        envelope = {
            "command": args.command,
            "parameters": _echo(args),
            "result": result,
            "version": __version__,
        }
        sys.stdout.write(json.dumps(envelope, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
