"""Command-line front end: every library operation behind a subcommand."""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import islice

from . import decomposition, fixed_summand, harness, sequence, words
from .errors import NzeckError, ScanLimitExceeded

ENV_LENGTH_CAP = "NZECK_LENGTH_CAP"
ENV_SCAN_LIMIT = "NZECK_SCAN_LIMIT"


def _length_cap(args) -> int:
    if args.length_cap is not None:
        return args.length_cap
    return int(os.environ.get(ENV_LENGTH_CAP, words.DEFAULT_LENGTH_CAP))


def _scan_limit(args) -> int:
    if args.scan_limit is not None:
        return args.scan_limit
    return int(os.environ.get(ENV_SCAN_LIMIT, words.DEFAULT_SCAN_LIMIT))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _orders(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def cmd_term(args) -> int:
    value = sequence.term(args.order, args.index)
    if args.format == "json":
        _emit_json({"n": args.order, "m": args.index, "value": str(value)})
    else:
        print(value)
    return 0


def cmd_decompose(args) -> int:
    indices = decomposition.decompose(args.order, args.value)
    if args.format == "json":
        _emit_json({"n": args.order, "N": str(args.value), "indices": indices})
    elif indices:
        print(f"{args.value} = " + " + ".join(f"F({args.order},{c})" for c in indices))
    else:
        print(f"{args.value} = (empty sum)")
    return 0


def cmd_recompose(args) -> int:
    value = decomposition.recompose(args.order, args.indices)
    if args.format == "json":
        _emit_json({"n": args.order, "indices": args.indices, "N": str(value)})
    else:
        print(value)
    return 0


def cmd_string(args) -> int:
    limit = _scan_limit(args)
    if args.prefix > limit:
        raise ScanLimitExceeded(f"prefix of {args.prefix} letters exceeds the scan limit {limit}")
    letters = list(islice(words.stream(args.order), args.prefix))
    if args.format == "json":
        _emit_json({"n": args.order, "prefix": letters})
    else:
        print(words.format_letters(letters))
    return 0


def cmd_block(args) -> int:
    letters = words.block(args.order, args.index, length_cap=_length_cap(args))
    if args.format == "json":
        _emit_json({"n": args.order, "m": args.index, "letters": letters})
    else:
        print(words.format_letters(letters))
    return 0


def cmd_char_at(args) -> int:
    letter = words.char_at(args.order, args.pos)
    if args.format == "json":
        _emit_json({"n": args.order, "pos": str(args.pos), "letter": letter})
    else:
        print(f"a{letter}")
    return 0


def cmd_counts(args) -> int:
    if args.block is not None:
        if args.scan:
            raise ValueError("--scan applies to --prefix counts only")
        counts = words.count_block(args.order, args.block)
    elif args.scan:
        counts = words.count_prefix_scan(args.order, args.prefix, scan_limit=_scan_limit(args))
    else:
        counts = words.count_prefix(args.order, args.prefix)
    if args.format == "json":
        _emit_json({f"a{i + 1}": str(c) for i, c in enumerate(counts)})
    else:
        print(" ".join(f"a{i + 1}={c}" for i, c in enumerate(counts)))
    return 0


def cmd_qseq(args) -> int:
    members = fixed_summand.smallest_summand_members(args.order, args.fixed_index, args.count)
    if args.format == "json":
        _emit_json({"n": args.order, "k": args.fixed_index, "q": [str(q) for q in members]})
    elif args.format == "bfile":
        for j, q in enumerate(members, start=1):
            print(f"{j} {q}")
    else:
        print(" ".join(str(q) for q in members))
    return 0


def cmd_table1(args) -> int:
    lo, hi = fixed_summand.largest_summand_rows(args.order, args.j)
    if args.format == "json":
        _emit_json({"n": args.order, "j": args.j, "row_lo": lo, "row_hi": hi})
    else:
        print(f"{lo} {hi}")
    return 0


def cmd_zset(args) -> int:
    members = fixed_summand.any_summand_members(args.order, args.fixed_index, args.bound)
    if args.format == "json":
        _emit_json({"n": args.order, "k": args.fixed_index, "bound": str(args.bound),
                    "z": [str(z) for z in members]})
    else:
        print(" ".join(str(z) for z in members))
    return 0


def cmd_verify(args) -> int:
    selected = _selected_checks(args.checks)
    overrides = {
        "unique-decomposition": {"n_range": args.orders, "value_max": args.n_max},
        "concat-prefixes": {"n_range": args.orders, "depth": args.depth},
        "block-counts": {"n_range": args.orders, "depth": args.depth,
                         "staircase_max": args.staircase_max},
        "decomposition-prefix": {"n_range": args.orders, "length_max": args.n_max},
        "fixed-summand": {"n_range": args.orders, "max_k_offset": args.max_k_offset,
                          "bound": args.bound},
        "mutation-sanity": {},
    }
    reports = []
    for check_id in selected:
        kwargs = {key: val for key, val in overrides[check_id].items() if val is not None}
        reports.append(harness.ALL_CHECKS[check_id](**kwargs))
    if args.format == "json":
        print(json.dumps([r.to_json_dict() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
            for inputs, expected, actual in r.failures:
                print(f"    inputs={inputs} expected={expected} actual={actual}")
    return 0 if all(r.passed for r in reports) else 1


def _selected_checks(text: str | None) -> list[str]:
    if not text:
        return list(harness.ALL_CHECKS)
    names = [part.strip() for part in text.split(",") if part.strip()]
    unknown = [name for name in names if name not in harness.ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)} "
                         f"(known: {', '.join(harness.ALL_CHECKS)})")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nzeck",
        description="Gap-n decompositions, the attached infinite words, and "
                    "their verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json")):
        p.add_argument("-n", "--order", type=int, default=3,
                       help="recurrence order n >= 2 (default 3)")
        p.add_argument("--format", choices=fmt, default="text")

    p = sub.add_parser("term", help="sequence value at an index (any integer)")
    common(p)
    p.add_argument("-m", "--index", type=int, required=True)
    p.set_defaults(handler=cmd_term)

    p = sub.add_parser("decompose", help="greedy gap-n decomposition of an integer")
    common(p)
    p.add_argument("value", type=int)
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("recompose", help="sum the terms at the given indices")
    common(p)
    p.add_argument("indices", type=int, nargs="*")
    p.set_defaults(handler=cmd_recompose)

    p = sub.add_parser("string", help="prefix of the infinite word")
    common(p)
    p.add_argument("--prefix", type=int, required=True, help="number of letters")
    p.add_argument("--scan-limit", type=int, default=None)
    p.set_defaults(handler=cmd_string)

    p = sub.add_parser("block", help="letters of one block")
    common(p)
    p.add_argument("-m", "--index", type=int, required=True)
    p.add_argument("--length-cap", type=int, default=None)
    p.set_defaults(handler=cmd_block)

    p = sub.add_parser("char-at", help="letter at a 1-based position, without streaming")
    common(p)
    p.add_argument("pos", type=int)
    p.set_defaults(handler=cmd_char_at)

    p = sub.add_parser("counts", help="per-letter counts of a prefix or block")
    common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--prefix", type=int, help="count the first N letters (closed form)")
    group.add_argument("--block", type=int, help="count one block (closed form)")
    p.add_argument("--scan", action="store_true",
                   help="tally the stream instead of using the closed form")
    p.add_argument("--scan-limit", type=int, default=None)
    p.set_defaults(handler=cmd_counts)

    p = sub.add_parser("qseq", help="integers whose smallest summand is fixed")
    common(p, fmt=("text", "json", "bfile"))
    p.add_argument("-k", "--fixed-index", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(handler=cmd_qseq)

    p = sub.add_parser("table1", help="row range with a given largest-summand offset")
    common(p)
    p.add_argument("-j", type=int, required=True)
    p.set_defaults(handler=cmd_table1)

    p = sub.add_parser("zset", help="integers up to a bound containing a fixed summand")
    common(p)
    p.add_argument("-k", "--fixed-index", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(handler=cmd_zset)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--checks", type=str, default=None,
                   help="comma-separated check ids (default: all)")
    p.add_argument("--orders", type=_orders, default=None,
                   help="comma-separated orders to sweep, e.g. 3,4")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--staircase-max", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--max-k-offset", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except NzeckError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
