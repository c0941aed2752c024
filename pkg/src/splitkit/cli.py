"""Command-line interface.

Commands compose over JSON-lines pipes: ``enumerate`` emits censuses,
``classify`` / ``map`` / ``compile`` read objects from stdin one per line
(graph6 for split graphs, JSON for the other classes) and emit one JSON
record per input line, ``verify`` runs the certification suites and
``gallery`` prints the aligned multi-class listing.  Nothing is randomized
and output never depends on the worker count.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 parse or
domain error in the input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import biject, census, verify
from .canon import canon_key, canonical_object
from .classify import (
    balance_cover,
    balance_of,
    balance_poset,
    balance_split,
    balance_xy,
    is_minimal,
    is_split,
    omega_alpha,
)
from .core import (
    DomainError,
    Graph,
    ParseError,
    SetCover,
    SizeLimitError,
    UsageError,
    ValidationError,
    XYGraph,
    class_tag_of,
    parse_graph6,
    parse_object,
    serialize_graph6,
    serialize_object,
)

_PAIR_TO_MAP = {
    ("split", "cover"): "split_to_cover",
    ("cover", "split"): "cover_to_split",
    ("split", "xy"): "split_to_xy",
    ("xy", "split"): "xy_to_split",
    ("split", "poset"): "split_to_poset",
    ("poset", "split"): "poset_to_split",
    ("cover", "poset"): "cover_to_poset",
    ("poset", "cover"): "poset_to_cover",
    ("xy", "cover"): "xy_to_cover",
    ("cover", "xy"): "cover_to_xy",
    ("xy", "poset"): "xy_to_poset",
    ("poset", "xy"): "poset_to_xy",
    ("xy", "split-shift"): "xy_to_unbalanced_split",
    ("split", "xy-shift"): "unbalanced_split_to_xy",
}

_MAP_INVERSE = {
    "split_to_cover": "cover_to_split",
    "cover_to_split": "split_to_cover",
    "split_to_xy": "xy_to_split",
    "xy_to_split": "split_to_xy",
    "split_to_poset": "poset_to_split",
    "poset_to_split": "split_to_poset",
    "cover_to_poset": "poset_to_cover",
    "poset_to_cover": "cover_to_poset",
    "xy_to_cover": "cover_to_xy",
    "cover_to_xy": "xy_to_cover",
    "xy_to_poset": "poset_to_xy",
    "poset_to_xy": "xy_to_poset",
    "xy_to_unbalanced_split": "unbalanced_split_to_xy",
    "unbalanced_split_to_xy": "xy_to_unbalanced_split",
}


def _serialize(obj) -> str:
    if isinstance(obj, Graph):
        return serialize_graph6(obj)
    return serialize_object(obj)


def _parse_line(line: str):
    if line.lstrip().startswith("{"):
        return parse_object(line)
    return parse_graph6(line.strip())


def _input_lines(stream):
    for line in stream:
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        yield line


# ---------------------------------------------------------------------------
# enumerate


def _census_header(c: census.Census) -> str:
    header = (
        f"# class={c.class_tag} n={c.n} count={c.count} "
        f"balanced={c.balanced} unbalanced={c.unbalanced}"
    )
    if c.out_of_domain:
        header += f" out_of_domain={c.out_of_domain}"
    return header


def cmd_enumerate(args) -> int:
    fmt = args.format or ("g6" if args.cls == "split" else "json")
    if (fmt == "g6") != (args.cls == "split"):
        raise UsageError("graph6 output is available exactly for --class split")
    no_iso = args.no_y_isolates if args.cls == "xy" else False

    def emit(obj):
        if args.balance != "all":
            try:
                value = balance_of(obj).value
            except DomainError:
                return  # balance undefined (Y-isolates); filtered out
            if value != args.balance:
                return
        print(_serialize(obj))

    if args.stream and not args.count_only:
        for obj in census.iter_objects(args.cls, args.n, no_iso, args.workers):
            emit(obj)
        print(_census_header(census.enumerate_class(args.cls, args.n, no_iso, args.workers)))
        return 0
    full = census.enumerate_class(args.cls, args.n, no_iso, args.workers)
    print(_census_header(full))
    if args.count_only:
        return 0
    items = sorted(
        ((canon_key(obj), obj) for obj in census.iter_objects(args.cls, args.n, no_iso, args.workers)),
        key=lambda kv: kv[0],
    )
    for _, obj in items:
        emit(obj)
    return 0


# ---------------------------------------------------------------------------
# classify


def _classify_record(obj) -> dict:
    if isinstance(obj, Graph):
        if not is_split(obj):
            raise DomainError("not a split graph")
        analysis = omega_alpha(obj)
        balance = balance_split(obj)
        return {
            "class": "split",
            "key": canon_key(obj).hex,
            "balance": balance.value,
            "witness": balance.witness,
            "omega": analysis.omega,
            "alpha": analysis.alpha,
        }
    if isinstance(obj, SetCover):
        if not is_minimal(obj):
            raise DomainError("not a minimal set cover")
        balance = balance_cover(obj)
        return {
            "class": "cover",
            "key": canon_key(obj).hex,
            "balance": balance.value,
            "witness": balance.witness,
            "n_sets": len(obj.sets),
        }
    if isinstance(obj, XYGraph):
        balance = balance_xy(obj)
        return {
            "class": "xy",
            "key": canon_key(obj).hex,
            "balance": balance.value,
            "witness": balance.witness,
        }
    balance = balance_poset(obj)
    return {
        "class": "poset",
        "key": canon_key(obj).hex,
        "balance": balance.value,
        "witness": balance.witness,
    }


def cmd_classify(args) -> int:
    errors = 0
    for line in _input_lines(sys.stdin):
        try:
            obj = _parse_line(line)
            if args.cls and args.cls != "auto" and class_tag_of(obj) != args.cls:
                raise UsageError(f"expected a {args.cls} object")
            record = _classify_record(obj)
        except (ParseError, ValidationError, DomainError, UsageError, SizeLimitError) as exc:
            record = {"error": str(exc), "line": line}
            errors += 1
        print(json.dumps(record, separators=(",", ":")))
    return 3 if errors else 0


# ---------------------------------------------------------------------------
# map / compile


def _emit_map(name: str, obj, n=None) -> dict:
    out, report = biject.apply_named_map(name, obj, n)
    spec = biject.MAPS[name]
    return {
        "from": spec.domain,
        "to": spec.codomain,
        "map": name,
        "input": report.input_key.hex,
        "output": report.output_key.hex,
        "object": _serialize(out),
        "choices": [list(c) for c in report.choices],
    }


def cmd_map(args) -> int:
    name = _PAIR_TO_MAP.get((args.src, args.dst))
    if name is None:
        known = ", ".join(f"{a}->{b}" for a, b in sorted(_PAIR_TO_MAP))
        raise UsageError(f"no map from {args.src!r} to {args.dst!r}; known: {known}")
    if args.inverse:
        name = _MAP_INVERSE[name]
    errors = 0
    for line in _input_lines(sys.stdin):
        try:
            obj = _parse_line(line)
            record = _emit_map(name, obj)
        except (ParseError, ValidationError, DomainError, UsageError, SizeLimitError) as exc:
            record = {"error": str(exc), "line": line}
            errors += 1
        print(json.dumps(record, separators=(",", ":")))
    return 3 if errors else 0


def cmd_compile(args) -> int:
    name = f"compile_{args.cls}_{args.direction}"
    if args.direction == "up" and args.n is None:
        raise UsageError("compile --direction up needs a target size --n")
    errors = 0
    for line in _input_lines(sys.stdin):
        try:
            obj = _parse_line(line)
            record = _emit_map(name, obj, args.n if args.direction == "up" else None)
        except (ParseError, ValidationError, DomainError, UsageError, SizeLimitError) as exc:
            record = {"error": str(exc), "line": line}
            errors += 1
        print(json.dumps(record, separators=(",", ":")))
    return 3 if errors else 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    if args.suite == "all":
        results = verify.run_all(args.max_n, args.workers)
    else:
        results = verify.run_suite(args.suite, args.max_n, args.workers)
    failed = False
    for result in results:
        print(json.dumps(result.to_doc(), separators=(",", ":")))
        if result.suite != "triangle" and not result.passed:
            failed = True
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# gallery


def cmd_gallery(args) -> int:
    rows = []
    for g in census.iter_split(args.n, args.workers):
        balance = balance_split(g)
        cover, cover_key = canonical_object(biject.split_to_cover(g))
        poset, poset_key = canonical_object(biject.split_to_poset(g))
        xy, xy_key = canonical_object(biject.split_to_xy(g))
        row = {
            "balance": balance.value,
            "split": serialize_graph6(g),
            "split_key": canon_key(g).hex,
            "cover": serialize_object(cover),
            "cover_key": cover_key.hex,
            "poset": serialize_object(poset),
            "poset_key": poset_key.hex,
            "xy": serialize_object(xy),
            "xy_key": xy_key.hex,
            "xy_shift": None,
            "xy_shift_key": None,
        }
        if not balance.is_balanced:
            shifted, shifted_key = canonical_object(biject.unbalanced_split_to_xy(g))
            row["xy_shift"] = serialize_object(shifted)
            row["xy_shift_key"] = shifted_key.hex
        rows.append(row)
    rows.sort(key=lambda r: (r["balance"] != "unbalanced", r["split_key"]))
    balanced = sum(1 for r in rows if r["balance"] == "balanced")
    print(
        f"# gallery n={args.n} rows={len(rows)} balanced={balanced} "
        f"unbalanced={len(rows) - balanced}"
    )
    for i, row in enumerate(rows, start=1):
        row = {"row": i, **row}
        print(json.dumps(row, separators=(",", ":")))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitkit",
        description="Enumerate, classify, map and verify split graphs, "
        "minimal set covers, XY-graphs and bipartite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="emit the census of a class at size n")
    p.add_argument("--class", dest="cls", required=True, choices=["split", "cover", "xy", "poset"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--balance", choices=["all", "balanced", "unbalanced"], default="all")
    p.add_argument("--no-y-isolates", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["g6", "json"], default=None)
    p.add_argument("--stream", action="store_true", help="emit in generation order, header last")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("classify", help="classify objects read from stdin")
    p.add_argument("--class", dest="cls", default="auto", choices=["auto", "split", "cover", "xy", "poset"])
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("map", help="apply a bijection to objects read from stdin")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--inverse", action="store_true", help="apply the inverse of the named map")
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("compile", help="apply a compilation map to objects from stdin")
    p.add_argument("--class", dest="cls", required=True, choices=["split", "cover", "xy", "poset"])
    p.add_argument("--direction", required=True, choices=["down", "up"])
    p.add_argument("--n", type=int, default=None, help="target size for --direction up")
    p.set_defaults(fn=cmd_compile)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        required=True,
        choices=["all", "roundtrip", "balance", "compilation", "choice", "counts", "triangle"],
    )
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gallery", help="aligned multi-class listing at size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_gallery)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); exit quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
