"""Command line front end.

Subcommands: enumerate, verify, map, render, orbits.  Exit codes: 0 ok,
1 verification failure, 2 usage or parse error, 3 capability/limit error
(unsupported width, search box over the candidate ceiling).  The ceiling
can be raised via the FRIEZE_MAX_CANDIDATES environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import io, ymap
from .core import PatternKind, PeriodicPattern, check_rows, glide_shift_of_rows, Violation
from .coxeter import MAX_ENUM_WIDTH
from .search import BoxTooLarge

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(v) for v in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _parse_bounds(text: str) -> tuple[int, ...]:
    bounds = tuple(int(part) for part in text.split(","))
    if any(b < 1 for b in bounds):
        raise ValueError(f"bounds must be positive, got {text!r}")
    return bounds


def cmd_enumerate(args) -> int:
    if args.width < 1:
        return _fail(EXIT_USAGE, f"width must be >= 1, got {args.width}")
    kind = PatternKind(args.kind)
    bounds = None
    if args.bounds is not None:
        if kind is not PatternKind.Y:
            return _fail(EXIT_USAGE, "--bounds applies to --kind y only")
        try:
            bounds = _parse_bounds(args.bounds)
        except ValueError as exc:
            return _fail(EXIT_USAGE, str(exc))
        if len(bounds) != args.width:
            return _fail(EXIT_USAGE,
                         f"--bounds needs {args.width} values, got {len(bounds)}")
    if kind is PatternKind.COXETER and args.width > MAX_ENUM_WIDTH:
        return _fail(EXIT_LIMIT,
                     f"coxeter enumeration supports widths up to {MAX_ENUM_WIDTH}")
    if kind is PatternKind.Y and args.width not in (1, 2, 3, 4) and bounds is None:
        return _fail(EXIT_USAGE,
                     f"width {args.width} has no proven boxes; pass --bounds")
    try:
        catalog = io.build_catalog(kind, args.width, bounds=bounds,
                                   parallelism=args.parallelism)
    except BoxTooLarge as exc:
        return _fail(EXIT_LIMIT, str(exc))

    if args.format == "json":
        text = io.catalog_to_json(catalog)
    elif args.format == "csv":
        text = io.catalog_to_csv(catalog)
    else:
        header = io.tuple_header(kind, args.width)
        text = _table(header, [entry.key_tuple for entry in catalog.entries])
    _emit(text, args.output)
    return EXIT_OK


def _verify_one(kind: PatternKind, width: int, rows) -> Optional[Violation]:
    violation = check_rows(kind, width, rows)
    if violation is not None:
        return violation
    pattern = PeriodicPattern(kind, width, tuple(tuple(r) for r in rows))
    interior_start = 1 if kind is PatternKind.Y else 2
    for m, row in enumerate(pattern.interior(), start=interior_start):
        for k, v in enumerate(row):
            if v <= 0 or v.denominator != 1:
                return Violation("positivity", m, k,
                                 f"interior entry {v} is not a positive integer")
    if glide_shift_of_rows(pattern.rows, pattern.period) is None:
        return Violation("glide", -1, -1, "no reflection-shift maps the pattern to itself")
    return None


def cmd_verify(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            obj = json.load(fh)
        raw = io.raw_patterns_from_obj(obj)
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        return _fail(EXIT_USAGE, f"cannot parse {args.input}: {exc}")
    failures = 0
    for i, (kind, width, rows) in enumerate(raw):
        violation = _verify_one(kind, width, rows)
        if violation is None:
            print(f"pattern {i}: ok")
        else:
            failures += 1
            print(f"pattern {i}: {violation}")
    print(f"{len(raw) - failures}/{len(raw)} patterns ok")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def _verdict(report: ymap.FiberReport) -> str:
    if report.surjective and report.injective:
        return "bijective"
    if report.surjective:
        return "surjective, not injective"
    if report.injective:
        return "injective, not surjective"
    return "neither surjective nor injective"


def cmd_map(args) -> int:
    if args.width == 1:
        return _fail(EXIT_LIMIT, "width 1 has a single interior row, so the "
                                 "transfer map is not computable there")
    if args.width not in (2, 3, 4):
        return _fail(EXIT_LIMIT, f"no enumerations available for width {args.width}")
    report = ymap.fiber_analysis(args.width)
    records = ymap.correspondence_table(args.width)
    verdict = _verdict(report)
    if args.format == "json":
        text = json.dumps({
            "width": args.width,
            "records": [{"frieze_id": r.frieze_id, "yfrieze_id": r.yfrieze_id,
                         "s": r.frieze_orbit_size, "t": r.y_orbit_size}
                        for r in records],
            "fiber_sizes": list(report.fiber_sizes),
            "image_size": report.image_size,
            "surjective": report.surjective,
            "injective": report.injective,
            "verdict": verdict,
        }, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["frieze_id,yfrieze_id,s,t"]
        lines += [f"{r.frieze_id},{r.yfrieze_id},{r.frieze_orbit_size},{r.y_orbit_size}"
                  for r in records]
        lines.append(f"# verdict: {verdict}")
        text = "\n".join(lines) + "\n"
    else:
        rows = [(r.frieze_id, r.yfrieze_id,
                 f"{r.frieze_orbit_size}:{r.y_orbit_size}") for r in records]
        text = _table(("frieze", "yfrieze", "s:t"), rows)
        text += f"verdict: {verdict}\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_orbits(args) -> int:
    if args.width < 1:
        return _fail(EXIT_USAGE, f"width must be >= 1, got {args.width}")
    kind = PatternKind(args.kind)
    bounds = None
    if args.bounds is not None:
        try:
            bounds = _parse_bounds(args.bounds)
        except ValueError as exc:
            return _fail(EXIT_USAGE, str(exc))
    if kind is PatternKind.COXETER and args.width > MAX_ENUM_WIDTH:
        return _fail(EXIT_LIMIT,
                     f"coxeter enumeration supports widths up to {MAX_ENUM_WIDTH}")
    if kind is PatternKind.Y and args.width not in (1, 2, 3, 4) and bounds is None:
        return _fail(EXIT_USAGE,
                     f"width {args.width} has no proven boxes; pass --bounds")
    try:
        catalog = io.build_catalog(kind, args.width, bounds=bounds)
    except BoxTooLarge as exc:
        return _fail(EXIT_LIMIT, str(exc))
    orbits = ymap.orbit_decomposition([e.pattern for e in catalog.entries])
    if args.format == "json":
        text = json.dumps({
            "kind": kind.value,
            "width": args.width,
            "orbits": [{"root": orbit[0], "size": len(orbit), "members": orbit}
                       for orbit in orbits],
        }, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["root,size,members"]
        lines += [f"{orbit[0]},{len(orbit)},{';'.join(map(str, orbit))}"
                  for orbit in orbits]
        text = "\n".join(lines) + "\n"
    else:
        text = _table(("root", "size", "members"),
                      [(orbit[0], len(orbit), ";".join(map(str, orbit)))
                       for orbit in orbits])
    _emit(text, args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            obj = json.load(fh)
        raw = io.raw_patterns_from_obj(obj)
        patterns = [PeriodicPattern(kind, width, tuple(tuple(r) for r in rows))
                    for kind, width, rows in raw]
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        return _fail(EXIT_USAGE, f"cannot parse {args.input}: {exc}")
    if args.index is not None:
        if not 0 <= args.index < len(patterns):
            return _fail(EXIT_USAGE, f"index {args.index} out of range "
                                     f"(0..{len(patterns) - 1})")
        patterns = [patterns[args.index]]
    text = "\n".join(io.render_ascii(p) for p in patterns)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yfrieze",
        description="Enumerate, verify and map arithmetic frieze patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, kinds=True):
        if kinds:
            p.add_argument("--kind", choices=["y", "coxeter"], required=True)
        p.add_argument("--width", type=int, required=True)
        p.add_argument("--format", choices=["json", "csv", "table"], default="table")
        p.add_argument("--output", help="write to a file instead of stdout")

    p_enum = sub.add_parser("enumerate", help="enumerate all patterns of a width")
    add_common(p_enum)
    p_enum.add_argument("--parallelism", type=int, default=1,
                        help="worker processes for the width-4 box scan")
    p_enum.add_argument("--bounds",
                        help="comma-separated diagonal bounds for generic widths")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="check a serialized pattern or catalog")
    p_verify.add_argument("input")
    p_verify.set_defaults(func=cmd_verify)

    p_map = sub.add_parser("map", help="fibers and orbit correspondence of the "
                                       "frieze-to-Y transfer map")
    add_common(p_map, kinds=False)
    p_map.set_defaults(func=cmd_map)

    p_orbits = sub.add_parser("orbits", help="cyclic-shift orbit decomposition")
    add_common(p_orbits)
    p_orbits.add_argument("--bounds",
                          help="comma-separated diagonal bounds for generic widths")
    p_orbits.set_defaults(func=cmd_orbits)

    p_render = sub.add_parser("render", help="staggered ASCII rendering")
    p_render.add_argument("input")
    p_render.add_argument("--index", type=int, help="render one catalog entry")
    p_render.add_argument("--output", help="write to a file instead of stdout")
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
