"""Catalog serialization (JSON, CSV) and staggered ASCII rendering.

Single pattern objects use the schema

    {"schema": "frieze/1", "kind": "y"|"coxeter", "width": n, "rows": [[...]]}

with integer entries as JSON ints and non-integers as "p/q" strings, so no
value ever passes through a float.  A catalog wraps a sorted pattern list
with generation parameters and per-pattern orbit metadata:

    {"schema": "frieze-catalog/1", "kind": ..., "width": ..., "parameters":
     {...}, "patterns": [{"id": ..., "tuple": ..., "orbit_root": ...,
     "orbit_size": ..., "intrinsic_period": ..., "glide_shift": ...,
     "rows": [[...]]}, ...]}

CSV catalogs carry only the identifying tuples (full entry tuple for Y,
quiddity for Coxeter), one column per letter, in the same order as JSON.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import coxeter, search, ymap
from .closedform import w3_boxes, w4_boxes
from .core import (PatternKind, PeriodicPattern, glide_shift, intrinsic_period)

PATTERN_SCHEMA = "frieze/1"
CATALOG_SCHEMA = "frieze-catalog/1"


def _value_to_json(v: Fraction):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _value_from_json(x) -> Fraction:
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ValueError(f"pattern entries must be ints or 'p/q' strings, got {x!r}")


def pattern_to_obj(p: PeriodicPattern) -> dict:
    return {
        "schema": PATTERN_SCHEMA,
        "kind": p.kind.value,
        "width": p.width,
        "rows": [[_value_to_json(v) for v in row] for row in p.rows],
    }


def raw_pattern_from_obj(obj: dict) -> tuple[PatternKind, int, list[list[Fraction]]]:
    """Decode without validating invariants (the verifier checks them itself)."""
    if obj.get("schema") != PATTERN_SCHEMA:
        raise ValueError(f"expected schema {PATTERN_SCHEMA!r}, got {obj.get('schema')!r}")
    kind = PatternKind(obj["kind"])
    width = obj["width"]
    if not isinstance(width, int):
        raise ValueError(f"width must be an int, got {width!r}")
    rows = [[_value_from_json(v) for v in row] for row in obj["rows"]]
    return kind, width, rows


def pattern_from_obj(obj: dict) -> PeriodicPattern:
    kind, width, rows = raw_pattern_from_obj(obj)
    return PeriodicPattern(kind, width, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class CatalogEntry:
    id: int
    key_tuple: tuple[int, ...]
    pattern: PeriodicPattern
    orbit_root: int
    orbit_size: int
    intrinsic_period: int
    glide_shift: int


@dataclass(frozen=True)
class Catalog:
    kind: PatternKind
    width: int
    parameters: dict
    entries: tuple[CatalogEntry, ...]


def _with_orbits(kind: PatternKind, width: int, parameters: dict,
                 keys: Sequence[tuple[int, ...]],
                 patterns: Sequence[PeriodicPattern]) -> Catalog:
    root = {}
    size = {}
    for orbit in ymap.orbit_decomposition(patterns):
        for member in orbit:
            root[member] = orbit[0]
            size[member] = len(orbit)
    entries = tuple(
        CatalogEntry(
            id=i,
            key_tuple=tuple(keys[i]),
            pattern=patterns[i],
            orbit_root=root[i],
            orbit_size=size[i],
            intrinsic_period=intrinsic_period(patterns[i]),
            glide_shift=glide_shift(patterns[i]),
        )
        for i in range(len(patterns)))
    return Catalog(kind, width, parameters, entries)


def y_catalog(width: int, bounds: Optional[Sequence[int]] = None,
              parallelism: int = 1) -> Catalog:
    """Catalog of all arithmetic Y patterns of a width, sorted by diagonal."""
    sols = search.y_solutions(width, bounds=bounds, parallelism=parallelism)
    patterns = search.patterns_of(sols)
    if width in (3, 4) and bounds is None:
        boxes = w3_boxes() if width == 3 else w4_boxes()
        parameters = {"mode": "proven-boxes", "boxes": [list(b.bounds) for b in boxes]}
    else:
        used = bounds if bounds is not None else search.DEFAULT_GENERIC_BOUNDS[width]
        parameters = {"mode": "generic", "bounds": list(used)}
    return _with_orbits(PatternKind.Y, width, parameters, sols.full_tuples, patterns)


def coxeter_catalog(width: int) -> Catalog:
    """Catalog of all arithmetic Coxeter friezes of a width, one per
    triangulation, keyed by quiddity."""
    patterns = coxeter.enumerate_frieze(width)
    keys = [tuple(int(v) for v in p.rows[2]) for p in patterns]
    parameters = {"mode": "triangulations", "polygon": width + 3}
    return _with_orbits(PatternKind.COXETER, width, parameters, keys, patterns)


def build_catalog(kind: PatternKind, width: int,
                  bounds: Optional[Sequence[int]] = None,
                  parallelism: int = 1) -> Catalog:
    if kind is PatternKind.Y:
        return y_catalog(width, bounds=bounds, parallelism=parallelism)
    return coxeter_catalog(width)


def catalog_to_obj(catalog: Catalog) -> dict:
    key_name = "tuple" if catalog.kind is PatternKind.Y else "quiddity"
    patterns = []
    for entry in catalog.entries:
        obj = {"id": entry.id, key_name: list(entry.key_tuple)}
        if catalog.kind is PatternKind.Y:
            obj["diagonal"] = list(entry.key_tuple[:catalog.width])
        obj.update({
            "orbit_root": entry.orbit_root,
            "orbit_size": entry.orbit_size,
            "intrinsic_period": entry.intrinsic_period,
            "glide_shift": entry.glide_shift,
            "rows": pattern_to_obj(entry.pattern)["rows"],
        })
        patterns.append(obj)
    return {
        "schema": CATALOG_SCHEMA,
        "kind": catalog.kind.value,
        "width": catalog.width,
        "parameters": catalog.parameters,
        "patterns": patterns,
    }


def catalog_from_obj(obj: dict) -> Catalog:
    if obj.get("schema") != CATALOG_SCHEMA:
        raise ValueError(f"expected schema {CATALOG_SCHEMA!r}, got {obj.get('schema')!r}")
    kind = PatternKind(obj["kind"])
    width = obj["width"]
    key_name = "tuple" if kind is PatternKind.Y else "quiddity"
    entries = []
    for pat in obj["patterns"]:
        rows = tuple(tuple(_value_from_json(v) for v in row) for row in pat["rows"])
        entries.append(CatalogEntry(
            id=pat["id"],
            key_tuple=tuple(pat[key_name]),
            pattern=PeriodicPattern(kind, width, rows),
            orbit_root=pat["orbit_root"],
            orbit_size=pat["orbit_size"],
            intrinsic_period=pat["intrinsic_period"],
            glide_shift=pat["glide_shift"],
        ))
    return Catalog(kind, width, dict(obj["parameters"]), tuple(entries))


def catalog_to_json(catalog: Catalog) -> str:
    return json.dumps(catalog_to_obj(catalog), indent=2) + "\n"


def catalog_from_json(text: str) -> Catalog:
    return catalog_from_obj(json.loads(text))


def raw_patterns_from_obj(obj: dict) -> list[tuple[PatternKind, int, list[list[Fraction]]]]:
    """Accept either a single pattern object or a catalog; no validation."""
    schema = obj.get("schema")
    if schema == PATTERN_SCHEMA:
        return [raw_pattern_from_obj(obj)]
    if schema == CATALOG_SCHEMA:
        kind = PatternKind(obj["kind"])
        width = obj["width"]
        if not isinstance(width, int):
            raise ValueError(f"width must be an int, got {width!r}")
        return [(kind, width, [[_value_from_json(v) for v in row] for row in pat["rows"]])
                for pat in obj["patterns"]]
    raise ValueError(f"unrecognized schema {schema!r}")


def tuple_header(kind: PatternKind, width: int) -> tuple[str, ...]:
    """CSV column names: entry letters for Y, q0..q{n+2} for Coxeter."""
    if kind is PatternKind.COXETER:
        return tuple(f"q{i}" for i in range(width + 3))
    count = width * (width + 3) // 2
    if count <= 26:
        return tuple(string.ascii_lowercase[:count])
    return tuple(f"v{i:02d}" for i in range(count))


def catalog_to_csv(catalog: Catalog) -> str:
    header = tuple_header(catalog.kind, catalog.width)
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in entry.key_tuple) for entry in catalog.entries]
    return "\n".join(lines) + "\n"


def tuples_from_csv(text: str) -> tuple[tuple[str, ...], list[tuple[int, ...]]]:
    lines = [line for line in text.split("\n") if line]
    header = tuple(lines[0].split(","))
    rows = [tuple(int(v) for v in line.split(",")) for line in lines[1:]]
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row {row} does not match header width {len(header)}")
    return header, rows


def format_value(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render_ascii(pattern: PeriodicPattern, periods: int = 2) -> str:
    """Staggered text layout: row m shifted right by m half-cells, `periods`
    copies of each row so the glide repetition is visible."""
    total = periods * pattern.period
    texts = [[format_value(row[k % pattern.period]) for k in range(total)]
             for row in pattern.rows]
    cell = max(len(t) for row in texts for t in row) + 1
    cell += cell % 2
    lines = []
    for m, row in enumerate(texts):
        line = " " * (m * cell // 2)
        line += "".join(t.ljust(cell) for t in row)
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"
