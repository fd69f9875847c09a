"""The row-transfer map from Coxeter friezes to Y patterns, with fiber and
orbit bookkeeping.

The map sends a width-n frieze (n >= 2) to the Y pattern whose first row is
the frieze's second interior row.  It commutes with cyclic column shifts,
so it descends to shift orbits; the fiber report records how far it is from
being a bijection at each width.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (ClosureFailure, FriezeError, PatternKind, PeriodicPattern,
                   cyclic_shift, is_arithmetic, propagate_y)
from . import coxeter, search


class MapFailure(FriezeError):
    """The image of a valid frieze failed to close or to be arithmetic.

    Cannot happen for genuine closed arithmetic friezes; raising it
    signals a corrupted input or an implementation bug.
    """


@dataclass(frozen=True)
class CorrespondenceRecord:
    """One frieze shift-orbit and the Y orbit it lands on (sizes s and t)."""

    frieze_id: int
    yfrieze_id: int
    frieze_orbit_size: int
    y_orbit_size: int


@dataclass(frozen=True)
class FiberReport:
    """Preimage sizes of every width-n Y pattern under the transfer map."""

    width: int
    fiber_sizes: tuple[int, ...]
    image_size: int
    surjective: bool
    injective: bool


def apply_p(frieze: PeriodicPattern) -> PeriodicPattern:
    """Map a width >= 2 Coxeter frieze to the Y pattern seeded by its second
    interior row."""
    if frieze.kind is not PatternKind.COXETER:
        raise ValueError("apply_p takes a Coxeter-kind pattern")
    if frieze.width < 2:
        raise ValueError("the transfer map needs a second interior row; "
                         "width-1 friezes are outside its domain")
    second = frieze.rows[3]
    try:
        image = propagate_y(second, frieze.width)
    except ClosureFailure as exc:
        raise MapFailure(f"image of frieze did not close: {exc}") from exc
    if not is_arithmetic(image):
        raise MapFailure("image of frieze is not arithmetic")
    return image


def orbit_decomposition(patterns: Sequence[PeriodicPattern]) -> list[list[int]]:
    """Partition pattern indices into cyclic-shift orbits.

    Orbits are sorted by size descending, then by smallest member index.
    The input must be closed under cyclic shifts.
    """
    index = {p: i for i, p in enumerate(patterns)}
    if len(index) != len(patterns):
        raise ValueError("patterns must be distinct")
    seen: set[int] = set()
    orbits: list[list[int]] = []
    for i, p in enumerate(patterns):
        if i in seen:
            continue
        members = set()
        for s in range(p.period):
            shifted = cyclic_shift(p, s)
            if shifted not in index:
                raise ValueError(f"pattern set not closed under shifts "
                                 f"(shift {s} of pattern {i} is missing)")
            members.add(index[shifted])
        seen |= members
        orbits.append(sorted(members))
    orbits.sort(key=lambda orbit: (-len(orbit), orbit[0]))
    return orbits


def _enumerations(width: int,
                  friezes: Optional[Sequence[PeriodicPattern]],
                  ypatterns: Optional[Sequence[PeriodicPattern]]):
    if friezes is None:
        friezes = coxeter.enumerate_frieze(width)
    if ypatterns is None:
        ypatterns = search.patterns_of(search.y_solutions(width))
    return list(friezes), list(ypatterns)


def fiber_analysis(width: int,
                   friezes: Optional[Sequence[PeriodicPattern]] = None,
                   ypatterns: Optional[Sequence[PeriodicPattern]] = None) -> FiberReport:
    """Push every frieze through the map and count hits per Y pattern.

    Both enumerations are computed for widths 2..4 when not supplied;
    other widths need them passed in.
    """
    friezes, ypatterns = _enumerations(width, friezes, ypatterns)
    index = {p: i for i, p in enumerate(ypatterns)}
    sizes = [0] * len(ypatterns)
    for frieze in friezes:
        image = apply_p(frieze)
        if image not in index:
            raise MapFailure("frieze image is not among the enumerated Y patterns; "
                             "the supplied Y enumeration is incomplete")
        sizes[index[image]] += 1
    image_size = sum(1 for s in sizes if s)
    return FiberReport(
        width=width,
        fiber_sizes=tuple(sizes),
        image_size=image_size,
        surjective=image_size == len(ypatterns),
        injective=all(s <= 1 for s in sizes),
    )


def correspondence_table(width: int,
                         friezes: Optional[Sequence[PeriodicPattern]] = None,
                         ypatterns: Optional[Sequence[PeriodicPattern]] = None
                         ) -> list[CorrespondenceRecord]:
    """One record per frieze orbit: its size s and its image orbit's size t.

    Equivariance with cyclic shifts makes the image orbit well defined by
    any representative.
    """
    friezes, ypatterns = _enumerations(width, friezes, ypatterns)
    yindex = {p: i for i, p in enumerate(ypatterns)}
    yorbit_of = {}
    yorbits = orbit_decomposition(ypatterns)
    for orbit in yorbits:
        for member in orbit:
            yorbit_of[member] = orbit
    records = []
    for orbit in orbit_decomposition(friezes):
        rep = orbit[0]
        image = apply_p(friezes[rep])
        target = yorbit_of[yindex[image]]
        records.append(CorrespondenceRecord(
            frieze_id=rep,
            yfrieze_id=target[0],
            frieze_orbit_size=len(orbit),
            y_orbit_size=len(target),
        ))
    return records
