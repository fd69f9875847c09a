"""Exact-arithmetic kernel for closed frieze patterns on a staggered grid.

Two local recurrences share one periodic storage model:

  Y rule        W*E == (1 + N)*(1 + S)    bounded by rows of 0
  Coxeter rule  W*E - N*S == 1            bounded by rows of 1 (and 0 outside)

A closed pattern of width n is stored as full rows over one column period
n + 3.  The diamond anchored at (m, k) reads

  W = (m, k),  E = (m, k+1),  N = (m-1, k+1),  S = (m+1, k)

with column indices mod the period; this is the alignment induced by
drawing row m shifted right by half a cell per row index.

All entries are `fractions.Fraction`; every operation is exact and every
value is immutable after construction, so everything here is safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class PatternKind(Enum):
    Y = "y"
    COXETER = "coxeter"


class FriezeError(Exception):
    """Base class for all pattern construction and verification errors."""


class ClosureFailure(FriezeError):
    """Row propagation did not close the pattern.

    Reports the first offending cell in row-major order: either the last
    row came out nonzero at (row, col) = its value, or the division needed
    to fill (row, col) had denominator 1 + N == 0 (value is None then).
    """

    def __init__(self, row: int, col: int, value: Optional[Fraction], reason: str):
        super().__init__(f"{reason} at row {row}, col {col}"
                         + (f" (value {value})" if value is not None else ""))
        self.row = row
        self.col = col
        self.value = value
        self.reason = reason


class InconsistentDomain(FriezeError):
    """A fully materialized grid violates a pattern invariant."""

    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class Violation:
    """First failed structural check of a raw grid, with coordinates."""

    check: str  # shape | boundary | diamond | positivity | glide
    row: int
    col: int
    detail: str

    def __str__(self) -> str:
        return f"{self.check} violation at row {self.row}, col {self.col}: {self.detail}"


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _frac_rows(rows: Iterable[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(_frac(v) for v in row) for row in rows)


def check_rows(kind: PatternKind, width: int,
               rows: Sequence[Sequence[Fraction]]) -> Optional[Violation]:
    """Validate shape, boundary rows and every diamond of a raw grid.

    Returns the first violation in deterministic scan order, or None.
    Closedness is exactly the boundary-row condition here, so no separate
    closure check exists.
    """
    period = width + 3
    nrows = width + 2 if kind is PatternKind.Y else width + 4
    if width < 1:
        return Violation("shape", -1, -1, f"width must be >= 1, got {width}")
    if len(rows) != nrows:
        return Violation("shape", len(rows), -1,
                         f"expected {nrows} rows for width {width}, got {len(rows)}")
    for m, row in enumerate(rows):
        if len(row) != period:
            return Violation("shape", m, len(row),
                             f"row {m} has {len(row)} entries, expected {period}")

    constant_rows = [(0, 0), (nrows - 1, 0)]
    if kind is PatternKind.COXETER:
        constant_rows += [(1, 1), (nrows - 2, 1)]
    for m, expected in constant_rows:
        for k, v in enumerate(rows[m]):
            if v != expected:
                return Violation("boundary", m, k,
                                 f"expected constant {expected}, got {v}")

    # An interior row equal to the closing boundary row means the pattern
    # already closed at a smaller width.
    sentinel = 0 if kind is PatternKind.Y else 1
    first_interior = 1 if kind is PatternKind.Y else 2
    for m in range(first_interior, first_interior + width):
        if all(v == sentinel for v in rows[m]):
            return Violation("closure", m, 0,
                             f"interior row {m} is identically {sentinel}; "
                             f"the pattern closes before width {width}")

    for m in range(1, nrows - 1):
        for k in range(period):
            w = rows[m][k]
            e = rows[m][(k + 1) % period]
            n_val = rows[m - 1][(k + 1) % period]
            s = rows[m + 1][k]
            if kind is PatternKind.Y:
                if w * e != (1 + n_val) * (1 + s):
                    return Violation("diamond", m, k,
                                     f"W*E = {w * e} but (1+N)(1+S) = {(1 + n_val) * (1 + s)}")
            else:
                if w * e - n_val * s != 1:
                    return Violation("diamond", m, k,
                                     f"W*E - N*S = {w * e - n_val * s}, expected 1")
    return None


@dataclass(frozen=True)
class PeriodicPattern:
    """A closed pattern of width `width`, stored at column period width + 3.

    Y kind holds rows 0..width+1 (zero rows at both ends); Coxeter kind
    holds rows 0..width+3 (zero, one, ..., one, zero).  Construction
    validates every invariant; equality and hashing are column-exact, so
    cyclic shifts of a pattern are distinct patterns.
    """

    kind: PatternKind
    width: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _frac_rows(self.rows))
        violation = check_rows(self.kind, self.width, self.rows)
        if violation is not None:
            raise InconsistentDomain(violation)

    @property
    def period(self) -> int:
        return self.width + 3

    def interior(self) -> tuple[tuple[Fraction, ...], ...]:
        """The width-many rows strictly between the boundary rows."""
        if self.kind is PatternKind.Y:
            return self.rows[1:self.width + 1]
        return self.rows[2:self.width + 2]


def y_south(w, e, n_val) -> Fraction:
    """Solve the Y rule for the bottom cell: S = W*E/(1+N) - 1.

    Raises ZeroDivisionError when 1 + N == 0.
    """
    return _frac(w) * _frac(e) / (1 + _frac(n_val)) - 1


def coxeter_east(w, n_val, s) -> Fraction:
    """Solve the unimodular rule for the right cell: E = (1 + N*S)/W.

    Raises ZeroDivisionError when W == 0.
    """
    return (1 + _frac(n_val) * _frac(s)) / _frac(w)


def propagate_y(first_row: Sequence, width: int) -> PeriodicPattern:
    """Build a closed Y pattern from its first row by repeated y_south.

    Rows 2..width+1 are filled row-major; the pattern closes iff the last
    row computes to identically zero.  Raises ClosureFailure at the first
    offending cell, ValueError on a wrong-length first row.
    """
    n = width
    period = n + 3
    first = tuple(_frac(v) for v in first_row)
    if n < 1:
        raise ValueError(f"width must be >= 1, got {n}")
    if len(first) != period:
        raise ValueError(f"first row must have {period} entries, got {len(first)}")

    rows = [(Fraction(0),) * period, first]
    for m in range(1, n + 1):
        cur = rows[m]
        above = rows[m - 1]
        nxt = []
        for k in range(period):
            den = 1 + above[(k + 1) % period]
            if den == 0:
                raise ClosureFailure(m + 1, k, None, "division by zero (1 + N = 0)")
            nxt.append(cur[k] * cur[(k + 1) % period] / den - 1)
        if m < n and all(v == 0 for v in nxt):
            # a zero row this early means the pattern closed at width m.
            raise ClosureFailure(m + 1, 0, Fraction(0),
                                 f"pattern closes at width {m}, not {n}")
        rows.append(tuple(nxt))
    for k, v in enumerate(rows[n + 1]):
        if v != 0:
            raise ClosureFailure(n + 1, k, v, "pattern does not close, last row nonzero")
    return PeriodicPattern(PatternKind.Y, n, tuple(rows))


@dataclass(frozen=True)
class FundamentalDomain:
    """One glide-symmetry domain: triangular array with n(n+3)/2 entries.

    Row m (1-based, m = 1..width) holds width + 2 - m entries; these are
    the leading entries of the pattern's interior row m.
    """

    width: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _frac_rows(self.rows))
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        if len(self.rows) != self.width:
            raise ValueError(f"expected {self.width} domain rows, got {len(self.rows)}")
        for m, row in enumerate(self.rows, start=1):
            if len(row) != self.width + 2 - m:
                raise ValueError(f"domain row {m} must have {self.width + 2 - m} "
                                 f"entries, got {len(row)}")

    def first_diagonal(self) -> tuple[Fraction, ...]:
        return tuple(row[0] for row in self.rows)

    def entry_tuple(self) -> tuple[Fraction, ...]:
        """Entries flattened diagonal-major: column 0 top-down, column 1, ..."""
        out = []
        for j in range(self.width + 1):
            for m in range(1, min(self.width, self.width + 1 - j) + 1):
                out.append(self.rows[m - 1][j])
        return tuple(out)

    @classmethod
    def from_entry_tuple(cls, width: int, values: Sequence) -> "FundamentalDomain":
        vals = list(values)
        if len(vals) != width * (width + 3) // 2:
            raise ValueError(f"expected {width * (width + 3) // 2} entries for "
                             f"width {width}, got {len(vals)}")
        rows = [[] for _ in range(width)]
        pos = 0
        for j in range(width + 1):
            for m in range(1, min(width, width + 1 - j) + 1):
                rows[m - 1].append(vals[pos])
                pos += 1
        return cls(width, tuple(tuple(r) for r in rows))


def expand_domain(dom: FundamentalDomain,
                  kind: PatternKind = PatternKind.Y) -> PeriodicPattern:
    """Unfold a fundamental domain to a full pattern over one period.

    Interior row m over the period is D_m followed by D_{n+1-m}; boundary
    rows are appended per kind.  Raises InconsistentDomain when the
    unfolded grid violates a diamond relation.
    """
    n = dom.width
    period = n + 3
    interior = [dom.rows[m - 1] + dom.rows[n - m] for m in range(1, n + 1)]
    zeros = (Fraction(0),) * period
    ones = (Fraction(1),) * period
    if kind is PatternKind.Y:
        rows = [zeros, *interior, zeros]
    else:
        rows = [zeros, ones, *interior, ones, zeros]
    return PeriodicPattern(kind, n, tuple(rows))


def domain_of(pattern: PeriodicPattern) -> FundamentalDomain:
    """Read one fundamental domain back off a pattern (inverse of expand)."""
    n = pattern.width
    rows = tuple(row[:n + 2 - m] for m, row in enumerate(pattern.interior(), start=1))
    return FundamentalDomain(n, rows)


def first_diagonal_of(pattern: PeriodicPattern) -> tuple[Fraction, ...]:
    """Column 0 of the interior rows, read top-down."""
    return tuple(row[0] for row in pattern.interior())


def is_arithmetic(pattern: PeriodicPattern) -> bool:
    """True iff every interior entry is a positive integer."""
    return all(v > 0 and v.denominator == 1
               for row in pattern.interior() for v in row)


def cyclic_shift(pattern: PeriodicPattern, s: int) -> PeriodicPattern:
    """Rotate every row left by s columns (s reduced mod the period)."""
    period = pattern.period
    s %= period
    if s == 0:
        return pattern
    rows = tuple(tuple(row[(k + s) % period] for k in range(period))
                 for row in pattern.rows)
    return PeriodicPattern(pattern.kind, pattern.width, rows)


def glide_shift_of_rows(rows: Sequence[Sequence[Fraction]], period: int) -> Optional[int]:
    """Smallest s such that rows[R-m][(k+m+s) % period] == rows[m][k] everywhere.

    This is row reversal with the per-row stagger re-alignment (reversing
    row m moves its cells sideways by m half-cells); the residual uniform
    column shift s is the recorded glide offset.  Returns None when no s
    in 0..period-1 works.
    """
    top = len(rows) - 1
    for s in range(period):
        if all(rows[top - m][(k + m + s) % period] == rows[m][k]
               for m in range(len(rows)) for k in range(period)):
            return s
    return None


def glide_shift(pattern: PeriodicPattern) -> Optional[int]:
    """Glide offset of a pattern (None only for grids lacking the symmetry)."""
    return glide_shift_of_rows(pattern.rows, pattern.period)


def intrinsic_period(pattern: PeriodicPattern) -> int:
    """Smallest divisor q of the storage period with all rows q-periodic."""
    period = pattern.period
    for q in range(1, period + 1):
        if period % q:
            continue
        if all(row[k] == row[(k + q) % period]
               for row in pattern.rows for k in range(period)):
            return q
    return period
