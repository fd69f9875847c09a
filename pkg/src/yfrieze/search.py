"""Exhaustive enumeration of arithmetic Y-frieze patterns.

Three independent routes exist for width 3 and they must agree exactly:

  * enumerate_w3    proven boxes + divisibility pruning (closed form)
  * enumerate_generic  column propagation of candidate diagonals, verified
                       through propagate_y, no closed form involved
  * oracle_box_check   unpruned brute force over a full cube, used to
                       confirm the boxes lose nothing

Width 4 runs the box search only (the generic route works there too but is
slower); generic handles widths 1, 2 and exploratory larger widths with
caller-supplied bounds.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .closedform import SearchBox, w3_boxes, w3_entries, w4_boxes, w4_entries
from .core import (FundamentalDomain, PatternKind, PeriodicPattern, FriezeError,
                   domain_of, expand_domain, is_arithmetic, propagate_y)

DEFAULT_MAX_CANDIDATES = 10 ** 9
MAX_CANDIDATES_ENV = "FRIEZE_MAX_CANDIDATES"

# Default diagonal boxes for the widths whose solution sets are small enough
# to find without proven bounds.
DEFAULT_GENERIC_BOUNDS = {1: (10,), 2: (30, 30)}


class BoxTooLarge(FriezeError):
    """The requested search box exceeds the candidate-count ceiling."""


@dataclass(frozen=True)
class SolutionSet:
    """All arithmetic solutions of one width, lexicographically sorted.

    `full_tuples[i]` is the complete fundamental-domain entry tuple
    (diagonal-major order) of `diagonals[i]`.
    """

    width: int
    diagonals: tuple[tuple[int, ...], ...]
    full_tuples: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.diagonals)


def _int_tuple(values) -> tuple[int, ...]:
    return tuple(int(v) for v in values)


def _solution_set(width: int, diagonals, tuple_of) -> SolutionSet:
    diags = sorted(set(diagonals))
    return SolutionSet(width, tuple(diags), tuple(tuple_of(d) for d in diags))


def _w3_full_tuple(diag: tuple[int, ...]) -> tuple[int, ...]:
    return diag + _int_tuple(w3_entries(diag).as_tuple())


def _w4_full_tuple(diag: tuple[int, ...]) -> tuple[int, ...]:
    return diag + _int_tuple(w4_entries(diag).as_tuple())


def enumerate_w3() -> SolutionSet:
    """All width-3 diagonals whose six solved entries are positive integers."""
    found = set()
    for box in w3_boxes():
        a_hi, b_hi, c_hi = box.bounds
        for a in range(1, a_hi + 1):
            # d integral means a | b+1, so step b through that residue class.
            for b in range(1 if a == 1 else a - 1, b_hi + 1, a):
                ab = a * b
                s2 = a + b + 1
                bb1 = b * (b + 1)
                for c in range(1, c_hi + 1):
                    if ((c + 1) * s2) % ab:          # e
                        continue
                    p3 = ab + a * c + b * c + s2 + c
                    if p3 % (ab * c):                # f
                        continue
                    if p3 % bb1:                     # g
                        continue
                    if ((a + 1) * (b + c + 1)) % (b * c):  # h
                        continue
                    if (b + 1) % c:                  # i
                        continue
                    found.add((a, b, c))
    return _solution_set(3, found, _w3_full_tuple)


def _divisor_table(limit: int) -> list[list[int]]:
    table: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for multiple in range(d, limit + 1, d):
            table[multiple].append(d)
    return table


def _w4_scan_a(task: tuple[tuple[int, int, int, int], int]) -> list[tuple[int, int, int, int]]:
    """Scan one outer value a of one box; safe to run in a worker process."""
    bounds, a = task
    _, b_hi, c_hi, d_hi = bounds
    divisors = _divisor_table(c_hi + 1)
    out = []
    for b in range(1 if a == 1 else a - 1, b_hi + 1, a):  # a | b+1: e integral
        ab = a * b
        s2 = a + b + 1
        bb1 = b * (b + 1)
        for c in range(1, c_hi + 1):
            if ((c + 1) * s2) % ab:                  # f
                continue
            p3 = ab + a * c + b * c + s2 + c
            if p3 % bb1:                             # i
                continue
            abc = ab * c
            cc1 = c * (c + 1)
            jden = bb1 * cc1
            for d in divisors[c + 1]:                # n integral: d | c+1
                if d > d_hi:
                    break
                if ((d + 1) * p3) % abc:             # g
                    continue
                q = b * c + b * d + c * d + b + c + d + 1
                if q % cc1:                          # l
                    continue
                if ((b + 1) * (c + d + 1)) % (c * d):  # m
                    continue
                if ((a + 1) * q) % (b * c * d):      # k
                    continue
                big = (d + 1) * p3 + abc
                if big % (abc * d):                  # h
                    continue
                if ((b + c + 1) * big) % (jden):     # j
                    continue
                out.append((a, b, c, d))
    return out


def enumerate_w4(parallelism: int = 1) -> SolutionSet:
    """All width-4 diagonals whose ten solved entries are positive integers.

    Iterates the four proven boxes with cheapest-divisibility-first pruning
    (e before f/i, n via a divisor table before the rest).  The outer `a`
    loop of each box may be partitioned over worker processes; results are
    merged into a set and sorted, so the output is schedule-independent.
    """
    tasks = [(box.bounds, a)
             for box in w4_boxes()
             for a in range(1, box.bounds[0] + 1)]
    found: set[tuple[int, int, int, int]] = set()
    if parallelism <= 1:
        for task in tasks:
            found.update(_w4_scan_a(task))
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            for chunk in pool.map(_w4_scan_a, tasks):
                found.update(chunk)
    return _solution_set(4, found, _w4_full_tuple)


def oracle_box_check(width: int, bound: int) -> SolutionSet:
    """Unpruned brute force over the full cube [1, bound]^3.

    Independent of the proven boxes: visits every triple and tests the six
    integrality conditions directly.  Meaningful as a box-completeness
    check only for bound >= 18; smaller bounds just truncate the cube.
    """
    if width != 3:
        raise ValueError(f"oracle check is defined for width 3, got {width}")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    found = []
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            for c in range(1, bound + 1):
                if (b + 1) % a:
                    continue
                if ((c + 1) * (a + b + 1)) % (a * b):
                    continue
                p3 = a * b + a * c + b * c + a + b + c + 1
                if p3 % (a * b * c):
                    continue
                if p3 % (b * (b + 1)):
                    continue
                if ((a + 1) * (b + c + 1)) % (b * c):
                    continue
                if (b + 1) % c:
                    continue
                found.append((a, b, c))
    return _solution_set(3, found, _w3_full_tuple)


def _candidate_ceiling(max_candidates: Optional[int]) -> int:
    if max_candidates is not None:
        return max_candidates
    env = os.environ.get(MAX_CANDIDATES_ENV)
    return int(env) if env else DEFAULT_MAX_CANDIDATES


def _close_from_diagonal(width: int, diag: Sequence[int]) -> Optional[list[tuple[int, ...]]]:
    """Column-propagate a diagonal; return all period columns or None.

    Column k+1 follows from column k by solving each diamond for its east
    cell top-down; candidates are pruned as soon as an entry fails to be a
    positive integer, and accepted iff the columns come back around.
    """
    n = width
    period = n + 3
    cols = [tuple(diag)]
    for _ in range(period):
        prev = cols[-1]
        nxt: list[int] = []
        for m in range(n):
            n_val = 0 if m == 0 else nxt[m - 1]
            s_val = 0 if m == n - 1 else prev[m + 1]
            e, r = divmod((1 + n_val) * (1 + s_val), prev[m])
            if r or e <= 0:
                return None
            nxt.append(e)
        cols.append(tuple(nxt))
    if cols[period] != cols[0]:
        return None
    return cols[:period]


def enumerate_generic(width: int, box: SearchBox,
                      max_candidates: Optional[int] = None) -> SolutionSet:
    """Search every diagonal in `box` for closed arithmetic patterns.

    Works at any width; no completeness claim unless the box is proven to
    contain all solutions.  Each accepted diagonal is re-verified by
    running propagate_y on the reconstructed first row, keeping this route
    independent of the closed-form formulas.  Raises BoxTooLarge when the
    box volume exceeds the ceiling (default 10^9, overridable via the
    FRIEZE_MAX_CANDIDATES environment variable or the argument).
    """
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    if len(box.bounds) != width:
        raise ValueError(f"box must bound {width} diagonal values, got {len(box.bounds)}")
    ceiling = _candidate_ceiling(max_candidates)
    if box.volume() > ceiling:
        raise BoxTooLarge(f"box volume {box.volume()} exceeds ceiling {ceiling}")

    diagonals = []
    tuples = {}
    for diag in product(*(range(1, b + 1) for b in box.bounds)):
        cols = _close_from_diagonal(width, diag)
        if cols is None:
            continue
        first_row = tuple(col[0] for col in cols)
        pattern = propagate_y(first_row, width)  # independent re-verification
        if not is_arithmetic(pattern):
            continue
        diagonals.append(diag)
        tuples[diag] = _int_tuple(domain_of(pattern).entry_tuple())
    return _solution_set(width, diagonals, tuples.__getitem__)


def solution_domain(sols: SolutionSet, index: int) -> FundamentalDomain:
    return FundamentalDomain.from_entry_tuple(sols.width, sols.full_tuples[index])


def patterns_of(sols: SolutionSet) -> list[PeriodicPattern]:
    """Materialize every solution as a full Y pattern, in catalog order."""
    return [expand_domain(solution_domain(sols, i), PatternKind.Y)
            for i in range(len(sols))]


def y_solutions(width: int, bounds: Optional[Sequence[int]] = None,
                parallelism: int = 1) -> SolutionSet:
    """Solution set for a width: proven boxes for 3 and 4, generic otherwise.

    Widths 1 and 2 fall back to built-in default boxes; other widths need
    explicit bounds.
    """
    if width == 3 and bounds is None:
        return enumerate_w3()
    if width == 4 and bounds is None:
        return enumerate_w4(parallelism=parallelism)
    if bounds is None:
        if width not in DEFAULT_GENERIC_BOUNDS:
            raise ValueError(f"width {width} needs explicit diagonal bounds")
        bounds = DEFAULT_GENERIC_BOUNDS[width]
    return enumerate_generic(width, SearchBox(tuple(bounds)))
