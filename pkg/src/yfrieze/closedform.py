"""Closed-form solutions of the width-3 and width-4 diamond systems.

Fixing the first diagonal (the leading column of the fundamental domain)
determines every other domain entry.  For width 3 with diagonal (a, b, c)
the domain is

    a d g i
     b e h
      c f

and the diamond relations reduce to ad = 1+b, be = (1+d)(1+c), cf = 1+e,
dg = 1+e, eh = (1+g)(1+f), gi = 1+h, solved below in closed form.  Width 4
with diagonal (a, b, c, d) is analogous with entries e..n.

The integrality inequalities (numerator >= denominator for each solved
entry) and the finite search boxes they imply live here too; everything is
evaluated over exact integers, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .core import FundamentalDomain


@dataclass(frozen=True)
class W3Entries:
    d: Fraction
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction
    i: Fraction

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.d, self.e, self.f, self.g, self.h, self.i)


@dataclass(frozen=True)
class W4Entries:
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction
    i: Fraction
    j: Fraction
    k: Fraction
    l: Fraction
    m: Fraction
    n: Fraction

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.e, self.f, self.g, self.h, self.i,
                self.j, self.k, self.l, self.m, self.n)


def _check_diagonal(diag: Sequence[int], width: int) -> tuple[int, ...]:
    vals = tuple(diag)
    if len(vals) != width:
        raise ValueError(f"expected a diagonal of {width} values, got {len(vals)}")
    if any(v < 1 or int(v) != v for v in vals):
        raise ValueError(f"diagonal values must be positive integers, got {vals}")
    return tuple(int(v) for v in vals)


def w3_entries(diag: Sequence[int]) -> W3Entries:
    """Solve the width-3 system for diagonal (a, b, c) >= 1 componentwise."""
    a, b, c = _check_diagonal(diag, 3)
    p3 = a * b + a * c + b * c + a + b + c + 1
    return W3Entries(
        d=Fraction(b + 1, a),
        e=Fraction((c + 1) * (a + b + 1), a * b),
        f=Fraction(p3, a * b * c),
        g=Fraction(p3, b * (b + 1)),
        h=Fraction((a + 1) * (b + c + 1), b * c),
        i=Fraction(b + 1, c),
    )


def w4_entries(diag: Sequence[int]) -> W4Entries:
    """Solve the width-4 system for diagonal (a, b, c, d) >= 1 componentwise."""
    a, b, c, d = _check_diagonal(diag, 4)
    p3 = a * b + a * c + b * c + a + b + c + 1
    big = (d + 1) * p3 + a * b * c  # = sum of all squarefree monomials in a,b,c,d
    q = b * c + b * d + c * d + b + c + d + 1
    return W4Entries(
        e=Fraction(b + 1, a),
        f=Fraction((c + 1) * (a + b + 1), a * b),
        g=Fraction((d + 1) * p3, a * b * c),
        h=Fraction(big, a * b * c * d),
        i=Fraction(p3, b * (b + 1)),
        j=Fraction((b + c + 1) * big, b * (b + 1) * c * (c + 1)),
        k=Fraction((a + 1) * q, b * c * d),
        l=Fraction(q, c * (c + 1)),
        m=Fraction((b + 1) * (c + d + 1), c * d),
        n=Fraction(c + 1, d),
    )


def w3_system_holds(diag: Sequence[int], ent: W3Entries) -> bool:
    """Exact check of the six defining relations for width 3."""
    a, b, c = (Fraction(v) for v in diag)
    d, e, f, g, h, i = ent.as_tuple()
    return (a * d == 1 + b
            and b * e == (1 + d) * (1 + c)
            and c * f == 1 + e
            and d * g == 1 + e
            and e * h == (1 + g) * (1 + f)
            and g * i == 1 + h)


def w4_system_holds(diag: Sequence[int], ent: W4Entries) -> bool:
    """Exact check of the ten defining relations for width 4."""
    a, b, c, d = (Fraction(v) for v in diag)
    e, f, g, h, i, j, k, l, m, n = ent.as_tuple()
    return (a * e == 1 + b
            and b * f == (1 + e) * (1 + c)
            and c * g == (1 + f) * (1 + d)
            and d * h == 1 + g
            and e * i == 1 + f
            and f * j == (1 + i) * (1 + g)
            and g * k == (1 + j) * (1 + h)
            and i * l == 1 + j
            and j * m == (1 + l) * (1 + k)
            and l * n == 1 + m)


def w3_inequalities(diag: Sequence[int]) -> tuple[bool, ...]:
    """The six numerator >= denominator conditions for width 3, in order (i)..(vi)."""
    a, b, c = _check_diagonal(diag, 3)
    p3 = a * b + a * c + b * c + a + b + c + 1
    return (
        b + 1 >= a,
        (c + 1) * (a + b + 1) >= a * b,
        p3 >= a * b * c,
        p3 >= b * (b + 1),
        (a + 1) * (b + c + 1) >= b * c,
        b + 1 >= c,
    )


def w4_inequalities(diag: Sequence[int]) -> tuple[bool, ...]:
    """The ten numerator >= denominator conditions for width 4, in order (i)..(x)."""
    a, b, c, d = _check_diagonal(diag, 4)
    p3 = a * b + a * c + b * c + a + b + c + 1
    big = (d + 1) * p3 + a * b * c
    q = b * c + b * d + c * d + b + c + d + 1
    return (
        b + 1 >= a,
        (c + 1) * (a + b + 1) >= a * b,
        (d + 1) * p3 >= a * b * c,
        big >= a * b * c * d,
        p3 >= b * (b + 1),
        (b + c + 1) * big >= b * (b + 1) * c * (c + 1),
        (a + 1) * q >= b * c * d,
        q >= c * (c + 1),
        (b + 1) * (c + d + 1) >= c * d,
        c + 1 >= d,
    )


def w3_product_ratio_at_least_2(diag: Sequence[int]) -> bool:
    """(a+1)(b+1)(c+1) >= 2abc; equivalent form of width-3 inequality (iii)."""
    a, b, c = _check_diagonal(diag, 3)
    return (a + 1) * (b + 1) * (c + 1) >= 2 * a * b * c


def w4_product_ratio_at_least_2(diag: Sequence[int]) -> bool:
    """(a+1)(b+1)(c+1)(d+1) >= 2abcd; equivalent form of width-4 inequality (iv)."""
    a, b, c, d = _check_diagonal(diag, 4)
    return (a + 1) * (b + 1) * (c + 1) * (d + 1) >= 2 * a * b * c * d


def w3_b_quadratic_nonpositive(b: int) -> bool:
    """b^2 - 15b - 60 <= 0: the step bounding b <= 18 once a <= 4, c <= 11."""
    return b * b - 15 * b - 60 <= 0


def w4_bc_quadratic_nonpositive(x: int) -> bool:
    """x^2 - 143x - 4326 <= 0: bounds b or c by 168 once d <= 41 and the other <= 102."""
    return x * x - 143 * x - 4326 <= 0


@dataclass(frozen=True)
class SearchBox:
    """Per-variable inclusive upper bounds; every lower bound is 1."""

    bounds: tuple[int, ...]

    def __post_init__(self):
        if any(b < 1 for b in self.bounds):
            raise ValueError(f"bounds must be >= 1, got {self.bounds}")

    def __contains__(self, point: Sequence[int]) -> bool:
        return (len(point) == len(self.bounds)
                and all(1 <= v <= b for v, b in zip(point, self.bounds)))

    def volume(self) -> int:
        return prod(self.bounds)


def w3_boxes() -> tuple[SearchBox, SearchBox]:
    """The two proven width-3 boxes: a<=4, b<=18, c<=11 and its a/c swap."""
    return (SearchBox((4, 18, 11)), SearchBox((11, 18, 4)))


def w4_boxes() -> tuple[SearchBox, SearchBox, SearchBox, SearchBox]:
    """The four proven width-4 boxes (a<=5 or d<=5, with b/c in 102/168 either way)."""
    return (
        SearchBox((5, 102, 168, 41)),
        SearchBox((5, 168, 102, 41)),
        SearchBox((41, 102, 168, 5)),
        SearchBox((41, 168, 102, 5)),
    )


def w3_domain(diag: Sequence[int]) -> FundamentalDomain:
    a, b, c = _check_diagonal(diag, 3)
    ent = w3_entries(diag)
    return FundamentalDomain(3, (
        (Fraction(a), ent.d, ent.g, ent.i),
        (Fraction(b), ent.e, ent.h),
        (Fraction(c), ent.f),
    ))


def w4_domain(diag: Sequence[int]) -> FundamentalDomain:
    a, b, c, d = _check_diagonal(diag, 4)
    ent = w4_entries(diag)
    return FundamentalDomain(4, (
        (Fraction(a), ent.e, ent.i, ent.l, ent.n),
        (Fraction(b), ent.f, ent.j, ent.m),
        (Fraction(c), ent.g, ent.k),
        (Fraction(d), ent.h),
    ))


def domain_from_diagonal(diag: Sequence[int]) -> FundamentalDomain:
    """Closed-form domain for a width-3 or width-4 diagonal."""
    if len(diag) == 3:
        return w3_domain(diag)
    if len(diag) == 4:
        return w4_domain(diag)
    raise ValueError(f"no closed form for width {len(diag)}; use the generic search")
