"""Triangulation generation, quiddities and frieze construction."""

import math

import pytest

import yfrieze as yf


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


# ----------------------------------------------------------- triangulations

@pytest.mark.parametrize("v,count", [(3, 1), (4, 2), (5, 5), (6, 14), (7, 42), (8, 132)])
def test_triangulation_counts(v, count):
    ts = yf.all_triangulations(v)
    assert len(ts) == count == catalan(v - 2)
    assert len({t.diagonals for t in ts}) == count


def test_triangulation_order_is_deterministic():
    assert yf.all_triangulations(7) == yf.all_triangulations(7)
    keys = [t.sort_key() for t in yf.all_triangulations(7)]
    assert keys == sorted(keys)


def test_triangulation_validation():
    with pytest.raises(ValueError):
        yf.Triangulation(6, frozenset({(0, 2)}))             # wrong count
    with pytest.raises(ValueError):
        yf.Triangulation(6, frozenset({(0, 1), (0, 3), (0, 4)}))  # edge, not diagonal
    with pytest.raises(ValueError):
        yf.Triangulation(6, frozenset({(0, 2), (1, 3), (3, 5)}))  # crossing


def test_triangle_faces():
    fan = yf.Triangulation(6, frozenset({(0, 2), (0, 3), (0, 4)}))
    assert fan.triangles() == [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]


# --------------------------------------------------------------- quiddities

def test_quiddity_of_fan():
    fan = yf.Triangulation(6, frozenset({(0, 2), (0, 3), (0, 4)}))
    assert yf.quiddity_of(fan) == (4, 1, 2, 2, 2, 1)


def test_quiddity_of_zigzag():
    zigzag = yf.Triangulation(6, frozenset({(0, 2), (2, 5), (3, 5)}))
    assert yf.quiddity_of(zigzag) == (2, 1, 3, 2, 1, 3)


def test_quiddity_of_triangle():
    assert yf.quiddity_of(yf.Triangulation(3, frozenset())) == (1, 1, 1)


def test_quiddity_sums():
    for v in (4, 5, 6, 7):
        for t in yf.all_triangulations(v):
            assert sum(yf.quiddity_of(t)) == 3 * (v - 2)


# ------------------------------------------------------ frieze construction

def test_frieze_second_rows_match_known_diagrams():
    assert yf.frieze_from_quiddity((1, 4, 1, 2, 2, 2)).rows[3] == (3, 3, 1, 3, 3, 1)
    assert yf.frieze_from_quiddity((2, 1, 3, 2, 1, 3)).rows[3] == (1, 2, 5, 1, 2, 5)
    assert yf.frieze_from_quiddity((2, 3, 1, 2, 3, 1)).rows[3] == (5, 2, 1, 5, 2, 1)


def test_frieze_from_bad_quiddities():
    with pytest.raises(yf.NotClosed):
        yf.frieze_from_quiddity((1, 1, 1, 1))
    with pytest.raises(yf.NonPositive):
        yf.frieze_from_quiddity((1, 1, 5, 1, 1, 5))
    with pytest.raises(ValueError):
        yf.frieze_from_quiddity((1, 1, 1))


def test_frieze_accepts_fractional_closed_quiddity():
    # diagonal (u, v) = (2, 2) of the width-2 recurrence, which closes over
    # the rationals but is not arithmetic
    from fractions import Fraction as F
    f = yf.frieze_from_quiddity((2, F(3, 2), F(3, 2), 2, F(5, 4)))
    assert not yf.is_arithmetic(f)


# -------------------------------------------------------------- enumeration

@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42)])
def test_enumerate_frieze_counts(n, count):
    friezes = yf.enumerate_frieze(n)
    assert len(friezes) == count == catalan(n + 1)
    # bijection with triangulations: all distinct, all arithmetic
    assert len(set(friezes)) == count
    assert all(yf.is_arithmetic(f) for f in friezes)


def test_enumerate_frieze_width_1_quiddities():
    quiddities = {f.rows[2] for f in yf.enumerate_frieze(1)}
    assert quiddities == {(1, 2, 1, 2), (2, 1, 2, 1)}


def test_enumerate_frieze_rejects_out_of_range_widths():
    with pytest.raises(ValueError):
        yf.enumerate_frieze(0)
    with pytest.raises(ValueError):
        yf.enumerate_frieze(yf.coxeter.MAX_ENUM_WIDTH + 1)
