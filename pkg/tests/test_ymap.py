"""The frieze-to-Y transfer map: images, fibers, orbits, correspondence."""

from collections import Counter
from fractions import Fraction as F

import pytest

import yfrieze as yf


# ----------------------------------------------------------------- apply_p

def test_apply_p_known_quiddities():
    assert yf.apply_p(yf.frieze_from_quiddity((2, 1, 3, 2, 1, 3))).rows[1] \
        == (1, 2, 5, 1, 2, 5)
    assert yf.apply_p(yf.frieze_from_quiddity((1, 4, 1, 2, 2, 2))).rows[1] \
        == (3, 3, 1, 3, 3, 1)
    assert yf.apply_p(yf.frieze_from_quiddity((3, 1, 3, 1, 3, 1))).rows[1] \
        == (2, 2, 2, 2, 2, 2)


def test_apply_p_rejects_width_1_and_wrong_kind(y3_patterns):
    width1 = yf.frieze_from_quiddity((2, 1, 2, 1))
    with pytest.raises(ValueError):
        yf.apply_p(width1)
    with pytest.raises(ValueError):
        yf.apply_p(y3_patterns[0])


def test_apply_p_flags_nonarithmetic_image():
    fractional = yf.frieze_from_quiddity((2, F(3, 2), F(3, 2), 2, F(5, 4)))
    with pytest.raises(yf.MapFailure):
        yf.apply_p(fractional)


def test_apply_p_images_are_enumerated_solutions(frieze3, y3_patterns):
    targets = set(y3_patterns)
    assert {yf.apply_p(f) for f in frieze3} == targets


# ------------------------------------------------------------------ fibers

def test_fiber_analysis_width_3(frieze3, y3_patterns):
    report = yf.fiber_analysis(3, friezes=frieze3, ypatterns=y3_patterns)
    assert report.image_size == 10
    assert report.surjective and not report.injective
    assert sorted(report.fiber_sizes, reverse=True) == [2, 2, 2, 2, 1, 1, 1, 1, 1, 1]
    assert max(report.fiber_sizes) == 2
    assert sum(report.fiber_sizes) == len(frieze3)


def test_fiber_analysis_width_4(frieze4, y4_patterns):
    report = yf.fiber_analysis(4, friezes=frieze4, ypatterns=y4_patterns)
    assert report.surjective and report.injective
    assert report.image_size == 42 == len(frieze4) == len(y4_patterns)
    assert set(report.fiber_sizes) == {1}


def test_fiber_analysis_width_2():
    report = yf.fiber_analysis(2)
    assert report.surjective and report.injective
    assert report.image_size == 5


def test_fiber_analysis_detects_incomplete_y_enumeration(frieze3, y3_patterns):
    with pytest.raises(yf.MapFailure):
        yf.fiber_analysis(3, friezes=frieze3, ypatterns=y3_patterns[:5])


# ------------------------------------------------------------------ orbits

def test_orbit_decomposition_sizes(frieze3, y3_patterns):
    assert sorted(map(len, yf.orbit_decomposition(frieze3)), reverse=True) \
        == [6, 3, 3, 2]
    assert sorted(map(len, yf.orbit_decomposition(y3_patterns)), reverse=True) \
        == [3, 3, 3, 1]


def test_orbit_of_constant_pattern_is_a_singleton():
    constant = yf.expand_domain(yf.w3_domain((2, 3, 2)))
    assert yf.orbit_decomposition([constant]) == [[0]]


def test_orbit_decomposition_width_4(frieze4, y4_patterns):
    assert [len(o) for o in yf.orbit_decomposition(frieze4)] == [7] * 6
    assert [len(o) for o in yf.orbit_decomposition(y4_patterns)] == [7] * 6


def test_orbit_decomposition_requires_shift_closure(y3_patterns):
    with pytest.raises(ValueError):
        yf.orbit_decomposition(y3_patterns[:4])


# --------------------------------------------------------------- equivariance

def test_apply_p_commutes_with_shifts(frieze3, frieze4):
    for friezes in (frieze3, frieze4):
        for f in friezes:
            image = yf.apply_p(f)
            for s in range(f.period):
                assert yf.apply_p(yf.cyclic_shift(f, s)) == yf.cyclic_shift(image, s)


# ----------------------------------------------------------- correspondence

def test_correspondence_width_3(frieze3, y3_patterns):
    records = yf.correspondence_table(3, friezes=frieze3, ypatterns=y3_patterns)
    pairs = Counter((r.frieze_orbit_size, r.y_orbit_size) for r in records)
    assert pairs == Counter({(3, 3): 2, (6, 3): 1, (2, 1): 1})
    assert sum(r.frieze_orbit_size for r in records) == 14
    assert sum(r.y_orbit_size for r in records) == 10
    # checked, not assumed: ratios stay in {1, 2}
    assert all(r.frieze_orbit_size / r.y_orbit_size in (1.0, 2.0) for r in records)


def test_correspondence_width_4(frieze4, y4_patterns):
    records = yf.correspondence_table(4, friezes=frieze4, ypatterns=y4_patterns)
    assert len(records) == 6
    assert all(r.frieze_orbit_size == r.y_orbit_size == 7 for r in records)
    # bijectivity forces every Y orbit to be hit exactly once
    assert len({r.yfrieze_id for r in records}) == 6


def test_correspondence_width_2():
    records = yf.correspondence_table(2)
    assert [(r.frieze_orbit_size, r.y_orbit_size) for r in records] == [(5, 5)]
