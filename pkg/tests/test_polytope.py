from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conelab import (
    BoxUnderivable,
    ExplosionGuard,
    Polytope,
    SsmInstance,
    bounding_box,
    contains,
    integer_points,
    ssm_to_pic,
)


def brute_points(p, box):
    # independent, unpruned filter over the whole box
    ranges = [range(lo, hi + 1) for lo, hi in zip(box.lower, box.upper)]
    return [pt for pt in product(*ranges) if contains(p, pt)]


UNIT_INTERVAL = Polytope(((1,), (-1,)), (1, 0))


def test_contains_interval():
    assert contains(UNIT_INTERVAL, (0,))
    assert contains(UNIT_INTERVAL, (1,))
    assert not contains(UNIT_INTERVAL, (2,))


def test_contains_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        contains(UNIT_INTERVAL, (0, 0))


def test_contains_gadget_point():
    pic, _ = ssm_to_pic(SsmInstance((2, 3), 7))
    assert contains(pic.polytope, (0, 1, 1, 0))
    assert not contains(pic.polytope, (0, 1, 1, 1))


def test_bounding_box_single_variable_rows():
    box = bounding_box(UNIT_INTERVAL)
    assert (box.lower, box.upper, box.empty) == ((0,), (1,), False)


def test_bounding_box_of_gadget_is_unit_fibers_times_target():
    pic, gadget = ssm_to_pic(SsmInstance((2, 3), 7))
    box = bounding_box(pic.polytope)
    d = gadget.d
    assert box.lower == (0,) * (d + 1)
    assert box.upper == (1,) * d + (7,)
    assert box.radius == 7


def test_bounding_box_needs_multi_row_propagation():
    # x + y <= 3 alone bounds nothing; with 0 <= x, 0 <= y it bounds both
    p = Polytope(((1, 1), (-1, 0), (0, -1)), (3, 0, 0))
    box = bounding_box(p)
    assert box.lower == (0, 0)
    assert box.upper == (3, 3)


def test_bounding_box_underivable_without_lower_bounds():
    with pytest.raises(BoxUnderivable):
        bounding_box(Polytope(((1, 1),), (1,)))


def test_bounding_box_flags_contradiction_as_empty():
    box = bounding_box(Polytope(((-1,), (1,)), (0, -1)))
    assert box.empty
    assert box.volume == 0


def test_integer_points_unit_square():
    square = Polytope(((1, 0), (-1, 0), (0, 1), (0, -1)), (1, 0, 1, 0))
    assert integer_points(square) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_integer_points_empty_polytope():
    assert integer_points(Polytope(((-1,), (1,)), (0, -1))) == []


def test_integer_points_of_gadget_match_brute_force():
    pic, gadget = ssm_to_pic(SsmInstance((2, 3), 7))
    pts = integer_points(pic.polytope)
    assert pts == list(gadget.points)
    assert pts == brute_points(pic.polytope, bounding_box(pic.polytope))


def test_integer_points_guard_trips_on_tiny_cap():
    square = Polytope(((1, 0), (-1, 0), (0, 1), (0, -1)), (9, 0, 9, 0))
    with pytest.raises(ExplosionGuard):
        integer_points(square, cap=10)


@st.composite
def small_polytopes(draw):
    d = draw(st.integers(min_value=1, max_value=3))
    m = draw(st.integers(min_value=1, max_value=4))
    rows = tuple(
        tuple(draw(st.integers(min_value=-3, max_value=3)) for _ in range(d))
        for _ in range(m)
    )
    rhs = tuple(draw(st.integers(min_value=-4, max_value=6)) for _ in range(m))
    # explicit box rows keep everything derivable and small
    box_rows = []
    box_rhs = []
    for j in range(d):
        unit = [0] * d
        unit[j] = 1
        box_rows.append(tuple(unit))
        box_rhs.append(draw(st.integers(min_value=0, max_value=4)))
        unit = [0] * d
        unit[j] = -1
        box_rows.append(tuple(unit))
        box_rhs.append(draw(st.integers(min_value=0, max_value=4)))
    return Polytope(rows + tuple(box_rows), rhs + tuple(box_rhs))


@given(p=small_polytopes())
@settings(max_examples=120)
def test_enumeration_agrees_with_unpruned_filter(p):
    box = bounding_box(p)
    pts = integer_points(p)
    if box.empty:
        assert pts == []
        return
    assert pts == brute_points(p, box)
    assert pts == sorted(set(pts))
    for pt in pts:
        assert all(lo <= v <= hi for v, lo, hi in zip(pt, box.lower, box.upper))
