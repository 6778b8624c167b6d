from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from frieze_patterns.core import DomainError, KnitBlocked, PatternGrid, Strip, ZigZag
from frieze_patterns.yfrieze import (
    YFrieze,
    check_glide_symmetry,
    read_zigzag,
    verify_yfrieze,
    y_diamond_check,
    y_knit_east_step,
    y_knit_horizontal,
    y_knit_vertical,
    y_knit_vertical_step,
    y_knit_west_step,
)

import known_patterns as pf


@pytest.mark.parametrize("nwes,expected", [
    ((0, 3, 3, 8), True),
    ((0, 1, 1, 0), True),
    ((0, 3, 3, 7), False),
])
def test_y_diamond_check(nwes, expected):
    assert y_diamond_check(*nwes) is expected


@pytest.mark.parametrize("nwe,south", [
    ((0, 3, 3), 8),
    ((3, 8, 8), 15),
    ((9, 2, 5), 0),
])
def test_vertical_step(nwe, south):
    assert y_knit_vertical_step(*nwe) == south
    assert y_diamond_check(nwe[0], nwe[1], nwe[2], south)


def test_vertical_step_blocked():
    with pytest.raises(KnitBlocked):
        y_knit_vertical_step(-1, 5, 5)


def test_horizontal_steps_solve_the_rule():
    e = y_knit_east_step(2, 8, 3)
    assert e == 9 and y_diamond_check(2, 3, e, 8)
    w = y_knit_west_step(2, 8, 9)
    assert w == 3


def test_constant_row_knits_to_squares_minus_one():
    strip = y_knit_vertical([3], 1, max_rows=4)
    assert isinstance(strip, Strip)
    assert [row[0] for row in strip.rows] == pf.CONSTANT_STRIP_ROWS
    strip = y_knit_vertical([3], 1, max_rows=30)
    assert [row[0] for row in strip.rows] == [(r + 1) ** 2 - 1 for r in range(31)]


def test_first_row_125_closes_at_width_3():
    f = y_knit_vertical([1, 2, 5], period=3)
    assert isinstance(f, YFrieze) and f.width == 3
    for r, row in enumerate(pf.ROWS_125, start=1):
        assert f.grid.row(r)[:3] == row
        assert f.grid.row(r)[3:] == row
    # the implied row of -1s: knit from rows n and n+1
    n = f.width
    assert all(y_knit_vertical_step(f.at(n, k + 1), 0, 0) == -1 for k in range(n + 3))


def test_row_of_ones_closes_at_width_1():
    # (1*1 - 0 - 1) / 1 = 0
    f = y_knit_vertical([1])
    assert f.width == 1
    assert f.grid == pf.width1_grid()


def test_knit_blocked_reports_position():
    with pytest.raises(KnitBlocked) as info:
        y_knit_vertical([1, -1, 2])
    assert (info.value.row, info.value.column) == (1, 1)


def test_zero_first_row_rejected():
    with pytest.raises(DomainError):
        y_knit_vertical([0, 0])


def test_minus_one_row_blocks_vertical_knitting():
    first = pf.MINUS_ONE_ROWS[1]
    # the pattern is valid but its second row already contains a -1
    with pytest.raises(KnitBlocked):
        y_knit_vertical(first)


def test_horizontal_knitting_mixed_zigzag():
    z = ZigZag(5, pf.ZIGZAG5_VALUES, pf.ZIGZAG5_DIRS)
    f = y_knit_horizontal(z)
    assert f.width == 5
    for (r, k), value in pf.ZIGZAG5_KNITTED.items():
        assert f.at(r, k) == value
    assert verify_yfrieze(f).valid
    assert read_zigzag(f, pf.ZIGZAG5_DIRS, 0) == z


def test_horizontal_knitting_unitary_width_3():
    f = y_knit_horizontal(ZigZag.diagonal([1, 2, 3]))
    assert f.diagonal() == (1, 2, 3)
    assert f.is_arithmetic()


def test_horizontal_knitting_all_ones():
    f = y_knit_horizontal(ZigZag.diagonal([1, 1, 1]))
    for (r, k), value in pf.HALVES_ENTRIES.items():
        assert f.at(r, k) == Fraction(value)
    assert not f.is_arithmetic()


def test_horizontal_knitting_reproduces_diagonal_1_to_5():
    f = y_knit_horizontal(ZigZag.diagonal([1, 2, 3, 4, 5]))
    assert f.grid == pf.diag5_grid()


def test_horizontal_knitting_rejects_nonpositive():
    with pytest.raises(DomainError):
        y_knit_horizontal(ZigZag.diagonal([1, 0, 2]))
    with pytest.raises(DomainError):
        y_knit_horizontal(ZigZag.diagonal([1, Fraction(-1, 2)]))


def test_read_zigzag_width_1():
    f = YFrieze(pf.width1_grid())
    assert read_zigzag(f, (), 0).values == (1,)


def test_verify_pattern_with_minus_ones():
    report = verify_yfrieze(pf.minus_one_grid())
    assert report.valid and report.width == 4


def test_verify_width_5():
    report = verify_yfrieze(pf.diag5_grid())
    assert report.valid and report.width == 5


def test_verify_flags_a_perturbed_24():
    g = pf.diag5_grid().with_entry(2, 6, 23)
    report = verify_yfrieze(g)
    assert not report.valid
    # the entry is a corner of four diamonds: as W, as E, as S and as N
    assert sorted(report.violations) == [(1, 6), (2, 5), (2, 6), (3, 5)]


def test_verify_flags_bad_boundary():
    g = PatternGrid(1, [(0,) * 4, (1,) * 4, (0, 0, 0, 1)])
    report = verify_yfrieze(g)
    assert not report.boundary_ok and not report.valid


@pytest.mark.parametrize("make", [
    lambda: y_knit_vertical([1, 2, 5]),
    lambda: YFrieze(pf.minus_one_grid()),
    lambda: YFrieze(pf.diag5_grid()),
])
def test_glide_symmetry_holds(make):
    assert check_glide_symmetry(make())


def test_glide_symmetry_in_pair_indices():
    # b[i, j] == b[j, i + n + 3] read straight off the (i, j) accessor
    f = YFrieze(pf.minus_one_grid())
    n = f.width
    for i in range(-8, 8):
        for j in range(i + 1, i + n + 3):
            assert f.get(i, j) == f.get(j, i + n + 3)
            assert f.get(i, j) == f.get(i + n + 3, j + n + 3)


def test_glide_symmetry_detects_swap():
    g = pf.diag5_grid()
    swapped = g.with_entry(2, 0, g.at(2, 1)).with_entry(2, 1, g.at(2, 0))
    assert not check_glide_symmetry(swapped)


positive = st.fractions(min_value=Fraction(1, 20), max_value=20, max_denominator=20)


@st.composite
def zigzags(draw, max_width=6):
    n = draw(st.integers(1, max_width))
    values = tuple(draw(st.lists(positive, min_size=n, max_size=n)))
    dirs = tuple(draw(st.lists(st.sampled_from(["SE", "SW"]), min_size=n - 1, max_size=n - 1)))
    start = draw(st.integers(-5, 5))
    return ZigZag(n, values, dirs, start)


@settings(max_examples=60, deadline=None)
@given(zigzags())
def test_knit_read_round_trip(z):
    f = y_knit_horizontal(z)
    assert read_zigzag(f, z.directions, z.start) == z
    assert verify_yfrieze(f).valid
    assert check_glide_symmetry(f)


@settings(max_examples=40, deadline=None)
@given(zigzags(), st.sampled_from(["SE", "SW"]))
def test_other_zigzags_knit_the_same_pattern(z, first_dir):
    # any other zig-zag through the pattern gives it back
    f = y_knit_horizontal(z)
    dirs = (first_dir,) + z.directions[1:] if z.width > 1 else ()
    again = y_knit_horizontal(read_zigzag(f, dirs, 3))
    assert again == f


@settings(max_examples=40, deadline=None)
@given(zigzags())
def test_vertical_knitting_reproduces_positive_patterns(z):
    f = y_knit_horizontal(z)
    again = y_knit_vertical(f.grid.row(1), f.width + 3)
    assert again == f


@settings(max_examples=40, deadline=None)
@given(zigzags(max_width=4), zigzags(max_width=4))
def test_distinct_tuples_give_distinct_patterns(z1, z2):
    if z1.width != z2.width:
        return
    z2 = ZigZag(z2.width, z2.values, z1.directions, z1.start)
    f1, f2 = y_knit_horizontal(z1), y_knit_horizontal(z2)
    assert (f1 == f2) == (z1.values == z2.values)
