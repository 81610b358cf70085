import pytest
from hypothesis import given
from hypothesis import strategies as st

from growthbound.geom import (
    DimensionError,
    Orientation,
    l1_distance,
    lex_compare,
    neighbors,
    orientation_table,
)

cells2 = st.tuples(st.integers(-20, 20), st.integers(-20, 20))
cells3 = st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))


def test_lex_compare_examples():
    assert lex_compare((0, 0), (0, 0)) == 0
    assert lex_compare((5, 0), (0, 1)) < 0
    assert lex_compare((-1, 7, 7), (0, 0, 0)) < 0


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        lex_compare((0, 0), (0, 0, 0))


@given(cells2, cells2, cells2)
def test_lex_is_total_order(a, b, c):
    assert lex_compare(a, b) == -lex_compare(b, a)
    assert (lex_compare(a, b) == 0) == (a == b)
    if lex_compare(a, b) < 0 and lex_compare(b, c) < 0:
        assert lex_compare(a, c) < 0


def test_orientation_examples():
    assert Orientation.identity(2).apply((3, -2)) == (3, -2)
    quarter = Orientation.from_images((0, 1), (-1, 0))
    assert quarter.apply((1, 0)) == (0, 1)
    flip = Orientation.from_images((1, 0), (0, -1))
    assert flip.apply((1, 2)) == (1, -2)


@pytest.mark.parametrize("dim,size", [(2, 8), (3, 48)])
def test_orientation_table(dim, size):
    table = orientation_table(dim)
    assert len(table.elements) == size
    for o in table.elements:
        assert o.compose(o.inverse()) == Orientation.identity(dim)


@given(st.sampled_from(orientation_table(3).elements), cells3, cells3)
def test_orientations_are_isometries(o, a, b):
    assert l1_distance(o.apply(a), o.apply(b)) == l1_distance(a, b)
    assert o.inverse().apply(o.apply(a)) == a


@given(st.sampled_from(orientation_table(3).elements), st.sampled_from(orientation_table(3).elements), cells3)
def test_compose_matches_application(o, p, c):
    assert o.compose(p).apply(c) == o.apply(p.apply(c))


def test_neighbors():
    assert sorted(neighbors((0, 0))) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert len(neighbors((0, 0, 0))) == 6
