import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions
from moonfill.partitions import (
    EMPTY,
    Partition,
    ShapeError,
    Strip,
    added_cells,
    bump,
    contains,
    format_partition,
    intersection,
    is_horizontal_strip,
    is_vertical_strip,
    parse_partition,
    partitions_between,
    partitions_of,
    relation,
    transpose,
    union,
)


def test_normalises_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition(()) == EMPTY


@pytest.mark.parametrize("bad", [(1, 2), (2, -1), (0, 1)])
def test_rejects_non_partitions(bad):
    with pytest.raises(ShapeError):
        Partition(bad)


def test_transpose_example():
    assert transpose((4, 2, 1, 1)) == (4, 2, 1, 1)
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()


def test_union_and_intersection_are_pointwise():
    assert union((3, 1), (2, 2, 1)) == (3, 2, 1)
    assert intersection((3, 1), (2, 2, 1)) == (2, 1)


def test_strip_relations():
    assert relation((2,), (3,)) is Strip.SINGLE_CELL
    assert relation((2,), (4, 1)) is Strip.HORIZONTAL
    assert relation((1,), (2, 1, 1)) is Strip.VERTICAL
    assert relation((1,), (2, 2)) is Strip.NEITHER
    assert relation((2,), (1,)) is None
    # an empty skew shape is a strip of both kinds
    assert relation((2, 1), (2, 1)) is Strip.BOTH


def test_bump():
    assert bump((2, 1), 2, 1) == (2, 2)
    assert bump((2, 1), 3, 1) == (2, 1, 1)
    with pytest.raises(ShapeError):
        bump((2, 2), 2, 1)
    with pytest.raises(ShapeError):
        bump((2,), 4, 1)


def test_partition_counts_match_brute_force():
    # p(n) for n = 0..10
    assert [sum(1 for _ in partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partitions_between_brute_force():
    lo, hi = Partition((1,)), Partition((3, 2, 1))
    expect = [p for n in range(7) for p in partitions_of(n) if contains(lo, p) and contains(p, hi)]
    assert sorted(partitions_between(lo, hi)) == sorted(expect)


def test_format_and_parse():
    assert format_partition(()) == "-"
    assert format_partition((4, 2, 1)) == "4,2,1"
    assert parse_partition("∅") == EMPTY
    assert parse_partition(" 3,3,1 ") == (3, 3, 1)
    with pytest.raises(ShapeError):
        parse_partition("3,x")
    with pytest.raises(ShapeError):
        parse_partition("1,2")


@given(partitions())
def test_transpose_is_an_involution(p):
    assert transpose(transpose(p)) == p
    assert sum(transpose(p)) == sum(p)


@given(partitions(), partitions())
def test_lattice_laws(a, b):
    u, i = union(a, b), intersection(a, b)
    assert contains(a, u) and contains(b, u)
    assert contains(i, a) and contains(i, b)
    assert transpose(union(a, b)) == union(transpose(a), transpose(b))


@given(partitions())
def test_format_round_trip(p):
    assert parse_partition(format_partition(p)) == p


@given(partitions(), partitions())
def test_strips_swap_under_transpose(a, b):
    if contains(a, b):
        assert is_horizontal_strip(a, b) == is_vertical_strip(transpose(a), transpose(b))
        assert len(added_cells(a, b)) == sum(b) - sum(a)


@given(partitions(8), st.integers(1, 9))
def test_bump_up_then_down(p, k):
    try:
        q = bump(p, k, 1)
    except ShapeError:
        return
    assert bump(q, k, -1) == p
