from itertools import permutations

import pytest
from hypothesis import given

from conftest import permutations_
from moonfill.fillings import FillingError, parse_grid, permutation_filling
from moonfill.growth import GrowthError, rsk_correspond
from moonfill.knuth import (
    KnuthMove,
    apply_knuth_move,
    dual_knuth_equivalent,
    entries_triangle,
    find_knuth_moves,
    knuth_equivalent,
    triangle_shape,
)
from moonfill.tableaux import chain


def _perm(f):
    return tuple(y + 1 for (x, y), _ in sorted(f.entries))


def test_move_validation():
    with pytest.raises(ValueError):
        KnuthMove(1, "first")
    with pytest.raises(ValueError):
        KnuthMove(2, "third")
    assert KnuthMove(3, "second").columns == (1, 2, 3)
    assert KnuthMove(2, "first").to_dict() == {"kind": "first", "k": 2}


def test_moves_on_small_permutations():
    f = permutation_filling([2, 1, 3])
    assert find_knuth_moves(f) == [KnuthMove(2, "first")]
    assert _perm(apply_knuth_move(f, KnuthMove(2, "first"))) == (2, 3, 1)
    g = permutation_filling([1, 3, 2])
    assert find_knuth_moves(g) == [KnuthMove(2, "second")]
    assert _perm(apply_knuth_move(g, KnuthMove(2, "second"))) == (3, 1, 2)
    with pytest.raises(FillingError):
        apply_knuth_move(permutation_filling([1, 2, 3]), KnuthMove(2, "first"))


@given(permutations_(7))
def test_moves_preserve_insertion_shape_and_are_involutive(perm):
    f = permutation_filling(perm)
    for m in find_knuth_moves(f):
        g = apply_knuth_move(f, m)
        assert knuth_equivalent(f, g)
        assert m in find_knuth_moves(g)
        assert apply_knuth_move(g, m) == f


@pytest.mark.parametrize("n", range(1, 6))
def test_knuth_classes_are_p_classes(n):
    # connected components under moves coincide with classes of equal P
    perms = list(permutations(range(1, n + 1)))
    fills = {p: permutation_filling(p) for p in perms}
    seen, comps = set(), []
    for p in perms:
        if p in seen:
            continue
        comp, todo = {p}, [p]
        while todo:
            q = todo.pop()
            for m in find_knuth_moves(fills[q]):
                r = _perm(apply_knuth_move(fills[q], m))
                if r not in comp:
                    comp.add(r)
                    todo.append(r)
        seen |= comp
        comps.append(comp)
    by_p = {}
    for p in perms:
        by_p.setdefault(rsk_correspond(fills[p], "rsk")[0], set()).add(p)
    assert sorted(map(sorted, comps)) == sorted(map(sorted, by_p.values()))


def test_dual_equivalence():
    f, g = permutation_filling([2, 1, 3]), permutation_filling([3, 1, 2])
    # same recording chain, different insertion chains
    assert dual_knuth_equivalent(f, g)
    assert not knuth_equivalent(f, g)
    with pytest.raises(GrowthError):
        knuth_equivalent(f, permutation_filling([1, 2]))


def test_triangle_shape():
    assert triangle_shape(permutation_filling([2, 1, 3]))
    assert not triangle_shape(permutation_filling([1, 2, 3]))
    assert not triangle_shape(permutation_filling([3, 2, 1]))
    with pytest.raises(FillingError):
        triangle_shape(parse_grid("10\n01\n"))


def test_entries_triangle():
    # tableau 1 3 / 2: entries 1, 2, 3 fill the shape 21
    c = chain((), (1,), (1, 1), (2, 1))
    assert entries_triangle(c, 2)
    assert not entries_triangle(chain((), (1,), (2,), (3,)), 2)
    assert not entries_triangle(c, 5)
