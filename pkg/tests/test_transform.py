import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partial_rect_fillings, rect_fillings
from moonfill.fillings import Filling, lambda_by_size, lambda_statistic, parse_grid, permutation_filling, sums
from moonfill.growth import CONJUGATE, VARIANTS, ZERO_ONE_VARIANTS, GrowthError, rsk_correspond
from moonfill.partitions import format_partition, transpose
from moonfill.polyomino import PolyominoError, classify, content, ferrers_shapes, moon_polyominoes, stack
from moonfill.tableaux import promotion
from moonfill.transform import (
    StackGrowthLabels,
    e_transform,
    ev_t,
    jbar,
    jbar_inverse,
    moon_move,
    moon_move_inverse,
    movable_columns,
    reverse_columns,
    stack_growth_labels,
    stack_growth_reconstruct,
    to_ferrers,
)

MOONS = [M for n in range(1, 8) for M in moon_polyominoes(n, n)]
STACK_GRID = "....01..\n...100..\n.10000..\n.01000..\n00001000\n10000000\n00000001\n00000010\n"
STACK_LABELS = """\
4,8: -
5,8: 1
6,8: 2
6,7: 1 1,1
6,6: 1 1,1 1,1,1
6,5: 1,1
6,4: 1 2
7,4: 2,1
8,4: 2,2
8,3: 2,1
8,2: 2
8,1: 1
8,0: -
"""


@st.composite
def moon_fillings(draw, max_entry=1, moons=MOONS):
    M = draw(st.sampled_from(moons))
    cells = sorted(M.cells)
    vals = draw(st.lists(st.integers(0, max_entry), min_size=len(cells), max_size=len(cells)))
    return Filling.of(M, dict(zip(cells, vals)))


def _lambda_rows(f, kind="ne"):
    return {(R.y0, R.y1): lam for R, lam in lambda_statistic(f, kind).items()}


def test_jbar_worked_example():
    assert jbar(parse_grid("010\n101\n210\n")).to_text() == "100\n101\n012\n"


def test_jbar_burge_example():
    assert jbar(parse_grid("11\n01\n"), "dual_rsk_prime").to_text() == "20\n01\n"


def test_jbar_promotes_the_top_border():
    f = permutation_filling([6, 1, 5, 3, 7, 8, 4, 2])
    g = jbar(f)
    P, Q = rsk_correspond(f, "rsk")
    P2, Q2 = rsk_correspond(g, "rsk")
    assert P2 == P
    assert [format_partition(p) for p in Q2] == ["-", "1", "2", "2,1", "3,1", "4,1", "4,2", "4,2,1", "4,2,1,1"]
    assert Q2 == promotion(Q)


@given(rect_fillings(), st.sampled_from(VARIANTS), st.sampled_from(["top", "right"]))
def test_jbar_is_invertible(f, v, border):
    if v in ZERO_ONE_VARIANTS and not f.is_zero_one():
        return
    g = jbar(f, v, border)
    assert jbar_inverse(g, v, border) == f
    rs, cs = sums(f)
    rs2, cs2 = sums(g)
    if border == "top":
        assert rs2 == rs and cs2 == cs[1:] + cs[:1]
    else:
        assert cs2 == cs and rs2 == rs[1:] + rs[:1]


def test_jbar_needs_a_rectangle():
    with pytest.raises(GrowthError):
        jbar(Filling(stack((1, 2))))


@given(moon_fillings())
def test_moon_move_properties(f):
    M = f.polyomino
    # ne-chains are measured by dual RSK', so the moves use that variant
    v = "dual_rsk_prime"
    for c in movable_columns(M):
        g = moon_move(f, c, v)
        assert content(g.polyomino) == content(M)
        assert sums(g)[0] == sums(f)[0]
        assert _lambda_rows(g) == _lambda_rows(f)
        # find where c went: last column of the rectangle of its height
        b, t = M.interval(c)
        dest = max(x for x in g.polyomino.xs if g.polyomino.interval(x)[0] <= b and g.polyomino.interval(x)[1] >= t)
        assert moon_move_inverse(g, dest, v) == f


def test_moon_move_rejects_non_movable_columns():
    f = Filling(stack((1, 2, 3)))
    with pytest.raises(PolyominoError) as e:
        moon_move(f, 2)
    assert e.value.kind == "not_movable"
    with pytest.raises(PolyominoError):
        moon_move_inverse(f, 0)


@given(moon_fillings(max_entry=1))
def test_to_ferrers(f):
    for kind in ("ne", "nE", "Ne"):
        g = to_ferrers(f, kind)
        assert classify(g.polyomino) == "ferrers" or not g.polyomino.columns
        assert content(g.polyomino) == content(f.polyomino)
        assert g.mass == f.mass
        assert lambda_by_size(lambda_statistic(g, kind)) == lambda_by_size(lambda_statistic(f, kind))


@given(moon_fillings(max_entry=2, moons=[M for M in MOONS if len(M) <= 5]))
def test_to_ferrers_weighted(f):
    g = to_ferrers(f, "NE")
    assert lambda_by_size(lambda_statistic(g, "NE")) == lambda_by_size(lambda_statistic(f, "NE"))


FERRERS = [M for M in ferrers_shapes(6)]


@given(moon_fillings(moons=FERRERS), st.sampled_from(VARIANTS))
def test_e_transform_is_an_involution(f, v):
    w = CONJUGATE[v]
    g = e_transform(f, v)
    assert g.polyomino == f.polyomino
    assert e_transform(g, w) == f


@given(rect_fillings(max_entry=1), st.sampled_from(VARIANTS))
def test_e_transform_on_rectangles_transposes_chains(f, v):
    g = e_transform(f, v)
    P, Q = rsk_correspond(f, v)
    P2, Q2 = rsk_correspond(g, CONJUGATE[v])
    assert list(P2) == [transpose(p) for p in P]
    assert list(Q2) == [transpose(p) for p in Q]


@given(moon_fillings(moons=FERRERS))
def test_ev_t_keeps_mass_and_lives_on_the_reversed_shape(f):
    g = ev_t(f)
    assert g.mass == f.mass
    assert g.polyomino == reverse_columns(Filling(f.polyomino)).polyomino


def test_ev_t_needs_ferrers():
    with pytest.raises(PolyominoError):
        ev_t(Filling(stack((1, 2))))


def test_stack_labels_worked_example():
    f = parse_grid(STACK_GRID)
    L = stack_growth_labels(f)
    assert L.to_text() == STACK_LABELS
    assert StackGrowthLabels.from_text(STACK_LABELS) == L
    assert stack_growth_reconstruct(L, f.polyomino) == f


STACKS = [M for n in range(1, 8) for M in moon_polyominoes(n, n) if classify(M) in ("stack", "ferrers")]


@given(moon_fillings(moons=STACKS), st.sampled_from(VARIANTS))
def test_stack_labels_round_trip(f, v):
    L = stack_growth_labels(f, v)
    assert stack_growth_reconstruct(L, f.polyomino, v) == f


def test_stack_reconstruct_rejects_bad_labels():
    f = parse_grid(STACK_GRID)
    L = StackGrowthLabels.from_text(STACK_LABELS.replace("7,4: 2,1", "7,4: 3"))
    with pytest.raises(GrowthError, match="8, 4"):
        stack_growth_reconstruct(L, f.polyomino)
    with pytest.raises(GrowthError):
        StackGrowthLabels.from_text("x: 1\n")
