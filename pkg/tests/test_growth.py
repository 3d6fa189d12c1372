import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import partial_rect_fillings, permutations_, rect_fillings
from moonfill.fillings import KIND_VARIANT, KINDS, ZERO_ONE_KINDS, Filling, longest_chain, parse_grid, permutation_filling
from moonfill.growth import (
    VARIANTS,
    ZERO_ONE_VARIANTS,
    GrowthError,
    backward_rule,
    forward_rule,
    greene_oracle,
    greene_oracle_sums,
    greene_shape,
    grow,
    partial_standardize,
    rsk_correspond,
    rsk_invert,
    standardize,
    ungrow,
)
from moonfill.partitions import format_partition, transpose
from moonfill.polyomino import rectangle
from moonfill.tableaux import chain_to_tableau

PI = [6, 1, 5, 3, 7, 8, 4, 2]


def schensted(word):
    """Row insertion; returns (P, Q) as lists of rows, bottom row first."""
    P, Q = [], []
    for i, a in enumerate(word, 1):
        r = 0
        while True:
            if r == len(P):
                P.append([a])
                Q.append([i])
                break
            row = P[r]
            j = next((k for k, b in enumerate(row) if b > a), None)
            if j is None:
                row.append(a)
                Q[r].append(i)
                break
            row[j], a = a, row[j]
            r += 1
    return P, Q


def knuth_rsk(f: Filling):
    """RSK on the two-line array of a rectangular filling (1-based rows and columns)."""
    pairs = sorted((x + 1, y + 1) for (x, y), m in f.entries for _ in range(m))
    P, Q = [], []
    for x, y in pairs:
        a, r = y, 0
        while True:
            if r == len(P):
                P.append([a])
                Q.append([x])
                break
            row = P[r]
            j = next((k for k, b in enumerate(row) if b > a), None)
            if j is None:
                row.append(a)
                Q[r].append(x)
                break
            row[j], a = a, row[j]
            r += 1
    return [tuple(r) for r in P], [tuple(r) for r in Q]


def test_growth_diagram_example():
    g = grow(permutation_filling(PI))
    assert [format_partition(p) for p in g.Q] == ["-", "1", "1,1", "2,1", "2,1,1", "3,1,1", "4,1,1", "4,2,1", "4,2,1,1"]
    assert [format_partition(p) for p in g.P] == ["-", "1", "2", "2,1", "3,1", "3,1,1", "3,1,1,1", "3,2,1,1", "4,2,1,1"]
    assert chain_to_tableau(g.P).rows == ((1, 2, 4, 8), (3, 7), (5,), (6,))
    assert chain_to_tableau(g.Q).rows == ((1, 3, 5, 6), (2, 7), (4,), (8,))


def test_local_rules():
    assert forward_rule((), (), (), True) == (1,)
    assert forward_rule((1,), (1,), (1,), False) == (1,)
    assert forward_rule((1,), (2,), (1, 1), False) == (2, 1)
    # F3: equal neighbours grow the next row
    assert forward_rule((1,), (2,), (2,), False) == (2, 1)
    assert backward_rule((1,), (1,), (2,)) == ((1,), True)
    assert backward_rule((2,), (2,), (2, 1)) == ((1,), False)
    with pytest.raises(GrowthError):
        forward_rule((1,), (1,), (2,), True)


@given(permutations_(8))
def test_growth_matches_row_insertion(perm):
    g = grow(permutation_filling(perm))
    P, Q = schensted(perm)
    assert chain_to_tableau(g.P).rows == tuple(map(tuple, P))
    assert chain_to_tableau(g.Q).rows == tuple(map(tuple, Q))


@given(rect_fillings(max_entry=3))
def test_rsk_variant_matches_two_line_array(f):
    P, Q = rsk_correspond(f, "rsk")
    eP, eQ = knuth_rsk(f)
    assert chain_to_tableau(P).rows == tuple(eP)
    assert chain_to_tableau(Q).rows == tuple(eQ)


@given(partial_rect_fillings())
def test_grow_ungrow(f):
    g = grow(f)
    assert ungrow(g.P, g.Q) == f


@given(rect_fillings(), st.sampled_from(VARIANTS))
def test_rsk_invert_round_trip(f, v):
    if v in ZERO_ONE_VARIANTS and not f.is_zero_one():
        with pytest.raises(GrowthError):
            rsk_correspond(f, v)
        return
    P, Q = rsk_correspond(f, v)
    assert P.last == Q.last
    assert sum(P.last) == f.mass
    assert rsk_invert(P, Q, v) == f


@given(rect_fillings(max_entry=1), st.sampled_from(VARIANTS))
def test_transposed_filling_swaps_chains(f, v):
    # reflecting in the diagonal swaps P and Q and the row and column layouts
    from moonfill.transform import reflect_filling

    swapped = {"rsk": "rsk", "dual_rsk_prime": "dual_rsk_prime", "dual_rsk": "rsk_prime", "rsk_prime": "dual_rsk"}
    P, Q = rsk_correspond(f, v)
    P2, Q2 = rsk_correspond(reflect_filling(f), swapped[v])
    assert (list(P2), list(Q2)) == (list(Q), list(P))


@given(rect_fillings(max_w=3, max_h=3))
def test_standardize_is_standard(f):
    for v in ("rsk", "dual_rsk_prime"):
        s = standardize(f, v)
        assert s.is_standard() or f.mass == 0
        assert s.mass == f.mass
        assert rsk_correspond(s, "rsk")[0].last == greene_shape(f, v)
    ps = partial_standardize(f, "rsk")
    assert ps.mass == f.mass


@given(rect_fillings(max_w=3, max_h=3, max_entry=2))
def test_standardisation_preserves_chain_lengths(f):
    s_rsk, s_burge = standardize(f, "rsk"), standardize(f, "dual_rsk_prime")
    assert longest_chain(s_rsk, "ne") == longest_chain(f, "NE")
    assert longest_chain(s_rsk, "se") == longest_chain(f, "se")
    assert longest_chain(s_burge, "ne") == longest_chain(f, "ne")
    assert longest_chain(s_burge, "se") == longest_chain(f, "SE")


@settings(max_examples=60)
@given(rect_fillings(max_w=3, max_h=3, max_entry=2))
def test_greene_against_oracle(f):
    assume(f.mass <= 8)
    kinds = KINDS if f.is_zero_one() else [k for k in KINDS if k not in ZERO_ONE_KINDS]
    for kind in kinds:
        v, tr = KIND_VARIANT[kind]
        lam = greene_shape(f, v, tr)
        kmax = max(len(lam), 1) + 1
        sums = greene_oracle_sums(f, kind, kmax)
        assert sums == [sum(lam[:k]) for k in range(1, kmax + 1)], kind


def test_oracle_single_query():
    f = parse_grid("11\n01\n")
    assert greene_oracle(f, "ne", 1) == 1
    assert greene_oracle(f, "se", 1) == 2
    assert greene_oracle(f, "se", 2) == 3


def test_variant_precondition():
    f = parse_grid("2\n")
    with pytest.raises(GrowthError):
        rsk_correspond(f, "dual_rsk")
    with pytest.raises(GrowthError):
        grow(f)


def test_rsk_invert_rejects_mismatch():
    f = parse_grid("10\n01\n")
    P, Q = rsk_correspond(f, "rsk")
    P2, _ = rsk_correspond(parse_grid("01\n10\n"), "rsk")
    with pytest.raises(GrowthError):
        rsk_invert(P2, Q, "rsk")


def test_empty_rectangle():
    f = Filling(rectangle(2, 3))
    P, Q = rsk_correspond(f, "rsk")
    assert len(P) == 4 and len(Q) == 3 and not P.last
    assert transpose(greene_shape(f)) == ()
