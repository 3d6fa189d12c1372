"""Acceptance criteria 1-10, one test each.

Each test records a one-line verdict; the lines are printed in the terminal
summary of the pytest run.
"""

import time
from contextlib import contextmanager

from moonfill.fillings import longest_chain, parse_grid, permutation_filling
from moonfill.growth import grow, rsk_correspond, standardize
from moonfill.partitions import format_partition
from moonfill.suites import SuiteConfig, run_suite
from moonfill.tableaux import chain, chain_to_tableau, jdt_chain, promotion
from moonfill.transform import jbar, stack_growth_labels

RESULTS = {}


@contextmanager
def criterion(n):
    RESULTS[n] = (False, "did not finish")
    notes = []
    yield notes
    RESULTS[n] = (True, "; ".join(notes))


def _suite(name, limit, notes, **cfg):
    rep = run_suite(name, SuiteConfig(**cfg))
    notes.append(f"{name}: {rep.instances} instances, {rep.failure_count} failures, {rep.wall_time:.1f}s")
    assert rep.passed, rep.to_text()
    assert rep.instances > 0
    assert rep.wall_time < limit, f"{name} took {rep.wall_time:.1f}s, limit {limit}s"
    return rep


def _rows(c):
    return [list(r) for r in chain_to_tableau(c).rows]


def _fmt(c):
    return [format_partition(p) for p in c]


def _timed(fn):
    t = time.perf_counter()
    fn()
    dt = time.perf_counter() - t
    assert dt < 1.0, f"{fn.__name__} took {dt:.2f}s"


def _rsk_permutation():
    g = grow(permutation_filling([6, 1, 5, 3, 7, 8, 4, 2]))
    # French rows, bottom first
    assert _rows(g.P) == [[1, 2, 4, 8], [3, 7], [5], [6]]
    assert _rows(g.Q) == [[1, 3, 5, 6], [2, 7], [4], [8]]


def _promotion_chain():
    c = chain((), (1,), (2,), (2, 1), (2, 1, 1), (2, 1, 1), (3, 1, 1), (3, 2, 1), (3, 2, 1, 1), (3, 3, 1, 1))
    out = ["-", "1", "1,1", "1,1,1", "1,1,1", "2,1,1", "2,2,1", "2,2,1,1", "3,2,1,1"]
    assert _fmt(jdt_chain(c)) == out
    assert _fmt(promotion(c)) == out + ["3,3,1,1"]


def _promoted_top_border():
    g = jbar(permutation_filling([6, 1, 5, 3, 7, 8, 4, 2]))
    P, Q = rsk_correspond(g, "rsk")
    assert _fmt(Q) == ["-", "1", "2", "2,1", "3,1", "4,1", "4,2", "4,2,1", "4,2,1,1"]
    assert _fmt(P) == ["-", "1", "2", "2,1", "3,1", "3,1,1", "3,1,1,1", "3,2,1,1", "4,2,1,1"]


def _drop_empty_rows(rows, used):
    # the reference tableaux number only the rows that carry entries
    rank = {v: i + 1 for i, v in enumerate(sorted(used))}
    return [[rank[v] for v in r] for r in rows]


def _arbitrary_pairs():
    f = parse_grid("11\n01\n00\n30\n")
    used_rows = {y + 1 for (x, y), _ in f.entries}
    P, Q = rsk_correspond(f, "rsk")
    assert _drop_empty_rows(_rows(P), used_rows) == [[1, 1, 1, 2, 3], [3]]
    assert _rows(Q) == [[1, 1, 1, 1, 2], [2]]
    P, Q = rsk_correspond(f, "dual_rsk_prime")
    assert _drop_empty_rows(_rows(P), used_rows) == [[1, 2], [1, 3], [1], [3]]
    assert _rows(Q) == [[1, 2], [1, 2], [1], [1]]


def _zero_one_pairs():
    f = parse_grid("10\n01\n01\n11\n")
    P, Q = rsk_correspond(f, "dual_rsk")
    assert _rows(P) == [[1, 2, 3], [1, 4]] and _rows(Q) == [[1, 1, 2], [2, 2]]
    P, Q = rsk_correspond(f, "rsk_prime")
    assert _rows(P) == [[1, 1], [2], [3], [4]] and _rows(Q) == [[1, 2], [1], [2], [2]]


def _jbar_and_non_commutation():
    f = parse_grid("010\n101\n210\n")
    assert jbar(f).to_text() == "100\n101\n012\n"
    assert jbar(parse_grid("11\n01\n"), "dual_rsk_prime").to_text() == "20\n01\n"
    s = standardize(f, "rsk")
    g = s
    for _ in range(3):
        g = jbar(g)
    crosses = lambda h: sorted(c for c, _ in h.entries)  # noqa: E731
    assert crosses(s) == [(0, 0), (1, 1), (2, 3), (3, 2), (4, 5), (5, 4)]
    assert crosses(g) == [(0, 0), (1, 3), (2, 1), (3, 2), (4, 5), (5, 4)]
    expected = standardize(jbar(f), "rsk")
    assert crosses(expected) == [(0, 3), (1, 5), (2, 0), (3, 1), (4, 2), (5, 4)]
    assert g != expected


def _stack_labels():
    f = parse_grid("....01..\n...100..\n.10000..\n.01000..\n00001000\n10000000\n00000001\n00000010\n")
    got = [(c, [format_partition(p) for p in tup]) for c, tup in stack_growth_labels(f).corners]
    assert got == [
        ((4, 8), ["-"]),
        ((5, 8), ["1"]),
        ((6, 8), ["2"]),
        ((6, 7), ["1", "1,1"]),
        ((6, 6), ["1", "1,1", "1,1,1"]),
        ((6, 5), ["1,1"]),
        ((6, 4), ["1", "2"]),
        ((7, 4), ["2,1"]),
        ((8, 4), ["2,2"]),
        ((8, 3), ["2,1"]),
        ((8, 2), ["2"]),
        ((8, 1), ["1"]),
        ((8, 0), ["-"]),
    ]


def _chain_lengths():
    a = parse_grid(".01.\n.013\n3010\n1100\n")
    b = parse_grid(".01.\n.010\n0010\n0100\n")
    assert [longest_chain(a, k) for k in ("ne", "se", "NE", "SE")] == [3, 2, 6, 5]
    assert [longest_chain(b, k) for k in ("nE", "Ne", "sE", "Se")] == [4, 2, 3, 1]


def test_criterion_01_worked_examples():
    with criterion(1) as notes:
        checks = [
            _rsk_permutation,
            _promotion_chain,
            _promoted_top_border,
            _arbitrary_pairs,
            _zero_one_pairs,
            _jbar_and_non_commutation,
            _stack_labels,
            _chain_lengths,
        ]
        for fn in checks:
            _timed(fn)
        notes.append(f"{len(checks)} worked examples exact, each under 1s")


def test_criterion_02_greene():
    with criterion(2) as notes:
        rep = _suite("greene", 120, notes)
        assert rep.checks.get("partial", 0) > 0 and rep.checks.get("random", 0) == 1000, rep.checks


def test_criterion_03_jakob():
    with criterion(3) as notes:
        _suite("jakob", 300, notes, max_cells=9)


def test_criterion_04_jakob_weak():
    with criterion(4) as notes:
        _suite("jakob-weak", 300, notes, max_cells=8, max_mass=3)


def test_criterion_05_commutation():
    with criterion(5) as notes:
        _suite("commutation", 300, notes, max_cells=8, max_mass=3)


def test_criterion_06_propositions():
    with criterion(6) as notes:
        for name in ("prop-chains", "lemma-commutation", "prop-equivalence"):
            _suite(name, 300, notes)


def test_criterion_07_appendix():
    with criterion(7) as notes:
        rep = _suite("prop-difference", 300, notes, max_cells=5)
        assert rep.checks.get("near miss") == 1
        assert rep.checks["forward moves"] > 0 and rep.checks["backward pairs"] > 0
        rep = _suite("jdt-difference", 300, notes, max_cells=6)
        assert rep.checks["swap k,k+1"] > 0 and rep.checks["swap k-1,k"] > 0


def test_criterion_08_evacuation_identities():
    with criterion(8) as notes:
        rep = _suite("section6", 300, notes, max_cells=6)
        assert rep.checks["standard"] > 0 and rep.checks["stack round trips"] == 20


def test_criterion_09_counterexamples():
    with criterion(9) as notes:
        rep = _suite("counterexamples", 60, notes)
        assert rep.instances == 3


def test_criterion_10_round_trips():
    with criterion(10) as notes:
        _suite("roundtrips", 600, notes)
