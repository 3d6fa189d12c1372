"""Knuth and dual Knuth equivalence of rectangular fillings, and Knuth moves.

Two fillings are Knuth equivalent when their right border chains agree and
dual Knuth equivalent when their top border chains agree.  Moves act on three
adjacent columns of a partial filling, one cross per column, and only look at
the relative order of the three rows.
"""

from dataclasses import dataclass

from .fillings import Filling, FillingError
from .growth import GrowthError, grow, rsk_correspond
from .partitions import Partition
from .tableaux import PartitionChain, jdt_chain

MOVE_KINDS = ("first", "second")


@dataclass(frozen=True, order=True)
class KnuthMove:
    # k is the middle column of the triple, counted from 1 at the left edge
    k: int
    kind: str

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.k < 2:
            raise ValueError("the middle column must be at least 2")

    @property
    def columns(self):
        """0-based offsets of the three columns from the left edge."""
        return (self.k - 2, self.k - 1, self.k)

    def to_dict(self):
        return {"kind": self.kind, "k": self.k}


def _same_frame(f: Filling, g: Filling):
    if f.polyomino != g.polyomino:
        raise GrowthError("fillings must live on the same rectangle")


def knuth_equivalent(f: Filling, g: Filling, v: str = "rsk") -> bool:
    _same_frame(f, g)
    return rsk_correspond(f, v)[0] == rsk_correspond(g, v)[0]


def dual_knuth_equivalent(f: Filling, g: Filling, v: str = "rsk") -> bool:
    _same_frame(f, g)
    return rsk_correspond(f, v)[1] == rsk_correspond(g, v)[1]


def _column_rows(f: Filling):
    rows = {}
    for (x, y), m in f.entries:
        if m != 1 or x in rows:
            raise FillingError("Knuth moves need a partial filling")
        rows[x] = y
    return rows


def _pattern(a, b, c):
    """Move kind applicable to crosses in rows a, b, c of three adjacent columns."""
    if min(b, c) < a < max(b, c):
        return "first"
    if min(a, b) < c < max(a, b):
        return "second"
    return None


def apply_knuth_move(f: Filling, m: KnuthMove) -> Filling:
    """First kind swaps the crosses of the two right columns, second kind those of the two left ones."""
    if not f.is_partial():
        raise FillingError("Knuth moves need a partial filling")
    rows = _column_rows(f)
    x0 = f.polyomino.xs[0] if f.polyomino.columns else 0
    xs = [x0 + i for i in m.columns]
    if any(x not in f.polyomino.xs for x in xs):
        raise FillingError(f"columns {m.k - 1}..{m.k + 1} are outside the filling")
    if any(x not in rows for x in xs):
        raise FillingError(f"columns {m.k - 1}..{m.k + 1} need one cross each")
    a, b, c = (rows[x] for x in xs)
    if _pattern(a, b, c) != m.kind:
        raise FillingError(f"columns {m.k - 1}..{m.k + 1} do not match a Knuth move of the {m.kind} kind")
    vals = dict(f.values)
    if m.kind == "first":
        p, q = xs[1], xs[2]
    else:
        p, q = xs[0], xs[1]
    del vals[(p, rows[p])], vals[(q, rows[q])]
    vals[(p, rows[q])] = 1
    vals[(q, rows[p])] = 1
    return Filling.of(f.polyomino, vals)


def find_knuth_moves(f: Filling):
    """All moves applicable to f, sorted by position then kind."""
    if not f.is_partial():
        raise FillingError("Knuth moves need a partial filling")
    rows = _column_rows(f)
    xs = f.polyomino.xs
    out = []
    for i in range(len(xs) - 2):
        trip = xs[i : i + 3]
        if all(x in rows for x in trip):
            kind = _pattern(*(rows[x] for x in trip))
            if kind:
                out.append(KnuthMove(i + 2, kind))
    return out


def triangle_shape(f: Filling) -> bool:
    """True iff a three-column partial filling with three crosses grows to shape 21."""
    if len(f.polyomino.xs) != 3:
        raise FillingError(f"need exactly 3 columns, got {len(f.polyomino.xs)}")
    if not f.is_partial() or len(f.entries) != 3:
        raise FillingError("need a partial filling with exactly 3 crosses")
    return grow(f).shape == Partition((2, 1))


def entries_triangle(c: PartitionChain, k: int) -> bool:
    """Whether entries k-1, k, k+1 of the tableau encoded by c are shape equivalent to a triangle.

    jdt is applied k-2 times; the entries 1, 2, 3 must then fill the shape 21.
    """
    if k < 2 or k + 1 >= len(c):
        return False
    for _ in range(k - 2):
        c = jdt_chain(c)
    return tuple(c[3]) == (2, 1)
