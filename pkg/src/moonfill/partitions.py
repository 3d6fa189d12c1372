"""Integer partitions in French convention: parts listed bottom row first."""

from enum import Enum
from itertools import zip_longest


class ShapeError(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive parts. The empty tuple is the empty partition."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i in range(len(parts)):
            if parts[i] < 0:
                raise ShapeError(f"negative part in {parts}")
            if i and parts[i] > parts[i - 1]:
                raise ShapeError(f"parts not weakly decreasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        # caller guarantees a valid, zero-free tuple
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Part i (1-based); 0 beyond the length."""
        return self[i - 1] if i <= len(self) else 0

    def cells(self):
        """Cells as (column, row), both 0-based, row 0 at the bottom."""
        return [(c, r) for r, n in enumerate(self) for c in range(n)]

    def __repr__(self):
        return f"Partition({format_partition(self)})"


EMPTY = Partition()


def union(a, b) -> Partition:
    return Partition._trusted(tuple(max(x, y) for x, y in zip_longest(a, b, fillvalue=0)))


def intersection(a, b) -> Partition:
    return Partition._trusted(tuple(min(x, y) for x, y in zip(a, b)))


def transpose(a) -> Partition:
    if not a:
        return EMPTY
    return Partition._trusted(tuple(sum(1 for p in a if p > i) for i in range(a[0])))


def contains(a, b) -> bool:
    """True iff a is a subset of b."""
    if len(a) > len(b):
        return False
    return all(x <= y for x, y in zip(a, b))


class Strip(Enum):
    SINGLE_CELL = "single_cell"
    HORIZONTAL = "horizontal_strip"
    VERTICAL = "vertical_strip"
    BOTH = "both"
    NEITHER = "neither"


def is_horizontal_strip(a, b) -> bool:
    """b/a has at most one cell per column; assumes a is a subset of b."""
    # b_{i+1} <= a_i for every i
    return all(b[i + 1] <= a[i] for i in range(len(b) - 1) if i < len(a)) and len(b) <= len(a) + 1


def is_vertical_strip(a, b) -> bool:
    """b/a has at most one cell per row; assumes a is a subset of b."""
    return all(y - x <= 1 for x, y in zip_longest(a, b, fillvalue=0))


def relation(a, b):
    """Return None if a is not contained in b, otherwise the Strip class of b/a.

    The empty skew shape counts as both a horizontal and a vertical strip.
    """
    if not contains(a, b):
        return None
    d = sum(b) - sum(a)
    if d == 1:
        return Strip.SINGLE_CELL
    h = is_horizontal_strip(a, b)
    v = is_vertical_strip(a, b)
    if h and v:
        return Strip.BOTH
    if h:
        return Strip.HORIZONTAL
    if v:
        return Strip.VERTICAL
    return Strip.NEITHER


def bump(a, k: int, delta: int) -> Partition:
    """Add delta (+1 or -1) to part k (1-based)."""
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    if k < 1 or k > len(a) + 1:
        raise ShapeError(f"row {k} out of range for {format_partition(a)}")
    parts = list(a) + [0]
    parts[k - 1] += delta
    if parts[k - 1] < 0 or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ShapeError(f"changing row {k} of {format_partition(a)} by {delta:+d} breaks weak decrease")
    return Partition(parts)


def added_cells(a, b):
    """Cells of b/a as (column, row) pairs, 0-based."""
    out = []
    for r, n in enumerate(b):
        lo = a[r] if r < len(a) else 0
        out.extend((c, r) for c in range(lo, n))
    return out


def partitions_between(lo, hi):
    """All partitions nu with lo subset nu subset hi."""
    lo = tuple(lo) + (0,) * (len(hi) - len(lo))
    out = []

    def rec(i, prefix, cap):
        if i == len(hi):
            out.append(Partition._trusted(tuple(p for p in prefix if p)))
            return
        for p in range(lo[i], min(hi[i], cap) + 1):
            prefix.append(p)
            rec(i + 1, prefix, p)
            prefix.pop()

    if len(lo) > len(hi):
        return out
    rec(0, [], hi[0] if hi else 0)
    return out


def partitions_of(n: int, max_part=None):
    """All partitions of n, largest part first, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition._trusted((first,) + rest)


def format_partition(a) -> str:
    return ",".join(map(str, a)) if a else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", "∅", ""):
        return EMPTY
    try:
        return Partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"cannot parse partition {text!r}: {exc}") from None
