"""Moon polyominoes stored as per-column row intervals.

Coordinates are (x, y) with x the column and y the row, rows growing upward.
"""

from dataclasses import dataclass
from functools import cached_property

from .partitions import Partition


class PolyominoError(ValueError):
    def __init__(self, kind: str, message: str, where=None):
        super().__init__(message)
        self.kind = kind
        self.where = where


@dataclass(frozen=True)
class MaxRectangle:
    x0: int
    x1: int
    y0: int
    y1: int  # all bounds inclusive

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.y1 - self.y0 + 1

    @property
    def key(self):
        return (self.height, self.width)

    def cells(self):
        return [(x, y) for x in range(self.x0, self.x1 + 1) for y in range(self.y0, self.y1 + 1)]

    def to_dict(self):
        return {"columns": [self.x0, self.x1], "rows": [self.y0, self.y1]}


@dataclass(frozen=True)
class MoonPolyomino:
    # ((x, bottom, top), ...) sorted by x with contiguous x
    columns: tuple

    @cached_property
    def cells(self) -> frozenset:
        return frozenset((x, y) for x, b, t in self.columns for y in range(b, t + 1))

    @cached_property
    def _intervals(self):
        return {x: (b, t) for x, b, t in self.columns}

    def interval(self, x):
        return self._intervals[x]

    def __contains__(self, cell):
        iv = self._intervals.get(cell[0])
        return iv is not None and iv[0] <= cell[1] <= iv[1]

    def __len__(self):
        return sum(t - b + 1 for _, b, t in self.columns)

    @property
    def xs(self):
        return [x for x, _, _ in self.columns]

    @cached_property
    def rows(self) -> dict:
        """Map from row y to its inclusive column range (left, right)."""
        out = {}
        for x, b, t in self.columns:
            for y in range(b, t + 1):
                lo, hi = out.get(y, (x, x))
                out[y] = (min(lo, x), max(hi, x))
        return dict(sorted(out.items()))

    @property
    def ys(self):
        return list(self.rows)

    def height_of(self, x) -> int:
        b, t = self._intervals[x]
        return t - b + 1

    @property
    def bounds(self):
        if not self.columns:
            return (0, -1, 0, -1)
        return (self.columns[0][0], self.columns[-1][0], min(b for _, b, _ in self.columns), max(t for _, _, t in self.columns))

    def is_rectangle(self) -> bool:
        return len({(b, t) for _, b, t in self.columns}) <= 1

    def contains_box(self, x0, x1, y0, y1) -> bool:
        for x in range(x0, x1 + 1):
            iv = self._intervals.get(x)
            if iv is None or iv[0] > y0 or iv[1] < y1:
                return False
        return True

    def to_text(self) -> str:
        return cells_to_text(self.cells, None)

    @classmethod
    def from_text(cls, text: str) -> "MoonPolyomino":
        rows = [ln.rstrip("\n") for ln in text.splitlines() if ln.strip()]
        cells = set()
        for i, ln in enumerate(rows):
            y = len(rows) - 1 - i
            for x, ch in enumerate(ln.strip()):
                if ch != ".":
                    cells.add((x, y))
        return validate(cells)


def cells_to_text(cells, values) -> str:
    """Grid text, top row first; ``values`` maps cells to integers (missing = 0)."""
    if not cells:
        return ""
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        toks = []
        for x in range(min(xs), max(xs) + 1):
            if (x, y) not in cells:
                toks.append(".")
            elif values is None:
                toks.append("o")
            else:
                v = values.get((x, y), 0)
                toks.append(str(v) if v < 10 else f"[{v}]")
        lines.append("".join(toks))
    return "\n".join(lines) + "\n"


def validate(cells) -> MoonPolyomino:
    cells = set(cells)
    if not cells:
        return MoonPolyomino(())
    by_col = {}
    for x, y in cells:
        by_col.setdefault(x, []).append(y)
    xs = sorted(by_col)
    if xs != list(range(xs[0], xs[-1] + 1)):
        missing = next(x for x in range(xs[0], xs[-1] + 1) if x not in by_col)
        raise PolyominoError("disconnected", f"column {missing} is empty inside the column range", missing)
    columns = []
    for x in xs:
        ys = sorted(by_col[x])
        if ys[-1] - ys[0] + 1 != len(ys):
            raise PolyominoError("convexity", f"column {x} is not convex", x)
        columns.append((x, ys[0], ys[-1]))
    rows = {}
    for x, y in cells:
        rows.setdefault(y, []).append(x)
    for y, row in rows.items():
        row.sort()
        if row[-1] - row[0] + 1 != len(row):
            raise PolyominoError("convexity", f"row {y} is not convex", y)
    for i in range(len(columns)):
        for j in range(i + 1, len(columns)):
            _, b1, t1 = columns[i]
            _, b2, t2 = columns[j]
            if not ((b1 <= b2 and t2 <= t1) or (b2 <= b1 and t1 <= t2)):
                raise PolyominoError(
                    "incomparable",
                    f"columns {columns[i][0]} and {columns[j][0]} are not nested",
                    (columns[i][0], columns[j][0]),
                )
    return MoonPolyomino(tuple(columns))


def from_intervals(intervals, x0=0) -> MoonPolyomino:
    """Moon polyomino from a list of (bottom, top) intervals, one per column."""
    return validate((x0 + i, y) for i, (b, t) in enumerate(intervals) for y in range(b, t + 1))


def rectangle(width: int, height: int, x0=0, y0=0) -> MoonPolyomino:
    return MoonPolyomino(tuple((x0 + i, y0, y0 + height - 1) for i in range(width)))


def stack(heights) -> MoonPolyomino:
    """Bottom-aligned columns of the given heights."""
    return from_intervals([(0, h - 1) for h in heights])


def ferrers(heights) -> MoonPolyomino:
    heights = list(heights)
    if heights != sorted(heights, reverse=True):
        raise PolyominoError("shape", "Ferrers column heights must weakly decrease")
    return stack(heights)


def content(M: MoonPolyomino) -> Partition:
    return Partition(sorted((t - b + 1 for _, b, t in M.columns), reverse=True))


def reorder_columns(M: MoonPolyomino, sigma: dict):
    """Move column x to position sigma[x]; None if the result is not a moon polyomino."""
    if sorted(sigma) != M.xs or sorted(sigma.values()) != M.xs:
        raise ValueError("sigma must permute the column indices")
    cells = {(sigma[x], y) for x, y in M.cells}
    try:
        return validate(cells)
    except PolyominoError:
        return None


def maximal_rectangles(M: MoonPolyomino):
    """One rectangle per distinct column interval: the columns containing it."""
    out = []
    seen = set()
    for _, b, t in M.columns:
        if (b, t) in seen:
            continue
        seen.add((b, t))
        xs = [x for x, bb, tt in M.columns if bb <= b and t <= tt]
        out.append(MaxRectangle(xs[0], xs[-1], b, t))
    out.sort(key=lambda r: (r.x0, r.y0, r.x1, r.y1))
    return out


def maximal_rectangles_bruteforce(M: MoonPolyomino):
    """Scan every contained rectangle and keep the inextensible ones."""
    if not M.columns:
        return []
    x_lo, x_hi, y_lo, y_hi = M.bounds
    boxes = []
    for x0 in range(x_lo, x_hi + 1):
        for x1 in range(x0, x_hi + 1):
            for y0 in range(y_lo, y_hi + 1):
                for y1 in range(y0, y_hi + 1):
                    if M.contains_box(x0, x1, y0, y1):
                        boxes.append((x0, x1, y0, y1))
    out = []
    for x0, x1, y0, y1 in boxes:
        if any(
            (a, b, c, d) != (x0, x1, y0, y1) and a <= x0 and x1 <= b and c <= y0 and y1 <= d
            for a, b, c, d in boxes
        ):
            continue
        out.append(MaxRectangle(x0, x1, y0, y1))
    out.sort(key=lambda r: (r.x0, r.y0, r.x1, r.y1))
    return out


def reflect(M: MoonPolyomino) -> MoonPolyomino:
    """Reflect about the line x = y."""
    return validate((y, x) for x, y in M.cells)


def classify(M: MoonPolyomino) -> str:
    bottoms = {b for _, b, _ in M.columns}
    if len(bottoms) > 1:
        return "generic_moon"
    heights = [t - b + 1 for _, b, t in M.columns]
    if heights == sorted(heights, reverse=True):
        return "ferrers"
    return "stack"


def normalize(M: MoonPolyomino) -> MoonPolyomino:
    """Translate so that the leftmost column is x=0 and the lowest row is y=0."""
    if not M.columns:
        return M
    x0, _, y0, _ = M.bounds
    return MoonPolyomino(tuple((x - x0, b - y0, t - y0) for x, b, t in M.columns))


# -- generation ------------------------------------------------------------------

def interval_systems(max_cells: int, min_cells: int = 1):
    """Nested interval systems, tallest first, with the tallest at [0, h-1].

    Each yielded tuple lists the column intervals in weakly decreasing containment
    order. Every moon polyomino arises from exactly one system by a unimodal
    arrangement of its intervals.
    """

    def rec(prefix, total):
        if total >= min_cells:
            yield tuple(prefix)
        b, t = prefix[-1]
        h = t - b + 1
        for h2 in range(min(h, max_cells - total), 0, -1):
            if h2 == h:
                yield from rec(prefix + [(b, t)], total + h2)
                continue
            for off in range(0, h - h2 + 1):
                yield from rec(prefix + [(b + off, b + off + h2 - 1)], total + h2)

    for h in range(1, max_cells + 1):
        yield from rec([(0, h - 1)], h)


def arrangements(system):
    """All distinct moon polyominoes whose columns are the given nested intervals."""
    seen = set()
    out = []

    def rec(i, seq):
        if i == len(system):
            key = tuple(seq)
            if key not in seen:
                seen.add(key)
                out.append(from_intervals(key))
            return
        rec(i + 1, [system[i]] + seq)
        if seq:
            rec(i + 1, seq + [system[i]])

    if not system:
        return []
    rec(1, [system[0]])
    out.sort(key=lambda m: m.columns)
    return out


def moon_polyominoes(max_cells: int, min_cells: int = 1):
    """Every moon polyomino with min_cells..max_cells cells, up to translation."""
    for system in interval_systems(max_cells, min_cells):
        yield from arrangements(system)


def ferrers_shapes(max_cells: int, min_cells: int = 1):
    from .partitions import partitions_of

    for n in range(min_cells, max_cells + 1):
        for p in partitions_of(n):
            yield ferrers(p)
