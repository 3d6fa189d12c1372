"""Fillings of moon polyominoes, chain statistics and constrained enumeration."""

from dataclasses import dataclass, field
from functools import cached_property
import re

from .polyomino import MaxRectangle, MoonPolyomino, cells_to_text, maximal_rectangles, rectangle, validate

KINDS = ("ne", "se", "NE", "SE", "nE", "Ne", "sE", "Se")
ZERO_ONE_KINDS = ("nE", "Ne", "sE", "Se")
WEIGHTED_KINDS = ("NE", "SE")

FILLING_CLASSES = ("arbitrary", "zero_one", "partial", "standard")


class FillingError(ValueError):
    pass


@dataclass(frozen=True)
class Filling:
    polyomino: MoonPolyomino
    # ((x, y), multiplicity) for non-zero cells, sorted
    entries: tuple = ()

    def __post_init__(self):
        cells = self.polyomino.cells
        for (x, y), m in self.entries:
            if m <= 0:
                raise FillingError(f"stored multiplicity at {(x, y)} must be positive")
            if (x, y) not in cells:
                raise FillingError(f"cell {(x, y)} is outside the polyomino")

    @classmethod
    def of(cls, poly: MoonPolyomino, values) -> "Filling":
        """Build from a dict or iterable of ((x, y), m); zeros are dropped."""
        items = values.items() if hasattr(values, "items") else values
        acc = {}
        for cell, m in items:
            if m < 0:
                raise FillingError(f"negative multiplicity at {cell}")
            if m:
                acc[tuple(cell)] = acc.get(tuple(cell), 0) + m
        return cls(poly, tuple(sorted(acc.items())))

    @classmethod
    def _trusted(cls, poly, entries):
        obj = object.__new__(cls)
        object.__setattr__(obj, "polyomino", poly)
        object.__setattr__(obj, "entries", entries)
        return obj

    @cached_property
    def values(self) -> dict:
        return dict(self.entries)

    def get(self, x, y) -> int:
        return self.values.get((x, y), 0)

    @property
    def mass(self) -> int:
        return sum(m for _, m in self.entries)

    def is_zero_one(self) -> bool:
        return all(m == 1 for _, m in self.entries)

    def is_partial(self) -> bool:
        if not self.is_zero_one():
            return False
        xs = [x for (x, _), _ in self.entries]
        ys = [y for (_, y), _ in self.entries]
        return len(set(xs)) == len(xs) and len(set(ys)) == len(ys)

    def is_standard(self) -> bool:
        return (
            self.polyomino.is_rectangle()
            and self.is_partial()
            and len(self.entries) == len(self.polyomino.xs) == len(self.polyomino.ys)
        )

    def filling_class(self) -> str:
        if self.is_standard():
            return "standard"
        if self.is_partial():
            return "partial"
        if self.is_zero_one():
            return "zero_one"
        return "arbitrary"

    def to_text(self) -> str:
        return cells_to_text(self.polyomino.cells, self.values)

    @classmethod
    def from_text(cls, text: str) -> "Filling":
        return parse_grid(text)

    def to_dict(self):
        return {"grid": self.to_text().splitlines(), "origin": list(self.polyomino.bounds[::2])}


_TOKEN = re.compile(r"\[(\d+)\]|(\d)|(\.)|(\S)")


class GridParseError(ValueError):
    pass


def parse_grid(text: str) -> Filling:
    """Parse grid text, top row first. Column 0 is the first token of each line."""
    lines = [ln.rstrip() for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    while lines and not lines[0].strip():
        lines.pop(0)
    cells = {}
    for i, ln in enumerate(lines):
        y = len(lines) - 1 - i
        x = 0
        for m in _TOKEN.finditer(ln):
            big, digit, dot, bad = m.groups()
            if bad is not None:
                if bad in "ox":
                    cells[(x, y)] = 1 if bad == "x" else 0
                else:
                    raise GridParseError(f"line {i + 1}, column {m.start() + 1}: unexpected {bad!r}")
            elif dot is None:
                cells[(x, y)] = int(big if big is not None else digit)
            x += 1
    try:
        poly = validate(cells)
    except ValueError as exc:
        raise GridParseError(f"grid is not a moon polyomino: {exc}") from None
    return Filling.of(poly, cells)


def rect_filling(width: int, height: int, values=None) -> Filling:
    return Filling.of(rectangle(width, height), values or {})


def permutation_filling(perm) -> Filling:
    """Column i (0-based) holds a cross in row perm[i]-1; perm uses 1-based values, None for empty."""
    n = len(perm)
    h = max([p for p in perm if p] + [0])
    return Filling.of(rectangle(n, max(n, h)), {(i, p - 1): 1 for i, p in enumerate(perm) if p})


def restrict(f: Filling, columns=None, rows=None) -> Filling:
    """Sub-filling on the cells with x in ``columns`` and y in ``rows`` (ranges); coordinates kept."""
    def keep(x, y):
        return (columns is None or x in columns) and (rows is None or y in rows)

    cells = {c for c in f.polyomino.cells if keep(*c)}
    poly = validate(cells)
    return Filling._trusted(poly, tuple(e for e in f.entries if keep(*e[0])))


def sums(f: Filling):
    """(row sums bottom to top, column sums left to right) over the polyomino's rows and columns."""
    rs = {y: 0 for y in f.polyomino.ys}
    cs = {x: 0 for x in f.polyomino.xs}
    for (x, y), m in f.entries:
        rs[y] += m
        cs[x] += m
    return tuple(rs.values()), tuple(cs.values())


# -- chains ----------------------------------------------------------------------

def follows(kind: str, p, q) -> bool:
    """True iff q may come right after p in a chain of the given kind."""
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if kind == "ne":
        return dx > 0 and dy > 0
    if kind == "se":
        return dx > 0 and dy < 0
    if kind == "NE":
        return dx >= 0 and dy >= 0 and (dx or dy)
    if kind == "SE":
        return dx >= 0 and dy <= 0 and (dx or dy)
    if kind == "nE":
        return dx >= 0 and dy > 0
    if kind == "Ne":
        return dx > 0 and dy >= 0
    if kind == "sE":
        return dx >= 0 and dy < 0
    if kind == "Se":
        return dx > 0 and dy <= 0
    raise FillingError(f"unknown chain kind {kind!r}")


def check_kind(f: Filling, kind: str):
    if kind not in KINDS:
        raise FillingError(f"unknown chain kind {kind!r}")
    if kind in ZERO_ONE_KINDS and not f.is_zero_one():
        raise FillingError(f"{kind}-chains are only defined for 0-1 fillings")


def _chain_order(kind):
    up = kind[0] in "nN"
    return (lambda c: (c[0], c[1])) if up else (lambda c: (c[0], -c[1]))


def longest_chain(f: Filling, kind: str) -> int:
    """Longest chain whose bounding box lies inside the polyomino.

    NE- and SE-chains count multiplicities; the other kinds count elements.
    """
    check_kind(f, kind)
    key = _chain_order(kind)
    pts = sorted((c for c, _ in f.entries), key=key)
    if not pts:
        return 0
    w = [f.values[p] if kind in WEIGHTED_KINDS else 1 for p in pts]
    M = f.polyomino
    best = 0
    n = len(pts)
    for s in range(n):
        # longest path starting at s; the box spanned by s and the end holds the whole chain
        L = [0] * n
        L[s] = w[s]
        for t in range(s + 1, n):
            top = 0
            for u in range(s, t):
                if L[u] and follows(kind, pts[u], pts[t]) and L[u] > top:
                    top = L[u]
            if top:
                L[t] = top + w[t]
        for t in range(s, n):
            if L[t] > best:
                (x0, y0), (x1, y1) = pts[s], pts[t]
                if M.contains_box(min(x0, x1), max(x0, x1), min(y0, y1), max(y0, y1)):
                    best = L[t]
    return best


# -- Lambda statistic ---------------------------------------------------------

# chain kind -> (variant whose shape, or whose transpose, measures it)
KIND_VARIANT = {
    "ne": ("dual_rsk_prime", False),
    "NE": ("rsk", False),
    "nE": ("dual_rsk", False),
    "Ne": ("rsk_prime", False),
    "se": ("rsk", True),
    "SE": ("dual_rsk_prime", True),
    "Se": ("dual_rsk", True),
    "sE": ("rsk_prime", True),
}


def restrict_rect(f: Filling, R: MaxRectangle) -> Filling:
    return restrict(f, range(R.x0, R.x1 + 1), range(R.y0, R.y1 + 1))


def lambda_statistic(f: Filling, kind: str) -> dict:
    """Map each maximal rectangle to the Greene shape measuring ``kind``-chains inside it."""
    from .growth import greene_shape

    check_kind(f, kind)
    variant, transposed = KIND_VARIANT[kind]
    return {R: greene_shape(restrict_rect(f, R), variant, transposed) for R in maximal_rectangles(f.polyomino)}


def lambda_by_size(stat: dict) -> dict:
    """Key a Lambda statistic by (height, width), which identifies maximal rectangles of a moon."""
    return {R.key: lam for R, lam in stat.items()}


# -- enumeration -------------------------------------------------------------------

ZERO_ONE_CELL_CAP = 22
MASS_CAP = 10


@dataclass(frozen=True)
class CountQuery:
    kind: str = "ne"
    l: int | None = None
    r: tuple | None = None
    c: tuple | None = None
    n: int | None = None
    m: int | None = None
    row_counts: tuple | None = None
    filling_class: str = "zero_one"
    max_mass: int | None = None
    caps: dict = field(default_factory=dict, compare=False)


class CapExceeded(ValueError):
    pass


def _grid_order(M: MoonPolyomino):
    return sorted(M.cells, key=lambda c: (-c[1], c[0]))


def enumerate_fillings(M: MoonPolyomino, q: CountQuery = CountQuery()):
    """Yield every filling of M satisfying q, in lexicographic grid order (top row first)."""
    if q.filling_class not in FILLING_CLASSES:
        raise FillingError(f"unknown filling class {q.filling_class!r}")
    cells = _grid_order(M)
    ys, xs = M.ys, M.xs
    if q.filling_class == "arbitrary":
        bound = q.n if q.n is not None else q.max_mass
        if q.r is not None:
            bound = sum(q.r) if bound is None else min(bound, sum(q.r))
        if bound is None:
            raise CapExceeded("arbitrary fillings need a total (n) or --max-mass bound")
        cap = q.caps.get("max_mass", MASS_CAP)
        if bound > cap:
            raise CapExceeded(f"total mass {bound} exceeds the cap {cap} (--max-mass)")
        top = bound
    else:
        cap = q.caps.get("max_cells", ZERO_ONE_CELL_CAP)
        if len(cells) > cap:
            raise CapExceeded(f"{len(cells)} cells exceed the cap {cap} (--max-cells)")
        top = 1
        bound = q.n
    if q.r is not None and len(q.r) != len(ys):
        raise FillingError(f"row vector has {len(q.r)} entries, polyomino has {len(ys)} rows")
    if q.c is not None and len(q.c) != len(xs):
        raise FillingError(f"column vector has {len(q.c)} entries, polyomino has {len(xs)} columns")
    yi = {y: i for i, y in enumerate(ys)}
    xi = {x: i for i, x in enumerate(xs)}
    one_per_line = q.filling_class in ("partial", "standard")

    # remaining capacity per row/column for pruning
    row_left = [len([c for c in cells if c[1] == y]) for y in ys]
    col_left = [len([c for c in cells if c[0] == x]) for x in xs]
    rsum = [0] * len(ys)
    csum = [0] * len(xs)
    rcnt = [0] * len(ys)
    ccnt = [0] * len(xs)
    vals = {}
    state = {"total": 0, "nz": 0}

    def feasible_row(i):
        if q.r is not None:
            need = q.r[i] - rsum[i]
            if need < 0 or need > row_left[i] * top:
                return False
        if q.row_counts is not None:
            need = q.row_counts[i] - rcnt[i]
            if need < 0 or need > row_left[i]:
                return False
        return True

    def feasible_col(j):
        if q.c is not None:
            need = q.c[j] - csum[j]
            if need < 0 or need > col_left[j] * top:
                return False
        return True

    def rec(k):
        if k == len(cells):
            if bound is not None and q.filling_class != "arbitrary" and state["total"] != bound:
                return
            if q.filling_class == "arbitrary" and q.n is not None and state["total"] != q.n:
                return
            if q.m is not None and state["nz"] != q.m:
                return
            if q.filling_class == "standard" and not (all(rcnt) and all(ccnt)):
                return
            f = Filling._trusted(M, tuple(sorted(vals.items())))
            if q.l is not None and longest_chain(f, q.kind) != q.l:
                return
            yield f
            return
        x, y = cells[k]
        i, j = yi[y], xi[x]
        row_left[i] -= 1
        col_left[j] -= 1
        hi = top
        if bound is not None:
            hi = min(hi, bound - state["total"])
        if one_per_line and (rcnt[i] or ccnt[j]):
            hi = 0
        for v in range(0, hi + 1):
            if v and q.m is not None and state["nz"] >= q.m:
                break
            rsum[i] += v
            csum[j] += v
            if v:
                rcnt[i] += 1
                ccnt[j] += 1
                state["nz"] += 1
                vals[(x, y)] = v
            state["total"] += v
            if feasible_row(i) and feasible_col(j):
                yield from rec(k + 1)
            state["total"] -= v
            if v:
                del vals[(x, y)]
                state["nz"] -= 1
                rcnt[i] -= 1
                ccnt[j] -= 1
            rsum[i] -= v
            csum[j] -= v
        row_left[i] += 1
        col_left[j] += 1

    yield from rec(0)


def count_fillings(M: MoonPolyomino, q: CountQuery = CountQuery()) -> int:
    return sum(1 for _ in enumerate_fillings(M, q))
