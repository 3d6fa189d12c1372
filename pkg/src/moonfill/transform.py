"""Promotion on fillings and the bijections built from it.

jbar keeps the right border chain P and promotes the top border chain Q, so
row sums stay put and column sums rotate one step to the left.
"""

from dataclasses import dataclass
from functools import lru_cache

from .fillings import KIND_VARIANT, Filling, FillingError, restrict
from .growth import (
    CONJUGATE,
    LAYOUT,
    GrowthError,
    _bwd,
    _fwd,
    _normalized,
    _rsk_correspond,
    _single,
    _standardize,
    check_variant,
    greene_shape,
    partial_standardize,
    rsk_correspond,
    rsk_invert,
)
from .partitions import EMPTY, Partition, added_cells, contains, format_partition, parse_partition, transpose
from .polyomino import MoonPolyomino, PolyominoError, classify, normalize, rectangle, validate
from .tableaux import PartitionChain, evacuation, jdt_preimage, promotion, promotion_inverse

__all__ = [
    "jbar",
    "jbar_inverse",
    "partial_standardize",
    "moon_move",
    "moon_move_inverse",
    "movable_columns",
    "to_ferrers",
    "reverse_columns",
    "ev_t",
    "e_transform",
    "stack_growth_labels",
    "stack_growth_reconstruct",
    "StackGrowthLabels",
]


# -- jbar -------------------------------------------------------------------------

@lru_cache(maxsize=200_000)
def _jbar_cached(w, h, entries, v, border, inverse):
    f = Filling._trusted(rectangle(w, h), entries)
    P, Q = _rsk_correspond(f, v)
    step = promotion_inverse if inverse else promotion
    if border == "top":
        Q = step(Q)
    else:
        P = step(P)
    return rsk_invert(P, Q, v, check=False).entries


def _jbar(f, v, border, inverse):
    check_variant(f, v)
    if border not in ("top", "right"):
        raise ValueError("border must be 'top' or 'right'")
    if not f.polyomino.columns:
        return f
    if not f.polyomino.is_rectangle():
        raise GrowthError("jbar needs a rectangular filling")
    w, h, entries = _normalized(f)
    if w == 0:
        return f
    out = _jbar_cached(w, h, entries, v, border, inverse)
    x0, _, y0, _ = f.polyomino.bounds
    return Filling._trusted(f.polyomino, tuple(((x + x0, y + y0), m) for (x, y), m in out))


def jbar(f: Filling, v: str = "rsk", border: str = "top") -> Filling:
    """Promotion on a rectangular filling.

    ``border="top"`` promotes Q and keeps P; this is the orientation used by all
    theorem suites.  ``border="right"`` promotes P instead.
    """
    return _jbar(f, v, border, False)


def jbar_inverse(f: Filling, v: str = "rsk", border: str = "top") -> Filling:
    return _jbar(f, v, border, True)


# -- moving columns ------------------------------------------------------------

def _rotate(f: Filling, x0, x1, y0, y1, v, forward):
    """Apply jbar (forward) or its inverse to the box and relocate the boundary column.

    Forward moves column x0 to x1 and shifts x0+1..x1 one step left; backward
    moves x1 to x0.  The moved column must span exactly rows y0..y1.
    """
    M = f.polyomino
    moved = x0 if forward else x1
    if M.interval(moved) != (y0, y1):
        raise PolyominoError("not_movable", f"column {moved} does not span exactly rows {y0}..{y1}", moved)
    if not M.contains_box(x0, x1, y0, y1):
        raise PolyominoError("not_movable", "box is not inside the polyomino")
    box = restrict(f, range(x0, x1 + 1), range(y0, y1 + 1))
    box = _jbar(box, v, "top", not forward)
    inside = box.values

    def newx(x):
        if x < x0 or x > x1:
            return x
        if forward:
            return x1 if x == x0 else x - 1
        return x0 if x == x1 else x + 1

    cols = sorted((newx(x), b, t) for x, b, t in M.columns)
    poly = MoonPolyomino(tuple(cols))
    try:
        validate(poly.cells)
    except PolyominoError as exc:
        raise PolyominoError("not_moon", f"moving the column does not give a moon polyomino: {exc}") from None
    vals = dict(inside)
    for (x, y), m in f.entries:
        if x0 <= x <= x1 and y0 <= y <= y1:
            continue
        vals[(newx(x), y)] = m
    return Filling._trusted(poly, tuple(sorted(vals.items())))


def _rect_of_column(M: MoonPolyomino, c):
    b, t = M.interval(c)
    lo = c
    while lo - 1 in M.xs and M.interval(lo - 1)[0] <= b and M.interval(lo - 1)[1] >= t:
        lo -= 1
    hi = c
    while hi + 1 in M.xs and M.interval(hi + 1)[0] <= b and M.interval(hi + 1)[1] >= t:
        hi += 1
    return lo, hi, b, t


def movable_columns(M: MoonPolyomino):
    """Columns that start their maximal rectangle and have a containing column to the right."""
    out = []
    for c in M.xs:
        lo, hi, _, _ = _rect_of_column(M, c)
        if lo == c and hi > c:
            out.append(c)
    return out


def moon_move(f: Filling, c1: int, v: str = "rsk") -> Filling:
    """Move column c1 to the far end of the maximal rectangle of its height, applying jbar inside."""
    M = f.polyomino
    if c1 not in M.xs:
        raise PolyominoError("not_movable", f"no column {c1}")
    lo, hi, b, t = _rect_of_column(M, c1)
    if lo != c1:
        raise PolyominoError("not_movable", f"column {c1} is not the first column of its maximal rectangle", c1)
    if hi == c1:
        raise PolyominoError("not_movable", f"no column right of {c1} contains it", c1)
    return _rotate(f, c1, hi, b, t, v, True)


def moon_move_inverse(f: Filling, c2: int, v: str = "rsk") -> Filling:
    """Undo moon_move: column c2 ends its maximal rectangle and moves to the front of it."""
    M = f.polyomino
    if c2 not in M.xs:
        raise PolyominoError("not_movable", f"no column {c2}")
    lo, hi, b, t = _rect_of_column(M, c2)
    if hi != c2:
        raise PolyominoError("not_movable", f"column {c2} is not the last column of its maximal rectangle", c2)
    if lo == c2:
        raise PolyominoError("not_movable", f"no column left of {c2} contains it", c2)
    return _rotate(f, lo, c2, b, t, v, False)


def _is_sorted(M):
    ivs = [(b, t) for _, b, t in M.columns]
    return all(a[0] <= c[0] and c[1] <= a[1] for a, c in zip(ivs, ivs[1:]))


def sort_columns(f: Filling, v: str) -> Filling:
    """Repeatedly move the leftmost column until column intervals decrease left to right."""
    while not _is_sorted(f.polyomino):
        f = moon_move(f, f.polyomino.xs[0], v)
    return f


def reflect_filling(f: Filling) -> Filling:
    """Reflect about the line x = y."""
    poly = validate((y, x) for x, y in f.polyomino.cells)
    return Filling._trusted(poly, tuple(sorted(((y, x), m) for (x, y), m in f.entries)))


def translate_to_origin(f: Filling) -> Filling:
    M = f.polyomino
    if not M.columns:
        return f
    x0, _, y0, _ = M.bounds
    return Filling._trusted(normalize(M), tuple(((x - x0, y - y0), m) for (x, y), m in f.entries))


_REFLECTED_VARIANT = {"rsk": "rsk", "dual_rsk_prime": "dual_rsk_prime", "dual_rsk": "rsk_prime", "rsk_prime": "dual_rsk"}


def to_ferrers(f: Filling, kind: str = "ne") -> Filling:
    """Map a filling of a moon polyomino to one of the Ferrers shape with the same content.

    Preserves the Lambda statistic for ``kind`` and the total mass.
    """
    if kind not in ("ne", "NE", "nE", "Ne"):
        raise FillingError(f"to_ferrers supports ne, NE, nE and Ne, not {kind!r}")
    v = KIND_VARIANT[kind][0]
    check_variant(f, v)
    g = sort_columns(f, v)
    g = reflect_filling(g)
    g = sort_columns(g, _REFLECTED_VARIANT[v])
    g = reflect_filling(g)
    return translate_to_origin(g)


# -- reversal and evacuation-type maps ----------------------------------------------

def reverse_columns(f: Filling) -> Filling:
    M = f.polyomino
    if not M.columns:
        return f
    x0, x1 = M.xs[0], M.xs[-1]
    poly = validate((x0 + x1 - x, y) for x, y in M.cells)
    return Filling._trusted(poly, tuple(sorted(((x0 + x1 - x, y), m) for (x, y), m in f.entries)))


def _require_ferrers(M):
    if M.columns and classify(M) != "ferrers":
        raise PolyominoError("shape", "this map needs a Ferrers shape")


def ev_t(f: Filling, v: str = "rsk") -> Filling:
    """Apply inverse promotion to the widest rectangles of ever fewer columns.

    The result lives on the polyomino with the column order reversed.
    """
    M = f.polyomino
    _require_ferrers(M)
    check_variant(f, v)
    if not M.columns:
        return f
    xs = M.xs
    y0 = M.bounds[2]
    for i in range(len(xs) - 1):
        last = xs[-1]
        _, t = f.polyomino.interval(last)
        f = _rotate(f, xs[i], last, y0, t, v, False)
    return f


# -- growth diagrams on Ferrers and stack shapes ------------------------------------

def _stack_rows(M):
    """rows[y] = (start, end) columns, y counted from the bottom row of M."""
    _, _, y0, _ = M.bounds
    return [M.rows[y] for y in range(y0, y0 + len(M.rows))]


def _greene(f, cols, rows, v):
    if not cols or not rows:
        return EMPTY
    return greene_shape(restrict(f, cols, rows), v)


def ferrers_boundary(M):
    """Corners along the top/right boundary of a Ferrers shape, top-left to bottom-right.

    Each item is ((x, y), direction) where direction says how the corner was
    reached: 'start', 'right' or 'down'.
    """
    x0, _, y0, _ = M.bounds
    rows = _stack_rows(M)
    H = len(rows)
    out = [((x0, y0 + H), "start")]
    x, y = x0, H
    while True:
        while y > 0 and rows[y - 1][1] + 1 > x:
            x += 1
            out.append(((x, y0 + y), "right"))
        if y == 0:
            break
        y -= 1
        out.append(((x, y0 + y), "down"))
    return out


def ferrers_boundary_labels(f: Filling, v: str = "rsk"):
    """Labels along the boundary of a Ferrers filling: Greene shape of the box below-left."""
    M = f.polyomino
    _require_ferrers(M)
    check_variant(f, v)
    x0, _, y0, _ = M.bounds
    return [
        (corner, _greene(f, range(x0, corner[0]), range(y0, corner[1]), v))
        for corner, _ in ferrers_boundary(M)
    ]


def _std_ferrers(f, v):
    """Standardise a Ferrers filling: returns (std column heights, crosses, col/row blocks)."""
    s = _standardize(f, v, any_shape=True)
    ro = [0]
    for b in s.row_blocks:
        ro.append(ro[-1] + b)
    heights = []
    for i, x in enumerate(f.polyomino.xs):
        h = f.polyomino.height_of(x)
        heights += [ro[h]] * s.col_blocks[i]
    return heights, s


def _ferrers_labels_forward(heights, crosses):
    """labels[(i, j)] for all corners of the Ferrers shape with the given column heights."""
    labels = {}
    W = len(heights)
    for j in range((heights[0] if heights else 0) + 1):
        labels[(0, j)] = ()
    for i in range(W):
        labels[(i + 1, 0)] = ()
        for j in range(heights[i]):
            labels[(i + 1, j + 1)] = _fwd(labels[(i, j)], labels[(i, j + 1)], labels[(i + 1, j)], crosses.get(i) == j)
    return labels


def _ferrers_labels_backward(heights, boundary):
    """Recover crosses from labels on the boundary of a Ferrers shape (dict corner -> label)."""
    labels = dict(boundary)
    crosses = {}
    W = len(heights)
    for i in range(W - 1, -1, -1):
        for j in range(heights[i] - 1, -1, -1):
            mu, nu, rho = labels[(i, j + 1)], labels[(i + 1, j)], labels[(i + 1, j + 1)]
            if not (_single(mu, rho) and _single(nu, rho)):
                raise GrowthError(f"transposed labels around cell ({i + 1},{j + 1}) are not single-cell steps")
            lam, cross = _bwd(mu, nu, rho)
            if (i, j) in labels and labels[(i, j)] != lam:
                raise GrowthError(f"inconsistent label at corner ({i},{j})")
            labels[(i, j)] = lam
            if cross:
                crosses[i] = j
    if any(labels[(0, j)] for j in range(heights[0] + 1)) or any(labels[(i, 0)] for i in range(W + 1)):
        raise GrowthError("transposed labels do not reach the empty partition on the left and bottom borders")
    return crosses


def _steps(a, b, mode):
    """Partitions from a up to b adding one cell at a time in the given strip order."""
    cells = added_cells(a, b)
    cells.sort(key=(lambda t: t[0]) if mode == "hstrip" else (lambda t: t[1]))
    out = [tuple(a)]
    cur = list(a)
    for _, row in cells:
        if row == len(cur):
            cur.append(0)
        cur[row] += 1
        out.append(tuple(cur))
    return out


def e_transform(f: Filling, v: str = "rsk") -> Filling:
    """Transpose every boundary label of the growth diagram and run the backward rules."""
    M = f.polyomino
    _require_ferrers(M)
    check_variant(f, v)
    if not f.entries:
        return f
    w = CONJUGATE[v]
    heights, s = _std_ferrers(f, v)
    ro, co = [0], [0]
    for b in s.row_blocks:
        ro.append(ro[-1] + b)
    for b in s.col_blocks:
        co.append(co[-1] + b)
    x0, _, y0, _ = M.bounds
    crosses = {c: r for _, c, r in s.units}
    std_labels = _ferrers_labels_forward(heights, crosses)
    pm, qm = LAYOUT[w][2], LAYOUT[w][3]
    boundary = ferrers_boundary(M)
    new = {}
    prev = None
    for (x, y), how in boundary:
        i, j = co[x - x0], ro[y - y0]
        lab = transpose(std_labels[(i, j)])
        if how == "right":
            pi, pj = prev
            seq = _steps(new[(pi, pj)], lab, qm)
            for k, p in enumerate(seq):
                new[(pi + k, j)] = p
        elif how == "down":
            pi, pj = prev
            seq = _steps(lab, new[(pi, pj)], pm)
            for k, p in enumerate(seq):
                new[(i, j + k)] = p
        new[(i, j)] = lab
        prev = (i, j)
    got = _ferrers_labels_backward(heights, new)
    row_of = [y for y, b in enumerate(s.row_blocks) for _ in range(b)]
    col_of = [x for x, b in enumerate(s.col_blocks) for _ in range(b)]
    vals = {}
    for c, r in got.items():
        cell = (x0 + col_of[c], y0 + row_of[r])
        vals[cell] = vals.get(cell, 0) + 1
    out = Filling.of(M, vals)
    expected = [(corner, transpose(lab)) for corner, lab in ferrers_boundary_labels(f, v)]
    if ferrers_boundary_labels(out, w) != expected:
        raise GrowthError("transposed boundary labels do not come from a filling of this shape")
    return out


# -- stack polyominoes ---------------------------------------------------------------

@dataclass(frozen=True)
class StackGrowthLabels:
    # (((x, y), (partition, ...)), ...) along the boundary, top-left to bottom-right
    corners: tuple

    def flattened(self):
        return [p for _, tup in self.corners for p in tup]

    def to_dict(self):
        return {
            "corners": [
                {"corner": list(c), "labels": [format_partition(p) for p in tup]} for c, tup in self.corners
            ]
        }

    def to_text(self) -> str:
        lines = []
        for (x, y), tup in self.corners:
            body = " ".join(format_partition(p) for p in tup)
            lines.append(f"{x},{y}: {body}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "StackGrowthLabels":
        corners = []
        for i, ln in enumerate(text.splitlines()):
            if not ln.strip():
                continue
            try:
                head, body = ln.split(":", 1)
                x, y = (int(t) for t in head.split(","))
                tup = tuple(parse_partition(t) for t in body.split())
            except ValueError as exc:
                raise GrowthError(f"line {i + 1}: cannot parse label line {ln!r} ({exc})") from None
            if not tup:
                raise GrowthError(f"line {i + 1}: corner without labels")
            corners.append(((x, y), tup))
        return cls(tuple(corners))


def _require_stack(M):
    if M.columns and classify(M) not in ("stack", "ferrers"):
        raise PolyominoError("shape", "this map needs a stack polyomino")


def stack_corners(M):
    """Boundary corners with the list of rectangle start columns for each label entry.

    Returns [((x, y), [start, ...])], rows counted from the bottom of M.
    """
    x_lo, _, y0, _ = M.bounds
    rows = _stack_rows(M)
    H = len(rows)
    out = []
    s_top, e_top = rows[H - 1]
    for x in range(s_top, e_top + 2):
        out.append(((x, y0 + H), [s_top]))
    x, y = e_top + 1, H
    while y > 0:
        while rows[y - 1][1] + 1 > x:
            x += 1
            out.append(((x, y0 + y), [rows[y - 1][0]]))
        y -= 1
        if y == 0:
            out.append(((x, y0), [rows[0][0]]))
            break
        above, below = rows[y][0], rows[y - 1][0]
        out.append(((x, y0 + y), list(range(above, below - 1, -1))))
    return out


def stack_growth_labels(f: Filling, v: str = "rsk") -> StackGrowthLabels:
    M = f.polyomino
    _require_stack(M)
    check_variant(f, v)
    if not M.columns:
        return StackGrowthLabels(())
    y0 = M.bounds[2]
    out = []
    for (x, y), starts in stack_corners(M):
        tup = tuple(_greene(f, range(s, x), range(y0, y), v) for s in starts)
        out.append(((x, y), tup))
    return StackGrowthLabels(tuple(out))


def _check_stack_labels(L: StackGrowthLabels, M):
    """Shape checks before reconstruction; reports the first offending corner."""
    expected = stack_corners(M)
    if len(expected) != len(L.corners):
        raise GrowthError(f"expected {len(expected)} labelled corners, got {len(L.corners)}")
    seen = {}
    for (corner, starts), (c2, tup) in zip(expected, L.corners):
        if tuple(corner) != tuple(c2):
            raise GrowthError(f"corner {tuple(c2)} is not on the boundary; expected {corner}")
        if len(tup) != len(starts):
            raise GrowthError(f"corner {corner} needs {len(starts)} partitions, got {len(tup)}")
        for a, b in zip(tup, tup[1:]):
            if not contains(a, b):
                raise GrowthError(f"corner {corner}: {format_partition(b)} does not contain {format_partition(a)}")
        x, y = corner
        for s, p in zip(starts, tup):
            left, up = seen.get((s, x - 1, y)), seen.get((s, x, y + 1))
            if left is not None and not contains(left, p):
                raise GrowthError(f"corner {corner}: label shrinks along a right step")
            if up is not None and not contains(p, up):
                raise GrowthError(f"corner {corner}: label grows along a down step")
            seen[(s, x, y)] = p


def stack_growth_reconstruct(L: StackGrowthLabels, M: MoonPolyomino, v: str = "rsk") -> Filling:
    """Rebuild the filling row by row from the top, widening border chains by jdt preimages."""
    _require_stack(M)
    if not M.columns:
        return Filling(M)
    _check_stack_labels(L, M)
    x_lo, _, y0, _ = M.bounds
    rows = _stack_rows(M)
    H = len(rows)
    pm, qm = LAYOUT[v][2], LAYOUT[v][3]
    given = {}
    for ((x, y), starts), (_, tup) in zip(stack_corners(M), L.corners):
        for s, p in zip(starts, tup):
            given[(s, x, y - y0)] = Partition(p)
    vals = {}
    s_r, e_r = rows[H - 1]
    top = [given[(s_r, x, H)] for x in range(s_r, e_r + 2)]
    for r in range(H - 1, -1, -1):
        s_r, e_r = rows[r]
        right_low = given[(s_r, e_r + 1, r)]
        row_vals, bottom = _band_backward(top, right_low, pm, qm)
        for k, m in row_vals.items():
            if m:
                vals[(s_r + k, y0 + r)] = m
        if r == 0:
            if any(bottom):
                raise GrowthError("labels do not reach the empty partition at the bottom")
            break
        s_b, e_b = rows[r - 1]
        chain = PartitionChain(tuple(bottom), qm)
        for s in range(s_r - 1, s_b - 1, -1):
            try:
                chain = jdt_preimage(chain, given[(s, e_r + 1, r)])
            except ValueError as exc:
                raise GrowthError(f"corner ({e_r + 1},{y0 + r}): no jdt preimage ({exc})") from None
        top = list(chain.seq) + [given[(s_b, x, r)] for x in range(e_r + 2, e_b + 2)]
    out = Filling.of(M, vals)
    if v in ("dual_rsk", "rsk_prime") and not out.is_zero_one():
        raise GrowthError("labels do not come from a 0-1 filling under this variant")
    if stack_growth_labels(out, v) != L:
        raise GrowthError("labels are inconsistent: the rebuilt filling does not reproduce them")
    return out


def _band_backward(top, right_low, pm, qm):
    """Backward rules on one row of cells.

    ``top`` holds the labels along the row's upper edge (left to right) and
    ``right_low`` the label at its lower-right corner.  Works on the
    standardised row so that strips become single cells.
    """
    right_high = top[-1]
    if not contains(right_low, right_high):
        raise GrowthError("lower-right label is not contained in the upper-right label")
    # expand columns
    sub_top = [tuple(top[0])]
    col_of = []
    for x in range(1, len(top)):
        seq = _steps(top[x - 1], top[x], qm)
        sub_top += seq[1:]
        col_of += [x - 1] * (len(seq) - 1)
    right = _steps(right_low, right_high, pm)  # bottom to top
    k = len(right) - 1
    N = len(sub_top) - 1
    labels = {}
    for i in range(N + 1):
        labels[(i, k)] = sub_top[i]
    for j in range(k + 1):
        labels[(N, j)] = right[j]
    crosses = []
    for i in range(N - 1, -1, -1):
        for j in range(k - 1, -1, -1):
            mu, nu, rho = labels[(i, j + 1)], labels[(i + 1, j)], labels[(i + 1, j + 1)]
            if not (_single(mu, rho) and _single(nu, rho)):
                raise GrowthError("labels along a row are not compatible")
            lam, cross = _bwd(mu, nu, rho)
            labels[(i, j)] = lam
            if cross:
                crosses.append(i)
    if any(labels[(0, j)] for j in range(k + 1)):
        raise GrowthError("row labels do not start from the empty partition")
    row_vals = {}
    for i in crosses:
        row_vals[col_of[i]] = row_vals.get(col_of[i], 0) + 1
    bottom = [Partition._trusted(labels[(0, 0)])]
    for x in range(1, len(top)):
        # last sub-column of column x-1
        idx = max(i for i, c in enumerate(col_of) if c == x - 1) + 1 if (x - 1) in col_of else None
        if idx is None:
            bottom.append(bottom[-1])
        else:
            bottom.append(Partition._trusted(labels[(idx, 0)]))
    return row_vals, bottom
