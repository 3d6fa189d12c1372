"""Rectangular growth diagrams and the four RSK variants.

Corner (i, j) has i cells to its left and j cells below it.  P is the right
border read bottom to top, Q the top border read left to right.

Arbitrary fillings are handled by standardising to a permutation-like filling,
growing that, and keeping only the labels between compartments.
"""

from dataclasses import dataclass
from functools import lru_cache

from .fillings import Filling, FillingError, follows, WEIGHTED_KINDS, ZERO_ONE_KINDS, KINDS
from .partitions import EMPTY, Partition, ShapeError, added_cells, contains, format_partition, intersection, transpose, union
from .polyomino import rectangle
from .tableaux import PartitionChain, step_ok

VARIANTS = ("rsk", "dual_rsk_prime", "dual_rsk", "rsk_prime")
ZERO_ONE_VARIANTS = ("dual_rsk", "rsk_prime")

# variant -> (column units laid out as, row units laid out as, P mode, Q mode)
LAYOUT = {
    "rsk": ("ne", "ne", "hstrip", "hstrip"),
    "dual_rsk_prime": ("se", "se", "vstrip", "vstrip"),
    "dual_rsk": ("ne", "se", "vstrip", "hstrip"),
    "rsk_prime": ("se", "ne", "hstrip", "vstrip"),
}

# variant with both chain modes swapped, used when transposing border labels
CONJUGATE = {"rsk": "dual_rsk_prime", "dual_rsk_prime": "rsk", "dual_rsk": "rsk_prime", "rsk_prime": "dual_rsk"}


class GrowthError(ValueError):
    pass


def check_variant(f: Filling, v: str):
    if v not in VARIANTS:
        raise GrowthError(f"unknown variant {v!r}; expected one of {', '.join(VARIANTS)}")
    if v in ZERO_ONE_VARIANTS and not f.is_zero_one():
        raise GrowthError(f"variant {v} accepts only 0-1 fillings")


# -- local rules -----------------------------------------------------------------

def _fwd(lam, mu, nu, cross):
    if cross:
        return (lam[0] + 1,) + lam[1:] if lam else (1,)
    if mu != nu:
        return union(mu, nu)
    if lam == mu:
        return lam
    i = 0
    while i < len(lam) and lam[i] == mu[i]:
        i += 1
    rho = list(mu) + [0]
    rho[i + 1] += 1
    return tuple(p for p in rho if p)


def _bwd(mu, nu, rho):
    if mu != nu:
        return intersection(mu, nu), False
    if mu == rho:
        return rho, False
    i = 0
    while i < len(mu) and mu[i] == rho[i]:
        i += 1
    if i == 0:
        return mu, True
    lam = list(mu)
    lam[i - 1] -= 1
    return tuple(p for p in lam if p), False


def _single(a, b):
    return contains(a, b) and sum(b) - sum(a) <= 1


def forward_rule(lam, mu, nu, cross: bool) -> Partition:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not (_single(lam, mu) and _single(lam, nu)):
        raise GrowthError("forward rule needs lam inside mu and nu, each by at most one cell")
    if cross and not (lam == mu == nu):
        raise GrowthError("a cross requires lam = mu = nu")
    return Partition._trusted(_fwd(lam, mu, nu, cross))


def backward_rule(mu, nu, rho):
    mu, nu, rho = Partition(mu), Partition(nu), Partition(rho)
    if not (_single(mu, rho) and _single(nu, rho)):
        raise GrowthError("backward rule needs mu and nu inside rho, each by at most one cell")
    if mu != nu and sum(mu) != sum(nu):
        raise GrowthError("mu and nu must have equal size when they differ")
    lam, cross = _bwd(mu, nu, rho)
    return Partition._trusted(lam), cross


# -- growth of partial fillings --------------------------------------------------

def grow_labels(cols, height):
    """labels[x][y] for a partial filling given as cols[x] = row of the cross or None."""
    w = len(cols)
    labels = [[EMPTY] * (height + 1) for _ in range(w + 1)]
    for x in range(w):
        left = labels[x]
        right = labels[x + 1]
        cx = cols[x]
        for y in range(height):
            right[y + 1] = _fwd(left[y], left[y + 1], right[y], cx == y)
    return labels


def _labels_backward(P, Q):
    """Fill corner labels from the right border P and top border Q; returns (labels, cols)."""
    w, h = len(Q) - 1, len(P) - 1
    labels = [[None] * (h + 1) for _ in range(w + 1)]
    for x in range(w + 1):
        labels[x][h] = tuple(Q[x])
    for y in range(h + 1):
        labels[w][y] = tuple(P[y])
    cols = [None] * w
    for x in range(w - 1, -1, -1):
        for y in range(h - 1, -1, -1):
            mu, nu, rho = labels[x][y + 1], labels[x + 1][y], labels[x + 1][y + 1]
            if not (_single(mu, rho) and _single(nu, rho)):
                raise GrowthError(f"labels around cell ({x + 1},{y + 1}) are not single-cell steps")
            lam, cross = _bwd(mu, nu, rho)
            labels[x][y] = lam
            if cross:
                if cols[x] is not None:
                    raise GrowthError(f"column {x + 1} received two crosses")
                cols[x] = y
    for x in range(w + 1):
        if labels[x][0]:
            raise GrowthError("backward pass did not reach the empty partition on the bottom border")
    for y in range(h + 1):
        if labels[0][y]:
            raise GrowthError("backward pass did not reach the empty partition on the left border")
    return labels, cols


@dataclass(frozen=True)
class GrowthDiagram:
    width: int
    height: int
    labels: tuple  # labels[x][y]
    filling: Filling

    def label(self, i, j) -> Partition:
        return Partition._trusted(self.labels[i][j])

    @property
    def P(self) -> PartitionChain:
        return PartitionChain._trusted([Partition._trusted(self.labels[self.width][y]) for y in range(self.height + 1)], "cell")

    @property
    def Q(self) -> PartitionChain:
        return PartitionChain._trusted([Partition._trusted(self.labels[x][self.height]) for x in range(self.width + 1)], "cell")

    @property
    def shape(self) -> Partition:
        return Partition._trusted(self.labels[self.width][self.height])

    def to_dict(self):
        return {
            "width": self.width,
            "height": self.height,
            "filling": self.filling.to_text().splitlines(),
            "corners": [
                [format_partition(self.labels[x][y]) for x in range(self.width + 1)]
                for y in range(self.height, -1, -1)
            ],
        }


def _rect_frame(f: Filling):
    if not f.polyomino.columns:
        return 0, -1, 0, -1
    if not f.polyomino.is_rectangle():
        raise GrowthError("growth diagrams need a rectangular filling")
    return f.polyomino.bounds


def grow(f: Filling) -> GrowthDiagram:
    if not f.is_partial():
        raise GrowthError("grow needs a partial filling (at most one 1 per row and column)")
    x0, x1, y0, y1 = _rect_frame(f)
    w, h = x1 - x0 + 1, y1 - y0 + 1
    cols = [None] * w
    for (x, y), _ in f.entries:
        cols[x - x0] = y - y0
    labels = grow_labels(cols, h)
    return GrowthDiagram(w, h, tuple(tuple(col) for col in labels), f)


def ungrow(P: PartitionChain, Q: PartitionChain, x0: int = 0, y0: int = 0) -> Filling:
    if P.last != Q.last:
        raise GrowthError(f"final partitions differ: {format_partition(P.last)} vs {format_partition(Q.last)}")
    for ch in (P, Q):
        for i in range(1, len(ch)):
            if not _single(ch[i - 1], ch[i]):
                raise GrowthError("ungrow needs chains whose steps add at most one cell")
    _, cols = _labels_backward(P.seq, Q.seq)
    w, h = len(Q) - 1, len(P) - 1
    return Filling.of(rectangle(w, h, x0, y0), {(x0 + x, y0 + y): 1 for x, y in enumerate(cols) if y is not None})


# -- standardisation ---------------------------------------------------------------

@dataclass(frozen=True)
class Standardized:
    cols: tuple  # cols[sub-column] = sub-row of its cross, or None
    n_rows: int  # number of sub-rows
    row_blocks: tuple  # sub-rows per original row, bottom to top
    col_blocks: tuple  # sub-columns per original column, left to right
    units: tuple  # ((x, y), sub-column, sub-row) per unit


def _standardize(f: Filling, v: str, keep_first_column: bool = False, any_shape: bool = False) -> Standardized:
    x0, x1, y0, y1 = f.polyomino.bounds if any_shape else _rect_frame(f)
    col_layout, row_layout = LAYOUT[v][:2]
    units = [((x, y), u) for (x, y), m in f.entries for u in range(m)]
    col_key = (lambda t: (t[0][1], t[1])) if col_layout == "ne" else (lambda t: (-t[0][1], t[1]))
    row_key = (lambda t: (t[0][0], t[1])) if row_layout == "ne" else (lambda t: (-t[0][0], -t[1]))
    by_col = {x: [] for x in range(x0, x1 + 1)}
    by_row = {y: [] for y in range(y0, y1 + 1)}
    for t in units:
        by_col[t[0][0]].append(t)
        by_row[t[0][1]].append(t)
    sub_col, sub_row = {}, {}
    col_blocks, row_blocks = [], []
    k = 0
    for x in range(x0, x1 + 1):
        group = sorted(by_col[x], key=col_key)
        if keep_first_column and x == x0:
            for t in group:
                sub_col[t] = k
            col_blocks.append(1)
            k += 1
            continue
        for t in group:
            sub_col[t] = k
            k += 1
        col_blocks.append(len(group))
    n_cols = k
    k = 0
    for y in range(y0, y1 + 1):
        group = sorted(by_row[y], key=row_key)
        for t in group:
            sub_row[t] = k
            k += 1
        row_blocks.append(len(group))
    cols = [None] * n_cols
    placed = []
    for t in units:
        c, r = sub_col[t], sub_row[t]
        placed.append((t[0], c, r))
        if not keep_first_column:
            cols[c] = r
    return Standardized(tuple(cols), k, tuple(row_blocks), tuple(col_blocks), tuple(placed))


def standardize(f: Filling, v: str) -> Filling:
    """The standard (permutation-like) filling std(f) under variant v."""
    check_variant(f, v)
    s = _standardize(f, v)
    return Filling.of(rectangle(len(s.cols), s.n_rows), {(c, r): 1 for _, c, r in s.units})


def partial_standardize(f: Filling, v: str) -> Filling:
    """Expand every row and every column except the first."""
    check_variant(f, v)
    s = _standardize(f, v, keep_first_column=True)
    return Filling.of(rectangle(sum(s.col_blocks), s.n_rows), {(c, r): 1 for _, c, r in s.units})


def _offsets(blocks):
    out = [0]
    for b in blocks:
        out.append(out[-1] + b)
    return out


def _chain_modes(v):
    return LAYOUT[v][2], LAYOUT[v][3]


def variant_labels(f: Filling, v: str):
    """Corner labels at the original corners, labels[i][j], via the standardised diagram."""
    check_variant(f, v)
    s = _standardize(f, v)
    std = grow_labels(list(s.cols), s.n_rows)
    co, ro = _offsets(s.col_blocks), _offsets(s.row_blocks)
    return [[std[co[i]][ro[j]] for j in range(len(ro))] for i in range(len(co))]


def rsk_correspond(f: Filling, v: str):
    """(P, Q) of f under variant v, with the variant's strip modes."""
    check_variant(f, v)
    return _rsk_correspond(f, v)


def _rsk_correspond(f, v):
    if not f.polyomino.columns:
        return _chains_uncached(f, v)
    return _chains_cached(*_normalized(f), v)


@lru_cache(maxsize=400_000)
def _chains_cached(w, h, entries, v):
    return _chains_uncached(Filling._trusted(rectangle(w, h), entries), v)


def _chains_uncached(f, v):
    s = _standardize(f, v)
    std = grow_labels(list(s.cols), s.n_rows)
    co, ro = _offsets(s.col_blocks), _offsets(s.row_blocks)
    right = std[len(s.cols)]
    P = [Partition._trusted(right[r]) for r in ro]
    Q = [Partition._trusted(std[c][s.n_rows]) for c in co]
    pm, qm = _chain_modes(v)
    return PartitionChain._trusted(P, pm), PartitionChain._trusted(Q, qm)


def expand_chain(c: PartitionChain, mode: str):
    """Refine each strip step into single-cell steps: horizontal strips left to right,
    vertical strips bottom to top."""
    out = [c[0]]
    for i in range(1, len(c)):
        a, b = c[i - 1], c[i]
        cells = added_cells(a, b)
        cells.sort(key=(lambda t: t[0]) if mode == "hstrip" else (lambda t: t[1]))
        cur = list(a)
        for col, row in cells:
            if row == len(cur):
                cur.append(0)
            cur[row] += 1
            out.append(tuple(cur))
    return out


def _coerce_mode(c: PartitionChain, mode: str, name: str) -> PartitionChain:
    if c.mode == mode:
        return c
    for i in range(1, len(c)):
        if not step_ok(c[i - 1], c[i], mode):
            raise GrowthError(f"{name} has mode {c.mode}, but the variant needs {mode} steps")
    return PartitionChain._trusted(c.seq, mode)


def rsk_invert(P: PartitionChain, Q: PartitionChain, v: str, x0: int = 0, y0: int = 0, check: bool = True) -> Filling:
    if v not in VARIANTS:
        raise GrowthError(f"unknown variant {v!r}")
    pm, qm = _chain_modes(v)
    P = _coerce_mode(P, pm, "P")
    Q = _coerce_mode(Q, qm, "Q")
    if P.last != Q.last:
        raise GrowthError(f"final partitions differ: {format_partition(P.last)} vs {format_partition(Q.last)}")
    row_blocks = P.step_sizes()
    col_blocks = Q.step_sizes()
    Pbar = expand_chain(P, pm)
    Qbar = expand_chain(Q, qm)
    _, cols = _labels_backward(Pbar, Qbar)
    row_of = [y for y, b in enumerate(row_blocks) for _ in range(b)]
    col_of = [x for x, b in enumerate(col_blocks) for _ in range(b)]
    vals = {}
    for c, r in enumerate(cols):
        if r is None:
            continue
        cell = (x0 + col_of[c], y0 + row_of[r])
        vals[cell] = vals.get(cell, 0) + 1
    f = Filling.of(rectangle(len(Q) - 1, len(P) - 1, x0, y0), vals)
    if check:
        if v in ZERO_ONE_VARIANTS and not f.is_zero_one():
            raise GrowthError("chains are incompatible with a 0-1 filling under this variant")
        if _rsk_correspond(f, v) != (P, Q):
            raise GrowthError("chains are incompatible: the reconstructed filling does not reproduce them")
    return f


# -- Greene shapes and the brute-force oracle ------------------------------------

@lru_cache(maxsize=200_000)
def _greene_cached(w, h, entries, v):
    f = Filling._trusted(rectangle(w, h), entries)
    return _rsk_correspond(f, v)[0].last


def _normalized(f: Filling):
    if not f.polyomino.columns:
        return 0, 0, ()
    x0, x1, y0, y1 = _rect_frame(f)
    return x1 - x0 + 1, y1 - y0 + 1, tuple(((x - x0, y - y0), m) for (x, y), m in f.entries)


def greene_shape(f: Filling, v: str = "rsk", transposed: bool = False) -> Partition:
    """Final shape of the rectangle filling under variant v (optionally transposed)."""
    check_variant(f, v)
    w, h, entries = _normalized(f)
    lam = _greene_cached(w, h, entries, v) if entries else EMPTY
    return transpose(lam) if transposed else lam


class OracleCapError(ValueError):
    pass


ORACLE_CAP = 12


def greene_oracle(f: Filling, kind: str, k: int, cap: int = ORACLE_CAP) -> int:
    """Largest total size of k disjoint chains of the given kind, by exhaustive search.

    Entries are split into multiplicity units.  Units of one cell are mutually
    comparable for NE and SE (weak chains) and incomparable otherwise, so for
    ne and se an entry e can sit in at most e chains.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return greene_oracle_sums(f, kind, k, cap)[k - 1]


def greene_oracle_sums(f: Filling, kind: str, kmax: int, cap: int = ORACLE_CAP):
    """[max over unions of j chains for j = 1..kmax]."""
    if kind not in KINDS:
        raise FillingError(f"unknown chain kind {kind!r}")
    if kind in ZERO_ONE_KINDS and not f.is_zero_one():
        raise FillingError(f"{kind}-chains are only defined for 0-1 fillings")
    units = [(cell, u) for cell, m in f.entries for u in range(m)]
    if len(units) > cap:
        raise OracleCapError(f"{len(units)} units exceed the oracle cap {cap}")
    up = kind[0] in "nN"
    units.sort(key=lambda t: (t[0][0], t[0][1] if up else -t[0][1], t[1]))
    weak = kind in WEIGHTED_KINDS
    n = len(units)
    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            (p, a), (q, b) = units[i], units[j]
            rel[i][j] = follows(kind, p, q) or (weak and p == q and a < b)
    out = []
    for k in range(1, kmax + 1):
        out.append(_max_k_chains(rel, n, k))
    return out


def _max_k_chains(rel, n, k):
    # state: index of next unit, sorted tuple of chain tails (-1 = chain not started)
    memo = {}

    def best(i, tails):
        if i == n:
            return 0
        key = (i, tails)
        if key in memo:
            return memo[key]
        res = best(i + 1, tails)
        # optimistic bound: every remaining unit joins
        if res < n - i:
            tried = set()
            for idx, t in enumerate(tails):
                if t in tried:
                    continue
                tried.add(t)
                if t == -1 or rel[t][i]:
                    nt = tuple(sorted(tails[:idx] + (i,) + tails[idx + 1:]))
                    val = 1 + best(i + 1, nt)
                    if val > res:
                        res = val
                        if res == n - i:
                            break
        memo[key] = res
        return res

    return best(0, (-1,) * k)
