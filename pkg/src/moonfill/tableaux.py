"""Partition chains, their tableau views, jeu de taquin, promotion and evacuation.

A chain is the sequence of shapes read along one border of a growth diagram.
Three step modes are used: ``cell`` (each step adds at most one cell),
``hstrip`` (horizontal strips, semistandard tableaux) and ``vstrip``
(vertical strips, transposes of semistandard tableaux).
"""

from dataclasses import dataclass

from .partitions import (
    EMPTY,
    Partition,
    contains,
    format_partition,
    is_horizontal_strip,
    is_vertical_strip,
    parse_partition,
    partitions_between,
    transpose,
)

MODES = ("cell", "hstrip", "vstrip")


class ChainError(ValueError):
    pass


def step_ok(a, b, mode: str) -> bool:
    if not contains(a, b):
        return False
    if mode == "cell":
        return sum(b) - sum(a) <= 1
    if mode == "hstrip":
        return is_horizontal_strip(a, b)
    if mode == "vstrip":
        return is_vertical_strip(a, b)
    raise ChainError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class PartitionChain:
    seq: tuple
    mode: str = "cell"

    def __post_init__(self):
        seq = tuple(p if isinstance(p, Partition) else Partition(p) for p in self.seq)
        object.__setattr__(self, "seq", seq)
        if self.mode not in MODES:
            raise ChainError(f"unknown mode {self.mode!r}")
        if not seq or seq[0]:
            raise ChainError("a chain starts at the empty partition")
        for i in range(1, len(seq)):
            if not step_ok(seq[i - 1], seq[i], self.mode):
                raise ChainError(
                    f"step {i} ({format_partition(seq[i - 1])} -> {format_partition(seq[i])}) "
                    f"is not a valid {self.mode} step"
                )

    @classmethod
    def _trusted(cls, seq, mode):
        obj = object.__new__(cls)
        object.__setattr__(obj, "seq", tuple(seq))
        object.__setattr__(obj, "mode", mode)
        return obj

    def __len__(self):
        return len(self.seq)

    def __getitem__(self, i):
        return self.seq[i]

    def __iter__(self):
        return iter(self.seq)

    @property
    def steps(self) -> int:
        return len(self.seq) - 1

    @property
    def last(self) -> Partition:
        return self.seq[-1]

    def step_sizes(self):
        return [sum(self.seq[i]) - sum(self.seq[i - 1]) for i in range(1, len(self.seq))]

    def transposed(self) -> "PartitionChain":
        mode = {"cell": "cell", "hstrip": "vstrip", "vstrip": "hstrip"}[self.mode]
        return PartitionChain._trusted([transpose(p) for p in self.seq], mode)

    def distinct(self):
        """The chain with repeated consecutive partitions removed."""
        out = [self.seq[0]]
        for p in self.seq[1:]:
            if p != out[-1]:
                out.append(p)
        return tuple(out)

    def to_text(self) -> str:
        return "\n".join(format_partition(p) for p in self.seq) + "\n"

    @classmethod
    def from_text(cls, text: str, mode: str = "cell") -> "PartitionChain":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        return cls(tuple(parse_partition(ln) for ln in lines), mode)


def chain(*parts, mode="cell") -> PartitionChain:
    """Build a chain from partition-like arguments."""
    return PartitionChain(tuple(Partition(p) for p in parts), mode)


# -- tableaux -----------------------------------------------------------------

TABLEAU_KINDS = ("standard", "partial", "semistandard", "transposed_semistandard")
_KIND_MODE = {
    "standard": "cell",
    "partial": "cell",
    "semistandard": "hstrip",
    "transposed_semistandard": "vstrip",
}


@dataclass(frozen=True)
class Tableau:
    """Rows listed bottom to top (French convention)."""

    rows: tuple
    kind: str = "standard"

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        if self.kind not in TABLEAU_KINDS:
            raise ChainError(f"unknown tableau kind {self.kind!r}")
        Partition(len(r) for r in rows)  # shape must be a partition
        self._check()

    def _check(self):
        rows = self.rows
        strict_rows = self.kind != "semistandard"
        strict_cols = self.kind != "transposed_semistandard"
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if x < 1:
                    raise ChainError(f"entry {x} at row {r + 1} is not positive")
                if c and (x < row[c - 1] or strict_rows and x == row[c - 1]):
                    raise ChainError(f"row {r + 1} is not increasing at column {c + 1}")
                if r and (x < rows[r - 1][c] or strict_cols and x == rows[r - 1][c]):
                    raise ChainError(f"column {c + 1} is not increasing at row {r + 1}")
        if self.kind in ("standard", "partial"):
            flat = [x for row in rows for x in row]
            if len(set(flat)) != len(flat):
                raise ChainError("entries of a partial tableau must be distinct")
            if self.kind == "standard" and sorted(flat) != list(range(1, len(flat) + 1)):
                raise ChainError("a standard tableau uses 1..n once each")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def entries(self):
        return {(c, r): x for r, row in enumerate(self.rows) for c, x in enumerate(row)}

    def max_entry(self) -> int:
        return max((x for row in self.rows for x in row), default=0)

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows) + "\n"

    @classmethod
    def from_text(cls, text: str, kind: str = "standard") -> "Tableau":
        rows = [tuple(int(t) for t in ln.split()) for ln in text.splitlines() if ln.strip()]
        return cls(tuple(rows), kind)


def chain_to_tableau(c: PartitionChain) -> Tableau:
    if c.mode == "cell":
        sizes = c.step_sizes()
        kind = "standard" if all(s == 1 for s in sizes) else "partial"
    elif c.mode == "hstrip":
        kind = "semistandard"
    else:
        kind = "transposed_semistandard"
    last = c.last
    rows = [[0] * n for n in last]
    for i in range(1, len(c)):
        prev, cur = c[i - 1], c[i]
        for r, n in enumerate(cur):
            lo = prev[r] if r < len(prev) else 0
            for col in range(lo, n):
                rows[r][col] = i
    return Tableau(tuple(tuple(r) for r in rows), kind)


def tableau_to_chain(t: Tableau, length=None) -> PartitionChain:
    """Chain whose i-th shape holds the entries <= i. ``length`` is the number of steps."""
    n = t.max_entry() if length is None else length
    if n < t.max_entry():
        raise ChainError(f"length {n} is smaller than the largest entry {t.max_entry()}")
    seq = []
    for i in range(n + 1):
        seq.append(Partition(sum(1 for x in row if x <= i) for row in t.rows))
    return PartitionChain(tuple(seq), _KIND_MODE[t.kind])


# -- jeu de taquin on chains --------------------------------------------------

def _jdt_cell(seq):
    n = len(seq) - 1
    if not seq[1]:
        return list(seq[1:])
    mu = [EMPTY]
    for i in range(1, n):
        mu.append(_cell_square(mu[-1], seq[i], seq[i + 1]))
    return mu


def _slide_colours(prev_mu, lam, nxt):
    """One square of the semistandard jdt growth: red/green recolouring."""
    rows = max(len(nxt), 1)
    reds = [(lam[r] if r < len(lam) else 0) - (prev_mu[r] if r < len(prev_mu) else 0) for r in range(rows)]
    red_row_of_col = {}
    for r in range(len(lam)):
        lo = prev_mu[r] if r < len(prev_mu) else 0
        for c in range(lo, lam[r]):
            red_row_of_col[c] = r
    for r in range(len(nxt)):
        lo = lam[r] if r < len(lam) else 0
        for c in range(lo, nxt[r]):
            if c in red_row_of_col:
                # green above red in column c: they trade places
                reds[red_row_of_col[c]] -= 1
                reds[r] += 1
    return Partition(nxt[r] - reds[r] for r in range(len(nxt)))


def _jdt_hstrip(seq):
    n = len(seq) - 1
    if not seq[1]:
        return list(seq[1:])
    mu = [EMPTY]
    for i in range(1, n):
        lam, nxt = seq[i], seq[i + 1]
        if nxt == lam:
            mu.append(mu[-1])
        else:
            mu.append(_slide_colours(mu[-1], lam, nxt))
    return mu


def jdt_chain(c: PartitionChain) -> PartitionChain:
    if c.steps < 1:
        raise ChainError("jeu de taquin needs at least one step")
    if c.mode == "cell":
        return PartitionChain._trusted(_jdt_cell(c.seq), "cell")
    if c.mode == "hstrip":
        return PartitionChain._trusted(_jdt_hstrip(c.seq), "hstrip")
    return jdt_chain(c.transposed()).transposed()


def promotion(c: PartitionChain) -> PartitionChain:
    if c.steps < 1:
        raise ChainError("promotion needs at least one step")
    return PartitionChain._trusted(jdt_chain(c).seq + (c.last,), c.mode)


def _unslide(mode, prev_mu, mu, nxt, r):
    """Find lam with jdt square (prev_mu, lam, nxt) -> mu."""
    if mu == prev_mu:
        return nxt
    found = []
    for lam in partitions_between(prev_mu, nxt):
        if sum(lam) - sum(prev_mu) != r:
            continue
        if lam == nxt:
            continue
        if mode == "cell":
            if _cell_square(prev_mu, lam, nxt) == mu:
                found.append(lam)
        else:
            if not (is_horizontal_strip(prev_mu, lam) and is_horizontal_strip(lam, nxt)):
                continue
            if _slide_colours(prev_mu, lam, nxt) == mu:
                found.append(lam)
    if len(found) != 1:
        raise ChainError(f"no unique jeu de taquin preimage ({len(found)} candidates)")
    return found[0]


def _cell_square(prev_mu, lam, nxt):
    if nxt == lam:
        return prev_mu
    cands = [p for p in partitions_between(prev_mu, nxt) if sum(p) == sum(lam)]
    other = [p for p in cands if p != lam]
    return other[0] if other else lam


def promotion_inverse(c: PartitionChain) -> PartitionChain:
    if c.mode == "vstrip":
        return promotion_inverse(c.transposed()).transposed()
    seq = c.seq
    n = len(seq) - 1
    if n < 1:
        raise ChainError("promotion needs at least one step")
    if seq[-1] == seq[-2]:
        return PartitionChain._trusted((EMPTY,) + seq[:-1], c.mode)
    r = sum(seq[-1]) - sum(seq[-2])
    lam = [None] * (n + 1)
    lam[n] = seq[n]
    for i in range(n - 1, 0, -1):
        lam[i] = _unslide(c.mode, seq[i - 1], seq[i], lam[i + 1], r)
    lam[0] = EMPTY
    if sum(lam[1]) != r:
        raise ChainError("chain is not in the image of promotion")
    return PartitionChain._trusted(lam, c.mode)


def jdt_preimage(c: PartitionChain, last) -> PartitionChain:
    """The chain d with jdt(d) = c and final partition ``last``."""
    return promotion_inverse(PartitionChain(c.seq + (Partition(last),), c.mode))


def evacuation(c: PartitionChain) -> PartitionChain:
    n = c.steps
    out = [None] * (n + 1)
    out[n] = c.last
    cur = c
    for i in range(1, n + 1):
        cur = jdt_chain(cur)
        out[n - i] = cur.last
    return PartitionChain._trusted(out, c.mode)


# -- sliding oracle -------------------------------------------------------------

def _rows_from_cells(cells):
    if not cells:
        return ()
    height = max(r for _, r in cells) + 1
    rows = []
    for r in range(height):
        row = []
        c = 0
        while (c, r) in cells:
            row.append(cells[(c, r)])
            c += 1
        rows.append(tuple(row))
    return tuple(rows)


def jdt_slide(t: Tableau) -> Tableau:
    """Jeu de taquin by sliding cells; independent of the chain version."""
    if t.kind == "transposed_semistandard":
        flipped = Tableau(_transpose_rows(t.rows), "semistandard")
        return Tableau(_transpose_rows(jdt_slide(flipped).rows), t.kind)
    cells = {pos: x - 1 for pos, x in t.entries().items()}
    holes = sorted((pos for pos, x in cells.items() if x == 0), key=lambda p: -p[0])
    for pos in holes:
        del cells[pos]
    for hole in holes:
        c, r = hole
        while True:
            right = cells.get((c + 1, r))
            above = cells.get((c, r + 1))
            if right is None and above is None:
                break
            if right is None or (above is not None and above <= right):
                # ties go to the upper cell
                cells[(c, r)] = above
                del cells[(c, r + 1)]
                r += 1
            else:
                cells[(c, r)] = right
                del cells[(c + 1, r)]
                c += 1
    return Tableau(_rows_from_cells(cells), t.kind)


def _transpose_rows(rows):
    if not rows:
        return ()
    return tuple(tuple(rows[r][c] for r in range(len(rows)) if c < len(rows[r])) for c in range(len(rows[0])))
