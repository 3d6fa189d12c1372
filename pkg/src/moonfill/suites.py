"""Property suites that check the main theorems exhaustively on small instances.

Each suite returns a VerificationReport.  Reports are deterministic given the
configuration; wall time is recorded separately so JSON output stays stable.
"""

import itertools
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

import numpy as np

from .fillings import (
    KIND_VARIANT,
    KINDS,
    WEIGHTED_KINDS,
    CountQuery,
    Filling,
    enumerate_fillings,
    lambda_by_size,
    lambda_statistic,
    longest_chain,
    parse_grid,
    permutation_filling,
    restrict,
    sums,
)
from .growth import (
    VARIANTS,
    ZERO_ONE_VARIANTS,
    greene_oracle_sums,
    greene_shape,
    grow,
    partial_standardize,
    rsk_correspond,
    rsk_invert,
    standardize,
    ungrow,
)
from .knuth import (
    apply_knuth_move,
    entries_triangle,
    find_knuth_moves,
    triangle_shape,
)
from .partitions import transpose
from .polyomino import (
    MoonPolyomino,
    arrangements,
    classify,
    content,
    ferrers,
    ferrers_shapes,
    interval_systems,
    maximal_rectangles,
    moon_polyominoes,
    rectangle,
    stack,
)
from .tableaux import PartitionChain, evacuation, jdt_chain
from .transform import (
    _rect_of_column,
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

MAX_REPORTED_FAILURES = 50


@dataclass
class SuiteConfig:
    max_cells: int | None = None
    max_mass: int | None = None
    seed: int = 0
    samples: int | None = None

    def get(self, name, default):
        val = getattr(self, name)
        return default if val is None else val


@dataclass
class VerificationReport:
    suite: str
    config: dict
    instances: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    checks: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, check, f=None, detail=""):
        self.failure_count += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            item = {"check": check, "detail": detail}
            if f is not None:
                item["input"] = f.to_text() if hasattr(f, "to_text") else str(f)
            self.failures.append(item)

    def count(self, check, n=1):
        self.checks[check] = self.checks.get(check, 0) + n

    def to_dict(self, with_time=False):
        d = {
            "suite": self.suite,
            "passed": self.passed,
            "instances": self.instances,
            "checks": dict(sorted(self.checks.items())),
            "failure_count": self.failure_count,
            "failures": self.failures,
            "config": self.config,
        }
        if with_time:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status}  instances={self.instances}  time={self.wall_time:.2f}s"]
        for k, v in sorted(self.checks.items()):
            lines.append(f"  {k}: {v}")
        for item in self.failures:
            lines.append(f"  failure [{item['check']}] {item['detail']}")
            if "input" in item:
                lines.extend("    " + ln for ln in item["input"].splitlines())
        if self.failure_count > len(self.failures):
            lines.append(f"  ... {self.failure_count - len(self.failures)} more failures")
        return "\n".join(lines) + "\n"

    def csv_rows(self):
        return [[self.suite, "PASS" if self.passed else "FAIL", self.instances, self.failure_count]]


# -- instance generators -------------------------------------------------------------

def rect_fillings(w, h, cls="zero_one", max_mass=None):
    q = CountQuery(filling_class=cls, max_mass=max_mass)
    return list(enumerate_fillings(rectangle(w, h), q))


def partial_fillings(M):
    return list(enumerate_fillings(M, CountQuery(filling_class="partial")))


def legal_variants(f):
    return VARIANTS if f.is_zero_one() else tuple(v for v in VARIANTS if v not in ZERO_ONE_VARIANTS)


def _partial_sums(lam, kmax):
    out, s = [], 0
    for i in range(kmax):
        s += lam[i] if i < len(lam) else 0
        out.append(s)
    return out


# -- greene --------------------------------------------------------------------------

def _greene_check(rep, f, kinds):
    n = f.mass
    if n == 0:
        return
    for kind in kinds:
        v, tr = KIND_VARIANT[kind]
        got = _partial_sums(greene_shape(f, v, tr), n)
        want = greene_oracle_sums(f, kind, n)
        rep.count(f"kind {kind}")
        if got != want:
            rep.fail("greene", f, f"{kind}: growth sums {got} vs brute force {want}")


def suite_greene(cfg: SuiteConfig, rep: VerificationReport):
    """Growth-diagram shapes against brute-force unions of chains."""
    side = 4
    max_cells = cfg.get("max_cells", 16)
    for w in range(1, side + 1):
        for h in range(1, side + 1):
            if w * h > max_cells:
                continue
            for f in rect_fillings(w, h, "partial"):
                rep.instances += 1
                rep.count("partial")
                _greene_check(rep, f, KINDS)
    rng = random.Random(cfg.seed)
    max_mass = cfg.get("max_mass", 8)
    for i in range(cfg.get("samples", 1000)):
        w, h = rng.randint(1, side), rng.randint(1, side)
        cells = [(x, y) for x in range(w) for y in range(h)]
        m = rng.randint(1, max_mass)
        vals = {}
        if i % 2:
            for c in rng.sample(cells, min(m, len(cells))):
                vals[c] = 1
        else:
            for _ in range(m):
                c = rng.choice(cells)
                vals[c] = vals.get(c, 0) + 1
        f = Filling.of(rectangle(w, h), vals)
        rep.instances += 1
        rep.count("random")
        _greene_check(rep, f, KINDS if f.is_zero_one() else ("ne", "se", "NE", "SE"))


# -- Jakob census ------------------------------------------------------------------

def ne_chains(M: MoonPolyomino):
    """All ne-chains of cells of M whose bounding box lies in M."""
    cells = sorted(M.cells)
    out = []

    def rec(chain):
        out.append(tuple(chain))
        x0, y0 = chain[0]
        xl, yl = chain[-1]
        for c in cells:
            if c[0] > xl and c[1] > yl and M.contains_box(x0, c[0], y0, c[1]):
                rec(chain + [c])

    for c in cells:
        rec([c])
    return out


_POP = None


def _popcount(a):
    a = a - ((a >> 1) & 0x5555555555555555)
    a = (a & 0x3333333333333333) + ((a >> 2) & 0x3333333333333333)
    a = (a + (a >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (a * 0x0101010101010101) >> 56


def census_01(M: MoonPolyomino):
    """Counter of (longest ne-chain, row counts bottom to top, entries) over all 0-1 fillings."""
    cells = sorted(M.cells)
    idx = {c: i for i, c in enumerate(cells)}
    N = len(cells)
    masks = np.arange(1 << N, dtype=np.uint64)
    best = np.zeros(1 << N, dtype=np.int64)
    chains = sorted(ne_chains(M), key=len)
    for ch in chains:
        cm = np.uint64(sum(1 << idx[c] for c in ch))
        hit = (masks & cm) == cm
        best[hit] = len(ch)
    ys = M.ys
    base = N + 1
    key = best.copy()
    total = _popcount(masks).astype(np.int64)
    for y in ys:
        rm = np.uint64(sum(1 << idx[c] for c in cells if c[1] == y))
        key = key * base + _popcount(masks & rm).astype(np.int64)
    vals, counts = np.unique(key, return_counts=True)
    out = Counter()
    for v, cnt in zip(vals.tolist(), counts.tolist()):
        rows = []
        for _ in ys:
            rows.append(v % base)
            v //= base
        out[(v, tuple(reversed(rows)))] += cnt
    return out


def suite_jakob(cfg: SuiteConfig, rep: VerificationReport):
    """Census of 0-1 fillings by (longest ne-chain, row counts) is invariant under column permutations."""
    max_cells = cfg.get("max_cells", 9)
    by_content = {}
    for system in interval_systems(max_cells):
        group = arrangements(system)
        ref = None
        for M in group:
            rep.instances += 1
            cen = census_01(M)
            nl = Counter()
            for (l, rows), c in cen.items():
                nl[(sum(rows), l)] += c
            key = content(M)
            if key in by_content:
                rep.count("content comparisons")
                if by_content[key][1] != nl:
                    rep.fail("content", M, f"(n, l) census differs from {by_content[key][0].to_text()!r}")
            else:
                by_content[key] = (M, nl)
            if ref is None:
                ref = (M, cen)
                continue
            rep.count("permutation comparisons")
            if cen != ref[1]:
                rep.fail("permutation", M, "census (l, r) differs from the first arrangement " + repr(ref[0].to_text()))
    # independent cross-check of the vectorised chain search on a sample
    rng = random.Random(cfg.seed)
    moons = list(moon_polyominoes(min(max_cells, 7)))
    for _ in range(200):
        M = rng.choice(moons)
        f = Filling.of(M, {c: 1 for c in M.cells if rng.random() < 0.5})
        rep.count("chain cross-checks")
        direct = longest_chain(f, "ne")
        chains = [ch for ch in ne_chains(M) if all(f.get(*c) for c in ch)]
        if direct != max((len(c) for c in chains), default=0):
            rep.fail("chain search", f, "vectorised and direct longest ne-chain disagree")


# -- Jakob weak ------------------------------------------------------------------

def _lambda_by_rows(f, kind):
    return {(R.y0, R.y1): lam for R, lam in lambda_statistic(f, kind).items()}


def _kinds_for(f):
    return ("ne", "NE", "nE", "Ne") if f.is_zero_one() else ("ne", "NE")


def suite_jakob_weak(cfg: SuiteConfig, rep: VerificationReport):
    """moon_move preserves Lambda and row sums and rotates column sums; to_ferrers preserves (Lambda, n)."""
    max_cells = cfg.get("max_cells", 8)
    max_mass = cfg.get("max_mass", 3)
    q = CountQuery(filling_class="arbitrary", max_mass=max_mass)
    ferrers_census = {}

    def census_of(M, kind):
        c = Counter()
        for f in enumerate_fillings(M, q):
            if kind in ("nE", "Ne") and not f.is_zero_one():
                continue
            c[(tuple(sorted(lambda_by_size(lambda_statistic(f, kind)).items())), f.mass)] += 1
        return c

    for M in moon_polyominoes(max_cells):
        movable = movable_columns(M)
        fills = list(enumerate_fillings(M, q))
        F = ferrers(list(content(M)))
        census = {k: Counter() for k in ("ne", "NE", "nE", "Ne")}
        for f in fills:
            rep.instances += 1
            r, c = sums(f)
            for kind in _kinds_for(f):
                v = KIND_VARIANT[kind][0]
                lam = _lambda_by_rows(f, kind)
                for c1 in movable:
                    lo, hi, _, _ = _rect_of_column(M, c1)
                    g = moon_move(f, c1, v)
                    rep.count("moves")
                    r2, c2 = sums(g)
                    i0 = M.xs.index(lo)
                    block = c[i0 : i0 + hi - lo + 1]
                    want_c = c[:i0] + block[1:] + block[:1] + c[i0 + hi - lo + 1 :]
                    if r2 != r or c2 != want_c:
                        rep.fail("sums", f, f"{kind} move at {c1}: sums {r2},{c2}")
                    if _lambda_by_rows(g, kind) != lam:
                        rep.fail("lambda", f, f"{kind} move at {c1}: Lambda changed")
                    if moon_move_inverse(g, hi, v) != f:
                        rep.fail("inverse", f, f"{kind} move at {c1}: inverse move does not restore")
                h = to_ferrers(f, kind)
                rep.count("to_ferrers")
                if h.polyomino != F:
                    rep.fail("to_ferrers shape", f, f"{kind}: lands on {h.polyomino.columns}")
                elif lambda_by_size(lambda_statistic(h, kind)) != lambda_by_size(lambda_statistic(f, kind)) or h.mass != f.mass:
                    rep.fail("to_ferrers lambda", f, f"{kind}: (Lambda, n) changed")
                census[kind][(tuple(sorted(lambda_by_size(lambda_statistic(f, kind)).items())), f.mass)] += 1
        for kind in census:
            key = (F, kind)
            if key not in ferrers_census:
                ferrers_census[key] = census_of(F, kind)
            rep.count("census comparisons")
            if census[kind] != ferrers_census[key]:
                rep.fail("census", M, f"{kind}: (Lambda, n) census differs from the Ferrers shape")


# -- commutation on moon polyominoes ---------------------------------------------------

def _moved_position(M, c1, x):
    lo, hi, _, _ = _rect_of_column(M, c1)
    if x < lo or x > hi:
        return x
    return hi if x == lo else x - 1


def suite_commutation(cfg: SuiteConfig, rep: VerificationReport):
    """Moves at two admissible columns give the same filling in either order."""
    max_cells = cfg.get("max_cells", 8)
    max_mass = cfg.get("max_mass", 3)
    q = CountQuery(filling_class="arbitrary", max_mass=max_mass)
    for M in moon_polyominoes(max_cells):
        movable = movable_columns(M)
        if len(movable) < 2:
            continue
        pairs = list(itertools.combinations(movable, 2))
        for f in enumerate_fillings(M, q):
            rep.instances += 1
            for v in legal_variants(f):
                for a, b in pairs:
                    rep.count("pairs")
                    try:
                        g1 = moon_move(moon_move(f, a, v), _moved_position(M, a, b), v)
                        g2 = moon_move(moon_move(f, b, v), _moved_position(M, b, a), v)
                    except ValueError as exc:
                        rep.fail("admissible", f, f"{v} columns {a},{b}: {exc}")
                        continue
                    if g1 != g2:
                        rep.fail("commute", f, f"{v} columns {a},{b}: orders disagree")


# -- propositions on rectangles ---------------------------------------------------------

def _P(f, v):
    return rsk_correspond(f, v)[0].seq


def _Q(f, v):
    return rsk_correspond(f, v)[1].seq


def suite_prop_chains(cfg: SuiteConfig, rep: VerificationReport):
    """Column windows shift under jbar up to dual Knuth equivalence; row windows stay Knuth equivalent."""
    max_cells = cfg.get("max_cells", 12)
    for w in range(1, 5):
        for h in range(1, 5):
            if w * h > max_cells:
                continue
            for f in rect_fillings(w, h, "zero_one"):
                rep.instances += 1
                r, c = sums(f)
                for v in VARIANTS:
                    g = jbar(f, v)
                    r2, c2 = sums(g)
                    if r2 != r or c2 != c[1:] + c[:1]:
                        rep.fail("sums", f, f"{v}: row/column sums {r2},{c2}")
                    for i in range(1, w):
                        for k in range(1, w - i + 1):
                            rep.count("column windows")
                            a = restrict(f, range(i, i + k))
                            b = restrict(g, range(i - 1, i - 1 + k))
                            if _Q(a, v) != _Q(b, v):
                                rep.fail("dual Knuth", f, f"{v}: columns {i + 1}..{i + k} vs {i}..{i + k - 1}")
                    for i in range(h):
                        for j in range(i, h):
                            rep.count("row windows")
                            a = restrict(f, rows=range(i, j + 1))
                            b = restrict(g, rows=range(i, j + 1))
                            if _P(a, v) != _P(b, v):
                                rep.fail("Knuth", f, f"{v}: rows {i + 1}..{j + 1}")


NONCOMMUTING_PI = "010\n101\n210\n"


def suite_lemma_commutation(cfg: SuiteConfig, rep: VerificationReport):
    """std(jbar(f)) = std(jbar(partial_standardize(f)))."""
    max_mass = cfg.get("max_mass", 4)
    for w, h in ((2, 2), (2, 3), (3, 2)):
        for f in rect_fillings(w, h, "arbitrary", max_mass):
            rep.instances += 1
            for v in ("rsk", "dual_rsk_prime"):
                rep.count(v)
                lhs = standardize(jbar(f, v), v)
                rhs = standardize(jbar(partial_standardize(f, v), v), v)
                if lhs != rhs:
                    rep.fail("commutation", f, f"{v}: standardisations differ")
    # promotion does not commute with full standardisation
    pi = parse_grid(NONCOMMUTING_PI)
    s = standardize(pi, "rsk")
    lhs = jbar(jbar(jbar(s, "rsk"), "rsk"), "rsk")
    rep.count("non-commutation witness")
    if lhs == standardize(jbar(pi, "rsk"), "rsk"):
        rep.fail("witness", pi, "jbar^3(std) equals std(jbar) on the witness")


def _partial_by_P(w, h):
    groups = {}
    for f in rect_fillings(w, h, "partial"):
        groups.setdefault(_P(f, "rsk"), []).append(f)
    return groups


def _splice_columns(f, x0, block):
    """Replace columns x0..x0+width(block)-1 of f by block (block normalised at x=0)."""
    bw = len(block.polyomino.xs)
    vals = {c: m for c, m in f.entries if not (x0 <= c[0] < x0 + bw)}
    for (x, y), m in block.entries:
        vals[(x0 + x, y)] = m
    return Filling.of(f.polyomino, vals)


def _splice_rows(f, y0, block):
    bh = len(block.polyomino.ys)
    vals = {c: m for c, m in f.entries if not (y0 <= c[1] < y0 + bh)}
    for (x, y), m in block.entries:
        vals[(x, y0 + y)] = m
    return Filling.of(f.polyomino, vals)


def _normal(f):
    from .transform import translate_to_origin

    return translate_to_origin(f)


def suite_prop_equivalence(cfg: SuiteConfig, rep: VerificationReport):
    """Knuth-equivalent middle blocks stay Knuth equivalent after jbar (and the dual for rows)."""
    max_cells = cfg.get("max_cells", 20)
    for w in range(4, 6):
        for h in range(1, 5):
            if w * h > max_cells:
                continue
            groups = _partial_by_P(3, h)
            for f in rect_fillings(w, h, "partial"):
                rep.instances += 1
                for a in range(1, w - 2):
                    beta = _normal(restrict(f, range(a, a + 3)))
                    for gamma in groups[_P(beta, "rsk")]:
                        if gamma == beta:
                            continue
                        g = _splice_columns(f, a, gamma)
                        if not g.is_partial():
                            continue
                        rep.count("column pairs")
                        b2 = restrict(jbar(f), range(a - 1, a + 2))
                        g2 = restrict(jbar(g), range(a - 1, a + 2))
                        if _P(b2, "rsk") != _P(g2, "rsk"):
                            rep.fail("Knuth", f, f"alpha width {a}: jbar breaks Knuth equivalence with {gamma.to_text()!r}")
    for h in range(3, 6):
        for w in range(1, 5):
            if w * h > max_cells:
                continue
            qgroups = {}
            for f in rect_fillings(w, 3, "partial"):
                qgroups.setdefault(_Q(f, "rsk"), []).append(f)
            for f in rect_fillings(w, h, "partial"):
                rep.instances += 1
                for a in range(0, h - 2):
                    beta = _normal(restrict(f, rows=range(a, a + 3)))
                    for gamma in qgroups[_Q(beta, "rsk")]:
                        if gamma == beta:
                            continue
                        g = _splice_rows(f, a, gamma)
                        if not g.is_partial():
                            continue
                        rep.count("row pairs")
                        b2 = restrict(jbar(f), rows=range(a, a + 3))
                        g2 = restrict(jbar(g), rows=range(a, a + 3))
                        if _Q(b2, "rsk") != _Q(g2, "rsk"):
                            rep.fail("dual Knuth", f, f"rows from {a}: jbar breaks dual Knuth equivalence with {gamma.to_text()!r}")


# -- appendix ----------------------------------------------------------------------------

NEAR_MISS_CROSSES = (5, 3, 4, 1, 2)
NEAR_MISS_CIRCLES = (3, 1, 5, 4, 2)


def _perm_of(f):
    return tuple(y + 1 for (_, y), _ in sorted(f.entries))


def _window_triangle(f, k):
    x0 = f.polyomino.xs[0]
    return triangle_shape(restrict(f, range(x0 + k - 2, x0 + k + 1)))


def _diff_positions(a, b):
    return [i for i, (p, q) in enumerate(zip(a, b)) if p != q]


def suite_prop_difference(cfg: SuiteConfig, rep: VerificationReport):
    """Single Knuth moves versus single-partition differences of the top border."""
    max_n = cfg.get("max_cells", 5)
    for n in range(1, max_n + 1):
        perms = list(itertools.permutations(range(1, n + 1)))
        F = {p: permutation_filling(p) for p in perms}
        Pc = {}
        for p in perms:
            Pc.setdefault(_P(F[p], "rsk"), []).append(p)
        moves_between = {}
        for p in perms:
            rep.instances += 1
            for m in find_knuth_moves(F[p]):
                g = apply_knuth_move(F[p], m)
                q = _perm_of(g)
                moves_between.setdefault((p, q), set()).add(m.k)
                rep.count("forward moves")
                if _P(g, "rsk") != _P(F[p], "rsk"):
                    rep.fail("forward Knuth", F[p], f"move {m.to_dict()} changes P")
                d = _diff_positions(_Q(F[p], "rsk"), _Q(g, "rsk"))
                if len(d) != 1 or d[0] not in (m.k - 1, m.k):
                    rep.fail("forward border", F[p], f"move {m.to_dict()}: top borders differ at {d}")
                if not (_window_triangle(F[p], m.k) and _window_triangle(g, m.k)):
                    rep.fail("forward triangle", F[p], f"move {m.to_dict()}: window not triangle shaped")
        for cls in Pc.values():
            for p, q in itertools.permutations(cls, 2):
                d = _diff_positions(_Q(F[p], "rsk"), _Q(F[q], "rsk"))
                if len(d) != 1:
                    continue
                j = d[0]
                for k in (j, j + 1):
                    if k < 2 or k > n - 1:
                        continue
                    if not (_window_triangle(F[p], k) and _window_triangle(F[q], k)):
                        continue
                    rep.count("backward pairs")
                    if k not in moves_between.get((p, q), ()):
                        rep.fail("backward", F[p], f"{q} satisfies the hypothesis at k={k} but no single move links them")
    # the near miss: one differing partition, yet no single move
    x, o = permutation_filling(NEAR_MISS_CROSSES), permutation_filling(NEAR_MISS_CIRCLES)
    rep.count("near miss")
    d = _diff_positions(_Q(x, "rsk"), _Q(o, "rsk"))
    if _P(x, "rsk") != _P(o, "rsk") or len(d) != 1:
        rep.fail("near miss", x, f"expected Knuth equivalence and one differing partition, got {d}")
    if _window_triangle(o, 4):
        rep.fail("near miss", o, "circles are triangle shaped in the last three columns")
    if any(apply_knuth_move(x, m) == o for m in find_knuth_moves(x)):
        rep.fail("near miss", x, "a single move links the pair")


def partial_chains(max_cells, max_entry):
    """All cell-mode chains of length max_entry with at most max_cells cells."""
    out = []

    def rec(seq):
        if len(seq) == max_entry + 1:
            out.append(PartitionChain(tuple(seq), "cell"))
            return
        lam = seq[-1]
        rec(seq + [lam])
        if sum(lam) < max_cells:
            for i in range(len(lam) + 1):
                if i == len(lam) or (i == 0 or lam[i - 1] > lam[i]):
                    nxt = list(lam)
                    if i == len(lam):
                        nxt.append(1)
                    else:
                        nxt[i] += 1
                    rec(seq + [tuple(nxt)])

    rec([()])
    return out


def swap_entries(c: PartitionChain, a: int):
    """Interchange entries a and a+1; None if one is missing or the result is no tableau."""
    s = c.seq
    if a < 1 or a + 1 >= len(s):
        return None
    if s[a] == s[a - 1] or s[a + 1] == s[a]:
        return None
    added = [r for r in range(len(s[a + 1])) if (s[a + 1][r] if r < len(s[a + 1]) else 0) != (s[a][r] if r < len(s[a]) else 0)]
    row = added[0]
    mid = list(s[a - 1])
    if row > len(mid):
        return None
    if row == len(mid):
        mid.append(0)
    mid[row] += 1
    if any(mid[i] < mid[i + 1] for i in range(len(mid) - 1)):
        return None
    seq = list(s)
    seq[a] = tuple(mid)
    if seq[a] == s[a]:
        return None
    return PartitionChain(tuple(seq), "cell")


def suite_jdt_difference(cfg: SuiteConfig, rep: VerificationReport):
    """Swapping k, k+1 (resp. k-1, k) in a tableau swaps neighbouring entries after jdt."""
    max_cells = cfg.get("max_cells", 6)
    max_entry = max_cells + 1
    for R in partial_chains(max_cells, max_entry):
        rep.instances += 1
        jR = jdt_chain(R)
        for k in range(2, len(R.seq) - 1):
            S = swap_entries(R, k)
            if S is not None and entries_triangle(R, k) and entries_triangle(S, k):
                if k == 2:
                    # jdt deletes entry k-1 = 1 itself, so the statement only makes sense from k = 3
                    rep.count("k=2 boundary, excluded")
                else:
                    rep.count("swap k,k+1")
                    if jdt_chain(S).seq != getattr(swap_entries(jR, k - 1), "seq", None):
                        rep.fail("first statement", R, f"k={k}")
            S = swap_entries(R, k - 1)
            if S is not None and entries_triangle(R, k) and entries_triangle(S, k):
                rep.count("swap k-1,k")
                jS = jdt_chain(S).seq
                options = [swap_entries(jR, a) for a in (k - 2, k - 1)]
                if not any(o is not None and o.seq == jS for o in options):
                    rep.fail("second statement", R, f"k={k}")


# -- evacuation on Ferrers shapes ---------------------------------------------------------

def suite_section6(cfg: SuiteConfig, rep: VerificationReport):
    """Border labels under column reversal and under ev_t are evacuations of the top row labels."""
    max_cells = cfg.get("max_cells", 6)
    for F in ferrers_shapes(max_cells):
        k = F.rows[max(F.ys)][1] - F.rows[max(F.ys)][0] + 1
        for f in partial_fillings(F):
            rep.instances += 1
            lam = stack_growth_labels(f, "rsk").flattened()
            ev = list(evacuation(PartitionChain(tuple(lam[: k + 1]), "cell")).seq)
            mu = stack_growth_labels(reverse_columns(f), "rsk").flattened()
            # standard on a Ferrers shape: one cross in every row and every column
            std = f.mass == len(F.xs) == len(F.ys)
            rep.count("standard" if std else "partial")
            if len(mu) != len(lam) or [transpose(p) for p in mu[: k + 1]] != ev or any(
                transpose(mu[i]) != lam[i] for i in range(k, len(lam))
            ):
                rep.fail("reflection", f, "labels of the reflected filling are not the transposed evacuation")
            nu = stack_growth_labels(ev_t(f, "rsk"), "rsk").flattened()
            if len(nu) != len(lam) or list(nu[: k + 1]) != ev or list(nu[k:]) != list(lam[k:]):
                rep.fail("ev_t", f, "labels of ev_t are not the evacuation")
    for heights in sorted(set(itertools.permutations((2, 2, 1)))):
        try:
            S = stack(heights)
        except ValueError:
            continue
        for f in partial_fillings(S):
            rep.instances += 1
            rep.count("stack round trips")
            L = stack_growth_labels(f, "rsk")
            if stack_growth_reconstruct(L, S, "rsk") != f:
                rep.fail("stack round trip", f, "reconstruction differs")


# -- counterexamples -----------------------------------------------------------------------

CE_A_FILLING = "xx.\nxxx\n0xx\n"
CE_A_SHAPE = ".oo\nooo\nooo\n"
CE_B_FILLING = ".00x\nxxxx\nx000\n"
CE_B_SHAPE = "ooo.\noooo\noooo\n"
CE_C_FILLING = "x0.\nx00\nxxx\n"
CE_C_SHAPE = ".oo\nooo\nooo\n"


def counterexample_facts():
    """Return a list of (name, ok, detail) for the three closing counterexamples."""
    out = []
    a = parse_grid(CE_A_FILLING)
    Sa = MoonPolyomino.from_text(CE_A_SHAPE)
    n_a = count_zero_one(Sa, lambda f: f.mass == 7 and longest_chain(f, "NE") == 3)
    ok = longest_chain(a, "NE") == 3 and a.mass == 7 and content(Sa) == content(a.polyomino) and n_a == 0
    out.append(("longest NE-chain", ok, f"filling NE={longest_chain(a, 'NE')}, fillings of the permuted stack: {n_a}"))

    b = parse_grid(CE_B_FILLING)
    Sb = MoonPolyomino.from_text(CE_B_SHAPE)
    counts = tuple(sum(1 for (x, y), _ in b.entries if y == yy) for yy in b.polyomino.ys)
    target = (longest_chain(b, "ne"), longest_chain(b, "se"), counts)

    def match_b(f):
        return (longest_chain(f, "ne"), longest_chain(f, "se"), tuple(sum(1 for (x, y), _ in f.entries if y == yy) for yy in f.polyomino.ys)) == target

    n_b = count_zero_one(Sb, match_b)
    ok = target == (2, 1, (1, 4, 1)) and content(Sb) == content(b.polyomino) and n_b == 0
    out.append(("ne and se with row counts", ok, f"filling (ne, se, rows)={target}, fillings of the permuted shape: {n_b}"))

    c = parse_grid(CE_C_FILLING)
    Sc = MoonPolyomino.from_text(CE_C_SHAPE)
    r, cs = sums(c)
    perm_c = tuple(cs[i] for i in (2, 0, 1))
    fills = list(enumerate_fillings(Sc, CountQuery(r=r, c=perm_c, filling_class="zero_one")))
    ne = [longest_chain(f, "ne") for f in fills]
    ok = longest_chain(c, "ne") == 1 and len(fills) == 1 and ne == [2]
    out.append(("row and column sums", ok, f"filling ne={longest_chain(c, 'ne')}, 0-1 fillings with sums {r}/{perm_c}: {len(fills)} with ne {ne}"))
    return out


def count_zero_one(M, pred):
    return sum(1 for f in enumerate_fillings(M, CountQuery(filling_class="zero_one")) if pred(f))


def suite_counterexamples(cfg: SuiteConfig, rep: VerificationReport):
    for name, ok, detail in counterexample_facts():
        rep.instances += 1
        rep.count(name)
        if not ok:
            rep.fail(name, None, detail)


# -- round trips -----------------------------------------------------------------------------

def suite_roundtrips(cfg: SuiteConfig, rep: VerificationReport):
    """Every bijection composed with its inverse is the identity."""
    max_mass = cfg.get("max_mass", 3)
    max_cells = cfg.get("max_cells", 8)
    for w in range(1, 4):
        for h in range(1, 4):
            fills = rect_fillings(w, h, "zero_one") + [
                f for f in rect_fillings(w, h, "arbitrary", max_mass) if not f.is_zero_one()
            ]
            for f in fills:
                rep.instances += 1
                for v in legal_variants(f):
                    rep.count("jbar")
                    g = jbar(f, v)
                    if jbar_inverse(g, v) != f or jbar(jbar_inverse(f, v), v) != f:
                        rep.fail("jbar", f, v)
                    P, Q = rsk_correspond(f, v)
                    rep.count("rsk")
                    if rsk_invert(P, Q, v) != f:
                        rep.fail("rsk", f, v)
                    if w * h <= 6 or f.mass <= 2:
                        rep.count("e_transform")
                        e = e_transform(f, v)
                        P2, Q2 = rsk_correspond(e, {"rsk": "dual_rsk_prime", "dual_rsk_prime": "rsk", "dual_rsk": "rsk_prime", "rsk_prime": "dual_rsk"}[v])
                        if P2.seq != tuple(transpose(p) for p in P.seq) or Q2.seq != tuple(transpose(p) for p in Q.seq):
                            rep.fail("e_transform", f, v)
    for w in range(1, 5):
        for h in range(1, 5):
            for f in rect_fillings(w, h, "partial"):
                rep.instances += 1
                rep.count("grow")
                d = grow(f)
                if ungrow(d.P, d.Q) != f:
                    rep.fail("grow", f, "ungrow(grow) differs")
    q = CountQuery(filling_class="arbitrary", max_mass=max_mass)
    for M in moon_polyominoes(max_cells):
        movable = movable_columns(M)
        if not movable:
            continue
        for f in enumerate_fillings(M, q):
            rep.instances += 1
            for v in legal_variants(f):
                for c1 in movable:
                    rep.count("moon_move")
                    hi = _rect_of_column(M, c1)[1]
                    if moon_move_inverse(moon_move(f, c1, v), hi, v) != f:
                        rep.fail("moon_move", f, f"{v} column {c1}")


SUITES = {
    "greene": suite_greene,
    "jakob": suite_jakob,
    "jakob-weak": suite_jakob_weak,
    "commutation": suite_commutation,
    "prop-chains": suite_prop_chains,
    "lemma-commutation": suite_lemma_commutation,
    "prop-equivalence": suite_prop_equivalence,
    "prop-difference": suite_prop_difference,
    "jdt-difference": suite_jdt_difference,
    "section6": suite_section6,
    "counterexamples": suite_counterexamples,
    "roundtrips": suite_roundtrips,
}


def run_suite(name: str, cfg: SuiteConfig = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(SUITES)}, all")
    cfg = cfg or SuiteConfig()
    rep = VerificationReport(name, asdict(cfg))
    t = time.perf_counter()
    SUITES[name](cfg, rep)
    rep.wall_time = time.perf_counter() - t
    return rep
