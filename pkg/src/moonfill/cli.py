"""Command-line front end.

Grids use the text convention of ``parse_grid`` (top row first); chain files hold
one partition per line.  Every input argument is a path or ``-`` for stdin.
Exit status: 0 on success or a passing suite, 1 on a failing suite, 2 on usage,
parse or precondition errors.
"""

import argparse
import csv
import io
import json
import sys
from collections import Counter

from .fillings import KINDS, FILLING_CLASSES, CountQuery, Filling, enumerate_fillings, longest_chain, parse_grid, sums
from .growth import VARIANTS, rsk_correspond
from .partitions import format_partition, parse_partition
from .polyomino import MoonPolyomino
from .suites import SUITES, SuiteConfig, run_suite
from .tableaux import MODES, PartitionChain, chain_to_tableau, evacuation, jdt_chain, jdt_preimage
from .tableaux import promotion, promotion_inverse
from .transform import (
    StackGrowthLabels,
    e_transform,
    ev_t,
    jbar,
    jbar_inverse,
    moon_move,
    moon_move_inverse,
    stack_growth_labels,
    stack_growth_reconstruct,
    to_ferrers,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _variant(name):
    v = name.replace("-", "_")
    if v not in VARIANTS:
        raise argparse.ArgumentTypeError(
            f"unknown variant {name!r}; choose from {', '.join(x.replace('_', '-') for x in VARIANTS)}"
        )
    return v


def _int_vector(text):
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def read_chain(text, mode="cell"):
    """Parse a chain file, reporting the offending line number."""
    parts = []
    for i, ln in enumerate(text.splitlines()):
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        try:
            parts.append(parse_partition(s))
        except ValueError as exc:
            raise UsageError(f"line {i + 1}: {exc}") from None
    try:
        return PartitionChain(tuple(parts), mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_grid(text) -> Filling:
    try:
        return parse_grid(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_shape(text) -> MoonPolyomino:
    try:
        return MoonPolyomino.from_text(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output helpers ----------------------------------------------------------------

def _chain_dict(c: PartitionChain):
    return {"mode": c.mode, "chain": [format_partition(p) for p in c]}


def _emit(args, text, obj, rows=None):
    if args.format == "json":
        return json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if args.format == "csv":
        if rows is None:
            raise UsageError(f"csv output is not available for {args.command}")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return text


def _grid_out(args, f: Filling):
    rows = [list(ln) for ln in f.to_text().splitlines()]
    return _emit(args, f.to_text(), f.to_dict(), rows)


def _chain_out(args, c: PartitionChain):
    rows = [[i, format_partition(p)] for i, p in enumerate(c)]
    return _emit(args, c.to_text(), _chain_dict(c), rows)


# -- commands ------------------------------------------------------------------------

def cmd_rsk(args):
    f = read_grid(_read(args.input))
    P, Q = rsk_correspond(f, args.variant)
    if args.only:
        c = P if args.only == "P" else Q
        return _chain_out(args, c)
    tp, tq = chain_to_tableau(P), chain_to_tableau(Q)
    text = (
        "# P\n" + P.to_text() + "# Q\n" + Q.to_text()
        + "# P tableau\n" + tp.to_text() + "# Q tableau\n" + tq.to_text()
    )
    obj = {
        "variant": args.variant,
        "P": _chain_dict(P),
        "Q": _chain_dict(Q),
        "P_tableau": [list(r) for r in tp.rows],
        "Q_tableau": [list(r) for r in tq.rows],
    }
    return _emit(args, text, obj)


def cmd_jdt(args):
    c = read_chain(_read(args.input), args.mode)
    if args.inverse:
        if args.last is None:
            raise UsageError("jdt --inverse needs --last PARTITION")
        return _chain_out(args, jdt_preimage(c, parse_partition(args.last)))
    return _chain_out(args, jdt_chain(c))


def cmd_promote(args):
    c = read_chain(_read(args.input), args.mode)
    return _chain_out(args, (promotion_inverse if args.inverse else promotion)(c))


def cmd_evacuate(args):
    text = _read(args.input)
    if args.filling:
        return _grid_out(args, ev_t(read_grid(text), args.variant))
    return _chain_out(args, evacuation(read_chain(text, args.mode)))


def cmd_jbar(args):
    f = read_grid(_read(args.input))
    op = jbar_inverse if args.inverse else jbar
    return _grid_out(args, op(f, args.variant, args.border))


def cmd_move_column(args):
    f = read_grid(_read(args.input))
    op = moon_move_inverse if args.inverse else moon_move
    return _grid_out(args, op(f, args.column, args.variant))


def cmd_to_ferrers(args):
    return _grid_out(args, to_ferrers(read_grid(_read(args.input)), args.kind))


def cmd_e_transform(args):
    return _grid_out(args, e_transform(read_grid(_read(args.input)), args.variant))


def cmd_stack_labels(args):
    text = _read(args.input)
    if args.reconstruct:
        if args.shape is None:
            raise UsageError("stack-labels --reconstruct needs --shape GRID")
        M = read_shape(_read(args.shape))
        try:
            L = StackGrowthLabels.from_text(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return _grid_out(args, stack_growth_reconstruct(L, M, args.variant))
    L = stack_growth_labels(read_grid(text), args.variant)
    rows = [[f"{x},{y}", " ".join(format_partition(p) for p in tup)] for (x, y), tup in L.corners]
    return _emit(args, L.to_text(), L.to_dict(), rows)


def census(M: MoonPolyomino, q: CountQuery, group="lr"):
    """Counts of the fillings matching q, keyed by (l,) or (l, row sums)."""
    out = Counter()
    for f in enumerate_fillings(M, q):
        l = longest_chain(f, q.kind)
        out[(l,) if group == "l" else (l, sums(f)[0])] += 1
    return sorted(out.items())


def cmd_census(args):
    M = read_shape(_read(args.input))
    caps = {}
    if args.max_cells is not None:
        caps["max_cells"] = args.max_cells
    if args.max_mass is not None:
        caps["max_mass"] = args.max_mass
    q = CountQuery(
        kind=args.kind,
        l=args.l,
        r=args.rows,
        c=args.cols,
        n=args.n,
        filling_class=args.filling_class,
        max_mass=args.max_mass,
        caps=caps,
    )
    table = census(M, q, args.group)
    lines, objs, rows = [], [], []
    rows.append(["l", "count"] if args.group == "l" else ["l", "r", "count"])
    for key, n in table:
        if args.group == "l":
            lines.append(f"l={key[0]}: {n}")
            objs.append({"l": key[0], "count": n})
            rows.append([key[0], n])
        else:
            r = " ".join(map(str, key[1]))
            lines.append(f"l={key[0]} r={r}: {n}")
            objs.append({"l": key[0], "r": list(key[1]), "count": n})
            rows.append([key[0], r, n])
    total = sum(n for _, n in table)
    lines.append(f"total: {total}")
    obj = {"kind": args.kind, "class": args.filling_class, "buckets": objs, "total": total}
    return _emit(args, "\n".join(lines) + "\n", obj, rows)


def cmd_verify(args):
    cfg = SuiteConfig(max_cells=args.max_cells, max_mass=args.max_mass, seed=args.seed, samples=args.samples)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; available: {', '.join(SUITES)}, all")
    reports = [run_suite(n, cfg) for n in names]
    if args.format == "json":
        obj = [r.to_dict() for r in reports]
        out = json.dumps(obj[0] if len(obj) == 1 else obj, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "status", "instances", "failures"])
        for r in reports:
            w.writerows(r.csv_rows())
        out = buf.getvalue()
    else:
        out = "".join(r.to_text() for r in reports)
    return out, all(r.passed for r in reports)


# -- parser ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="moonfill", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--variant", type=_variant, default="rsk", help="rsk, dual-rsk-prime, dual-rsk or rsk-prime")
    common.add_argument("--max-cells", type=int)
    common.add_argument("--max-mass", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, input=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if input:
            sp.add_argument("input", help="file path or - for stdin")
        sp.set_defaults(func=func)
        return sp

    sp = add("rsk", cmd_rsk, "P and Q chains and tableaux of a rectangular filling")
    sp.add_argument("--only", choices=("P", "Q"), help="print just one chain")
    for name, func, what in (("jdt", cmd_jdt, "one jeu de taquin step on a chain"), ("promote", cmd_promote, "promotion of a chain")):
        sp = add(name, func, what)
        sp.add_argument("--mode", choices=MODES, default="cell")
        sp.add_argument("--inverse", action="store_true")
        if name == "jdt":
            sp.add_argument("--last", help="final partition of the preimage (with --inverse)")
    sp = add("jbar", cmd_jbar, "promotion on a rectangular filling")
    sp.add_argument("--inverse", action="store_true")
    sp.add_argument("--border", choices=("top", "right"), default="top")
    sp = add("move-column", cmd_move_column, "move a column to the end of its maximal rectangle")
    sp.add_argument("--column", type=int, required=True, help="0-based column index")
    sp.add_argument("--inverse", action="store_true")
    sp = add("to-ferrers", cmd_to_ferrers, "map a moon filling to a Ferrers filling")
    sp.add_argument("--kind", choices=("ne", "NE", "nE", "Ne"), default="ne")
    sp = add("evacuate", cmd_evacuate, "evacuation of a chain, or ev_t of a Ferrers filling")
    sp.add_argument("--mode", choices=MODES, default="cell")
    sp.add_argument("--filling", action="store_true", help="input is a Ferrers filling")
    add("e-transform", cmd_e_transform, "transpose the boundary labels of a Ferrers filling")
    sp = add("stack-labels", cmd_stack_labels, "growth labels of a stack filling, or the inverse")
    sp.add_argument("--reconstruct", action="store_true", help="input is a label file")
    sp.add_argument("--shape", help="stack shape grid for --reconstruct")
    sp = add("census", cmd_census, "count fillings of a shape by longest chain and row sums")
    sp.add_argument("--kind", choices=KINDS, default="ne")
    sp.add_argument("--class", dest="filling_class", choices=FILLING_CLASSES, default="zero_one")
    sp.add_argument("--l", type=int, help="keep only this longest-chain length")
    sp.add_argument("--n", type=int, help="total mass")
    sp.add_argument("--rows", type=_int_vector, help="row sums, bottom to top")
    sp.add_argument("--cols", type=_int_vector, help="column sums, left to right")
    sp.add_argument("--group", choices=("l", "lr"), default="lr")
    sp = add("verify", cmd_verify, "run a verification suite", input=False)
    sp.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            out, ok = cmd_verify(args)
            sys.stdout.write(out)
            return EXIT_OK if ok else EXIT_FAIL
        sys.stdout.write(args.func(args))
        return EXIT_OK
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"moonfill {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
