"""Command-line interface: ``hadz <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io, reference
from .cocycle import AssemblyConvention, CoboundarySet, assemble, dropped_relations_check
from .diagram import parse as parse_diagram
from .diagram import from_diagram, render, symmetry_axes, to_diagram
from .hadamard import NotHadamardSeed, is_hadamard, is_hadamard_set, row_stats
from .ops import apply_ops, parse_ops, rotate
from .orbits import total_orbit
from .search import (
    InfeasibleScale,
    SearchConfig,
    census,
    exhaustive_search,
    expand_from_representatives,
    reproduce_tables,
)
from .williamson import (
    NoAxis,
    extract_quadruple,
    ingest_external_seed,
    is_williamson_position,
    williamson_census,
    williamson_rotation,
)


class UsageError(Exception):
    pass


def _load_set(args) -> CoboundarySet:
    if getattr(args, "set_file", None):
        return io.set_from_json(Path(args.set_file).read_text())
    if args.set is None or args.t is None:
        raise UsageError("--t and --set (or --set-file) are required")
    return CoboundarySet.from_indices(args.t, io.parse_indices(args.set))


def _fmt(s: CoboundarySet, args) -> str:
    style = getattr(args, "paper_style", None)
    return io.format_paper_style(s, style) if style else io.format_indices(s)


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1, 2)
    except ValueError:
        raise UsageError(f"--range expects 'a..b', got {text!r}") from None


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj, sort_keys=True) if as_json else text)


# -- commands ----------------------------------------------------------------


def cmd_matrix(args) -> int:
    s = _load_set(args)
    M = assemble(s, AssemblyConvention(args.convention))
    out = io.matrix_to_packed(M) if args.format == "packed" else io.matrix_to_text(M)
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out)
    return 0


def cmd_test(args) -> int:
    s = _load_set(args)
    ok = is_hadamard(assemble(s))
    stats = row_stats(s)
    if args.json:
        _emit({"t": s.t, "set": list(s.indices), "hadamard": ok, "rows": [r.to_dict() for r in stats]}, True, "")
    else:
        print("HADAMARD" if ok else "NOT HADAMARD")
        if args.stats:
            print(" n  c_n  I_n  r_n  2c+r-2I")
            for r in stats:
                print(f"{r.n:2d} {r.c_n:4d} {r.I_n:4d} {r.r_n:4d} {r.identity_lhs:8d}")
    return 0 if ok else 1


def cmd_diagram(args) -> int:
    if args.parse:
        d = parse_diagram(Path(args.parse).read_text())
        s = from_diagram(d)
        _emit({"t": s.t, "coboundaries": list(s.indices)}, args.json, _fmt(s, args))
        return 0
    s = _load_set(args)
    d = to_diagram(s)
    axes = symmetry_axes(d)
    _emit(
        {"t": s.t, "marks": [list(r) for r in d.marks], "axes": axes},
        args.json,
        render(d) + f"\naxes: {' '.join(map(str, axes)) or 'none'}",
    )
    return 0


def cmd_apply(args) -> int:
    s = _load_set(args)
    out = apply_ops(s, parse_ops(args.op))
    _emit({"t": out.t, "coboundaries": list(out.indices)}, args.json, _fmt(out, args))
    return 0


def cmd_orbit(args) -> int:
    s = _load_set(args)
    if not is_hadamard_set(s):
        print("NOT HADAMARD", file=sys.stderr)
        return 1
    rec = total_orbit(s)
    if args.json:
        _emit(rec.to_dict(members=args.members), True, "")
        return 0
    print(f"size: {rec.size}")
    print(f"factors: {rec.factors}")
    print(f"representative: {_fmt(rec.representative, args)}")
    if not rec.symmetric:
        print("warning: no member has a symmetric diagram")
    if args.members:
        for m in rec.member_sets():
            print(_fmt(m, args))
    return 0


def cmd_search(args) -> int:
    cfg = SearchConfig(args.t, args.mode, args.repartition, args.jobs, args.out, args.budget)
    report = exhaustive_search(cfg, decompose=args.decompose)
    if args.json:
        _emit(report.to_dict(), True, "")
    else:
        print(f"t={report.t} {report.label}: {report.hadamard_total} Hadamard of {report.tested} tested "
              f"({report.wall_time:.2f} s)")
        if report.orbits:
            print("orbits: " + " + ".join(map(str, report.orbit_sizes())))
    return 0


def cmd_tables(args) -> int:
    rows = reproduce_tables(_range(args.range), jobs=args.jobs, strategy=args.strategy)
    if args.json:
        _emit([r.to_dict() for r in rows], True, "")
    else:
        print(f"{'t':>3} {'strategy':>10} {'#H':>7} {'expected':>8} {'#Will':>6} {'expected':>8}  orbits")
        for r in rows:
            flag = "ok" if r.match else "MISMATCH"
            print(f"{r.t:3d} {r.strategy:>10} {r.computed:7d} {str(r.expected):>8} {r.williamson:6d} "
                  f"{str(r.expected_williamson):>8}  {'+'.join(map(str, r.orbit_sizes))}  {flag}")
    return 0 if all(r.match for r in rows) else 1


def cmd_williamson(args) -> int:
    if args.census is not None:
        sets = census(args.census, jobs=args.jobs).sets
        n = williamson_census(sets)
        _emit({"t": args.census, "williamson": n, "census": len(sets)}, args.json,
              f"t={args.census}: {n} Williamson-positioned of {len(sets)}")
        return 0
    if args.seed:
        seeds = ingest_external_seed(args.seed)
        by_t: dict[int, list[CoboundarySet]] = {}
        for s in seeds:
            by_t.setdefault(s.t, []).append(s)
        out = []
        for t, reps in sorted(by_t.items()):
            report = expand_from_representatives(reps, verify="rows")
            out.append({"t": t, "total": report.hadamard_total, "orbits": report.orbit_sizes()})
        _emit(out, args.json, "\n".join(f"t={o['t']}: {o['total']} = {' + '.join(map(str, o['orbits']))}" for o in out))
        return 0
    s = _load_set(args)
    info: dict = {"t": s.t, "set": list(s.indices), "positioned": is_williamson_position(s)}
    try:
        i = williamson_rotation(s)
    except NoAxis:
        info["rotation"] = None
        _emit(info, args.json, "no symmetry axis")
        return 1
    info["rotation"] = i
    data = extract_quadruple(rotate(s, i))
    info.update(data.to_dict())
    _emit(info, args.json, f"rotation: T_{i}\ndecomposition: {data.decomposition()}\n"
                           f"assembled matrix back-circulant: {data.assembled_back_circulant}")
    return 0


def cmd_calibrate(args) -> int:
    ok = True
    lines = []
    for t in _range(args.t):
        rel = dropped_relations_check(t)
        for name, good in rel.items():
            lines.append(f"t={t} relation {name}: {'pass' if good else 'FAIL'}")
            ok &= good
        for s in reference.representatives(t):
            good = is_hadamard(assemble(s))
            lines.append(f"t={t} representative {io.format_paper_style(s)}: {'pass' if good else 'FAIL'}")
            ok &= good
    print("\n".join(lines))
    print("calibration passed" if ok else "calibration FAILED")
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hadz", description="Cocyclic Hadamard matrices over Z_t x Z_2^2.")
    sub = p.add_subparsers(dest="command", required=True)

    set_args = argparse.ArgumentParser(add_help=False)
    set_args.add_argument("--t", type=int, help="odd t >= 3")
    set_args.add_argument("--set", help="comma-separated coboundary indices")
    set_args.add_argument("--set-file", help="set JSON file {\"t\", \"coboundaries\"}")
    fmt_args = argparse.ArgumentParser(add_help=False)
    fmt_args.add_argument("--paper-style", nargs="?", const="table", choices=("table", "worked"),
                          help="class-grouped listing (table: braces, ascending; worked: flat, descending)")
    fmt_args.add_argument("--json", action="store_true")

    q = sub.add_parser("matrix", parents=[set_args], help="assemble and print a sign matrix")
    q.add_argument("--convention", choices=("generalized", "raw"), default="generalized")
    q.add_argument("--format", choices=("text", "packed"), default="text")
    q.add_argument("--out")
    q.set_defaults(func=cmd_matrix)

    q = sub.add_parser("test", parents=[set_args, fmt_args], help="Hadamard verdict and row statistics")
    q.add_argument("--stats", action="store_true")
    q.set_defaults(func=cmd_test)

    q = sub.add_parser("diagram", parents=[set_args, fmt_args], help="render a diagram or parse one")
    q.add_argument("--parse", metavar="FILE", help="diagram text file to convert to a set")
    q.set_defaults(func=cmd_diagram)

    q = sub.add_parser("apply", parents=[set_args, fmt_args], help="apply operations, e.g. C2,T:3,S:23,V:2")
    q.add_argument("--op", required=True)
    q.set_defaults(func=cmd_apply)

    q = sub.add_parser("orbit", parents=[set_args, fmt_args], help="total orbit, factors and representative")
    q.add_argument("--members", action="store_true")
    q.set_defaults(func=cmd_orbit)

    q = sub.add_parser("search", parents=[fmt_args], help="exhaustive or symmetric search")
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--mode", choices=("full", "symmetric"), default="full")
    q.add_argument("--repartition", choices=("all", "minimal"), default="all")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--out", help="JSON-lines output file")
    q.add_argument("--budget", type=int, help="maximum number of candidates")
    q.add_argument("--decompose", action="store_true", help="split results into orbits")
    q.set_defaults(func=cmd_search)

    q = sub.add_parser("tables", parents=[fmt_args], help="reproduce the census counts")
    q.add_argument("--range", default="3..19", help="odd t range, e.g. 3..13")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--strategy", choices=("full", "symmetric", "expansion"))
    q.set_defaults(func=cmd_tables)

    q = sub.add_parser("williamson", parents=[set_args, fmt_args], help="Williamson position and quadruple")
    q.add_argument("--census", type=int, metavar="T", help="count Williamson-positioned matrices for t")
    q.add_argument("--seed", metavar="FILE", help="JSON-lines seed file to verify and expand")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_williamson)

    q = sub.add_parser("calibrate", help="check index conventions against known identities")
    q.add_argument("--t", default="3..7", help="t or range a..b")
    q.set_defaults(func=cmd_calibrate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotHadamardSeed as exc:
        print(f"hadz {args.command}: {exc}", file=sys.stderr)
        return 1
    except (UsageError, InfeasibleScale) as exc:
        print(f"hadz {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"hadz {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
