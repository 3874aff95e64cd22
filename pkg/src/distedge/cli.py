"""Command-line entry point: ``distedge <command> [options]``.

Commands: gen, conflict, color, match, audit, check, bench.  Exit status is
0 on success, 1 when a colouring fails validation (or resampling gives up)
and 2 for unreadable input or bad options.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import constructions as cons
from .colouring import (
    EPSILON,
    bound_report,
    distance_matching,
    dsatur_colour,
    exact_chromatic,
    greedy_colour,
    read_colouring,
    resample_colour,
    verify_colouring,
    write_colouring,
)
from .graph import conflict_graph, girth, read_edge_list, trivial_degree_bound, write_edge_list
from .walks import DEFAULT_DELTA, audit_report

BENCH_HEADER = ["instance", "t", "n", "m", "maxdeg", "girth", "algo", "colours", "lower", "millis"]

FAMILY_FLAGS = {
    "cycle": ("cycle", {"n": "n"}),
    "path": ("path", {"n": "n"}),
    "complete-bipartite": ("completeBipartite", {"a": "a", "b": "b"}),
    "blown-up-c5": ("blownUpC5", {"s": "s"}),
    "hamming": ("hamming", {"d": "dims", "q": "alphabet"}),
    "projective-plane": ("projectivePlane", {"q": "q"}),
    "random-high-girth": ("randomHighGirth", {"n": "n", "d": "d", "g": "g"}),
    "petersen": ("petersen", {}),
}


class UsageError(Exception):
    """Bad option combination; maps to exit status 2."""


def derive_seed(seed: int, label: str) -> int:
    """Independent, reproducible sub-seed for a named consumer of randomness."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _config(args: argparse.Namespace) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k == "func":
            continue
        if isinstance(v, Path):
            v = str(v)
        elif isinstance(v, Fraction):
            v = str(v)
        out[k] = v
    return out


def _emit_json(payload: dict, path: Path | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _sidecar(path: Path) -> Path:
    return path.with_name(path.name + ".json")


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return value


# -- commands ------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family not in FAMILY_FLAGS:
        raise UsageError(f"--family must be one of {sorted(FAMILY_FLAGS)}")
    family, flags = FAMILY_FLAGS[args.family]
    params = {name: _need(args, flag) for name, flag in flags.items()}
    seed = None
    if family == "randomHighGirth":
        seed = derive_seed(args.seed, "gen")
    spec = cons.ConstructionSpec(family, params, seed)
    g = cons.build(spec)
    out = _need(args, "output")
    write_edge_list(g, out)
    _emit_json(
        {
            "family": family,
            "parameters": params,
            "seed": seed,
            "n": g.n,
            "m": g.m,
            "maxDegree": g.max_degree(),
            "girth": girth(g),
            "config": _config(args),
        },
        _sidecar(out),
    )
    return 0


def cmd_conflict(args) -> int:
    g = read_edge_list(_need(args, "input"))
    cg = conflict_graph(g, args.t)
    _emit_json(
        {
            "vertices": cg.n,
            "edges": cg.num_edges,
            "maxDegree": cg.max_degree,
            "degreeBound": trivial_degree_bound(g.max_degree(), args.t),
            "baseMaxDegree": g.max_degree(),
            "config": _config(args),
        },
        args.output,
    )
    return 0


def _colour(cg, algo: str, k, seed: int, max_rounds: int, budget: int):
    """Run one colourer; returns ``(colouring or None, extra report fields)``."""
    if algo == "greedy":
        return greedy_colour(cg), {}
    if algo == "dsatur":
        return dsatur_colour(cg), {}
    if algo == "exact":
        res = exact_chromatic(cg, budget)
        return res.colouring, {"optimal": res.optimal, "cliqueBound": res.lower_bound, "nodes": res.nodes}
    if algo == "resample":
        k = cg.max_degree + 1 if k is None else k
        c = resample_colour(cg, k, derive_seed(seed, "resample"), max_rounds)
        return c, {"k": k, "status": "success" if c is not None else "failure"}
    raise UsageError(f"unknown --algo {algo!r}")


def cmd_color(args) -> int:
    g = read_edge_list(_need(args, "input"))
    cg = conflict_graph(g, args.t)
    c, extra = _colour(cg, args.algo, args.k, args.seed, args.max_rounds, args.budget)
    payload = {"algo": args.algo, **extra}
    if c is None:
        payload["config"] = _config(args)
        _emit_json(payload, _sidecar(args.output) if args.output else None)
        print("resampling did not find a valid colouring within --max-rounds", file=sys.stderr)
        return 1
    nu = distance_matching(g, args.t, "exact", budget=args.budget, cg=cg)
    report = bound_report(g, args.t, c, nu, args.epsilon)
    payload.update(report.to_dict())
    payload["config"] = _config(args)
    if args.output:
        write_colouring(c, args.output)
        _emit_json(payload, _sidecar(args.output))
    else:
        _emit_json(payload, None)
    return 0


def cmd_match(args) -> int:
    g = read_edge_list(_need(args, "input"))
    mode = args.algo if args.algo in ("greedy", "exact") else None
    if mode is None:
        raise UsageError("match takes --algo greedy or --algo exact")
    res = distance_matching(g, args.t, mode, budget=args.budget)
    _emit_json(
        {"edges": sorted(res.edges), "size": res.size, "exact": res.exact, "config": _config(args)},
        args.output,
    )
    return 0


def cmd_audit(args) -> int:
    g = read_edge_list(_need(args, "input"))
    if g.m == 0:
        raise UsageError("graph has no edges to audit")
    if args.all_roots:
        roots = list(range(g.m))
        if len(roots) > args.root_sample:
            rng = np.random.default_rng(derive_seed(args.seed, "audit-roots"))
            roots = sorted(int(r) for r in rng.choice(g.m, size=args.root_sample, replace=False))
    else:
        if not 0 <= args.root < g.m:
            raise UsageError(f"--root must lie in 0..{g.m - 1}, got {args.root}")
        roots = [args.root]
    reports = [audit_report(g, r, args.t, args.delta) for r in roots]
    _emit_json({"config": _config(args), "reports": reports}, args.output)
    return 0


def cmd_check(args) -> int:
    g = read_edge_list(_need(args, "input"))
    c = read_colouring(_need(args, "colouring"))
    extra = sorted(e for e in c.assignment if not 0 <= e < g.m)
    if extra:
        raise UsageError(f"colouring names edge ids outside 0..{g.m - 1}: {extra[:5]}")
    bad = verify_colouring(g, args.t, c)
    _emit_json(
        {
            "valid": not bad,
            "colours": c.colour_count,
            "violations": [list(v) for v in bad],
            "config": _config(args),
        },
        args.output,
    )
    return 1 if bad else 0


def default_grid(seed: int) -> list[tuple[str, cons.ConstructionSpec]]:
    rseed = derive_seed(seed, "bench:random")
    return [
        ("cycle-6", cons.ConstructionSpec("cycle", {"n": 6})),
        ("petersen", cons.ConstructionSpec("petersen")),
        ("K3,3", cons.ConstructionSpec("completeBipartite", {"a": 3, "b": 3})),
        ("blown-up-c5-2", cons.ConstructionSpec("blownUpC5", {"s": 2})),
        ("hamming-2-3", cons.ConstructionSpec("hamming", {"d": 2, "q": 3})),
        ("heawood", cons.ConstructionSpec("projectivePlane", {"q": 2})),
        ("random-100-4-5", cons.ConstructionSpec("randomHighGirth", {"n": 100, "d": 4, "g": 5}, rseed)),
    ]


def _bench_cell(cell) -> list:
    name, spec, t, algo, k, seed, max_rounds, budget = cell
    g = cons.build(spec)
    cg = conflict_graph(g, t)
    start = time.perf_counter()
    c, _ = _colour(cg, algo, k, seed, max_rounds, budget)
    millis = (time.perf_counter() - start) * 1000
    nu = distance_matching(g, t, "exact", budget=budget, cg=cg)
    lower = ""
    colours = ""
    if c is not None:
        colours = c.colour_count
        report = bound_report(g, t, c, nu)
        lower = "" if report.lower_bound is None else report.lower_bound
    gr = girth(g)
    return [name, t, g.n, g.m, g.max_degree(), "" if gr is None else gr, algo, colours, lower, f"{millis:.1f}"]


def cmd_bench(args) -> int:
    ts = [int(x) for x in args.ts.split(",")]
    algos = [args.algo] if args.algo else ["greedy", "dsatur"]
    cells = [
        (name, spec, t, algo, args.k, args.seed, args.max_rounds, args.budget)
        for name, spec in default_grid(args.seed)
        for t in ts
        for algo in algos
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_cell, cells))
    else:
        rows = [_bench_cell(c) for c in cells]
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(BENCH_HEADER)
        writer.writerows(rows)
    finally:
        if args.output:
            out.close()
    return 0


# -- parser ----------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distedge", description="Distance-t edge colouring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--input", type=Path)
        p.add_argument("--output", type=Path)
        p.add_argument("--t", type=_positive, default=2)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=_positive, default=2_000_000)
        return p

    p = add("gen", cmd_gen, "generate a graph family")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_FLAGS))
    for flag in ("s", "q", "n", "g", "a", "b", "dims", "alphabet"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--d", type=float)

    add("conflict", cmd_conflict, "conflict-graph statistics")

    p = add("color", cmd_color, "colour edges and report bounds")
    p.add_argument("--algo", choices=["greedy", "dsatur", "exact", "resample"], default="dsatur")
    p.add_argument("--k", type=_positive)
    p.add_argument("--max-rounds", type=_positive, default=100_000)
    p.add_argument("--epsilon", type=float, default=EPSILON)

    p = add("match", cmd_match, "distance-t matching")
    p.add_argument("--algo", choices=["greedy", "exact"], default="exact")

    p = add("audit", cmd_audit, "neighbourhood audits around root edges")
    p.add_argument("--delta", type=Fraction, default=DEFAULT_DELTA)
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--all-roots", action="store_true")
    p.add_argument("--root-sample", type=_positive, default=64)

    p = add("check", cmd_check, "validate a colouring file")
    p.add_argument("--colouring", "--coloring", type=Path)

    p = add("bench", cmd_bench, "sweep a grid of instances and write CSV")
    p.add_argument("--ts", default="2,3", help="comma-separated distances")
    p.add_argument("--algo", choices=["greedy", "dsatur", "exact", "resample"])
    p.add_argument("--k", type=_positive)
    p.add_argument("--max-rounds", type=_positive, default=100_000)
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"distedge {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
