"""Command-line interface: classify / solve / generate / verify / bench.

Every command is deterministic for a fixed seed and fixed inputs; all
randomness flows through one 64-bit seed flag.  Reports (``--report``)
contain only deterministic payload, so repeated runs are byte-identical;
wall-clock timing goes to stderr.

Exit codes: 0 success, 1 infeasible/none, 2 input error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from fractions import Fraction

from . import constructions, diskdom, graphcore, pattern1d, solver1d, squarelike
from .exactnum import NumberParseError, format_number, quad
from .geom2d import GeometryError, parse_polygon
from .pattern1d import PatternError, UnboundedIntervalError

DEFAULT_SEED = 20240601

INPUT_ERRORS = (
    PatternError,
    NumberParseError,
    GeometryError,
    graphcore.GraphError,
    diskdom.DiskError,
    constructions.ConstructionError,
    squarelike.SquareLikeError,
    solver1d.SolverError,
    OSError,
    ValueError,
)

INTERNAL_ERRORS = (solver1d.InternalInvariantError, diskdom.InternalInvariantError)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _write_report(args, payload: dict, inputs: dict) -> None:
    if not getattr(args, "report", None):
        return
    report = {
        "command": args.command,
        "seed": getattr(args, "seed", DEFAULT_SEED),
        "inputs": {path: _digest(text) for path, text in inputs.items()},
        "payload": payload,
    }
    with open(args.report, "w", encoding="utf-8") as fh:
        json.dump(report, fh, sort_keys=True, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    text = _read(args.pattern)
    pattern = pattern1d.parse_pattern(text)
    kind, witness = pattern1d.classify_with_witness(pattern)
    if witness is not None:
        print(f"{kind.value} ratio {format_number(witness)}")
    else:
        print(kind.value)
    _write_report(args, {"classification": kind.value}, {args.pattern: text})
    return 0


def _load_instance(args):
    inputs = {}
    pattern = None
    if args.pattern:
        ptext = _read(args.pattern)
        inputs[args.pattern] = ptext
        pattern = pattern1d.parse_pattern(ptext)
    itext = _read(args.instance)
    inputs[args.instance] = itext
    inst_pattern, translates = pattern1d.parse_instance(itext)
    if pattern is None:
        pattern = inst_pattern
    if pattern is None:
        raise PatternError("no pattern given via --pattern or the instance file")
    return pattern, translates, inputs


def cmd_solve_1d(args) -> int:
    try:
        pattern, translates, inputs = _load_instance(args)
    except UnboundedIntervalError:
        # clique shortcut: every pair of translates of an unbounded pattern
        # intersects, so any single translate dominates
        count = sum(
            1
            for raw in _read(args.instance).splitlines()
            if raw.strip().startswith("translate ")
        )
        size = 1 if count else 0
        print(f"size {size}")
        print("witness" + (" 0" if count else ""))
        return 0
    if args.algo == "auto":
        size, witness = solver1d.solve(pattern, translates)
    elif args.algo == "dp":
        size, witness = solver1d.solve_interval_pattern(pattern, translates)
    elif args.algo == "rational":
        size, witness = solver1d.solve_rational_points(pattern, translates)
    else:
        budget = args.k if args.k is not None else len(translates)
        witness = solver1d.solve_fpt_branching(pattern, translates, budget)
        if witness is None:
            print("none")
            return 1
        size = len(witness)
    print(f"size {size}")
    print("witness " + " ".join(map(str, witness)))
    _write_report(args, {"size": size, "witness": witness}, inputs)
    return 0


def cmd_disk_solve(args) -> int:
    text = _read(args.instance)
    inst = diskdom.parse_disks(text)
    if args.mode == "check":
        chosen = args.set or []
        covered = diskdom.coverage_count(inst, chosen)
        dominating = covered == inst.n
        print(f"covered {covered} of {inst.n}")
        print("dominating" if dominating else "not-dominating")
        _write_report(
            args, {"covered": covered, "dominating": dominating}, {args.instance: text}
        )
        return 0 if dominating else 1
    witness = diskdom.xp_solve(inst, args.k)
    if witness is None:
        print("none")
        _write_report(args, {"witness": None}, {args.instance: text})
        return 1
    print("witness " + " ".join(map(str, witness)))
    _write_report(args, {"witness": witness}, {args.instance: text})
    return 0


def cmd_squarelike(args) -> int:
    text = _read(args.poly)
    poly = parse_polygon(text)
    cert = squarelike.compute_squarelike_vectors(poly, args.n)
    for name, vec in (("b1", cert.b1), ("b2", cert.b2), ("u1", cert.u1), ("u2", cert.u2)):
        print(
            f"{name} {format_number(quad(vec.x))} {format_number(quad(vec.y))}"
        )
    print(f"epsilon {format_number(quad(cert.epsilon))}")
    ok, failure = squarelike.verify_squarelike(poly, cert, args.n)
    for prop in range(1, 5):
        if ok or not failure.startswith(f"property {prop}"):
            print(f"property{prop} PASS")
        else:
            print(f"property{prop} FAIL ({failure})")
            break
    payload = {
        "epsilon": str(cert.epsilon),
        "verified": ok,
        "bits": cert.max_bit_length(),
    }
    _write_report(args, payload, {args.poly: text})
    return 0 if ok else 3


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen_universal(args) -> int:
    text = _read(args.graph)
    g = graphcore.parse_graph(text)
    pattern, translates = constructions.universal_pattern(g)
    _emit(args, pattern1d.format_instance(pattern, translates))
    ok = constructions.verify_universal(g)
    print(f"verify universal-pattern: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    _write_report(args, {"verified": ok, "n": g.n, "m": len(g.edges())}, {args.graph: text})
    return 0 if ok else 3


def cmd_gen_trigrid(args) -> int:
    text = _read(args.pattern)
    pattern = pattern1d.parse_pattern(text)
    real = constructions.trigrid_realization(pattern, args.radius)
    order = sorted(real.translates)
    _emit(
        args,
        pattern1d.format_instance(real.pattern, [real.translates[jk] for jk in order]),
    )
    ok = constructions.verify_trigrid(real.pattern, real.translates, args.radius)
    print(
        f"multiplier {real.a_star}; y-step {format_number(real.y_star)}",
        file=sys.stderr,
    )
    print(f"verify trigrid: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    _write_report(
        args,
        {"verified": ok, "a_star": real.a_star, "candidates": list(real.candidates)},
        {args.pattern: text},
    )
    return 0 if ok else 3


def _build_gadget(args):
    gt_text = _read(args.gridtiling)
    poly_text = _read(args.poly)
    gt = constructions.parse_grid_tiling(gt_text)
    if args.n is not None and args.n != gt.n:
        raise constructions.ConstructionError(
            f"--n {args.n} disagrees with grid tiling n={gt.n}"
        )
    poly = parse_polygon(poly_text)
    cert = squarelike.compute_squarelike_vectors(poly, gt.n * gt.n + 1)
    inst = constructions.gadget_instance(gt, cert, poly)
    inputs = {args.gridtiling: gt_text, args.poly: poly_text}
    return gt, inst, inputs


def _gadget_checks(gt, inst) -> dict:
    checks = {
        "domination_pattern": constructions.check_gadget_domination_pattern(inst),
        "cross_block_disjoint": constructions.check_cross_block_disjoint(inst),
    }
    solution = constructions.gt_brute_solve(gt)
    checks["tiling_feasible"] = solution is not None
    if solution is not None:
        chosen = constructions.canonical_set(inst, solution)
        graph = constructions.instance_graph(inst)
        checks["canonical_dominates"] = graphcore.is_dominating(graph, chosen)
        checks["canonical_size_8k2"] = len(chosen) == 8 * gt.k * gt.k
    return checks


def cmd_gen_gadget(args) -> int:
    gt, inst, inputs = _build_gadget(args)
    _emit(args, constructions.format_gadget_instance(inst))
    checks = _gadget_checks(gt, inst)
    ok = all(checks.values())
    for name, value in sorted(checks.items()):
        print(f"verify {name}: {'PASS' if value else 'FAIL'}", file=sys.stderr)
    _write_report(args, {"checks": checks}, inputs)
    return 0 if ok else 3


def cmd_gen_splitpoly(args) -> int:
    text = _read(args.split)
    nc, ni, edges = constructions.parse_split_graph(text)
    clique_polys, indep_polys = constructions.split_graph_polygons(nc, ni, edges)
    from .geom2d import format_polygon

    chunks = [f"polyset {len(clique_polys) + len(indep_polys)}\n"]
    for idx, poly in enumerate(clique_polys):
        chunks.append(f"owner C {idx}\n{format_polygon(poly)}")
    for idx, poly in enumerate(indep_polys):
        chunks.append(f"owner I {idx}\n{format_polygon(poly)}")
    _emit(args, "".join(chunks))
    ok = constructions.verify_split_polygons(nc, ni, edges)
    print(f"verify split-polygons: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    _write_report(args, {"verified": ok}, {args.split: text})
    return 0 if ok else 3


def cmd_verify(args) -> int:
    if args.universal:
        text = _read(args.universal)
        ok = constructions.verify_universal(graphcore.parse_graph(text))
        print(f"universal-pattern: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    if args.trigrid:
        text = _read(args.trigrid)
        pattern = pattern1d.parse_pattern(text)
        real = constructions.trigrid_realization(pattern, args.radius)
        ok = constructions.verify_trigrid(real.pattern, real.translates, args.radius)
        print(f"trigrid: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    if args.gadget:
        if not args.poly:
            raise PatternError("--gadget verification needs --poly")
        args.gridtiling = args.gadget
        gt, inst, _ = _build_gadget(args)
        checks = _gadget_checks(gt, inst)
        for name, value in sorted(checks.items()):
            print(f"{name}: {'PASS' if value else 'FAIL'}")
        return 0 if all(checks.values()) else 1
    if args.splitpoly:
        text = _read(args.splitpoly)
        nc, ni, edges = constructions.parse_split_graph(text)
        ok = constructions.verify_split_polygons(nc, ni, edges)
        print(f"split-polygons: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    raise PatternError("nothing to verify; pass one of the verification flags")


# ---------------------------------------------------------------------------
# bench: seeded oracle-equivalence batteries, machine-readable report
# ---------------------------------------------------------------------------


def _bench_solver_family(rng, pattern, kind: str, trials: int, max_n: int = 10):
    wins = 0
    for _ in range(trials):
        n = rng.randint(1, max_n)
        span = float(pattern.rightmost() - pattern.leftmost()) or 1.0
        if kind == "fpt":
            xs = [
                quad(Fraction(rng.randint(0, 12), 2), Fraction(rng.randint(0, 6), 2), 2)
                for _ in range(n)
            ]
        elif kind == "rational":
            xs = [quad(rng.randint(0, max(1, int(3 * span)))) for _ in range(n)]
        else:
            xs = [
                quad(Fraction(rng.randint(0, max(1, int(span * 24)), ), 8))
                for _ in range(n)
            ]
        graph = graphcore.build(
            xs, lambda a, b: pattern1d.translates_intersect(pattern, a, b)
        )
        want, _ = graphcore.brute_force_min_dominating(graph)
        got, witness = solver1d.solve(pattern, xs)
        if got == want and graphcore.is_dominating(graph, witness):
            wins += 1
    return wins


def run_bench(seed: int, trials: int) -> dict:
    rng = random.Random(seed)
    results: dict = {}
    families = {
        "dp-unit-interval": pattern1d.make_pattern(intervals=[(0, 1)]),
        "dp-point-interval": pattern1d.make_pattern(points=[0], intervals=[(1, 2)]),
        "dp-interval-point": pattern1d.make_pattern(points=[3], intervals=[(0, 1)]),
        "rational-0-2-3": pattern1d.make_pattern(points=[0, 2, 3]),
        "fpt-0-1-sqrt2": pattern1d.make_pattern(
            points=[quad(0), quad(1), quad(0, 1, 2)]
        ),
    }
    for name, pattern in families.items():
        kind = name.split("-")[0]
        results[name] = {
            "trials": trials,
            "oracle_matches": _bench_solver_family(rng, pattern, kind, trials),
        }
    cov = 0
    for _ in range(trials):
        n = rng.randint(2, 12)
        pts = set()
        while len(pts) < n:
            pts.add((Fraction(rng.randint(0, 20), 2), Fraction(rng.randint(0, 20), 2)))
        inst = diskdom.make_instance(sorted(pts))
        dom = sorted(rng.sample(range(n), rng.randint(1, min(4, n))))
        if diskdom.coverage_count(inst, dom) == diskdom.direct_coverage_count(inst, dom):
            cov += 1
    results["disk-coverage"] = {"trials": trials, "oracle_matches": cov}
    uni = 0
    for _ in range(trials):
        n = rng.randint(1, 7)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        m = rng.randint(0, min(len(pairs), 12))
        g = graphcore.from_edges(n, rng.sample(pairs, m))
        if constructions.verify_universal(g):
            uni += 1
    results["universal-pattern"] = {"trials": trials, "oracle_matches": uni}
    q = pattern1d.make_pattern(points=[quad(0), quad(1), quad(0, 1, 2)])
    real = constructions.trigrid_realization(q, 3)
    results["trigrid"] = {
        "verified": constructions.verify_trigrid(real.pattern, real.translates, 3)
    }
    split_ok = 0
    for _ in range(trials):
        nc, ni = rng.randint(0, 4), rng.randint(0, 4)
        if nc + ni == 0:
            nc = 1
        edges = [
            (c, i) for c in range(nc) for i in range(ni) if rng.random() < 0.4
        ]
        if constructions.verify_split_polygons(nc, ni, edges):
            split_ok += 1
    results["split-polygons"] = {"trials": trials, "oracle_matches": split_ok}
    all_pass = all(
        entry.get("oracle_matches", entry.get("verified")) in (True, entry.get("trials"))
        for entry in results.values()
    )
    return {"results": results, "all_pass": all_pass}


def cmd_bench(args) -> int:
    started = time.monotonic()
    payload = run_bench(args.seed, args.trials)
    report = {
        "command": "bench",
        "seed": args.seed,
        "trials": args.trials,
        "payload": payload,
    }
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"elapsed {time.monotonic() - started:.2f}s", file=sys.stderr)
    return 0 if payload["all_pass"] else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodom",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--report", help="write a JSON run report to this path")

    p = sub.add_parser(
        "classify",
        help="classify a pattern file",
        description="Pattern file: `point <num>` / `interval <num> <num>` lines; "
        "numbers use the literal grammar P/Q or P/Q+R/S*sqrt(D).",
    )
    p.add_argument("--pattern", required=True)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "solve-1d",
        help="minimum dominating set for pattern translates",
        description="Instance file: optional pattern block plus `translate <num>` "
        "lines.  Output: `size <s>` and `witness <indices>`.",
    )
    p.add_argument("--pattern")
    p.add_argument("--instance", required=True)
    p.add_argument("--algo", choices=["auto", "dp", "rational", "branch"], default="auto")
    p.add_argument("--k", type=int, help="budget for --algo branch")
    common(p)
    p.set_defaults(func=cmd_solve_1d)

    p = sub.add_parser(
        "disk-solve",
        help="unit-disk dominating set (XP enumeration or coverage check)",
        description="Instance file: `disk <num> <num>` per line.",
    )
    p.add_argument("--instance", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--mode", choices=["xp", "check"], default="xp")
    p.add_argument("--set", type=int, nargs="*", help="center indices for --mode check")
    common(p)
    p.set_defaults(func=cmd_disk_solve)

    p = sub.add_parser(
        "squarelike",
        help="compute and verify base/offset vectors for a polygon",
        description="Polygon file: `poly <k>` then k `v <num> <num>` lines, CCW.",
    )
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_squarelike)

    p = sub.add_parser(
        "gen-universal",
        help="embed a graph as translates of a point pattern",
        description="Graph file: `n <count>` then `e <i> <j>` lines (0-based).",
    )
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_gen_universal)

    p = sub.add_parser(
        "gen-trigrid", help="realise the triangular grid from a pattern"
    )
    p.add_argument("--pattern", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_gen_trigrid)

    p = sub.add_parser(
        "gen-gadget",
        help="build the grid-tiling gadget instance for a polygon",
        description="Grid tiling file: `gt <k> <n>` then "
        "`cell <a> <b>: (x,y) (x,y) ...` lines.",
    )
    p.add_argument("--gridtiling", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_gen_gadget)

    p = sub.add_parser(
        "gen-splitpoly",
        help="represent a split graph as convex polygons",
        description="Split file: `split <|C|> <|I|>` then `edge <c> <i>` lines.",
    )
    p.add_argument("--split", required=True)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_gen_splitpoly)

    p = sub.add_parser("verify", help="re-run construction verification")
    p.add_argument("--universal", help="graph file")
    p.add_argument("--trigrid", help="pattern file")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--gadget", help="grid tiling file")
    p.add_argument("--poly", help="polygon file (for --gadget)")
    p.add_argument("--n", type=int)
    p.add_argument("--splitpoly", help="split graph file")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "bench", help="run the seeded oracle-equivalence batteries"
    )
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INTERNAL_ERRORS as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except UnboundedIntervalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
