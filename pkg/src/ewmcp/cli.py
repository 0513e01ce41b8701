"""Command-line interface.

Subcommands: bound (both upper bounds on one instance), exact (clique
number with witness), color (dump a coloring), gen (write a family or
random instance), bench (the CSV harness). Exit codes: 0 success, 1 any
per-item failure (including an unproven exact result), 2 usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .bench import RunConfig, aggregate, format_aggregate_csv, run_bench
from .bounds import compute_greedy_dual_bound, compute_ub1, compute_ub2
from .coloring import (
    ColoringRequest,
    format_coloring,
    make_coloring,
    parse_coloring,
    reorder_classes,
)
from .errors import EwmcpError
from .exact import BRUTE_FORCE_CAP, branch_and_bound_omega, brute_force_omega
from .generators import gen_g1, gen_g2, gen_g3, gen_random, random_grid
from .instance_io import read_instance, with_rule_weights, write_instance
from .rng import SplitMix64


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ewmcp",
        description="Upper bounds and exact solvers for edge-weighted maximum clique",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="compute both upper bounds on an instance")
    p_bound.add_argument("--instance", required=True, help="path to .ewclq/.clq file")
    p_bound.add_argument("--coloring", choices=["dsatur", "greedy"], default="dsatur")
    p_bound.add_argument("--seed", type=int, default=1, help="greedy coloring seed")
    p_bound.add_argument(
        "--coloring-file", help="read the coloring from a dump file instead"
    )
    p_bound.add_argument(
        "--order",
        help="class order: 'random:SEED' or comma-separated permutation of 1..k",
    )
    p_bound.add_argument(
        "--certificates", action="store_true", help="print bound certificates"
    )
    p_bound.add_argument(
        "--apply-weight-rule",
        action="store_true",
        help="overwrite weights with ((u+v) mod 200)+1 before computing",
    )

    p_exact = sub.add_parser("exact", help="compute the edge-weighted clique number")
    p_exact.add_argument("--instance", required=True)
    p_exact.add_argument(
        "--method", choices=["auto", "brute", "bnb"], default="auto"
    )
    p_exact.add_argument("--node-limit", type=int)
    p_exact.add_argument("--time-limit", type=float, help="seconds")
    p_exact.add_argument("--apply-weight-rule", action="store_true")

    p_color = sub.add_parser("color", help="produce and dump a coloring")
    p_color.add_argument("--instance", required=True)
    p_color.add_argument("--kind", choices=["dsatur", "greedy"], default="dsatur")
    p_color.add_argument("--seed", type=int, default=1)

    p_gen = sub.add_parser("gen", help="generate an instance file")
    p_gen.add_argument(
        "--family", choices=["g1", "g2", "g3", "random"], required=True
    )
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--mu", type=float, help="edge density (random family)")
    p_gen.add_argument("--seed", type=int, default=1)
    p_gen.add_argument("--out", required=True)

    p_bench = sub.add_parser("bench", help="run the benchmark harness")
    src = p_bench.add_mutually_exclusive_group(required=True)
    src.add_argument(
        "--preset",
        choices=["random-grid", "dimacs"],
        help="random-grid generates instances; dimacs scans --dir for .clq",
    )
    src.add_argument("--instances", nargs="+", help="explicit instance files")
    p_bench.add_argument("--dir", help="directory of DIMACS .clq files")
    p_bench.add_argument("--out", required=True, help="output CSV path")
    p_bench.add_argument(
        "--jobs", type=int, default=int(os.environ.get("EWMCP_THREADS", "1"))
    )
    p_bench.add_argument("--exact-max-n", type=int, default=60)
    p_bench.add_argument("--exact-node-limit", type=int, default=5_000_000)
    p_bench.add_argument("--exact-time-limit", type=float, default=60.0)
    p_bench.add_argument(
        "--known-omega", help="file of 'instance_name,omega' lines"
    )
    p_bench.add_argument("--order-trials", type=int, default=0)
    p_bench.add_argument(
        "--no-timings",
        action="store_true",
        help="leave timing columns empty for byte-reproducible output",
    )
    p_bench.add_argument(
        "--aggregate",
        choices=["per-record", "best-of-colorings", "per-family", "per-size", "per-density"],
        default="per-record",
    )
    p_bench.add_argument("--agg-out", help="write aggregate rows to this CSV")
    p_bench.add_argument(
        "--sizes", type=int, nargs="+", help="restrict the random grid to these |V|"
    )
    p_bench.add_argument(
        "--densities",
        type=int,
        nargs="+",
        help="restrict the random grid to these density percents",
    )
    p_bench.add_argument(
        "--reps", type=int, default=10, help="instances per random-grid cell"
    )
    return parser


def _load_graph(args):
    spec = read_instance(args.instance)
    if getattr(args, "apply_weight_rule", False):
        spec = with_rule_weights(spec)
    return spec


def _coloring_for(args, g):
    if args.coloring_file:
        coloring = parse_coloring(Path(args.coloring_file).read_text(), g.n)
    elif args.coloring == "dsatur":
        coloring = make_coloring(g, ColoringRequest("dsatur"))
    else:
        coloring = make_coloring(g, ColoringRequest("random-greedy", seed=args.seed))
    if args.order:
        if args.order.startswith("random:"):
            perm = list(range(1, coloring.k + 1))
            SplitMix64(int(args.order.split(":", 1)[1])).shuffle(perm)
        else:
            perm = [int(tok) for tok in args.order.split(",")]
        coloring = reorder_classes(coloring, perm)
    return coloring


def cmd_bound(args) -> int:
    spec = _load_graph(args)
    g = spec.graph
    coloring = _coloring_for(args, g)
    ub1, cert1 = compute_ub1(g, coloring)
    ub2, cert2 = compute_ub2(g, coloring)
    greedy = compute_greedy_dual_bound(g, coloring)
    print(f"instance {spec.name}: n={g.n} m={g.m} k={coloring.k}")
    print(f"ub1 {ub1:.6g}")
    print(f"ub2 {ub2}")
    print(f"greedy_dual {greedy}")
    if args.certificates:
        print("pi:", " ".join(f"{h}={cert1.pi[h]:.6g}" for h in sorted(cert1.pi)))
        print(
            "gamma:",
            " ".join(f"{u}={cert1.gamma[u]:.6g}" for u in sorted(cert1.gamma)),
        )
        print(
            "sigma:",
            " ".join(f"{u}={cert2.sigma[u]}" for u in sorted(cert2.sigma)),
        )
        print(
            "sigma_argmax:",
            " ".join(
                f"{h}={cert2.argmax_per_class[h]}"
                for h in sorted(cert2.argmax_per_class)
            ),
        )
    return 0


def cmd_exact(args) -> int:
    spec = _load_graph(args)
    g = spec.graph
    method = args.method
    if method == "auto":
        method = "brute" if g.n <= min(BRUTE_FORCE_CAP, 20) else "bnb"
    if method == "brute":
        result = brute_force_omega(g)
    else:
        result = branch_and_bound_omega(
            g, node_limit=args.node_limit, time_limit_s=args.time_limit
        )
    witness = " ".join(str(v) for v in result.witness.vertices)
    print(f"instance {spec.name}: n={g.n} m={g.m}")
    print(f"omega {result.omega}")
    print(f"witness {witness}")
    print(f"nodes {result.nodes_explored}")
    print(f"time_s {result.time_s:.3f}")
    print(f"status {'optimal' if result.complete else 'incomplete'}")
    return 0 if result.complete else 1


def cmd_color(args) -> int:
    spec = read_instance(args.instance)
    if args.kind == "dsatur":
        coloring = make_coloring(spec.graph, ColoringRequest("dsatur"))
    else:
        coloring = make_coloring(
            spec.graph, ColoringRequest("random-greedy", seed=args.seed)
        )
    sys.stdout.write(format_coloring(coloring))
    return 0


def cmd_gen(args) -> int:
    if args.family == "g1":
        inst = gen_g1(args.n)
    elif args.family == "g2":
        inst = gen_g2(args.n)
    elif args.family == "g3":
        inst = gen_g3(args.n)
    else:
        if args.mu is None:
            print("error: --mu is required for the random family", file=sys.stderr)
            return 2
        inst = gen_random(args.n, args.mu, args.seed)
    write_instance(inst.to_spec(), args.out)
    print(f"wrote {args.out}: n={inst.graph.n} m={inst.graph.m}")
    return 0


def _bench_instances(args):
    if args.instances:
        return [read_instance(path) for path in args.instances]
    if args.preset == "dimacs":
        if not args.dir:
            raise EwmcpError("--preset dimacs requires --dir")
        specs = []
        for path in sorted(Path(args.dir).glob("*.clq")):
            specs.append(with_rule_weights(read_instance(path)))
        if not specs:
            raise EwmcpError(f"no .clq files under {args.dir}")
        return specs
    sizes = tuple(args.sizes) if args.sizes else None
    densities = tuple(args.densities) if args.densities else None
    kwargs = {}
    if sizes:
        kwargs["sizes"] = sizes
    if densities:
        kwargs["density_pcts"] = densities
        kwargs["include_high_density"] = False
    return list(random_grid(reps=args.reps, **kwargs))


def _read_known_omega(path: str) -> dict[str, int]:
    known = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, value = line.partition(",")
        known[name.strip()] = int(value)
    return known


def cmd_bench(args) -> int:
    cfg = RunConfig(
        exact_max_n=args.exact_max_n,
        exact_node_limit=args.exact_node_limit,
        exact_time_limit_s=args.exact_time_limit,
        jobs=args.jobs,
        include_timings=not args.no_timings,
        order_trials=args.order_trials,
        aggregate=args.aggregate,
    )
    if args.known_omega:
        cfg.known_omega = _read_known_omega(args.known_omega)
    instances = _bench_instances(args)
    records, _ = run_bench(instances, cfg, args.out)
    rows = aggregate(records, cfg.aggregate)
    if rows:
        text = format_aggregate_csv(rows)
        if args.agg_out:
            Path(args.agg_out).write_text(text)
        else:
            sys.stdout.write(text)
    print(f"wrote {args.out}: {len(records)} records", file=sys.stderr)
    failed = [r for r in records if r.error]
    if failed:
        print(f"{len(failed)} records carry errors", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "bound": cmd_bound,
        "exact": cmd_exact,
        "color": cmd_color,
        "gen": cmd_gen,
        "bench": cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except EwmcpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
