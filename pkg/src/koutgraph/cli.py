"""Command-line front door.

Subcommands: generate | check | analytics | threshold | experiment | validate.
Exit codes: 0 success, 1 validation failure, 2 usage error (bad flags,
unreadable files, out-of-range parameters). Human-readable output goes to
stdout; machine output (edge lists, DOT, CSV) only to --out paths.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analytics, experiment, oracle
from .connectivity import connectivity_report
from .model import (
    ModelParams,
    NodeType,
    ParamError,
    generate,
    read_edgelist,
    validate_params,
    write_dot,
    write_edgelist,
)

PARALLELISM_ENV = "KOUTGRAPH_PARALLELISM"
VALIDATE_TOLERANCE = 1e-9


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koutgraph",
        description=(
            "Simulate and analyze inhomogeneous random K-out graphs induced "
            "by heterogeneous pairwise key predistribution."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate one graph instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--mu", type=float, required=True)
    g.add_argument("--k1", type=int, default=1)
    g.add_argument("--k2", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", type=str, default=None)
    g.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="connectivity report for an edge list")
    c.add_argument("--in", dest="input", type=str, required=True)
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(func=cmd_check)

    a = sub.add_parser("analytics", help="closed-form quantities at a point")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--mu", type=float, required=True)
    a.add_argument("--k2", type=int, required=True)
    a.add_argument("--k", type=int, default=2)
    a.add_argument("--pmf-csv", type=str, default=None,
                   help="write the degree pmf table to this CSV path")
    a.set_defaults(func=cmd_analytics)

    t = sub.add_parser("threshold", help="critical k2 for the given k")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--mu", type=float, required=True)
    t.add_argument("--k", type=int, required=True)
    t.set_defaults(func=cmd_threshold)

    e = sub.add_parser("experiment", help="run a Monte-Carlo sweep")
    e.add_argument("--config", type=str, required=True,
                   help="JSON file mirroring ExperimentConfig field names")
    e.add_argument("--out", type=str, required=True)
    e.add_argument("--trials", type=int, default=None)
    e.add_argument("--master-seed", type=int, default=None)
    e.add_argument("--parallelism", type=int, default=None,
                   help=f"overrides config and ${PARALLELISM_ENV}")
    e.set_defaults(func=cmd_experiment)

    v = sub.add_parser("validate", help="formulas vs. exhaustive enumeration")
    v.add_argument("--max-n", type=int, default=6)
    v.set_defaults(func=cmd_validate)
    return parser


def cmd_generate(args) -> int:
    params = validate_params(
        ModelParams(n=args.n, mu=args.mu, k2=args.k2, k1=args.k1)
    )
    table, rings, graph = generate(params, args.seed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fp:
            if args.format == "edgelist":
                write_edgelist(graph, fp)
            else:
                write_dot(graph, fp)
    n_type1 = sum(1 for t in table.types if t is NodeType.TYPE1)
    print(f"nodes: {graph.n}")
    print(f"edges: {graph.num_edges}")
    print(f"keys: {rings.num_keys}")
    print(f"type-1 nodes: {n_type1}")
    print(f"min degree: {min(graph.degree(i) for i in range(graph.n))}")
    if args.out:
        print(f"wrote {args.format} to {args.out}")
    return 0


def cmd_check(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fp:
        graph = read_edgelist(fp)
    report = connectivity_report(graph, args.k)
    print(f"min degree: {report.min_degree}")
    print(f"connected: {str(report.is_connected).lower()}")
    print(f"k-connected: {str(report.is_k_vertex_connected).lower()}")
    return 0


def cmd_analytics(args) -> int:
    validate_params(ModelParams(n=args.n, mu=args.mu, k2=args.k2))
    n, mu, k2, k = args.n, args.mu, args.k2, args.k
    mean_k = analytics.mean_selection(mu, k2)
    print(f"mean_selection: {mean_k:.6f}")
    print(f"edge_probability: {analytics.edge_probability(n, mean_k):.6f}")
    print(f"mean_degree: {analytics.mean_degree(n, mean_k):.6f}")
    if k >= 2:
        pt = analytics.gamma_from_scaling(n, mu, k2, k)
        print(f"gamma (k={k}): {pt.gamma:.6f}")
        if mu < 1.0:
            print(f"threshold_k2 (k={k}): {analytics.threshold_k2(n, mu, k)}")
        ez = analytics.expected_count_Z(n, mu, k2, k - 1)
        print(f"expected_count_Z (d={k - 1}): {ez:.6f}")
    if args.pmf_csv:
        with open(args.pmf_csv, "w", encoding="utf-8", newline="\n") as fp:
            fp.write("d,pmf_type1,pmf_type2,expected_count\n")
            for d in range(n):
                p1 = analytics.degree_pmf(n, mu, k2, NodeType.TYPE1, d)
                p2 = analytics.degree_pmf(n, mu, k2, NodeType.TYPE2, d)
                ez = analytics.expected_count_Z(n, mu, k2, d)
                fp.write(f"{d},{p1:.12g},{p2:.12g},{ez:.12g}\n")
        print(f"wrote pmf table to {args.pmf_csv}")
    return 0


def cmd_threshold(args) -> int:
    print(analytics.threshold_k2(args.n, args.mu, args.k))
    return 0


def cmd_experiment(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fp:
        raw = json.load(fp)
    known = {
        "n", "mu_list", "k_list", "k2_range", "trials", "master_seed",
        "parallelism",
    }
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    if args.trials is not None:
        raw["trials"] = args.trials
    if args.master_seed is not None:
        raw["master_seed"] = args.master_seed
    if args.parallelism is not None:
        raw["parallelism"] = args.parallelism
    elif "parallelism" not in raw and os.environ.get(PARALLELISM_ENV):
        raw["parallelism"] = int(os.environ[PARALLELISM_ENV])
    cfg = experiment.ExperimentConfig(
        n=raw["n"],
        mu_list=tuple(raw["mu_list"]),
        k_list=tuple(raw["k_list"]),
        k2_range=tuple(raw["k2_range"]),
        trials=raw.get("trials", 1000),
        master_seed=raw.get("master_seed", 0),
        parallelism=raw.get("parallelism", 1),
    )
    rows = experiment.run_sweep(cfg, progress=experiment.stderr_progress)
    experiment.write_csv(rows, args.out)
    bad = [r for r in rows if not r.valid]
    for r in bad:
        print(f"invalid point mu={r.mu} k={r.k} k2={r.k2}: {r.error}",
              file=sys.stderr)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 1 if bad else 0


def cmd_validate(args) -> int:
    max_n = args.max_n
    if max_n < 4:
        raise ValueError("--max-n must be at least 4")
    print(f"{'quantity':<22} {'params':<26} {'formula':>14} {'oracle':>14} {'abs err':>10}")
    worst = 0.0

    def report(name, params_desc, formula, exact):
        nonlocal worst
        err = abs(formula - exact)
        worst = max(worst, err)
        print(f"{name:<22} {params_desc:<26} {formula:>14.9f} {exact:>14.9f} {err:>10.2e}")

    for n in range(4, max_n + 1):
        for mu in (0.25, 0.5, 0.75):
            for k2 in (2, 3):
                p = ModelParams(n=n, mu=mu, k2=k2)
                desc = f"n={n} mu={mu} k2={k2}"
                prof = oracle.profile(p)
                for d in sorted({1, k2, min(k2 + 1, n - 1)}):
                    report(
                        f"degree_pmf[t1,d={d}]", desc,
                        analytics.degree_pmf(n, mu, k2, NodeType.TYPE1, d),
                        prof.pmf_type1[d],
                    )
                    report(
                        f"degree_pmf[t2,d={d}]", desc,
                        analytics.degree_pmf(n, mu, k2, NodeType.TYPE2, d),
                        prof.pmf_type2[d],
                    )
                    report(
                        f"expected_count_Z[{d}]", desc,
                        analytics.expected_count_Z(n, mu, k2, d),
                        prof.expected_counts[d],
                    )
                probs = analytics.pair_pick_probs(n, mu, k2)
                exact_probs = oracle.enumerate_pair_pick_probs(p)
                report("pair_pick_probs.p12", desc, probs.p12, exact_probs.p12)
                report("pair_pick_probs.p1n2", desc, probs.p1not2, exact_probs.p1not2)
                report(
                    "pair_pick_probs.pn1n2", desc, probs.pnot1not2,
                    exact_probs.pnot1not2,
                )
                for k in (2, 3):
                    report(
                        f"joint_degree[k={k}]", desc,
                        analytics.joint_degree_prob_type1(n, mu, k2, k),
                        oracle.enumerate_joint_degree_prob(p, k),
                    )
    print(f"max abs error: {worst:.3e} (tolerance {VALIDATE_TOLERANCE:.0e})")
    if worst <= VALIDATE_TOLERANCE:
        print("validation: PASS")
        return 0
    print("validation: FAIL")
    return 1


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code
    try:
        return args.func(args)
    except (ParamError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
