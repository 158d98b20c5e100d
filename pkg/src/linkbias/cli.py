"""Command-line entry point.

Exit codes: 0 success, 2 input error, 3 closest-only construction,
4 unstable graph, 5 dynamics did not converge.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .game import run_dynamics
from .graphs import Graph, degree_histogram, degree_sequence
from .portfolio import run_portfolio_dynamics
from .solver import cost_matrix_from_psi, solve_min_l1
from .stability import check_pairwise_stable

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CLOSEST_ONLY = 3
EXIT_UNSTABLE = 4
EXIT_NOT_CONVERGED = 5


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8", newline="\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _initial_graph(args, n: int) -> Graph:
    if args.empty or args.g0 is None:
        return Graph.empty(n)
    return io.read_edge_list(args.g0, n)


def cmd_construct(args) -> int:
    k = io.read_degree_sequence(args.k_file)
    report = solve_min_l1(k)
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    io.write_json(out / "report.json", report.to_dict())
    io.write_cost_matrix(out / "cost.csv", cost_matrix_from_psi(report.psi))
    io.write_psi_matrix(out / "psi.csv", report.psi)
    io.write_edge_list(out / "edges.txt", report.graph)
    print(f"objective={report.objective} certificate={report.certificate.value}", file=sys.stderr)
    return EXIT_OK if report.objective == 0 else EXIT_CLOSEST_ONLY


def cmd_check(args) -> int:
    c = io.read_cost_matrix(args.c_file)
    g = io.read_edge_list(args.graph_file, c.shape[0])
    report = check_pairwise_stable(g, c)
    _emit(_dump(report.to_dict()), args.out)
    return EXIT_OK if report.stable else EXIT_UNSTABLE


def cmd_simulate(args) -> int:
    c = io.read_cost_matrix(args.c_file)
    g0 = _initial_graph(args, c.shape[0])
    trace = run_dynamics(c, g0, args.max_sweeps)
    _emit(_dump(trace.to_dict()), args.out)
    return EXIT_OK if trace.converged else EXIT_NOT_CONVERGED


def cmd_portfolio(args) -> int:
    c = io.read_cost_matrix(args.c_file)
    resources = io.read_resource_model(args.resource_file, args.resolution)
    g0 = _initial_graph(args, c.shape[0])
    outcome = run_portfolio_dynamics(c, resources, g0, args.max_sweeps)
    _emit(_dump(outcome.to_dict()), args.out)
    return EXIT_OK if outcome.stable else EXIT_NOT_CONVERGED


def sample_power_law_degrees(n: int, gamma: float, kmin: int, kmax: int, seed: int) -> list[int]:
    """Draw ``n`` degrees with ``P(k) ∝ k**-gamma`` on the integers ``kmin..kmax``."""
    if kmax == 0:
        return [0] * n
    if kmin < 1:
        raise ValueError("kmin must be at least 1 unless kmax is 0")
    support = np.arange(kmin, kmax + 1)
    weights = support.astype(float) ** -gamma
    rng = np.random.default_rng(seed)
    return rng.choice(support, size=n, p=weights / weights.sum()).tolist()


def cmd_gen_degseq(args) -> int:
    n, gamma = args.n, args.power_law
    if n < 1 or not gamma > 0:
        raise ValueError("need n >= 1 and gamma > 0")
    if args.kmax is not None and not 0 <= args.kmin <= args.kmax:
        raise ValueError(f"need 0 <= kmin <= kmax, got kmin={args.kmin} kmax={args.kmax}")
    # degrees above n-1 are impossible; clamping can force kmin down too (n=1 gives 0)
    kmax = n - 1 if args.kmax is None else min(args.kmax, n - 1)
    kmin = min(args.kmin, kmax)
    if kmin < 0:
        raise ValueError(f"kmin must be nonnegative, got {args.kmin}")
    k = sample_power_law_degrees(n, gamma, kmin, kmax, args.seed)
    io.write_degree_sequence(args.out, k)
    hist = args.histogram or args.out.with_name(args.out.stem + "_hist.csv")
    hist.write_text(io.format_histogram_csv(degree_histogram(k)), encoding="utf-8", newline="\n")
    return EXIT_OK


def cmd_export(args) -> int:
    g = io.read_edge_list(args.graph_file, args.n)
    if args.format == "dot":
        text = io.format_dot(g)
    elif args.format == "edgelist":
        text = io.format_edge_list(g)
    elif args.format == "json":
        text = _dump({"n": g.n, "edges": [[i + 1, j + 1] for i, j in g.sorted_edges()]})
    else:
        text = io.format_histogram_csv(degree_histogram(degree_sequence(g)))
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(prog="linkbias", description=__doc__.splitlines()[0])
    parser.add_argument("--config", type=Path, help="JSON file of option defaults; flags win")
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}

    p = subs["construct"] = sub.add_parser("construct", help="build a stable game for a target degree sequence")
    p.add_argument("k_file", type=Path, help="degree sequence (.json array or .txt one per line)")
    p.add_argument("--out-dir", type=Path, default=Path("."))
    p.set_defaults(func=cmd_construct)

    p = subs["check"] = sub.add_parser("check", help="check pairwise stability of a graph")
    p.add_argument("graph_file", type=Path)
    p.add_argument("c_file", type=Path)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_check)

    for name, func, text in (
        ("simulate", cmd_simulate, "run best-response link dynamics"),
        ("portfolio", cmd_portfolio, "run budget-constrained portfolio dynamics"),
    ):
        p = subs[name] = sub.add_parser(name, help=text)
        p.add_argument("c_file", type=Path)
        if name == "portfolio":
            p.add_argument("resource_file", type=Path, help="JSON with 'A' and 'b'")
            p.add_argument("--resolution", type=float, default=1e-3)
        start = p.add_mutually_exclusive_group()
        start.add_argument("--g0", type=Path, help="initial edge list")
        start.add_argument("--empty", action="store_true", help="start from the empty graph (default)")
        p.add_argument("--max-sweeps", type=int)
        p.add_argument("--out", type=Path)
        p.set_defaults(func=func)

    p = subs["gen-degseq"] = sub.add_parser("gen-degseq", help="sample a power-law degree sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--power-law", type=float, default=2.5, metavar="GAMMA")
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--histogram", type=Path, help="histogram CSV path (default: <out>_hist.csv)")
    p.set_defaults(func=cmd_gen_degseq)

    p = subs["export"] = sub.add_parser("export", help="convert an edge list")
    p.add_argument("graph_file", type=Path)
    p.add_argument("--format", choices=("dot", "edgelist", "json", "histogram"), default="edgelist")
    p.add_argument("--n", type=int, help="player count for edge lists without a '# n=' header")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_export)
    return parser, subs


def _apply_config(argv, parser, subs) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", type=Path)
    known, rest = pre.parse_known_args(argv)
    if known.config is None:
        return
    cfg = json.loads(known.config.read_text(encoding="utf-8"))
    if not isinstance(cfg, dict):
        raise ValueError("config must be a JSON object")
    cfg = {key.replace("-", "_"): value for key, value in cfg.items()}
    command = next((a for a in rest if a in subs), None)
    if command is None:
        return
    sp = subs[command]
    path_dests = {a.dest for a in sp._actions if a.type is Path}
    sp.set_defaults(**{k: Path(v) if k in path_dests and v is not None else v for k, v in cfg.items()})


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser, subs = build_parser()
    try:
        _apply_config(argv, parser, subs)
    except (OSError, ValueError) as exc:
        print(f"error: bad config: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    # resolve every path before any work starts
    for key, value in vars(args).items():
        if isinstance(value, Path):
            setattr(args, key, value.resolve())
    try:
        return args.func(args)
    except (OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
