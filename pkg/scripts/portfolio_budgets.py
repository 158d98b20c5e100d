"""Budget-constrained linking: convergence and degrees as budgets tighten.

Random link-bias games are played with per-link resource costs; budgets are
scaled from generous to scarce. Non-convergence is reported, not hidden.

Usage:
    python scripts/portfolio_budgets.py [--n 12] [--games 50] [--seed 0]
"""

import argparse

import numpy as np

from linkbias.graphs import Graph
from linkbias.portfolio import ResourceModel, run_portfolio_dynamics
from linkbias.stability import check_pairwise_stable, induced_stable_graph


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=12)
    parser.add_argument("--games", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)
    n = args.n

    # three players who each want both others but can afford one link
    c = -np.ones((3, 3))
    out = run_portfolio_dynamics(c, ResourceModel(np.ones((3, 3)), np.ones(3)), Graph.empty(3), max_sweeps=20)
    print(f"triangle with unit budgets: stable={out.stable} rounds={out.rounds} edges={out.to_dict()['edges']}")

    print("budget_scale,converged,mean_edges,mean_unconstrained_edges,link_stable_share")
    games = []
    for _ in range(args.games):
        games.append((rng.uniform(-1, 1, (n, n)), rng.uniform(0.1, 1.0, (n, n))))
    for scale in (float(n), 4.0, 2.0, 1.0, 0.5):
        converged, edges, free_edges, link_stable = 0, [], [], 0
        for c, a in games:
            res = ResourceModel(a, np.full(n, scale))
            out = run_portfolio_dynamics(c, res, Graph.empty(n), max_sweeps=4 * n)
            converged += out.stable
            edges.append(len(out.graph))
            free_edges.append(len(induced_stable_graph(c)))
            link_stable += check_pairwise_stable(out.graph, c).stable
        print(
            f"{scale},{converged}/{len(games)},{np.mean(edges):.2f},"
            f"{np.mean(free_edges):.2f},{link_stable / len(games):.2f}"
        )


if __name__ == "__main__":
    main()
