"""Best-response link dynamics for linear link-bias games."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graphs import Graph
from .stability import check_dims, as_cost_matrix, check_pairwise_stable


class Action(str, enum.Enum):
    ADD = "Add"
    REMOVE = "Remove"


@dataclass(frozen=True)
class Step:
    i: int
    j: int
    action: Action
    delta_i: float
    delta_j: float


@dataclass(frozen=True)
class DynamicsTrace:
    initial: Graph
    final: Graph
    steps: tuple[Step, ...] = field(default_factory=tuple)
    converged: bool = False
    sweeps: int = 0

    def replay(self) -> Graph:
        g = self.initial
        for s in self.steps:
            g = g.add_edge(s.i, s.j) if s.action is Action.ADD else g.remove_edge(s.i, s.j)
        return g

    def to_dict(self) -> dict:
        return {
            "initial_edges": [[i + 1, j + 1] for i, j in self.initial.sorted_edges()],
            "final_edges": [[i + 1, j + 1] for i, j in self.final.sorted_edges()],
            "steps": [
                {
                    "i": s.i + 1,
                    "j": s.j + 1,
                    "action": s.action.value,
                    "delta_i": s.delta_i,
                    "delta_j": s.delta_j,
                }
                for s in self.steps
            ],
            "converged": self.converged,
            "sweeps": self.sweeps,
        }


def player_cost(i: int, g: Graph, c) -> float:
    c = as_cost_matrix(c)
    check_dims(g, c)
    if not 0 <= i < g.n:
        raise IndexError(f"player {i} out of range for n={g.n}")
    return float(sum(c[i, j] for j in sorted(g.neighbors(i))))


def run_dynamics(c, g0: Graph, max_sweeps: int | None = None) -> DynamicsTrace:
    """Sweep all pairs in lexicographic order until a sweep changes nothing.

    A link is cut when either endpoint has nonnegative cost for it, and added
    when both endpoints have strictly negative cost. ``sweeps`` counts every
    sweep run, including the final confirming one.
    """
    c = as_cost_matrix(c)
    check_dims(g0, c)
    n = g0.n
    if max_sweeps is None:
        max_sweeps = max(2 * n, 2)
    if max_sweeps < 1:
        raise ValueError(f"max_sweeps must be positive, got {max_sweeps}")

    adj = g0.adjacency()
    steps: list[Step] = []
    converged = False
    sweeps = 0
    while sweeps < max_sweeps:
        sweeps += 1
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                cij, cji = float(c[i, j]), float(c[j, i])
                if adj[i, j] and (cij >= 0 or cji >= 0):
                    adj[i, j] = adj[j, i] = False
                    steps.append(Step(i, j, Action.REMOVE, -cij, -cji))
                    changed = True
                elif not adj[i, j] and cij < 0 and cji < 0:
                    adj[i, j] = adj[j, i] = True
                    steps.append(Step(i, j, Action.ADD, cij, cji))
                    changed = True
        if not changed:
            converged = True
            break

    final = Graph.from_adjacency(adj)
    if converged:
        assert check_pairwise_stable(final, c).stable
    return DynamicsTrace(g0, final, tuple(steps), converged, sweeps)
