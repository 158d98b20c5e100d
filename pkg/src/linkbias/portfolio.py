"""Resource-constrained linking: each player picks a link portfolio by 0/1 knapsack.

Player ``i`` maximizes ``sum_{j in S} -C[i, j]`` subject to
``sum_{j in S} A[i, j] <= b[i]``. Weights and budgets are discretized to
``resolution`` before the dynamic program runs: weights round up and budgets
round down, so any discretized-feasible portfolio is feasible for the real
instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graphs import Graph
from .stability import as_cost_matrix, check_dims

# guards ceil/floor against float noise such as 0.3 / 0.001 = 299.99999999999994
_ROUND_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class ResourceModel:
    A: np.ndarray
    b: np.ndarray
    resolution: float = 1e-3

    def __post_init__(self):
        A = np.array(self.A, dtype=float)
        b = np.array(self.b, dtype=float)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"A must be square, got shape {A.shape}")
        if b.shape != (A.shape[0],):
            raise ValueError(f"b must have length {A.shape[0]}, got shape {b.shape}")
        np.fill_diagonal(A, 0.0)
        if not (np.isfinite(A).all() and np.isfinite(b).all()):
            raise ValueError("resource entries must be finite")
        if (A < 0).any():
            raise ValueError("resource costs must be nonnegative")
        if (b < 0).any():
            raise ValueError("budgets must be nonnegative")
        if not self.resolution > 0:
            raise ValueError(f"resolution must be positive, got {self.resolution}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @classmethod
    def void(cls, n: int, budget: float | None = None) -> ResourceModel:
        """A = 0 with budget ``n`` per player: the constraint never binds."""
        return cls(np.zeros((n, n)), np.full(n, float(n if budget is None else budget)))

    def weight_units(self, i: int, j: int) -> int:
        return math.ceil(self.A[i, j] / self.resolution - _ROUND_EPS)

    def capacity_units(self, i: int) -> int:
        return math.floor(self.b[i] / self.resolution + _ROUND_EPS)


def portfolio_value(i: int, c, chosen: Iterable[int]) -> float:
    c = np.asarray(c, dtype=float)
    return float(sum(-c[i, j] for j in sorted(chosen)))


def knapsack_best_response(i: int, c, resources: ResourceModel, offers: Iterable[int]) -> frozenset[int]:
    """Best link portfolio for player ``i`` among ``offers``.

    Only strictly beneficial partners (``C[i, j] < 0``) are considered. Among
    equal-value portfolios the lexicographically smallest sorted set wins.
    """
    c = as_cost_matrix(c)
    n = c.shape[0]
    if resources.n != n:
        raise ValueError(f"dimension mismatch: C is {c.shape}, resources have n={resources.n}")
    if not 0 <= i < n:
        raise IndexError(f"player {i} out of range for n={n}")
    offers = sorted(set(offers))
    for j in offers:
        if j == i or not 0 <= j < n:
            raise ValueError(f"invalid offer {j} for player {i}")

    items = [j for j in offers if c[i, j] < 0]
    if not items:
        return frozenset()
    values = np.array([-c[i, j] for j in items])
    weights = [resources.weight_units(i, j) for j in items]
    capacity = resources.capacity_units(i)
    if sum(weights) <= capacity:
        # all values are positive, so taking everything is the unique optimum
        return frozenset(items)
    capacity = min(capacity, sum(weights))

    # best[t][w]: best value from items t.. with w units; built back to front
    # so a front-to-back walk can prefer the smallest indices
    m = len(items)
    best = np.zeros((m + 1, capacity + 1))
    for t in range(m - 1, -1, -1):
        nxt = best[t + 1]
        row = nxt.copy()
        w = weights[t]
        if w <= capacity:
            take = values[t] + nxt[: capacity + 1 - w]
            row[w:] = np.maximum(nxt[w:], take)
        best[t] = row

    tol = 1e-12 * (1.0 + values.sum())
    chosen = []
    room = capacity
    for t in range(m):
        w = weights[t]
        if w <= room and values[t] + best[t + 1][room - w] >= best[t + 1][room] - tol:
            chosen.append(items[t])
            room -= w
    return frozenset(chosen)


@dataclass(frozen=True)
class PortfolioOutcome:
    graph: Graph
    stable: bool
    rounds: int
    budget_slack: tuple[float, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "stable": self.stable,
            "rounds": self.rounds,
            "edges": [[i + 1, j + 1] for i, j in self.graph.sorted_edges()],
            "budget_slack": list(self.budget_slack),
        }


def run_portfolio_dynamics(
    c, resources: ResourceModel, g0: Graph, max_sweeps: int | None = None
) -> PortfolioOutcome:
    """Synchronous best-response rounds over link portfolios.

    State is each player's selected portfolio, seeded with its neighbors in
    ``g0``. In every round player ``j`` offers a link to ``i`` iff ``j``
    benefits from it and would keep ``i`` in its best response to its current
    portfolio plus ``i``. Each player then best-responds to the offers it
    received; a link exists iff both endpoints selected each other. The run
    stops when a round leaves every portfolio unchanged (``stable=True``) or
    after ``max_sweeps`` rounds (``stable=False``).
    """
    c = as_cost_matrix(c)
    check_dims(g0, c)
    n = g0.n
    if resources.n != n:
        raise ValueError(f"dimension mismatch: n={n}, resources have n={resources.n}")
    if max_sweeps is None:
        max_sweeps = max(2 * n, 2)
    if max_sweeps < 1:
        raise ValueError(f"max_sweeps must be positive, got {max_sweeps}")

    cache: dict[tuple[int, frozenset[int]], frozenset[int]] = {}

    def best(i: int, offers: frozenset[int]) -> frozenset[int]:
        key = (i, offers)
        if key not in cache:
            cache[key] = knapsack_best_response(i, c, resources, offers)
        return cache[key]

    selected = [g0.neighbors(i) for i in range(n)]
    stable = False
    rounds = 0
    while rounds < max_sweeps:
        rounds += 1
        offers = [set() for _ in range(n)]
        for j in range(n):
            for i in range(n):
                if i != j and c[j, i] < 0 and i in best(j, selected[j] | {i}):
                    offers[i].add(j)
        new = [best(i, frozenset(offers[i])) for i in range(n)]
        if new == selected:
            stable = True
            break
        selected = new

    edges = {(i, j) for i in range(n) for j in selected[i] if i < j and i in selected[j]}
    graph = Graph(n, frozenset(edges))
    slack = tuple(
        float(resources.b[i] - sum(resources.A[i, j] for j in sorted(graph.neighbors(i))))
        for i in range(n)
    )
    return PortfolioOutcome(graph, stable, rounds, slack)
