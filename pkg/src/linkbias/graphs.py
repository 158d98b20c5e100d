"""Simple undirected graphs, degree sequences, and graphical-sequence theory.

Players are indexed ``0..n-1`` in the Python API. File formats (see
:mod:`linkbias.io`) use 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]
DegreeSequence = tuple[int, ...]


class Infeasible(ValueError):
    """Raised when no simple graph realizes a degree sequence."""


@dataclass(frozen=True)
class Graph:
    """Symmetric simple graph on ``n`` players.

    ``edges`` holds unordered pairs normalized to ``(i, j)`` with ``i < j``.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"player count must be nonnegative, got {self.n}")
        normalized = set()
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop on player {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if (adj != adj.T).any():
            raise ValueError("adjacency must be symmetric")
        ii, jj = np.nonzero(np.triu(adj, k=1))
        return cls(adj.shape[0], frozenset(zip(ii.tolist(), jj.tolist())))

    # bitset view: bit j of bitsets[i] is set iff {i, j} is an edge
    @cached_property
    def bitsets(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for i, j in self.edges:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return tuple(rows)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.bitsets[i] >> j & 1)

    def neighbors(self, i: int) -> frozenset[int]:
        row = self.bitsets[i]
        return frozenset(j for j in range(self.n) if row >> j & 1)

    def degree(self, i: int) -> int:
        return self.bitsets[i].bit_count()

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=bool)
        for i, j in self.edges:
            adj[i, j] = adj[j, i] = True
        return adj

    def add_edge(self, i: int, j: int) -> Graph:
        return Graph(self.n, self.edges | {(min(i, j), max(i, j))})

    def remove_edge(self, i: int, j: int) -> Graph:
        return Graph(self.n, self.edges - {(min(i, j), max(i, j))})

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def degree_sequence(g: Graph) -> DegreeSequence:
    return tuple(row.bit_count() for row in g.bitsets)


def check_degree_sequence(k: Sequence[int], n: int | None = None) -> DegreeSequence:
    """Validate ``k`` as a degree sequence (entries in ``0..n-1``)."""
    k = tuple(int(x) for x in k)
    n = len(k) if n is None else n
    if len(k) != n:
        raise ValueError(f"degree sequence has length {len(k)}, expected {n}")
    bad = [x for x in k if not 0 <= x <= max(n - 1, 0)]
    if bad:
        raise ValueError(f"degree entries must lie in 0..{n - 1}, got {bad}")
    return k


def l1_gap(d: Sequence[int], k: Sequence[int]) -> int:
    if len(d) != len(k):
        raise ValueError(f"length mismatch: {len(d)} vs {len(k)}")
    return sum(abs(a - b) for a, b in zip(d, k))


def is_graphical(k: Sequence[int]) -> bool:
    """Erdős–Gallai test."""
    n = len(k)
    if any(x < 0 or x > max(n - 1, 0) for x in k):
        return False
    if sum(k) % 2:
        return False
    d = sorted(k, reverse=True)
    prefix = 0
    for r in range(1, n + 1):
        prefix += d[r - 1]
        tail = sum(min(x, r) for x in d[r:])
        if prefix > r * (r - 1) + tail:
            return False
    return True


def graphical_distance_lower_bound(k: Sequence[int]) -> int:
    """Lower bound on the l1 distance from ``k`` to any graphical sequence.

    The r-th Erdős–Gallai excess ``sum_{i<=r} d_i - r(r-1) - sum_{i>r} min(d_i, r)``
    (``d`` sorted descending) is a maximum over r-subsets of 1-Lipschitz
    functions, so a unit change to one entry moves it by at most one. Every
    graphical sequence has all excesses <= 0.
    """
    d = sorted(k, reverse=True)
    n = len(d)
    best = 0
    prefix = 0
    for r in range(1, n + 1):
        prefix += d[r - 1]
        excess = prefix - r * (r - 1) - sum(min(x, r) for x in d[r:])
        best = max(best, excess)
    return best


def realize(k: Sequence[int]) -> Graph:
    """Deterministic Havel–Hakimi realization of ``k``.

    At each step the player with the largest residual degree (lowest index on
    ties) is linked to the next players in the same ordering.

    Raises:
        Infeasible: if ``k`` is not graphical.
    """
    n = len(k)
    residual = [int(x) for x in k]
    if any(x < 0 for x in residual):
        raise Infeasible(f"negative degree in {tuple(k)}")
    edges: set[Edge] = set()
    active = set(range(n))
    while active:
        order = sorted(active, key=lambda v: (-residual[v], v))
        v = order[0]
        active.discard(v)
        need = residual[v]
        if need == 0:
            continue
        partners = order[1 : need + 1]
        if len(partners) < need or residual[partners[-1]] == 0:
            raise Infeasible(f"degree sequence {tuple(k)} is not graphical")
        residual[v] = 0
        for u in partners:
            residual[u] -= 1
            edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdős–Rényi G(n, p) sample; pairs are drawn in lexicographic order."""
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, frozenset(pr for pr, kept in zip(pairs, keep) if kept))


def degree_histogram(k: Iterable[int]) -> list[tuple[int, int]]:
    counts: dict[int, int] = {}
    for x in k:
        counts[x] = counts.get(x, 0) + 1
    return sorted(counts.items())
