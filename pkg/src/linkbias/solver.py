"""Exact minimum-l1 stable graph construction and cost-matrix generation.

The integer program being solved is

    min  sum_i e_i
    s.t. |sum_{j != i} x_ij - k_i| <= e_i           (split into two linear rows)
         psi_ij + psi_ji - 1 <= x_ij <= min(psi_ij, psi_ji)
         x_ij = x_ji,  x, psi binary.

For any symmetric ``x`` the choice ``psi = x`` satisfies the stability rows, so
every simple graph is feasible and the program reduces to: find the simple
graph whose degree sequence is l1-closest to ``k``. Because only the degree
sequence enters the objective, that is the l1-closest *graphical* sequence,
realized by Havel–Hakimi.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .graphs import (
    Graph,
    degree_sequence,
    graphical_distance_lower_bound,
    is_graphical,
    l1_gap,
    realize,
)
from .stability import as_psi_matrix

BRUTE_FORCE_MAX_N = 8


class Certificate(str, enum.Enum):
    GRAPHICAL_REALIZATION = "GraphicalRealization"
    BUDGET_SEARCH_EXHAUSTION = "BudgetSearchExhaustion"
    BRUTE_FORCE = "BruteForce"


@dataclass(frozen=True)
class DeviationVector:
    e: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.e)

    @classmethod
    def between(cls, d: Sequence[int], k: Sequence[int]) -> DeviationVector:
        if len(d) != len(k):
            raise ValueError(f"length mismatch: {len(d)} vs {len(k)}")
        return cls(tuple(abs(a - b) for a, b in zip(d, k)))


@dataclass(frozen=True, eq=False)
class SolveReport:
    target: tuple[int, ...]
    graph: Graph
    psi: np.ndarray
    deviations: DeviationVector
    certificate: Certificate

    @property
    def objective(self) -> int:
        return self.deviations.total

    def to_dict(self) -> dict:
        ii, jj = np.nonzero(self.psi)
        return {
            "n": self.graph.n,
            "objective": self.objective,
            "certificate": self.certificate.value,
            "degrees_target": list(self.target),
            "degrees_achieved": list(degree_sequence(self.graph)),
            "edges": [[i + 1, j + 1] for i, j in self.graph.sorted_edges()],
            "psi_ones": [[int(i) + 1, int(j) + 1] for i, j in zip(ii, jj)],
        }


def _report(k, graph: Graph, certificate: Certificate) -> SolveReport:
    return SolveReport(
        target=tuple(k),
        graph=graph,
        psi=graph.adjacency(),
        deviations=DeviationVector.between(degree_sequence(graph), k),
        certificate=certificate,
    )


def _delta_multisets(lo: int, hi: int, size: int, max_cost: int):
    """Non-decreasing delta tuples of length ``size`` on ``lo..hi`` with
    ``sum(abs(delta)) <= max_cost``, yielded with that cost."""
    acc: list[int] = []

    def rec(start: int, left: int, used: int):
        if left == 0:
            yield tuple(acc), used
            return
        for delta in range(start, hi + 1):
            # every later entry is >= delta, so costs at least max(delta, 0)
            if used + abs(delta) + (left - 1) * max(delta, 0) > max_cost:
                if delta > 0:
                    break
                continue
            acc.append(delta)
            yield from rec(delta, left - 1, used + abs(delta))
            acc.pop()

    yield from rec(lo, size, 0)


def budget_candidates(base: Sequence[int], budget: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Sequences ``d`` with ``l1_gap(d, base) == budget`` and ``0 <= d_i <= cap``,
    one per equivalence class under permuting players that share a target.

    Graphicality depends only on the multiset of degrees and the gap is
    unchanged by such permutations, so one representative per class suffices.
    Within a class the smallest deltas (decrements) go to the lowest indices;
    classes are visited in ascending target value, each enumerating its
    delta multisets from most-decremented upwards.
    """
    groups: dict[int, list[int]] = {}
    for idx, value in enumerate(base):
        groups.setdefault(int(value), []).append(idx)
    order = sorted(groups.items())
    reach = [0] * (len(order) + 1)
    for g in range(len(order) - 1, -1, -1):
        value, members = order[g]
        reach[g] = reach[g + 1] + len(members) * max(value, cap - value)
    d = list(base)

    def rec(g: int, remaining: int):
        if remaining > reach[g]:
            return
        if g == len(order):
            yield tuple(d)
            return
        value, members = order[g]
        for deltas, used in _delta_multisets(-value, cap - value, len(members), remaining):
            for idx, delta in zip(members, deltas):
                d[idx] = value + delta
            yield from rec(g + 1, remaining - used)
        for idx in members:
            d[idx] = value

    yield from rec(0, budget)


def _badness(d: Sequence[int]) -> tuple[int, int, int]:
    """(largest Erdős–Gallai excess, total positive excess, sum parity); all
    zero iff ``d`` is graphical (entries assumed within ``0..n-1``)."""
    x = np.sort(np.asarray(d, dtype=np.int64))[::-1]
    n = len(x)
    if n == 0:
        return (0, 0, 0)
    r = np.arange(1, n + 1)
    tail_mask = np.arange(n)[None, :] >= r[:, None]
    tail = (np.minimum(x[None, :], r[:, None]) * tail_mask).sum(axis=1)
    excess = np.cumsum(x) - r * (r - 1) - tail
    pos = np.clip(excess, 0, None)
    return (int(pos.max()), int(pos.sum()), int(x.sum() % 2))


def greedy_repair(k: Sequence[int], cap: int) -> tuple[int, ...] | None:
    """Unit-step descent on :func:`_badness` towards a graphical sequence.

    Returns a graphical sequence near ``k`` (an upper bound for the search),
    or ``None`` if no single unit move improves. Players sharing a current
    value are interchangeable, so only the lowest index per value is moved.
    """
    d = [int(x) for x in k]
    bad = _badness(d)
    while bad != (0, 0, 0):
        best = None
        seen: set[int] = set()
        for i, value in enumerate(d):
            if value in seen:
                continue
            seen.add(value)
            for delta in (-1, 1):
                if not 0 <= value + delta <= cap:
                    continue
                d[i] = value + delta
                b = _badness(d)
                d[i] = value
                if b < bad and (best is None or b < best[0]):
                    best = (b, i, delta)
        if best is None:
            return None
        bad, i, delta = best
        d[i] += delta
    return tuple(d)


def closest_graphical(k: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Return an l1-closest graphical sequence to ``k`` clamped at ``n-1``,
    with its distance from the clamped sequence.

    The Erdős–Gallai bound (raised to the right parity) is a lower bound and
    greedy repair gives an upper bound; only budgets strictly between them are
    searched, in increasing order, so the first hit is optimal.
    """
    n = len(k)
    cap = max(n - 1, 0)
    clamped = tuple(min(int(x), cap) for x in k)
    if is_graphical(clamped):
        return clamped, 0
    # every candidate at budget B has the parity of sum(clamped) + B
    lower = max(graphical_distance_lower_bound(clamped), 1)
    if (lower + sum(clamped)) % 2:
        lower += 1
    repaired = greedy_repair(clamped, cap)
    if repaired is not None:
        upper = l1_gap(repaired, clamped)
    else:
        # the empty graph is always feasible
        repaired, upper = (0,) * n, sum(clamped)
    for budget in range(lower, upper, 2):
        for d in budget_candidates(clamped, budget, cap):
            if is_graphical(d):
                return d, budget
    return repaired, upper


def solve_min_l1(k: Sequence[int]) -> SolveReport:
    """Stable graph with degree sequence l1-closest to ``k``.

    Entries above ``n-1`` are accepted and clamped; the clamp's forced
    deviation is part of the reported objective.
    """
    k = tuple(int(x) for x in k)
    if any(x < 0 for x in k):
        raise ValueError(f"degree entries must be nonnegative, got {k}")
    d, _ = closest_graphical(k)
    graph = realize(d)
    certificate = (
        Certificate.GRAPHICAL_REALIZATION
        if l1_gap(d, k) == 0
        else Certificate.BUDGET_SEARCH_EXHAUSTION
    )
    return _report(k, graph, certificate)


def _edge_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _degree_rows(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    masks = np.arange(start, stop, dtype=np.int64)
    deg = np.zeros((len(masks), n), dtype=np.int16)
    for e, (u, v) in enumerate(_edge_list(n)):
        bit = ((masks >> e) & 1).astype(np.int16)
        deg[:, u] += bit
        deg[:, v] += bit
    return masks, deg


@lru_cache(maxsize=None)
def _cached_degree_rows(n: int) -> tuple[np.ndarray, np.ndarray]:
    return _degree_rows(n, 0, 1 << (n * (n - 1) // 2))


def _lex_key(masks: np.ndarray, m: int) -> np.ndarray:
    """Integer key ordering edge sets like their sorted edge lists.

    Per edge slot: 0 once no later edge is present (the list has ended),
    1 if the edge is present, 2 if absent but a later edge is present.
    """
    key = np.zeros(len(masks), dtype=np.int64)
    for e in range(m):
        present = (masks >> e) & 1
        later = (masks >> (e + 1)) != 0
        digit = np.where(present == 1, 1, np.where(later, 2, 0))
        key = key * 3 + digit
    return key


def brute_force_oracle(k: Sequence[int], chunk: int = 1 << 20) -> SolveReport:
    """Enumerate every graph on ``n <= 8`` players; return the l1-minimizer with
    the lexicographically smallest sorted edge list."""
    k = tuple(int(x) for x in k)
    n = len(k)
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force supports n <= {BRUTE_FORCE_MAX_N}, got {n}")
    m = n * (n - 1) // 2
    total = 1 << m
    target = np.array(k, dtype=np.int32)

    if total <= 1 << 15:
        blocks = [_cached_degree_rows(n)]
    else:
        blocks = (_degree_rows(n, s, min(s + chunk, total)) for s in range(0, total, chunk))

    best_gap, best_key, best_mask = None, None, None
    for masks, deg in blocks:
        gaps = np.abs(deg - target).sum(axis=1)
        g = int(gaps.min())
        if best_gap is not None and g > best_gap:
            continue
        tied = masks[gaps == g]
        keys = _lex_key(tied, m)
        pos = int(keys.argmin())
        if best_gap is None or g < best_gap or keys[pos] < best_key:
            best_gap, best_key, best_mask = g, keys[pos], int(tied[pos])

    edges = [pair for e, pair in enumerate(_edge_list(n)) if best_mask >> e & 1]
    return _report(k, Graph(n, frozenset(edges)), Certificate.BRUTE_FORCE)


def cost_matrix_from_psi(psi) -> np.ndarray:
    """``-1`` where ``psi`` is set, ``+1`` elsewhere, zero diagonal."""
    psi = as_psi_matrix(psi)
    c = np.where(psi, -1.0, 1.0)
    np.fill_diagonal(c, 0.0)
    return c


def sample_cost_matrix(psi, seed: int, magnitude_range: tuple[float, float] = (0.5, 2.0)) -> np.ndarray:
    """Random cost matrix with the sign pattern of ``psi``.

    Magnitudes are uniform on ``magnitude_range`` from ``numpy.random.default_rng(seed)``.
    """
    lo, hi = map(float, magnitude_range)
    if not (0 < lo <= hi < np.inf):
        raise ValueError(f"magnitude range must satisfy 0 < lo <= hi < inf, got {magnitude_range}")
    psi = as_psi_matrix(psi)
    rng = np.random.default_rng(seed)
    mags = rng.uniform(lo, hi, size=psi.shape)
    c = np.where(psi, -mags, mags)
    np.fill_diagonal(c, 0.0)
    return c
