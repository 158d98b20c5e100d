"""Pairwise stability of link-bias games under link parsimony.

A cost matrix ``C`` gives player ``i`` the cost ``f_i(g) = sum_j C[i, j] x_ij``.
Player ``i`` benefits from link ``ij`` iff ``C[i, j] < 0``; a link forms iff
both endpoints strictly benefit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .graphs import Edge, Graph


class ViolationKind(str, enum.Enum):
    EDGE_NOT_BENEFICIAL = "EdgeNotBeneficial"
    MISSING_MUTUALLY_BENEFICIAL_EDGE = "MissingMutuallyBeneficialEdge"


@dataclass(frozen=True)
class Violation:
    pair: Edge
    kind: ViolationKind


@dataclass(frozen=True)
class StabilityReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def stable(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "stable": self.stable,
            "violations": [
                {"i": v.pair[0] + 1, "j": v.pair[1] + 1, "kind": v.kind.value}
                for v in self.violations
            ],
        }


def as_cost_matrix(c) -> np.ndarray:
    """Copy ``c`` into a validated float matrix with a zeroed diagonal."""
    c = np.array(c, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ValueError(f"cost matrix must be square, got shape {c.shape}")
    np.fill_diagonal(c, 0.0)
    if not np.isfinite(c).all():
        raise ValueError("cost matrix entries must be finite")
    return c


def as_psi_matrix(psi) -> np.ndarray:
    psi = np.array(psi)
    if psi.ndim != 2 or psi.shape[0] != psi.shape[1]:
        raise ValueError(f"psi must be square, got shape {psi.shape}")
    if not np.isin(psi, (0, 1)).all():
        raise ValueError("psi entries must be 0/1")
    psi = psi.astype(bool)
    np.fill_diagonal(psi, False)
    return psi


def check_dims(g: Graph, m: np.ndarray) -> None:
    if m.shape != (g.n, g.n):
        raise ValueError(f"dimension mismatch: graph has n={g.n}, matrix is {m.shape}")


def psi_from_cost(c) -> np.ndarray:
    """Boolean interest matrix: ``psi[i, j]`` iff ``C[i, j] < 0``."""
    c = as_cost_matrix(c)
    psi = c < 0
    np.fill_diagonal(psi, False)
    return psi


def mutual_benefit(c) -> np.ndarray:
    psi = psi_from_cost(c)
    return psi & psi.T


def check_pairwise_stable(g: Graph, c) -> StabilityReport:
    """Enumerate every pair that breaks pairwise stability."""
    c = as_cost_matrix(c)
    check_dims(g, c)
    mutual = mutual_benefit(c)
    violations = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            linked = g.has_edge(i, j)
            if linked and not mutual[i, j]:
                violations.append(Violation((i, j), ViolationKind.EDGE_NOT_BENEFICIAL))
            elif not linked and mutual[i, j]:
                violations.append(
                    Violation((i, j), ViolationKind.MISSING_MUTUALLY_BENEFICIAL_EDGE)
                )
    return StabilityReport(tuple(violations))


def induced_stable_graph(c) -> Graph:
    return Graph.from_adjacency(mutual_benefit(c))


def verify_lemma1(psi, g: Graph) -> bool:
    """Check the linear stability constraints linking ``psi`` and ``x``.

    For every ordered pair ``i != j``::

        psi_ij + psi_ji - 1 <= x_ij <= min(psi_ij, psi_ji)

    Symmetry of ``x`` holds because ``g`` is undirected.
    """
    psi = as_psi_matrix(psi).astype(int)
    check_dims(g, psi)
    x = g.adjacency().astype(int)
    off = ~np.eye(g.n, dtype=bool)
    lower = (psi + psi.T - 1 <= x)[off].all()
    upper = ((x <= psi) & (x <= psi.T))[off].all()
    return bool(lower and upper)


def allocation(g: Graph, c, i: int) -> float:
    """Payoff ``Y_i = -f_i(g)`` of player ``i``."""
    c = as_cost_matrix(c)
    check_dims(g, c)
    if not 0 <= i < g.n:
        raise IndexError(f"player {i} out of range for n={g.n}")
    return 0.0 - float(sum(c[i, j] for j in sorted(g.neighbors(i))))
