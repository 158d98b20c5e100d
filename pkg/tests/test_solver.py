from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from linkbias import example35, solver
from linkbias.graphs import (
    Graph,
    degree_sequence,
    graphical_distance_lower_bound,
    is_graphical,
    l1_gap,
    random_graph,
)
from linkbias.solver import (
    Certificate,
    brute_force_oracle,
    budget_candidates,
    cost_matrix_from_psi,
    sample_cost_matrix,
    solve_min_l1,
)
from linkbias.stability import (
    check_pairwise_stable,
    induced_stable_graph,
    psi_from_cost,
    verify_lemma1,
)

from oracles import min_l1_by_enumeration

# min l1 distance to a realizable sequence, frozen from tests/oracles.py enumeration
ENUMERATED_OPTIMA = {
    (1, 1, 1): 1,
    (3, 0, 0, 0): 3,
    (2, 2, 0): 2,
    (3, 3, 1, 1): 2,
    (4, 4, 4, 0, 0): 6,
    (2, 0, 0, 0, 0, 0): 2,
}


def test_frozen_optima_match_enumeration():
    for k, expected in ENUMERATED_OPTIMA.items():
        assert min_l1_by_enumeration(k) == expected


@pytest.mark.parametrize("k, expected", sorted(ENUMERATED_OPTIMA.items()))
def test_solver_hits_enumerated_optimum(k, expected):
    assert solve_min_l1(k).objective == expected
    assert brute_force_oracle(k).objective == expected


def test_example_target_solves_exactly():
    report = solve_min_l1(example35.TARGET_DEGREES)
    assert report.objective == 0
    assert degree_sequence(report.graph) == example35.TARGET_DEGREES
    assert report.certificate is Certificate.GRAPHICAL_REALIZATION


def test_zero_and_complete_targets():
    r = solve_min_l1((0, 0, 0, 0))
    assert r.graph == Graph.empty(4) and r.objective == 0
    r = solve_min_l1((3, 3, 3, 3))
    assert r.graph == Graph.complete(4) and r.objective == 0


def test_closest_only_certificate():
    r = solve_min_l1((1, 1, 1))
    assert r.certificate is Certificate.BUDGET_SEARCH_EXHAUSTION
    assert r.deviations.e == (1, 0, 0)


def test_entries_above_cap_are_clamped():
    # two players can link at most once each; the extra 4 + 4 units are forced
    r = solve_min_l1((5, 5))
    assert r.graph == Graph.complete(2)
    assert r.objective == 8
    assert r.certificate is Certificate.BUDGET_SEARCH_EXHAUSTION


def test_brute_force_examples():
    assert brute_force_oracle((2, 2, 2)).graph == Graph.complete(3)
    r = brute_force_oracle((1, 1, 1))
    assert r.objective == 1 and r.certificate is Certificate.BRUTE_FORCE
    # lexicographically smallest minimizer
    assert r.graph.sorted_edges() == [(0, 1)]
    assert brute_force_oracle((3, 0, 0, 0)).objective == 3
    with pytest.raises(ValueError):
        brute_force_oracle((0,) * 9)


def test_brute_force_tie_break_is_lexicographic():
    # (1,1,1,1) has three perfect matchings; the smallest edge list is [(0,1),(2,3)]
    assert brute_force_oracle((1, 1, 1, 1)).graph.sorted_edges() == [(0, 1), (2, 3)]
    # (1,1,1) ties: {01}, {02}, {12} and some two-edge paths; [(0,1)] is smallest
    assert brute_force_oracle((1, 1, 1)).graph.sorted_edges() == [(0, 1)]


def test_brute_force_chunked_path_agrees():
    k = (2, 1, 1, 0, 0, 0, 0)
    full = brute_force_oracle(k)
    chunked = brute_force_oracle(k, chunk=1 << 12)
    assert chunked.graph == full.graph and chunked.objective == full.objective


def _class_key(d, base):
    """Canonical form of d up to permuting players with equal base value."""
    return tuple(sorted((b, x) for b, x in zip(base, d)))


@pytest.mark.parametrize("base", [(1, 0, 2), (1, 1, 1), (0, 0, 2, 2), (3, 0, 0, 0)])
def test_budget_candidates_cover_every_class_once(base):
    cap = len(base) - 1
    for budget in range(6):
        cands = list(budget_candidates(base, budget, cap=cap))
        keys = [_class_key(d, base) for d in cands]
        assert len(keys) == len(set(keys))
        assert all(l1_gap(d, base) == budget for d in cands)
        everything = product(range(cap + 1), repeat=len(base))
        expected = {_class_key(d, base) for d in everything if l1_gap(d, base) == budget}
        assert set(keys) == expected


def test_budget_candidates_decrement_first():
    assert next(budget_candidates((1, 1, 1), 1, cap=2)) == (0, 1, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_solver_matches_oracle_exhaustively(n):
    for k in product(range(n), repeat=n):
        if n == 5 and sum(k) % 3:
            continue  # full n=5 sweep lives in the acceptance suite
        assert solve_min_l1(k).objective == brute_force_oracle(k).objective, k


@given(st.integers(1, 32), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_round_trip_realization(n, p, seed):
    g = random_graph(n, p, np.random.default_rng(seed))
    assert solve_min_l1(degree_sequence(g)).objective == 0


@given(st.lists(st.integers(0, 9), min_size=1, max_size=9))
def test_report_invariants(k):
    r = solve_min_l1(k)
    n = len(k)
    assert r.objective == l1_gap(degree_sequence(r.graph), k)
    if sum(k) % 2:
        assert r.objective >= 1
    assert r.objective >= sum(max(0, x - (n - 1)) for x in k)
    if r.certificate is Certificate.GRAPHICAL_REALIZATION:
        assert r.objective == 0
    for i, j in r.graph.edges:
        assert r.psi[i, j] and r.psi[j, i]
    assert verify_lemma1(r.psi, r.graph)
    c = cost_matrix_from_psi(r.psi)
    assert check_pairwise_stable(r.graph, c).stable
    assert induced_stable_graph(c) == r.graph


def test_solve_is_deterministic():
    k = (4, 3, 3, 2, 2, 1, 1, 0)
    a, b = solve_min_l1(k), solve_min_l1(list(k))
    assert a.graph == b.graph and a.to_dict() == b.to_dict()


def test_report_serialization():
    d = solve_min_l1((1, 1, 0)).to_dict()
    assert d == {
        "n": 3,
        "objective": 0,
        "certificate": "GraphicalRealization",
        "degrees_target": [1, 1, 0],
        "degrees_achieved": [1, 1, 0],
        "edges": [[1, 2]],
        "psi_ones": [[1, 2], [2, 1]],
    }


def test_cost_matrix_from_psi_examples():
    c = cost_matrix_from_psi(np.zeros((3, 3), dtype=int))
    assert (c[~np.eye(3, dtype=bool)] == 1).all() and (c.diagonal() == 0).all()
    psi = np.zeros((3, 3), dtype=int)
    psi[0, 1] = psi[1, 0] = 1
    c = cost_matrix_from_psi(psi)
    assert c[0, 1] == c[1, 0] == -1 and c[0, 2] == c[2, 1] == 1
    assert np.array_equal(cost_matrix_from_psi(example35.psi()), example35.cost_matrix())


@given(st.integers(1, 10), st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_cost_matrix_round_trips_psi(n, psi_seed, seed):
    psi = np.random.default_rng(psi_seed).random((n, n)) < 0.5
    np.fill_diagonal(psi, False)
    assert (psi_from_cost(cost_matrix_from_psi(psi)) == psi).all()
    sampled = sample_cost_matrix(psi, seed, (0.1, 10.0))
    assert (psi_from_cost(sampled) == psi).all()
    assert np.array_equal(sampled, sample_cost_matrix(psi, seed, (0.1, 10.0)))


def test_sampled_example_family_induces_example_graph(example_graph):
    for seed in range(5):
        c = sample_cost_matrix(example35.psi(), seed, (0.25, 4.0))
        assert induced_stable_graph(c) == example_graph


@pytest.mark.parametrize("rng_range", [(0.0, 1.0), (-1.0, 2.0), (2.0, 1.0)])
def test_sample_cost_matrix_rejects_bad_ranges(rng_range):
    with pytest.raises(ValueError):
        sample_cost_matrix(np.zeros((2, 2)), 0, rng_range)


@pytest.mark.parametrize("n", range(1, 6))
def test_lower_bound_never_exceeds_optimum(n):
    for k in product(range(n), repeat=n):
        assert graphical_distance_lower_bound(k) <= brute_force_oracle(k).objective


def test_search_without_repair_upper_bound(monkeypatch):
    monkeypatch.setattr(solver, "greedy_repair", lambda k, cap: None)
    for k in [(1, 1, 1), (3, 0, 0, 0), (4, 4, 4, 0, 0), (2, 0, 0, 0, 0, 0)]:
        assert solve_min_l1(k).objective == ENUMERATED_OPTIMA[k]


def test_greedy_repair_returns_graphical():
    d = solver.greedy_repair((20,) * 10 + (0,) * 20, cap=29)
    assert d is not None and is_graphical(d)


def test_random_n7_targets_match_oracle():
    rng = np.random.default_rng(7)
    for _ in range(15):
        k = tuple(int(x) for x in rng.integers(0, 7, 7))
        assert solve_min_l1(k).objective == brute_force_oracle(k).objective, k


def test_far_targets_solve_quickly():
    r = solve_min_l1((63,) + (0,) * 63)
    assert r.objective == 63
    r = solve_min_l1((20,) * 10 + (0,) * 20)
    assert r.objective == 110
