"""Network formation games with link bias: construction, stability checks, dynamics."""

from .game import DynamicsTrace, player_cost, run_dynamics
from .graphs import (
    Graph,
    Infeasible,
    degree_sequence,
    is_graphical,
    l1_gap,
    realize,
)
from .portfolio import (
    PortfolioOutcome,
    ResourceModel,
    knapsack_best_response,
    run_portfolio_dynamics,
)
from .solver import (
    Certificate,
    DeviationVector,
    SolveReport,
    brute_force_oracle,
    cost_matrix_from_psi,
    sample_cost_matrix,
    solve_min_l1,
)
from .stability import (
    StabilityReport,
    ViolationKind,
    allocation,
    check_pairwise_stable,
    induced_stable_graph,
    psi_from_cost,
    verify_lemma1,
)

__version__ = "0.1.0"
