"""Exhaustive check of the minimum-l1 solver against graph enumeration.

For every target with entries in 0..n-1 the solver's objective is compared to
the brute-force optimum, and the Erdős–Gallai lower bound's tightness is
tallied.

Usage:
    python scripts/optimality_sweep.py [--max-n 5]
"""

import argparse
import time
from collections import Counter
from itertools import product

from linkbias.graphs import graphical_distance_lower_bound
from linkbias.solver import brute_force_oracle, solve_min_l1


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()

    print("n,targets,mismatches,bound_tight,max_objective,seconds")
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        mismatches = tight = 0
        objectives = Counter()
        targets = list(product(range(n), repeat=n))
        for k in targets:
            best = brute_force_oracle(k).objective
            mismatches += solve_min_l1(k).objective != best
            bound = graphical_distance_lower_bound(k)
            bound += (bound + sum(k)) % 2
            tight += bound == best
            objectives[best] += 1
        elapsed = time.perf_counter() - start
        print(f"{n},{len(targets)},{mismatches},{tight},{max(objectives)},{elapsed:.2f}")


if __name__ == "__main__":
    main()
