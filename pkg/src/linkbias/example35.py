"""The 35-player power-law collaboration example.

Target degrees: players 1-29 want one link, 30-33 two, 34 three, 35 four.
``BENEFICIAL_PAIRS`` lists the ordered pairs ``(i, j)`` (1-based) with
``c_ij = -1``; every other off-diagonal entry is ``+1``. The table these pairs
come from is captioned as listing the ``+1`` entries, but only the ``-1``
reading makes the listed pairs linkable, so that is the reading used here.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph

N = 35

TARGET_DEGREES = (1,) * 29 + (2,) * 4 + (3, 4)

BENEFICIAL_PAIRS = (
    (1, 30), (10, 11), (11, 10), (12, 13), (13, 12), (14, 15), (15, 14), (16, 34),
    (17, 18), (18, 17), (19, 35),
    (2, 3), (20, 21), (21, 20), (22, 23), (23, 22), (24, 25), (25, 24), (26, 27),
    (27, 26), (28, 31), (29, 31),
    (3, 2), (30, 1), (30, 35), (31, 28), (31, 29), (32, 34), (32, 35), (33, 34),
    (33, 35), (34, 16), (34, 32),
    (34, 33), (35, 19), (35, 30), (35, 32), (35, 33), (4, 7), (5, 6), (6, 5),
    (7, 4), (8, 9), (9, 8),
)


def psi() -> np.ndarray:
    out = np.zeros((N, N), dtype=bool)
    for i, j in BENEFICIAL_PAIRS:
        out[i - 1, j - 1] = True
    return out


def cost_matrix() -> np.ndarray:
    c = np.where(psi(), -1.0, 1.0)
    np.fill_diagonal(c, 0.0)
    return c


def graph() -> Graph:
    return Graph(N, frozenset((i - 1, j - 1) for i, j in BENEFICIAL_PAIRS if i < j))
