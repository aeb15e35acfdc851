"""Reference quotients and graphs, plus a generator of random feasible quotients."""
from __future__ import annotations

import math

import numpy as np

from .cardinality import solve_minimal
from .feasibility import FeasibilitySystem, build_system
from .graph import Graph, Partition
from .quotient import QuotientGraph

__all__ = [
    "three_cluster_example",
    "three_cluster_worked",
    "two_cluster_bipartite",
    "inconsistent_cycle_system",
    "asymmetric_two_cluster_graph",
    "random_feasible_quotient",
]


def three_cluster_example() -> QuotientGraph:
    """Self-loops (1, 2, 0); pairs (0,1) with weights (1, 2) and (0,2) with (2, 1)."""
    return QuotientGraph(3, (1, 2, 0), {(0, 1): (1, 2), (0, 2): (2, 1)})


def three_cluster_worked() -> QuotientGraph:
    """Self-loops (1, 2, 0); pairs (0,1) with weights (2, 1) and (0,2) with (1, 2).

    Minimal sizes are (2, 4, 1); doubled they give a 14-vertex graph.
    """
    return QuotientGraph(3, (1, 2, 0), {(0, 1): (2, 1), (0, 2): (1, 2)})


def two_cluster_bipartite() -> QuotientGraph:
    """Self-loops (0, 1) and one pair with weights (2, 3); minimal sizes (3, 2)."""
    return QuotientGraph(2, (0, 1), {(0, 1): (2, 3)})


def inconsistent_cycle_system() -> FeasibilitySystem:
    """Three ratio constraints 1:2 around a triangle; no positive solution."""
    return FeasibilitySystem.from_rows([[1, -2, 0], [0, 1, -2], [-2, 0, 1]])


# Eight vertices (0-7) each with three neighbors among themselves and one
# among {8, 9}; 8 and 9 each see four of 0-7 and each other. Found by
# randomizing the wired realization of the quotient with self-loops (3, 1)
# and pair weights (1, 4), seed 1; its automorphism group is trivial.
_ASYMMETRIC_EDGES = (
    (0, 1), (0, 3), (0, 5), (0, 8), (1, 3), (1, 6), (1, 9), (2, 4), (2, 5), (2, 6), (2, 9),
    (3, 7), (3, 8), (4, 6), (4, 7), (4, 8), (5, 7), (5, 8), (6, 9), (7, 9), (8, 9),
)


def asymmetric_two_cluster_graph() -> tuple[Graph, Partition]:
    """10-vertex graph whose MBC has 2 cells but whose orbits are all singletons."""
    return Graph(10, _ASYMMETRIC_EDGES), Partition([0] * 8 + [1] * 2)


def random_feasible_quotient(
    rng: np.random.Generator,
    max_p: int = 5,
    max_entry: int = 4,
    link_prob: float = 0.85,
    extra_prob: float = 0.3,
) -> QuotientGraph:
    """A random quotient that is feasible by construction.

    Clusters are linked along a random forest with independent weights in
    ``1..max_entry``; extra pairs are added afterwards only where weights
    consistent with the forest's size ratios fit under ``max_entry``.
    """
    p = int(rng.integers(1, max_p + 1))
    loops = tuple(int(d) for d in rng.integers(0, max_entry + 1, size=p))
    weights = {}
    for k in range(1, p):
        if rng.random() < link_prob:
            j = int(rng.integers(0, k))
            weights[(j, k)] = tuple(int(w) for w in rng.integers(1, max_entry + 1, size=2))
    q = QuotientGraph(p, loops, weights)
    n = solve_minimal(build_system(q)).n
    comp = _components(p, weights)
    for j in range(p):
        for k in range(j + 1, p):
            if (j, k) in weights or comp[j] != comp[k] or rng.random() >= extra_prob:
                continue
            # each vertex of j receives w0 from k: w0 * n_j == w1 * n_k
            g = math.gcd(n[j], n[k])
            w0, w1 = n[k] // g, n[j] // g
            if max(w0, w1) > max_entry:
                continue
            t = int(rng.integers(1, max_entry // max(w0, w1) + 1))
            weights[(j, k)] = (w0 * t, w1 * t)
    return QuotientGraph(p, loops, weights)


def _components(p, weights):
    label = list(range(p))

    def find(x):
        while label[x] != x:
            x = label[x]
        return x

    for j, k in weights:
        label[find(k)] = find(j)
    return [find(i) for i in range(p)]
