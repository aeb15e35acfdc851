"""Deterministic wiring of a full graph from a quotient and cluster sizes.

Intra-cluster edges are circulant: vertex ``i`` of a cluster of size ``n``
joins ``i +- 1, ..., i +- floor(d/2)`` (mod ``n``), plus the antipode
``i + n/2`` when the self-loop count ``d`` is odd.

Inter-cluster edges between clusters ``k`` and ``l`` use offsets. With
``h = gcd(n_k, n_l)``, ``d_k = n_k / h`` and ``d_l = n_l / h``, each vertex
``u_i`` of ``k`` joins ``w_j`` of ``l`` for

    j = (i + r1 * h + b_1 + ... + b_r2) mod n_l,   0 <= r1 < d_l,  1 <= r2 <= m

where ``b`` is a composition of ``h`` into ``m`` positive parts and ``m`` is
the common value ``Q_lk / d_k = Q_kl / d_l``.

Cluster ``k`` occupies the contiguous global block starting at
``sum(n[:k])``, local order preserved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate

import numpy as np

from .cardinality import CardinalitySolution
from .errors import DomainError, InputError
from .graph import Graph, Partition, Permutation
from .quotient import QuotientGraph, q_matrix
from .rng import stream

__all__ = [
    "InterClusterPlan",
    "wire_intra",
    "make_plan",
    "balanced_composition",
    "random_composition",
    "wire_inter",
    "wire_inter_dual",
    "generate",
    "cluster_rotation",
]


def wire_intra(n_k: int, q_kk: int) -> set[tuple[int, int]]:
    """Circulant edge set giving every local vertex intra-degree ``q_kk``."""
    if q_kk < 0:
        raise DomainError(f"self-loop count must be nonnegative, got {q_kk}")
    if q_kk == 0:
        return set()
    if n_k <= q_kk:
        raise DomainError(f"cluster of size {n_k} cannot host intra-degree {q_kk}")
    if q_kk % 2 and n_k % 2:
        raise DomainError(f"odd intra-degree {q_kk} needs an even cluster size, got {n_k}")
    offsets = list(range(1, q_kk // 2 + 1))
    if q_kk % 2:
        offsets.append(n_k // 2)
    edges = set()
    for i in range(n_k):
        for j in offsets:
            a, b = i, (i + j) % n_k
            edges.add((a, b) if a < b else (b, a))
    return edges


@dataclass(frozen=True)
class InterClusterPlan:
    """Offset layout for the edges between two clusters ``k`` and ``l``."""

    n_k: int
    n_l: int
    q_kl: int
    q_lk: int
    h: int
    d_k: int
    d_l: int
    m: int
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != self.m or sum(self.b) != self.h or min(self.b, default=0) < 1:
            raise DomainError(f"b={self.b} is not a composition of {self.h} into {self.m} parts")


def balanced_composition(h: int, m: int) -> tuple[int, ...]:
    q, r = divmod(h, m)
    return tuple(q + 1 if j < r else q for j in range(m))


def random_composition(h: int, m: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Uniform over the ``C(h-1, m-1)`` compositions of ``h`` into ``m`` parts."""
    cuts = sorted(int(c) + 1 for c in rng.choice(h - 1, size=m - 1, replace=False))
    bounds = [0] + cuts + [h]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def make_plan(n_k: int, n_l: int, q_kl: int, q_lk: int, rng: np.random.Generator | None = None) -> InterClusterPlan:
    """Plan the ``k``-``l`` wiring; ``q_kl`` is each ``u``'s degree into ``l``.

    ``rng=None`` picks the balanced composition for ``b``; otherwise ``b`` is
    drawn uniformly with ``rng``.
    """
    if min(n_k, n_l, q_kl, q_lk) < 1:
        raise DomainError("cluster sizes and pair weights must be positive")
    if n_k * q_kl != n_l * q_lk:
        raise DomainError(f"edge counts disagree: {n_k}*{q_kl} != {n_l}*{q_lk}")
    if q_lk > n_k or q_kl > n_l:
        raise DomainError(f"degrees ({q_kl}, {q_lk}) exceed cluster sizes ({n_l}, {n_k})")
    h = math.gcd(n_k, n_l)
    d_k, d_l = n_k // h, n_l // h
    m = q_lk // d_k
    b = balanced_composition(h, m) if rng is None else random_composition(h, m, rng)
    return InterClusterPlan(n_k, n_l, q_kl, q_lk, h, d_k, d_l, m, b)


def wire_inter(plan: InterClusterPlan) -> set[tuple[int, int]]:
    """Edges as ``(u_local, w_local)`` pairs, generated from the ``k`` side."""
    prefix = list(accumulate(plan.b))
    return {
        (i, (i + r1 * plan.h + prefix[r2]) % plan.n_l)
        for i in range(plan.n_k)
        for r1 in range(plan.d_l)
        for r2 in range(plan.m)
    }


def wire_inter_dual(plan: InterClusterPlan) -> set[tuple[int, int]]:
    """The same edges generated from the ``l`` side with ``b`` reversed."""
    prefix = list(accumulate(reversed(plan.b)))
    return {
        ((i + r3 * plan.h + prefix[r4]) % plan.n_k, i)
        for i in range(plan.n_l)
        for r3 in range(plan.d_k)
        for r4 in range(plan.m)
    }


def generate(q: QuotientGraph, sol: CardinalitySolution, b_seed: int | None = None) -> tuple[Graph, Partition]:
    """Wire the full graph for quotient ``q`` with cluster sizes ``sol.n``.

    Every edge is tagged with its quotient feature. ``b_seed`` switches the
    inter-cluster compositions from balanced to seeded-random.
    """
    if len(sol.n) != q.p:
        raise InputError(f"solution has {len(sol.n)} clusters, quotient has {q.p}")
    n = sol.n
    qm = q_matrix(q)
    start = [0, *accumulate(n)]
    prov = {}
    for k in range(q.p):
        off = start[k]
        for a, b in wire_intra(n[k], q.self_loops[k]):
            prov[(off + a, off + b)] = ("self", k)
    for k, l in q.pair_edges:
        rng = None if b_seed is None else stream(b_seed, "b", k, l)
        plan = make_plan(n[k], n[l], int(qm[k, l]), int(qm[l, k]), rng)
        for a, b in wire_inter(plan):
            prov[(start[k] + a, start[l] + b)] = ("edge", k, l)
    part = Partition([k for k in range(q.p) for _ in range(n[k])])
    return Graph(start[-1], prov, prov), part


def cluster_rotation(sizes) -> Permutation:
    """Shift every cluster block's local index by one, all at once."""
    img = []
    off = 0
    for s in sizes:
        img += [off + (i + 1) % s for i in range(s)]
        off += s
    return Permutation(img)
