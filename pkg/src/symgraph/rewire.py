"""Quotient-preserving randomization by double-edge swaps.

Swaps only ever exchange endpoints between two edges of the same provenance
class, so every vertex keeps its neighbor count into every cluster and the
quotient is unchanged. Swaps that would create a self-loop or a repeated
edge are rejected.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import InputError
from .graph import Graph, Partition, canonical_edge
from .quotient import extract_quotient
from .rng import stream

__all__ = ["swap_intra", "swap_inter", "randomize"]


def _require_provenance(g: Graph):
    if not g.has_provenance:
        raise InputError("graph edges carry no provenance tags; cannot identify swap classes")


def _swap_class(edges, edge_set, rng, attempts, bipartite, debug=False):
    """Run ``attempts`` swap proposals on ``edges`` in place.

    ``edges`` is a list of oriented pairs; for bipartite classes the first
    endpoint is always on the same side. ``edge_set`` holds every edge of
    the whole graph in canonical form and is kept in sync.
    """
    m = len(edges)
    if m < 2 or attempts <= 0:
        return 0
    draws = rng.integers(0, m, size=(attempts, 2))
    flips = rng.integers(0, 2, size=attempts)
    accepted = 0
    size = len(edge_set)
    for (x, y), flip in zip(draws.tolist(), flips.tolist()):
        if x == y:
            continue
        a, b = edges[x]
        c, d = edges[y]
        if flip and not bipartite:
            c, d = d, c
        if a == d or c == b:
            continue
        e1, e2 = canonical_edge(a, d), canonical_edge(c, b)
        if e1 == e2 or e1 in edge_set or e2 in edge_set:
            continue
        edge_set.discard(canonical_edge(a, b))
        edge_set.discard(canonical_edge(c, d))
        edge_set.add(e1)
        edge_set.add(e2)
        edges[x] = (a, d)
        edges[y] = (c, b)
        accepted += 1
        if debug:
            assert e1[0] != e1[1] and e2[0] != e2[1], "self-loop created"
            assert len(edge_set) == size, "edge count changed"
    return accepted


def _rebuild(g, classes, edge_set):
    prov = {}
    for tag, edges in classes.items():
        for u, v in edges:
            prov[canonical_edge(u, v)] = tag
    assert len(prov) == len(edge_set) == len(g.edges)
    return Graph(g.n, prov, prov)


def _oriented(edges, k, part):
    if part is None:
        return list(edges)
    return [(u, v) if part[u] == k else (v, u) for u, v in edges]


def swap_intra(g: Graph, k: int, rng: np.random.Generator, attempts: int, debug: bool = False) -> Graph:
    """Swap pairs of edges inside cluster ``k`` up to ``attempts`` times."""
    _require_provenance(g)
    if attempts < 0:
        raise InputError("attempts must be nonnegative")
    classes = g.edges_by_tag()
    tag = ("self", k)
    if tag not in classes or attempts == 0:
        return g
    edge_set = set(g.edges)
    _swap_class(classes[tag], edge_set, rng, attempts, bipartite=False, debug=debug)
    return _rebuild(g, classes, edge_set)


def swap_inter(
    g: Graph,
    pair: tuple[int, int],
    rng: np.random.Generator,
    attempts: int,
    part: Partition | None = None,
    debug: bool = False,
) -> Graph:
    """Swap pairs of edges between clusters ``pair = (k, l)``.

    Without ``part`` the lower-numbered endpoint of each edge is taken to be
    in ``k``, which holds for graphs built by :func:`symgraph.wiring.generate`.
    """
    _require_provenance(g)
    if attempts < 0:
        raise InputError("attempts must be nonnegative")
    k, l = sorted(pair)
    classes = g.edges_by_tag()
    tag = ("edge", k, l)
    if tag not in classes or attempts == 0:
        return g
    classes[tag] = _oriented(classes[tag], k, part)
    edge_set = set(g.edges)
    _swap_class(classes[tag], edge_set, rng, attempts, bipartite=True, debug=debug)
    return _rebuild(g, classes, edge_set)


def randomize(
    g: Graph,
    part: Partition,
    seed: int,
    swaps_per_edge=10,
    debug: bool = False,
) -> Graph:
    """Randomize every provenance class of ``g`` while keeping its quotient.

    Each class of ``m`` edges gets ``ceil(swaps_per_edge * m)`` swap attempts
    from its own stream derived from ``seed`` and the class tag.
    """
    _require_provenance(g)
    extract_quotient(g, part)
    rate = Fraction(swaps_per_edge)
    if rate < 0:
        raise InputError("swaps_per_edge must be nonnegative")
    if rate == 0:
        return g
    classes = g.edges_by_tag()
    edge_set = set(g.edges)
    for tag in sorted(classes):
        edges = classes[tag]
        attempts = math.ceil(rate * len(edges))
        if tag[0] == "self":
            rng = stream(seed, "swap", 0, tag[1])
            _swap_class(edges, edge_set, rng, attempts, bipartite=False, debug=debug)
        else:
            classes[tag] = edges = _oriented(edges, tag[1], part)
            rng = stream(seed, "swap", 1, tag[1], tag[2])
            _swap_class(edges, edge_set, rng, attempts, bipartite=True, debug=debug)
    return _rebuild(g, classes, edge_set)
