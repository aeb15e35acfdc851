"""Quotient graphs, the equitable-partition check and color refinement.

A quotient graph over ``p`` clusters records, for every cluster ``i``, the
number of neighbors each of its vertices has inside the cluster
(``self_loops[i]``) and, for every linked pair ``j < k``, the two per-vertex
edge counts ``(w_low, w_high)``: ``w_low`` edges from cluster ``k`` into each
vertex of ``j`` and ``w_high`` edges from ``j`` into each vertex of ``k``.
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .errors import DomainError, InputError, ParseError
from .graph import Graph, Partition

__all__ = [
    "QuotientGraph",
    "q_matrix",
    "is_equitable",
    "extract_quotient",
    "refine_colors",
    "coarsest_equitable",
    "parse_quotient",
    "serialize_quotient",
]


@dataclass(frozen=True)
class QuotientGraph:
    p: int
    self_loops: tuple[int, ...]
    weights: Mapping[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.p < 1:
            raise InputError(f"a quotient needs at least one cluster, got p={self.p}")
        loops = tuple(int(d) for d in self.self_loops)
        if len(loops) != self.p:
            raise InputError(f"expected {self.p} self-loop counts, got {len(loops)}")
        if any(d < 0 for d in loops):
            raise InputError("self-loop counts must be nonnegative")
        weights = {}
        for (j, k), (w0, w1) in sorted(self.weights.items()):
            j, k, w0, w1 = int(j), int(k), int(w0), int(w1)
            if j == k:
                raise InputError(f"pair ({j}, {k}) joins a cluster to itself")
            if not (0 <= j < k < self.p):
                raise InputError(f"pair ({j}, {k}) must satisfy 0 <= j < k < {self.p}")
            if w0 < 1 or w1 < 1:
                raise InputError(f"pair ({j}, {k}) has a zero weight")
            weights[(j, k)] = (w0, w1)
        object.__setattr__(self, "self_loops", loops)
        object.__setattr__(self, "weights", MappingProxyType(weights))

    @classmethod
    def from_matrix(cls, q) -> "QuotientGraph":
        """Inverse of :func:`q_matrix`; rejects one-sided pairs."""
        q = np.asarray(q, dtype=np.int64)
        p = q.shape[0]
        if q.shape != (p, p):
            raise InputError(f"quotient matrix must be square, got shape {q.shape}")
        weights = {}
        for j in range(p):
            for k in range(j + 1, p):
                a, b = int(q[j, k]), int(q[k, j])
                if (a == 0) != (b == 0):
                    raise DomainError(f"pair ({j}, {k}) has edges in one direction only")
                if a:
                    weights[(j, k)] = (a, b)
        return cls(p, tuple(int(x) for x in np.diag(q)), weights)

    @property
    def pair_edges(self) -> list[tuple[int, int]]:
        return list(self.weights)

    def __eq__(self, other):
        if not isinstance(other, QuotientGraph):
            return NotImplemented
        return (
            self.p == other.p
            and self.self_loops == other.self_loops
            and dict(self.weights) == dict(other.weights)
        )

    def __hash__(self):
        return hash((self.p, self.self_loops, tuple(self.weights.items())))

    def __reduce__(self):
        # mappingproxy does not pickle; rebuild through the constructor
        return (QuotientGraph, (self.p, self.self_loops, dict(self.weights)))

    def __repr__(self):
        return f"QuotientGraph(p={self.p}, self_loops={self.self_loops}, weights={dict(self.weights)})"


def q_matrix(q: QuotientGraph) -> np.ndarray:
    """``Q[i, j]`` = edges each vertex of cluster ``i`` receives from cluster ``j``."""
    out = np.zeros((q.p, q.p), dtype=np.int64)
    out[np.diag_indices(q.p)] = q.self_loops
    for (j, k), (w0, w1) in q.weights.items():
        out[j, k] = w0
        out[k, j] = w1
    return out


def _cluster_counts(g: Graph, part: Partition) -> list[list[int]]:
    if part.n != g.n:
        raise InputError(f"partition covers {part.n} vertices, graph has {g.n}")
    labels = part.cluster_of
    counts = []
    for v in range(g.n):
        row = [0] * part.p
        for a in g.neighbors(v):
            row[labels[a]] += 1
        counts.append(row)
    return counts


def _first_violation(g: Graph, part: Partition):
    counts = _cluster_counts(g, part)
    rep: dict[int, int] = {}
    for v, c in enumerate(part.cluster_of):
        r = rep.setdefault(c, v)
        if counts[v] != counts[r]:
            k = next(k for k in range(part.p) if counts[v][k] != counts[r][k])
            return counts, (r, v, k)
    return counts, None


def is_equitable(g: Graph, part: Partition) -> bool:
    """True iff vertices sharing a cluster have equal neighbor counts into every cluster."""
    return _first_violation(g, part)[1] is None


def extract_quotient(g: Graph, part: Partition) -> QuotientGraph:
    """Compress ``g`` along an equitable ``part``.

    Raises
    ------
    DomainError
        If ``part`` is not equitable; the message names two vertices of one
        cluster and the cluster their neighbor counts disagree on.
    """
    counts, bad = _first_violation(g, part)
    if bad is not None:
        a, b, k = bad
        raise DomainError(
            f"partition is not equitable: vertices {a} and {b} (cluster "
            f"{part[a]}) have {counts[a][k]} vs {counts[b][k]} neighbors in cluster {k}"
        )
    rep = [0] * part.p
    for v in reversed(range(g.n)):
        rep[part[v]] = v
    qm = [counts[rep[i]] for i in range(part.p)]
    loops = tuple(qm[i][i] for i in range(part.p))
    weights = {
        (j, k): (qm[j][k], qm[k][j])
        for j in range(part.p)
        for k in range(j + 1, part.p)
        if qm[j][k]
    }
    return QuotientGraph(part.p, loops, weights)


def refine_colors(adj: Sequence[Sequence[int]], colors: Sequence[int]) -> list[int]:
    """Equitable refinement of a vertex coloring.

    Colors are ranks ``0..c-1``. Each round a vertex's new color is the rank
    of ``(old color, sorted neighbor colors)``, so cell order is inherited
    from the input and the result commutes with any relabeling that preserves
    the input colors. Stops at the first round that splits nothing.
    """
    n = len(colors)
    cur = list(colors)
    ncolors = len(set(cur))
    while True:
        sigs = [(cur[v], tuple(sorted(cur[u] for u in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        cur, ncolors = new, len(rank)


def coarsest_equitable(g: Graph) -> Partition:
    """The minimal balanced coloring of ``g`` (its coarsest equitable partition).

    Clusters are numbered by their smallest vertex.
    """
    if g.n == 0:
        return Partition([])
    colors = refine_colors(g.adjacency(), [0] * g.n)
    return Partition(colors).canonical()


# text format ---------------------------------------------------------------

def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_quotient(text: str) -> QuotientGraph:
    """Read the line-oriented quotient format (1-indexed clusters, ``#`` comments).

    ::

        quotient 3
        self 1 1
        self 2 2
        edge 1 2 2 1
        edge 1 3 1 2
    """
    p = None
    loops: list[int] = []
    seen_self: set[int] = set()
    weights: dict[tuple[int, int], tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        kw, args = tokens[0], tokens[1:]
        if p is None:
            if kw != "quotient" or len(args) != 1:
                raise ParseError("first statement must be 'quotient <p>'", lineno)
            (p,) = _ints(args, lineno)
            if p < 1:
                raise ParseError(f"cluster count must be positive, got {p}", lineno)
            loops = [0] * p
            continue
        if kw == "self":
            if len(args) != 2:
                raise ParseError("expected 'self <i> <d>'", lineno)
            i, d = _ints(args, lineno)
            if not 1 <= i <= p:
                raise ParseError(f"cluster {i} outside [1, {p}]", lineno)
            if d < 0:
                raise ParseError(f"self-loop count must be nonnegative, got {d}", lineno)
            if i in seen_self:
                raise ParseError(f"duplicate self declaration for cluster {i}", lineno)
            seen_self.add(i)
            loops[i - 1] = d
        elif kw == "edge":
            if len(args) != 4:
                raise ParseError("expected 'edge <j> <k> <w0> <w1>'", lineno)
            j, k, w0, w1 = _ints(args, lineno)
            for c in (j, k):
                if not 1 <= c <= p:
                    raise ParseError(f"cluster {c} outside [1, {p}]", lineno)
            if j == k:
                raise ParseError(f"edge {j} {k} joins a cluster to itself", lineno)
            if j > k:
                raise ParseError(f"edge endpoints must be increasing, got {j} {k}", lineno)
            if w0 < 1 or w1 < 1:
                raise ParseError(f"edge {j} {k} has a zero weight", lineno)
            if (j - 1, k - 1) in weights:
                raise ParseError(f"duplicate edge declaration {j} {k}", lineno)
            weights[(j - 1, k - 1)] = (w0, w1)
        elif kw == "quotient":
            raise ParseError("repeated 'quotient' header", lineno)
        else:
            raise ParseError(f"unknown statement {kw!r}", lineno)
    if p is None:
        raise ParseError("missing 'quotient <p>' header")
    return QuotientGraph(p, tuple(loops), weights)


def serialize_quotient(q: QuotientGraph) -> str:
    lines = [f"quotient {q.p}"]
    lines += [f"self {i + 1} {d}" for i, d in enumerate(q.self_loops) if d]
    lines += [f"edge {j + 1} {k + 1} {w0} {w1}" for (j, k), (w0, w1) in q.weights.items()]
    return "\n".join(lines) + "\n"
