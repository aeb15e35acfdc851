"""Core graph, partition and permutation types.

Vertices are the integers ``0..n-1`` and clusters ``0..p-1``. Edges are kept
in canonical ``(u, v)`` form with ``u < v``.

An edge may carry a provenance tag naming the quotient feature that created
it: ``("self", i)`` for the self-loop of cluster ``i`` or ``("edge", j, k)``
for the inter-cluster pair ``j < k``. Provenance is metadata only and never
takes part in equality.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from types import MappingProxyType

import numpy as np

from .errors import InputError

__all__ = [
    "Graph",
    "Partition",
    "Permutation",
    "canonical_edge",
    "degree_to_cluster",
    "is_automorphism",
]

Edge = tuple[int, int]
Tag = tuple


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _check_tag(tag):
    if tag is None:
        return None
    tag = tuple(tag)
    if tag[0] == "self" and len(tag) == 2 and tag[1] >= 0:
        return ("self", int(tag[1]))
    if tag[0] == "edge" and len(tag) == 3 and 0 <= tag[1] < tag[2]:
        return ("edge", int(tag[1]), int(tag[2]))
    raise InputError(f"invalid provenance tag {tag!r}")


class Graph:
    """Simple undirected unweighted graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Vertex count.
    edges : iterable of (int, int)
        Unordered vertex pairs. Self-loops, repeated pairs and out-of-range
        endpoints raise :class:`InputError`.
    provenance : mapping, optional
        Edge -> tag, see the module docstring. Keys may be given in either
        orientation.
    """

    __slots__ = ("_n", "_edges", "_provenance", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        provenance: Mapping[Edge, Tag] | None = None,
    ):
        n = int(n)
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            ce = canonical_edge(u, v)
            if ce in seen:
                raise InputError(f"duplicate edge {ce}")
            seen.add(ce)
        prov = {}
        if provenance:
            for e, tag in provenance.items():
                ce = canonical_edge(int(e[0]), int(e[1]))
                if ce not in seen:
                    raise InputError(f"provenance given for non-edge {ce}")
                tag = _check_tag(tag)
                if tag is not None:
                    prov[ce] = tag
        self._n = n
        self._edges = frozenset(seen)
        self._provenance = MappingProxyType(prov)
        self._adj = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def provenance(self) -> Mapping[Edge, Tag]:
        return self._provenance

    @property
    def has_provenance(self) -> bool:
        return len(self._provenance) == len(self._edges)

    def __len__(self):
        return self._n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __reduce__(self):
        return (Graph, (self._n, sorted(self._edges), dict(self._provenance)))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency()[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex (computed once)."""
        if self._adj is None:
            adj = [set() for _ in range(self._n)]
            for u, v in self._edges:
                adj[u].add(v)
                adj[v].add(u)
            self._adj = tuple(frozenset(s) for s in adj)
        return self._adj

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=np.int8)
        if self._edges:
            idx = np.array(sorted(self._edges))
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        return a

    def edges_by_tag(self) -> dict[Tag, list[Edge]]:
        """Group edges by provenance tag, each group sorted."""
        groups: dict[Tag, list[Edge]] = {}
        for e in sorted(self._edges):
            groups.setdefault(self._provenance.get(e), []).append(e)
        return groups

    def relabel(self, perm: "Permutation") -> "Graph":
        """The graph with vertex ``v`` renamed ``perm(v)``; provenance follows."""
        if perm.n != self._n:
            raise InputError(f"permutation size {perm.n} != graph size {self._n}")
        img = perm.image
        edges = [canonical_edge(img[u], img[v]) for u, v in self._edges]
        prov = {canonical_edge(img[u], img[v]): t for (u, v), t in self._provenance.items()}
        return Graph(self._n, edges, prov)


class Partition:
    """Assignment of every vertex to one of ``p`` nonempty clusters."""

    __slots__ = ("_cluster_of", "_p", "_sizes")

    def __init__(self, cluster_of: Sequence[int]):
        labels = tuple(int(c) for c in cluster_of)
        p = max(labels) + 1 if labels else 0
        sizes = [0] * p
        for c in labels:
            if c < 0:
                raise InputError(f"negative cluster index {c}")
            sizes[c] += 1
        empty = [k for k, s in enumerate(sizes) if s == 0]
        if empty:
            raise InputError(f"empty cluster(s) {empty}")
        self._cluster_of = labels
        self._p = p
        self._sizes = tuple(sizes)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "Partition":
        """Build from a list of vertex blocks; block order gives cluster order."""
        blocks = [list(b) for b in blocks]
        if n is None:
            n = sum(len(b) for b in blocks)
        labels = [-1] * n
        for k, block in enumerate(blocks):
            for v in block:
                if not 0 <= v < n:
                    raise InputError(f"vertex {v} outside [0, {n})")
                if labels[v] != -1:
                    raise InputError(f"vertex {v} appears in two clusters")
                labels[v] = k
        if -1 in labels:
            raise InputError(f"vertex {labels.index(-1)} is not covered")
        return cls(labels)

    @classmethod
    def from_labels(cls, labels: Iterable) -> "Partition":
        """Group vertices by arbitrary hashable labels, numbered by first appearance."""
        remap: dict = {}
        return cls([remap.setdefault(x, len(remap)) for x in labels])

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls([0] * n)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(range(n))

    @property
    def cluster_of(self) -> tuple[int, ...]:
        return self._cluster_of

    @property
    def n(self) -> int:
        return len(self._cluster_of)

    @property
    def p(self) -> int:
        return self._p

    @property
    def sizes(self) -> tuple[int, ...]:
        return self._sizes

    def __len__(self):
        return self._p

    def __getitem__(self, v):
        return self._cluster_of[v]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._cluster_of == other._cluster_of

    def __hash__(self):
        return hash(self._cluster_of)

    def __repr__(self):
        return f"Partition(p={self._p}, sizes={list(self._sizes)})"

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self._p)]
        for v, c in enumerate(self._cluster_of):
            out[c].append(v)
        return out

    def canonical(self) -> "Partition":
        """Same blocks, clusters renumbered by their smallest vertex."""
        return Partition.from_labels(self._cluster_of)

    def same_blocks(self, other: "Partition") -> bool:
        return self.canonical() == other.canonical()

    def refines(self, other: "Partition") -> bool:
        """True if every cluster of ``self`` lies inside one cluster of ``other``."""
        if self.n != other.n:
            raise InputError(f"partition sizes differ: {self.n} vs {other.n}")
        target: dict[int, int] = {}
        for mine, theirs in zip(self._cluster_of, other._cluster_of):
            if target.setdefault(mine, theirs) != theirs:
                return False
        return True


class Permutation:
    """Bijection of ``0..n-1``; ``image[v]`` is where ``v`` goes."""

    __slots__ = ("_image",)

    def __init__(self, image: Sequence[int]):
        img = tuple(int(x) for x in image)
        if sorted(img) != list(range(len(img))):
            raise InputError("image is not a permutation of 0..n-1")
        self._image = img

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(img)

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    @property
    def n(self) -> int:
        return len(self._image)

    def __call__(self, v: int) -> int:
        return self._image[v]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._image == other._image

    def __hash__(self):
        return hash(self._image)

    def __repr__(self):
        return f"Permutation({list(self._image)})"

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(v) == self(other(v))
        if self.n != other.n:
            raise InputError("cannot compose permutations of different sizes")
        return Permutation([self._image[x] for x in other._image])

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self._image):
            inv[w] = v
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self._image))


def degree_to_cluster(g: Graph, v: int, part: Partition, k: int) -> int:
    """Number of neighbors of ``v`` lying in cluster ``k``."""
    if part.n != g.n:
        raise InputError(f"partition covers {part.n} vertices, graph has {g.n}")
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} outside [0, {g.n})")
    if not 0 <= k < part.p:
        raise InputError(f"cluster {k} outside [0, {part.p})")
    labels = part.cluster_of
    return sum(1 for a in g.neighbors(v) if labels[a] == k)


def is_automorphism(g: Graph, perm: Permutation) -> bool:
    """True iff ``perm`` maps the edge set of ``g`` onto itself."""
    if perm.n != g.n:
        raise InputError(f"permutation size {perm.n} != graph size {g.n}")
    img = perm.image
    edges = g.edges
    # a bijection on vertices is injective on edges, so inclusion is enough
    return all(canonical_edge(img[u], img[v]) in edges for u, v in edges)
