"""Orbits of the automorphism group.

:func:`orbits` is an individualization-refinement backtracking search.
Colorings are ordered partitions refined by neighbor counts into queued
splitter cells; refining the unit partition gives the coarsest equitable
partition, which every automorphism preserves. The first path individualizes
the first vertex of the first non-singleton cell until the partition is
discrete. Walking back up, at every level it tries each other vertex of that
cell, skipping vertices already known to share an orbit with the path vertex
or with a vertex that failed. A candidate is pruned when its refinement
trace differs from the first path's; otherwise the cell-by-cell position map
is tried directly, and failing that the subtree is searched for a leaf
equivalent to the first leaf. Inside a subtree, leaves are also compared
with the subtree's own first leaf, and siblings equivalent under the
automorphisms found so far are skipped. Every automorphism found at a level
fixes the path prefix above it, so the collected generators generate each
point stabilizer along the path and, at the root, the whole group.

:func:`orbits_bruteforce` enumerates all ``n!`` permutations and is only
meant as a test oracle for ``n <= 8``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputError, SearchBudgetExceeded
from .graph import Graph, Partition, Permutation, is_automorphism
from .quotient import is_equitable

__all__ = [
    "OrbitPartition",
    "orbits",
    "orbits_bruteforce",
    "orbit_partition_is_equitable",
    "orbits_from_generators",
    "verify_generators",
]

BRUTEFORCE_MAX_N = 8
DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class OrbitPartition:
    partition: Partition
    generators: tuple[Permutation, ...]

    @property
    def size(self) -> int:
        return self.partition.p

    @property
    def orbit_sizes(self) -> list[int]:
        return sorted(self.partition.sizes, reverse=True)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def partition(self):
        return Partition.from_labels(self.find(v) for v in range(len(self.parent)))


def orbits_from_generators(n: int, generators) -> Partition:
    """Orbits of the group generated by ``generators``, by smallest member."""
    uf = _UnionFind(n)
    for gen in generators:
        for v, w in enumerate(gen.image):
            uf.union(v, w)
    return uf.partition() if n else Partition([])


@lru_cache(maxsize=BRUTEFORCE_MAX_N + 1)
def _all_permutations(n):
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def orbits_bruteforce(g: Graph) -> OrbitPartition:
    """Exhaustive oracle; lists every non-identity automorphism as a generator."""
    if g.n > BRUTEFORCE_MAX_N:
        raise InputError(f"brute-force orbits refuse n={g.n} > {BRUTEFORCE_MAX_N}")
    if g.n == 0:
        return OrbitPartition(Partition([]), ())
    a = g.adjacency_matrix()
    perms = _all_permutations(g.n)
    permuted = a[perms[:, :, None], perms[:, None, :]]
    ok = (permuted == a).all(axis=(1, 2))
    gens = tuple(Permutation(p) for p in perms[ok] if not (p == np.arange(g.n)).all())
    return OrbitPartition(orbits_from_generators(g.n, gens), gens)


class _Cells:
    """Ordered partition: cells are runs of ``order`` named by their start index.

    Cell names depend only on positions, never on vertex labels, so two
    colorings related by an automorphism get identical cell structure.
    """

    __slots__ = ("order", "start", "size")

    def __init__(self, order, start, size):
        self.order = order
        self.start = start
        self.size = size

    @classmethod
    def unit(cls, n):
        size = [0] * n
        size[0] = n
        return cls(list(range(n)), [0] * n, size)

    def copy(self):
        return _Cells(self.order[:], self.start[:], self.size[:])

    def target(self, lo=0):
        """Start of the first non-singleton cell at or after ``lo``, or None.

        Cells only ever split, so a parent's target is a valid ``lo``.
        """
        size = self.size
        i, n = lo, len(size)
        while i < n:
            if size[i] > 1:
                return i
            i += size[i]
        return None

    def members(self, c):
        return self.order[c : c + self.size[c]]

    def individualize(self, v):
        """Copy with ``v`` split off to the front of its cell."""
        out = self.copy()
        c = out.start[v]
        order, start, size = out.order, out.start, out.size
        i = order.index(v, c)
        order[c], order[i] = order[i], order[c]
        for u in order[c + 1 : c + size[c]]:
            start[u] = c + 1
        size[c + 1] = size[c] - 1
        size[c] = 1
        return out, c


def _refine(adj, cells, queue):
    """Refine ``cells`` in place to the coarsest equitable refinement.

    Splitting by neighbor counts into queued splitter cells, fragments
    ordered by count. Returns a trace of every split, an invariant of the
    (graph, ordered partition) pair up to relabeling.
    """
    order, start, size = cells.order, cells.start, cells.size
    queue = deque(queue)
    queued = set(queue)
    trace = []
    while queue:
        w = queue.popleft()
        queued.discard(w)
        count: dict[int, int] = {}
        for x in order[w : w + size[w]]:
            for u in adj[x]:
                count[u] = count.get(u, 0) + 1
        for c in sorted({start[u] for u in count}):
            sz = size[c]
            if sz == 1:
                continue
            groups: dict[int, list[int]] = {}
            for v in order[c : c + sz]:
                groups.setdefault(count.get(v, 0), []).append(v)
            if len(groups) == 1:
                continue
            keys = sorted(groups)
            trace.append((w, c, tuple((k, len(groups[k])) for k in keys)))
            pos = c
            frags = []
            for k in keys:
                grp = groups[k]
                order[pos : pos + len(grp)] = grp
                for v in grp:
                    start[v] = pos
                size[pos] = len(grp)
                frags.append(pos)
                pos += len(grp)
            if c in queued:
                new = frags[1:]
            else:
                # the largest fragment's counts follow from the others
                big = max(frags, key=size.__getitem__)
                new = [f for f in frags if f != big]
            for f in new:
                queue.append(f)
                queued.add(f)
    return tuple(trace)


def orbits(g: Graph, budget: int = DEFAULT_BUDGET) -> OrbitPartition:
    """Automorphism orbits of ``g`` with a generating set of the group.

    Raises
    ------
    SearchBudgetExceeded
        If more than ``budget`` search nodes are refined.
    """
    n = g.n
    if n == 0:
        return OrbitPartition(Partition([]), ())
    adj = g.adjacency()
    edges = g.edges
    expanded = 0

    def tick():
        nonlocal expanded
        expanded += 1
        if expanded > budget:
            raise SearchBudgetExceeded(f"automorphism search exceeded {budget} nodes (n={n})")

    cells = _Cells.unit(n)
    _refine(adj, cells, [0])
    path = []  # (cells, target cell start) per level
    traces = [()]
    t = 0
    while (t := cells.target(t)) is not None:
        path.append((cells, t))
        tick()
        cells, c = cells.individualize(cells.order[t])
        traces.append(_refine(adj, cells, [c]))
    nodes = [node for node, _ in path] + [cells]

    def positional_map(ref, node):
        # position i of ``ref`` goes to position i of ``node``; kept only if it preserves edges
        img = [0] * n
        for v, w in zip(ref.order, node.order):
            img[v] = w
        if all(((img[u], img[v]) if img[u] < img[v] else (img[v], img[u])) in edges for u, v in edges):
            return Permutation(img)
        return None

    generators: list[Permutation] = []
    uf = _UnionFind(n)

    def add_generator(gen):
        generators.append(gen)
        for v, x in enumerate(gen.image):
            uf.union(v, x)

    def stabilizer_orbits(seq):
        """Orbits of the known generators that fix every vertex of ``seq``."""
        sub = _UnionFind(n)
        for gen in generators:
            img = gen.image
            if all(img[v] == v for v in seq):
                for v, x in enumerate(img):
                    sub.union(v, x)
        return sub

    def search(root, level, lo, seq):
        """Depth-first search below ``root`` for a leaf equivalent to the first leaf.

        Leaves that fail are compared with the first leaf of this subtree; any
        automorphism found that way is kept and prunes later siblings whose
        subtrees are images of ones already searched.
        """
        t = root.target(lo)
        if t is None:
            return positional_map(nodes[-1], root)
        sub_leaf = None
        # frame: node, level, target, fixed vertices, candidates, next index, tried, (gen count, orbits)
        stack = [[root, level, t, seq, root.members(t), 0, [], None]]
        while stack:
            frame = stack[-1]
            node, lvl, t, fixed, cands, idx, tried, cache = frame
            if idx == len(cands):
                stack.pop()
                continue
            x = cands[idx]
            frame[5] = idx + 1
            if tried:
                if cache is None or cache[0] != len(generators):
                    cache = frame[7] = (len(generators), stabilizer_orbits(fixed))
                sub = cache[1]
                if any(sub.find(x) == sub.find(y) for y in tried):
                    continue
            tried.append(x)
            tick()
            child, c = node.individualize(x)
            if _refine(adj, child, [c]) != traces[lvl + 1]:
                continue
            t2 = child.target(t)
            if t2 is not None:
                stack.append([child, lvl + 1, t2, fixed + [x], child.members(t2), 0, [], None])
                continue
            found = positional_map(nodes[-1], child)
            if found is not None:
                return found
            if sub_leaf is None:
                sub_leaf = child
            elif (extra := positional_map(sub_leaf, child)) is not None:
                add_generator(extra)
        return None

    path_vertices = [node.order[t] for node, t in path]
    for level in range(len(path) - 1, -1, -1):
        node, t = path[level]
        cell = node.members(t)
        v0 = cell[0]
        failed: list[int] = []
        for w in cell[1:]:
            if uf.find(w) == uf.find(v0) or any(uf.find(w) == uf.find(f) for f in failed):
                continue
            tick()
            child, c = node.individualize(w)
            gen = None
            if _refine(adj, child, [c]) == traces[level + 1]:
                # cheap attempt first: match the first path's node cell by cell
                gen = positional_map(nodes[level + 1], child) or search(
                    child, level + 1, t, path_vertices[:level] + [w]
                )
            if gen is None:
                failed.append(w)
                continue
            add_generator(gen)

    return OrbitPartition(orbits_from_generators(n, generators), tuple(generators))


def orbit_partition_is_equitable(g: Graph, o: OrbitPartition | Partition) -> bool:
    part = o.partition if isinstance(o, OrbitPartition) else o
    return is_equitable(g, part)


def verify_generators(g: Graph, o: OrbitPartition) -> bool:
    """Every generator is an automorphism and the orbits are their closure."""
    return all(is_automorphism(g, p) for p in o.generators) and o.partition == orbits_from_generators(
        g.n, o.generators
    )
