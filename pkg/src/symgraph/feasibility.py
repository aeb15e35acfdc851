"""Feasibility of a quotient graph.

The balance constraints ``Q[j,k] n_j = Q[k,j] n_k`` on cluster sizes become an
integer system ``A x = 0`` with one row per linked cluster pair. Every row has
exactly one positive and one negative entry, so the system is a set of ratio
constraints along the edges of the cluster graph; it is solved exactly by
propagating ratios over a spanning forest. All arithmetic is integer or
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .quotient import QuotientGraph, q_matrix

__all__ = [
    "FeasibilitySystem",
    "FeasibilityResult",
    "build_system",
    "is_feasible",
    "check_erdos_gallai",
    "check_gale_ryser",
    "regular_realizable",
    "biregular_realizable",
]


@dataclass(frozen=True)
class FeasibilitySystem:
    """``A x = 0`` with ``x >= x_lower``.

    ``odd[i]`` marks clusters whose self-loop count is odd; for those the
    cluster size is ``2 * x[i]``, otherwise ``x[i]``.
    """

    rows: tuple[tuple[int, ...], ...]
    x_lower: tuple[int, ...]
    odd: tuple[bool, ...]

    def __post_init__(self):
        p = len(self.x_lower)
        rows = tuple(tuple(int(a) for a in r) for r in self.rows)
        for i, r in enumerate(rows):
            if len(r) != p:
                raise InputError(f"row {i} has {len(r)} entries, expected {p}")
            pos = [a for a in r if a > 0]
            neg = [a for a in r if a < 0]
            if len(pos) != 1 or len(neg) != 1:
                raise InputError(f"row {i} must have one positive and one negative entry: {r}")
        if any(int(x) < 1 for x in self.x_lower):
            raise InputError("lower bounds must be positive")
        if len(self.odd) != p:
            raise InputError("parity flags must match the number of clusters")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "x_lower", tuple(int(x) for x in self.x_lower))
        object.__setattr__(self, "odd", tuple(bool(b) for b in self.odd))

    @classmethod
    def from_rows(cls, rows, x_lower=None) -> "FeasibilitySystem":
        rows = [list(r) for r in rows]
        p = len(rows[0]) if rows else len(x_lower or ())
        return cls(tuple(map(tuple, rows)), tuple(x_lower or [1] * p), (False,) * p)

    @property
    def p(self) -> int:
        return len(self.x_lower)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        """The cluster pair ``(j, k)``, ``j < k``, constrained by each row."""
        out = []
        for r in self.rows:
            j, k = (c for c, a in enumerate(r) if a)
            out.append((j, k))
        return out

    def residual(self, x: Sequence[int]) -> list[int]:
        return [sum(a * xi for a, xi in zip(r, x)) for r in self.rows]


def build_system(q: QuotientGraph) -> FeasibilitySystem:
    qm = q_matrix(q)
    odd = tuple(bool(d % 2) for d in q.self_loops)
    mult = [2 if o else 1 for o in odd]
    rows = []
    for j, k in q.pair_edges:
        row = [0] * q.p
        row[j] = mult[j] * int(qm[j, k])
        row[k] = -mult[k] * int(qm[k, j])
        rows.append(tuple(row))
    x_lower = []
    for i in range(q.p):
        # each cluster must host every neighbor count pointing into it
        bound = max([int(qm[j, i]) for j in range(q.p) if j != i] + [q.self_loops[i] + 1])
        x_lower.append(-(-bound // 2) if odd[i] else bound)
    return FeasibilitySystem(tuple(rows), tuple(x_lower), odd)


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of :func:`is_feasible`.

    On success ``certificate`` is a strictly positive integer null vector of
    ``A`` that is primitive (gcd 1) on each connected component of the
    cluster graph. On failure ``witness`` lists the cluster pairs of a cycle
    whose ratio constraints are inconsistent.
    """

    feasible: bool
    certificate: tuple[int, ...] | None
    witness: tuple[tuple[int, int], ...] | None
    components: tuple[tuple[int, ...], ...]

    def __bool__(self):
        return self.feasible


def _row_ends(row):
    a = next(c for c, v in enumerate(row) if v > 0)
    b = next(c for c, v in enumerate(row) if v < 0)
    return a, b


def is_feasible(sys: FeasibilitySystem) -> FeasibilityResult:
    """Decide whether ``A x = 0`` has a strictly positive solution."""
    p = sys.p
    incident: list[list[int]] = [[] for _ in range(p)]
    for r, row in enumerate(sys.rows):
        a, b = _row_ends(row)
        incident[a].append(r)
        incident[b].append(r)

    value: list[Fraction | None] = [None] * p
    parent_row: list[int | None] = [None] * p
    depth = [0] * p
    comp_of = [-1] * p
    components: list[list[int]] = []
    tree_rows: set[int] = set()

    for root in range(p):
        if value[root] is not None:
            continue
        comp = [root]
        comp_of[root] = len(components)
        value[root] = Fraction(1)
        queue = deque([root])
        while queue:
            c = queue.popleft()
            for r in incident[c]:
                a, b = _row_ends(sys.rows[r])
                other = b if c == a else a
                if value[other] is not None:
                    continue
                # row[a] x_a + row[b] x_b = 0
                if other == b:
                    value[b] = value[a] * sys.rows[r][a] / -sys.rows[r][b]
                else:
                    value[a] = value[b] * -sys.rows[r][b] / sys.rows[r][a]
                parent_row[other] = r
                depth[other] = depth[c] + 1
                comp_of[other] = len(components)
                tree_rows.add(r)
                comp.append(other)
                queue.append(other)
        components.append(sorted(comp))

    for r, row in enumerate(sys.rows):
        if r in tree_rows:
            continue
        a, b = _row_ends(row)
        if row[a] * value[a] + row[b] * value[b] != 0:
            cycle = _tree_path(sys, parent_row, depth, a, b) + [r]
            witness = tuple(sorted({sys.pairs[i] for i in cycle}))
            return FeasibilityResult(False, None, witness, tuple(map(tuple, components)))

    x = [0] * p
    for comp in components:
        scale = math.lcm(*(value[c].denominator for c in comp))
        ints = [int(value[c] * scale) for c in comp]
        g = math.gcd(*ints)
        for c, v in zip(comp, ints):
            x[c] = v // g
    return FeasibilityResult(True, tuple(x), None, tuple(map(tuple, components)))


def _tree_path(sys, parent_row, depth, a, b):
    """Rows on the spanning-tree path between clusters ``a`` and ``b``."""
    rows_a, rows_b = [], []

    def up(c):
        r = parent_row[c]
        x, y = _row_ends(sys.rows[r])
        return r, (y if c == x else x)

    while depth[a] > depth[b]:
        r, a = up(a)
        rows_a.append(r)
    while depth[b] > depth[a]:
        r, b = up(b)
        rows_b.append(r)
    while a != b:
        r, a = up(a)
        rows_a.append(r)
        r, b = up(b)
        rows_b.append(r)
    return rows_a + rows_b[::-1]


# degree-sequence realizability --------------------------------------------

def _check_sequence(seq, name):
    seq = [int(a) for a in seq]
    if any(a < 0 for a in seq):
        raise InputError(f"{name} has a negative entry")
    if any(x < y for x, y in zip(seq, seq[1:])):
        raise InputError(f"{name} must be non-increasing")
    return seq


def check_erdos_gallai(seq: Sequence[int]) -> bool:
    """Is ``seq`` the degree sequence of a simple graph?"""
    a = _check_sequence(seq, "sequence")
    if sum(a) % 2:
        return False
    n = len(a)
    head = 0
    for k in range(1, n + 1):
        head += a[k - 1]
        tail = sum(min(x, k) for x in a[k:])
        if head > k * (k - 1) + tail:
            return False
    return True


def check_gale_ryser(a: Sequence[int], b: Sequence[int]) -> bool:
    """Are ``a`` and ``b`` the side degree sequences of a simple bipartite graph?"""
    a = _check_sequence(a, "first sequence")
    b = _check_sequence(b, "second sequence")
    if sum(a) != sum(b):
        return False
    head = 0
    for k in range(1, len(a) + 1):
        head += a[k - 1]
        if head > sum(min(x, k) for x in b):
            return False
    return True


def regular_realizable(r: int, n: int) -> bool:
    """Closed form for the constant sequence ``(r,)*n``, ``n >= 1``."""
    return n >= r + 1 and (r * n) % 2 == 0


def biregular_realizable(r1: int, n1: int, r2: int, n2: int) -> bool:
    """Closed form for ``(r1,)*n1`` against ``(r2,)*n2``, both lengths positive."""
    return r1 <= n2 and r2 <= n1 and r1 * n1 == r2 * n2
