"""Minimal cluster sizes for a feasible quotient.

The integer program ``min c.x  s.t.  A x = 0, x >= x_lower`` is solved in
closed form. On each connected component of the cluster graph the rational
null space of ``A`` is a single ray spanned by the primitive certificate
``v``, so the integer feasible points are exactly ``t * v`` for positive
integers ``t``. The smallest admissible ``t`` is
``max_i ceil(x_lower[i] / v[i])``, and it minimizes ``c.x`` for every
strictly positive ``c``.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InputError
from .feasibility import FeasibilitySystem, is_feasible

__all__ = ["CardinalitySolution", "solve_minimal", "scale", "exact_rank"]


@dataclass(frozen=True)
class CardinalitySolution:
    x: tuple[int, ...]
    n: tuple[int, ...]
    s: int
    odd: tuple[bool, ...]

    @property
    def total_n(self) -> int:
        return sum(self.n)


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-exact elimination."""
    m = [[Fraction(a) for a in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][col] / m[rank][col]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def solve_minimal(sys: FeasibilitySystem, cost: Sequence | None = None) -> CardinalitySolution:
    """Smallest integer cluster sizes satisfying the system.

    ``cost`` must be strictly positive when given. It is accepted for
    completeness but cannot change the minimizer, see the module docstring.

    Raises
    ------
    DomainError
        If the system is infeasible, or if a component's null space is not
        one-dimensional.
    """
    if cost is not None:
        cost = [Fraction(c) for c in cost]
        if len(cost) != sys.p or any(c <= 0 for c in cost):
            raise InputError("cost must be a strictly positive vector of length p")
    res = is_feasible(sys)
    if not res:
        pairs = ", ".join(f"({j + 1},{k + 1})" for j, k in res.witness)
        raise DomainError(f"quotient is infeasible; inconsistent cycle through pairs {pairs}")
    v = res.certificate
    x = [0] * sys.p
    for comp in res.components:
        rows = [r for r in sys.rows if any(r[c] for c in comp)]
        if rows and exact_rank([[r[c] for c in comp] for r in rows]) != len(comp) - 1:
            raise DomainError(f"component {[c + 1 for c in comp]} has a null space of dimension != 1")
        t = max(-(-sys.x_lower[c] // v[c]) for c in comp)
        for c in comp:
            x[c] = t * v[c]
    n = tuple(2 * xi if o else xi for xi, o in zip(x, sys.odd))
    return CardinalitySolution(tuple(x), n, 1, sys.odd)


def scale(sol: CardinalitySolution, s: int) -> CardinalitySolution:
    """Multiply every cluster size by the integer ``s >= 1``."""
    if int(s) != s or s < 1:
        raise InputError(f"scale factor must be a positive integer, got {s}")
    s = int(s)
    return CardinalitySolution(sol.x, tuple(s * ni for ni in sol.n), sol.s * s, sol.odd)
