"""Alignment between the minimal balanced coloring and the automorphism orbits.

``f = (n - |orbits|) / (n - |mbc|)`` is 1 when the two partitions have the
same number of cells and 0 when every orbit is a single vertex.
"""
from __future__ import annotations

import csv
import statistics
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .automorphism import orbits
from .cardinality import scale, solve_minimal
from .errors import DomainError
from .feasibility import build_system, is_feasible
from .graph import Graph
from .quotient import QuotientGraph, coarsest_equitable
from .rewire import randomize
from .rng import derive_seed
from .wiring import generate

__all__ = [
    "AlignmentRecord",
    "alignment_metric",
    "analyze",
    "sweep",
    "summarize",
    "write_records_csv",
    "write_summary_csv",
]


def alignment_metric(n: int, mbc_size: int, oag_size: int) -> Fraction:
    """Exact ``(n - oag_size) / (n - mbc_size)``; 1 by convention when ``n == mbc_size``."""
    if oag_size < mbc_size:
        raise DomainError(f"orbit count {oag_size} below MBC size {mbc_size}; orbits must refine the MBC")
    if oag_size > n:
        raise DomainError(f"orbit count {oag_size} exceeds vertex count {n}")
    if n == mbc_size:
        return Fraction(1)
    return Fraction(n - oag_size, n - mbc_size)


@dataclass(frozen=True)
class AlignmentRecord:
    s: int
    trial: int
    n: int
    mbc_size: int
    oag_size: int
    f: Fraction

    @property
    def degenerate(self) -> bool:
        return self.n == self.mbc_size


def analyze(g: Graph) -> tuple[int, int, Fraction]:
    """``(|mbc|, |orbits|, f)`` for one graph."""
    mbc = coarsest_equitable(g).p
    oag = orbits(g).size
    return mbc, oag, alignment_metric(g.n, mbc, oag)


def _trial(task):
    q, base, s, trial, seed, swaps_per_edge, b_random = task
    trial_seed = derive_seed(seed, "trial", s, trial)
    b_seed = derive_seed(seed, "b", s, trial) if b_random else None
    g, part = generate(q, scale(base, s), b_seed=b_seed)
    g = randomize(g, part, trial_seed, swaps_per_edge)
    mbc, oag, f = analyze(g)
    return AlignmentRecord(s, trial, g.n, mbc, oag, f)


def sweep(
    q: QuotientGraph,
    scales: Iterable[int],
    trials: int = 100,
    seed: int = 0,
    swaps_per_edge=10,
    b_random: bool = False,
    workers: int = 1,
) -> list[AlignmentRecord]:
    """Randomized realizations of ``q`` at each scale, one record per trial.

    Trial seeds depend only on ``(seed, s, trial)``, so the result does not
    depend on ``workers``. Records come back ordered by ``(s, trial)``.
    """
    sys = build_system(q)
    if not is_feasible(sys):
        raise DomainError("cannot sweep an infeasible quotient")
    base = solve_minimal(sys)
    tasks = [(q, base, int(s), t, seed, swaps_per_edge, b_random) for s in scales for t in range(trials)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_trial, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        records = [_trial(t) for t in tasks]
    return sorted(records, key=lambda r: (r.s, r.trial))


def summarize(records: Sequence[AlignmentRecord]) -> list[tuple[int, float, float, int]]:
    """``(s, mean f, population std of f, trials)`` per scale."""
    by_s: dict[int, list[float]] = {}
    for r in records:
        by_s.setdefault(r.s, []).append(float(r.f))
    return [(s, statistics.fmean(fs), statistics.pstdev(fs), len(fs)) for s, fs in sorted(by_s.items())]


def write_records_csv(records: Iterable[AlignmentRecord], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["s", "trial", "n", "mbc", "oag", "f"])
    for r in records:
        w.writerow([r.s, r.trial, r.n, r.mbc_size, r.oag_size, f"{float(r.f):.6f}"])


def write_summary_csv(summary, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["s", "mean_f", "std_f", "trials"])
    for s, mean, std, n in summary:
        w.writerow([s, f"{mean:.6f}", f"{std:.6f}", n])
