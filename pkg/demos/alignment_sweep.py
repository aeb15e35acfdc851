"""Alignment of orbits with the coarsest equitable partition as graphs grow.

Scaling a quotient's minimal sizes gives more room for randomized swaps, and
symmetry disappears quickly. Writes sweep.csv next to the working directory.

Run: python3 demos/alignment_sweep.py [trials]
"""
import sys

from symgraph import QuotientGraph
from symgraph.metrics import summarize, sweep, write_records_csv

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 50
q = QuotientGraph(2, (0, 1), {(0, 1): (2, 3)})
records = sweep(q, [1, 2, 4, 6, 8], trials=trials, seed=7, workers=2)
with open("sweep.csv", "w", newline="") as fh:
    write_records_csv(records, fh)

print(" s   mean f   std f")
for s, mean, std, _ in summarize(records):
    bar = "#" * round(40 * mean)
    print(f"{s:2d}   {mean:.3f}    {std:.3f}  {bar}")
