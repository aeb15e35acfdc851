"""Search randomized realizations for a graph with no symmetry at all.

Every vertex keeps its neighbor counts into every cluster, so the coarsest
equitable partition stays at two cells, yet the automorphism group can
collapse to the identity. The first seed that does so is printed.

Run: python3 demos/asymmetric_search.py
"""
from symgraph import QuotientGraph, build_system, generate, randomize, solve_minimal
from symgraph.graphio import write_edge_list
from symgraph.metrics import analyze

# eight vertices of degree 3 inside plus 1 outside; two hubs see 4 of the eight and each other
q = QuotientGraph(2, (3, 1), {(0, 1): (1, 4)})
sol = solve_minimal(build_system(q))
print("sizes:", sol.n)
g, part = generate(q, sol)

for seed in range(1, 50):
    h = randomize(g, part, seed)
    mbc, oag, f = analyze(h)
    print(f"seed {seed:2d}: mbc={mbc} orbits={oag} f={f}")
    if f == 0:
        print()
        print(write_edge_list(h, part), end="")
        break
