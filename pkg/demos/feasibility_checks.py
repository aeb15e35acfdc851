"""Which quotients can be realized, and what happens when one cannot.

Run: python3 demos/feasibility_checks.py
"""
from symgraph import QuotientGraph, build_system, is_feasible
from symgraph.feasibility import check_erdos_gallai, check_gale_ryser

# two clusters: each vertex of cluster 1 sees 2 of cluster 2, each of cluster 2 sees 3 of cluster 1
ok = QuotientGraph(2, (0, 1), {(0, 1): (2, 3)})
res = is_feasible(build_system(ok))
print("two-cluster quotient feasible:", bool(res), "ratio", res.certificate)

# a triangle of clusters whose size ratios multiply to 1/8 around the cycle
bad = QuotientGraph(3, (0, 0, 0), {(0, 1): (2, 1), (1, 2): (2, 1), (0, 2): (1, 2)})
res = is_feasible(build_system(bad))
print("triangle quotient feasible:", bool(res))
print("  inconsistent cycle (1-indexed):", " ".join(f"{j + 1}-{k + 1}" for j, k in res.witness))

# degree-sequence tests used as oracles for the closed forms
print("(3,3,3) graphic:", check_erdos_gallai((3, 3, 3)))
print("(3,3,3,3) graphic:", check_erdos_gallai((3, 3, 3, 3)))
print("(2,2,2) vs (3,3) bigraphic:", check_gale_ryser((2, 2, 2), (3, 3)))
