import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from symgraph.cardinality import CardinalitySolution, scale, solve_minimal
from symgraph.errors import DomainError
from symgraph.feasibility import build_system
from symgraph.fixtures import random_feasible_quotient, three_cluster_worked, two_cluster_bipartite
from symgraph.graph import Graph, is_automorphism
from symgraph.quotient import QuotientGraph, extract_quotient
from symgraph.rng import stream
from symgraph.wiring import (
    balanced_composition,
    cluster_rotation,
    generate,
    make_plan,
    random_composition,
    wire_inter,
    wire_inter_dual,
    wire_intra,
)


def test_wire_intra_examples():
    assert wire_intra(4, 1) == {(0, 2), (1, 3)}
    assert wire_intra(8, 2) == {(i, (i + 1) % 8) if i < 7 else (0, 7) for i in range(8)}
    assert wire_intra(5, 0) == set()


@pytest.mark.parametrize("n, d", [(3, 3), (5, 1), (2, 2), (4, -1)])
def test_wire_intra_guards(n, d):
    with pytest.raises(DomainError):
        wire_intra(n, d)


def test_wire_intra_regular_and_symmetric():
    for n in range(1, 21):
        for d in range(0, n):
            if d % 2 and n % 2:
                continue
            edges = wire_intra(n, d)
            deg = Counter(v for e in edges for v in e)
            assert all(deg[v] == d for v in range(n))
            assert len(edges) == n * d // 2
            shifted = {tuple(sorted(((a + 1) % n, (b + 1) % n))) for a, b in edges}
            assert shifted == edges


def test_make_plan_examples():
    p = make_plan(4, 8, 2, 1)
    assert (p.h, p.d_k, p.d_l, p.m, p.b) == (4, 1, 2, 1, (4,))
    p = make_plan(3, 2, 2, 3)
    assert (p.h, p.d_k, p.d_l, p.m, p.b) == (1, 3, 2, 1, (1,))
    p = make_plan(5, 5, 5, 5)
    assert (p.m, p.b) == (5, (1, 1, 1, 1, 1))


@pytest.mark.parametrize("args", [(4, 8, 1, 1), (3, 2, 3, 3), (0, 2, 1, 1), (2, 2, 3, 3)])
def test_make_plan_guards(args):
    with pytest.raises(DomainError):
        make_plan(*args)


def test_worked_pair_edges():
    plan = make_plan(4, 8, 2, 1)
    edges = wire_inter(plan)
    assert len(edges) == 8
    assert {w for u, w in edges if u == 0} == {0, 4}
    assert edges == wire_inter_dual(plan)


def test_compositions():
    assert balanced_composition(7, 3) == (3, 2, 2)
    rng = stream(0, "test")
    seen = Counter(random_composition(5, 3, rng) for _ in range(3000))
    assert len(seen) == math.comb(4, 2)
    assert all(sum(c) == 5 and min(c) >= 1 for c in seen)
    assert min(seen.values()) > 3000 / 6 * 0.8


@given(st.integers(1, 12), st.integers(1, 12), st.data())
def test_inter_degrees(n_k, n_l, data):
    h = math.gcd(n_k, n_l)
    m = data.draw(st.integers(1, h))
    q_lk, q_kl = m * (n_k // h), m * (n_l // h)
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32)))
    plan = make_plan(n_k, n_l, q_kl, q_lk, rng)
    edges = wire_inter(plan)
    assert len(edges) == n_k * q_kl
    assert Counter(u for u, _ in edges) == {u: q_kl for u in range(n_k)}
    assert Counter(w for _, w in edges) == {w: q_lk for w in range(n_l)}
    assert edges == wire_inter_dual(plan)


def test_generate_worked():
    q = three_cluster_worked()
    sol = scale(solve_minimal(build_system(q)), 2)
    g, part = generate(q, sol)
    assert g.n == 14 and len(g.edges) == 22
    counts = {tag: len(es) for tag, es in g.edges_by_tag().items()}
    assert counts == {("self", 0): 2, ("self", 1): 8, ("edge", 0, 1): 8, ("edge", 0, 2): 4}
    assert part.sizes == (4, 8, 2)
    assert extract_quotient(g, part) == q
    assert is_automorphism(g, cluster_rotation(sol.n))


def test_generate_empty_and_two_cluster():
    g, part = generate(QuotientGraph(1, (0,)), CardinalitySolution((5,), (5,), 1, (False,)))
    assert g == Graph(5)
    q = two_cluster_bipartite()
    g, part = generate(q, solve_minimal(build_system(q)))
    assert sorted(g.edges) == [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_generate_realizes_random_quotients():
    rng = np.random.default_rng(3)
    for i in range(300):
        q = random_feasible_quotient(rng)
        sol = scale(solve_minimal(build_system(q)), int(rng.integers(1, 4)))
        b_seed = i if i % 2 else None
        g, part = generate(q, sol, b_seed=b_seed)
        assert extract_quotient(g, part) == q
        assert g.has_provenance
        if b_seed is None:
            assert is_automorphism(g, cluster_rotation(sol.n))
