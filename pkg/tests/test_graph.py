import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symgraph.errors import InputError
from symgraph.graph import Graph, Partition, Permutation, degree_to_cluster, is_automorphism

from conftest import cycle, path, random_graph


def test_rejects_self_loops_duplicates_and_range():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_edges_are_canonical_and_provenance_ignored_in_equality():
    a = Graph(3, [(2, 0), (1, 2)], {(0, 2): ("self", 0)})
    b = Graph(3, [(0, 2), (2, 1)])
    assert a.edges == {(0, 2), (1, 2)}
    assert a == b and hash(a) == hash(b)
    assert a.provenance[(0, 2)] == ("self", 0)


def test_partition_validation():
    with pytest.raises(InputError):
        Partition([0, 2, 2])
    part = Partition.from_blocks([[0, 2], [1]])
    assert part.cluster_of == (0, 1, 0)
    assert part.sizes == (2, 1)
    with pytest.raises(InputError):
        Partition.from_blocks([[0, 1], [1]])


def test_refines():
    fine = Partition([0, 1, 2, 3])
    coarse = Partition([0, 0, 1, 1])
    assert fine.refines(coarse)
    assert not coarse.refines(fine)
    assert coarse.refines(coarse)


@pytest.mark.parametrize(
    "g, v, part, k, expected",
    [
        (cycle(4), 0, Partition.trivial(4), 0, 2),
        (Graph(3), 1, Partition([0, 1, 1]), 1, 0),
        (Graph(3), 0, Partition([0, 1, 1]), 0, 0),
    ],
)
def test_degree_to_cluster(g, v, part, k, expected):
    assert degree_to_cluster(g, v, part, k) == expected


def test_degree_to_cluster_checks_indices(c4):
    with pytest.raises(InputError):
        degree_to_cluster(c4, 4, Partition.trivial(4), 0)
    with pytest.raises(InputError):
        degree_to_cluster(c4, 0, Partition.trivial(4), 1)


def test_is_automorphism_examples(c4, p3):
    assert is_automorphism(c4, Permutation.identity(4))
    assert is_automorphism(c4, Permutation([1, 2, 3, 0]))
    # swapping 0 and 1 sends (1, 2) to (0, 2), which is not an edge
    assert not is_automorphism(p3, Permutation([1, 0, 2]))
    assert is_automorphism(p3, Permutation([2, 1, 0]))
    with pytest.raises(InputError):
        is_automorphism(p3, Permutation.identity(4))


@given(st.integers(0, 10_000))
def test_adjacency_symmetric_and_degree_split(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    g = random_graph(rng, n, rng.random())
    a = g.adjacency_matrix()
    assert (a == a.T).all() and not a.diagonal().any()
    part = Partition.from_labels(rng.randrange(3) for _ in range(n))
    for v in range(n):
        assert sum(degree_to_cluster(g, v, part, k) for k in range(part.p)) == g.degree(v)


def test_automorphisms_closed_under_composition():
    # dihedral group of the hexagon, sampled products
    g = cycle(6)
    rot = Permutation([(i + 1) % 6 for i in range(6)])
    ref = Permutation([(-i) % 6 for i in range(6)])
    rng = random.Random(0)
    for _ in range(50):
        p = Permutation.identity(6)
        for _ in range(rng.randint(1, 6)):
            p = p * rng.choice([rot, ref])
        assert is_automorphism(g, p)
        assert is_automorphism(g, p.inverse())


def test_relabel_preserves_structure():
    g = path(4)
    perm = Permutation([3, 1, 0, 2])
    h = g.relabel(perm)
    assert sorted(h.degree(perm(v)) for v in range(4)) == sorted(g.degree(v) for v in range(4))
    assert h.relabel(perm.inverse()) == g
