import random
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from symgraph.errors import DomainError, InputError, ParseError
from symgraph.fixtures import three_cluster_example, three_cluster_worked
from symgraph.graph import Graph, Partition
from symgraph.quotient import (
    QuotientGraph,
    coarsest_equitable,
    extract_quotient,
    is_equitable,
    parse_quotient,
    q_matrix,
    serialize_quotient,
)

from conftest import blocks, complete, cycle, path, random_graph, star


def test_q_matrix_examples():
    assert q_matrix(three_cluster_example()).tolist() == [[1, 1, 2], [2, 2, 0], [1, 0, 0]]
    assert q_matrix(three_cluster_worked()).tolist() == [[1, 2, 1], [1, 2, 0], [2, 0, 0]]
    assert q_matrix(QuotientGraph(1, (0,))).tolist() == [[0]]


def test_from_matrix_round_trip():
    q = three_cluster_worked()
    assert QuotientGraph.from_matrix(q_matrix(q)) == q
    with pytest.raises(DomainError):
        QuotientGraph.from_matrix([[0, 1], [0, 0]])


def test_quotient_invariants():
    with pytest.raises(InputError):
        QuotientGraph(2, (0, 0), {(1, 1): (1, 1)})
    with pytest.raises(InputError):
        QuotientGraph(2, (0, 0), {(0, 1): (0, 1)})
    with pytest.raises(InputError):
        QuotientGraph(2, (0, -1))


def test_is_equitable_examples():
    assert is_equitable(cycle(4), Partition.trivial(4))
    # path 0-1-2: ends see one middle vertex each, the middle sees two ends
    assert is_equitable(path(3), Partition([0, 1, 0]))
    assert not is_equitable(path(3), Partition.trivial(3))
    with pytest.raises(InputError):
        is_equitable(path(3), Partition.trivial(4))


def test_extract_quotient_examples():
    assert q_matrix(extract_quotient(complete(4), Partition.trivial(4))).tolist() == [[3]]
    # star: center sees 3 leaves, each leaf sees 1 center
    assert q_matrix(extract_quotient(star(3), Partition([0, 1, 1, 1]))).tolist() == [[0, 3], [1, 0]]


def test_extract_quotient_names_violation():
    with pytest.raises(DomainError, match=r"vertices 0 and 1"):
        extract_quotient(path(3), Partition.trivial(3))


def test_coarsest_equitable_examples():
    assert coarsest_equitable(cycle(7)).p == 1
    assert coarsest_equitable(complete(5)).p == 1
    assert blocks(coarsest_equitable(path(3))) == [[0, 2], [1]]
    assert coarsest_equitable(path(3)).cluster_of == (0, 1, 0)
    assert coarsest_equitable(Graph(0)).p == 0
    assert coarsest_equitable(Graph(3)).p == 1


def test_coarsest_equitable_is_deterministic_and_ordered():
    g = Graph(6, [(0, 5), (1, 5), (2, 5), (3, 4)])
    part = coarsest_equitable(g)
    assert part == coarsest_equitable(Graph(6, sorted(g.edges, reverse=True)))
    firsts = [b[0] for b in part.blocks()]
    assert firsts == sorted(firsts)


@lru_cache(maxsize=None)
def _restricted_growth_strings(n):
    """Every set partition of range(n) as a label array, shape (Bell(n), n)."""
    out = []

    def rec(prefix, top):
        if len(prefix) == n:
            out.append(prefix[:])
            return
        for c in range(top + 2):
            prefix.append(c)
            rec(prefix, max(top, c))
            prefix.pop()

    rec([], -1)
    labels = np.array(out, dtype=np.intp).reshape(-1, n)
    # index of the first vertex carrying each vertex's label
    first = np.argmax(labels[:, None, :] == labels[:, :, None], axis=2)
    onehot = np.zeros((len(labels), n, n), dtype=np.float32)
    onehot[np.arange(len(labels))[:, None], np.arange(n)[None, :], labels] = 1
    return labels, first, onehot


def _all_equitable(g):
    """Brute force: label arrays of every equitable partition of g."""
    n = g.n
    labels, first, onehot = _restricted_growth_strings(n)
    counts = np.matmul(g.adjacency_matrix().astype(np.float32), onehot)
    # compare each vertex's count row with its cluster's first vertex
    rep_counts = np.take_along_axis(counts, first[:, :, None], axis=1)
    ok = (counts == rep_counts).all(axis=(1, 2))
    return labels[ok], first[ok]


def test_bruteforce_oracle_sanity():
    eq, _ = _all_equitable(path(3))
    assert sorted(map(tuple, eq)) == [(0, 1, 0), (0, 1, 2)]


def test_coarsest_is_coarsest_against_enumeration():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.random())
        mbc = coarsest_equitable(g)
        assert is_equitable(g, mbc)
        labels, first = _all_equitable(g)
        m = np.array(mbc.cluster_of)
        # refines iff every vertex shares its MBC cell with its block's first vertex
        assert (m[first] == m[None, :]).all()
        assert len(labels) >= 1


@given(st.integers(0, 10_000))
def test_quotient_independent_of_representative(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 12), rng.random())
    part = coarsest_equitable(g)
    q = extract_quotient(g, part)
    # recount from the last vertex of every cluster instead of the first
    last = {}
    for v, c in enumerate(part.cluster_of):
        last[c] = v
    for c, v in last.items():
        row = [0] * part.p
        for a in g.neighbors(v):
            row[part[a]] += 1
        assert row == q_matrix(q)[c].tolist()


FIG2_TEXT = "quotient 3\nself 1 1\nself 2 2\nedge 1 2 2 1\nedge 1 3 1 2"


def test_parse_examples():
    assert parse_quotient(FIG2_TEXT) == three_cluster_worked()
    single = parse_quotient("quotient 1")
    assert single.p == 1 and single.self_loops == (0,) and not single.weights
    with pytest.raises(ParseError):
        parse_quotient("quotient 2\nedge 2 2 1 1")


@pytest.mark.parametrize(
    "text, line",
    [
        ("self 1 1", 1),
        ("quotient 2\nself 1 1\nself 1 2", 3),
        ("quotient 2\nedge 1 2 0 1", 2),
        ("quotient 2\nedge 1 3 1 1", 2),
        ("quotient 2\nedge 2 1 1 1", 2),
        ("quotient 2\nedge 1 2 1 1\nedge 1 2 1 1", 3),
        ("quotient 2\nself x 1", 2),
        ("quotient 2\nloop 1 1", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_quotient(text)
    assert exc.value.lineno == line


def test_parse_comments_and_blank_lines():
    text = "# header\n\nquotient 2  # two clusters\nself 2 1\n  edge 1 2 2 3 # pair\n"
    assert parse_quotient(text) == QuotientGraph(2, (0, 1), {(0, 1): (2, 3)})


@st.composite
def quotients(draw):
    p = draw(st.integers(1, 6))
    loops = tuple(draw(st.lists(st.integers(0, 9), min_size=p, max_size=p)))
    pairs = [(j, k) for j in range(p) for k in range(j + 1, p)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    weights = {pr: (draw(st.integers(1, 9)), draw(st.integers(1, 9))) for pr in chosen}
    return QuotientGraph(p, loops, weights)


@given(quotients())
def test_serialize_round_trip(q):
    assert parse_quotient(serialize_quotient(q)) == q
