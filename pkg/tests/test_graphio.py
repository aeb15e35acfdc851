import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from symgraph.errors import ParseError
from symgraph.graph import Graph, Partition
from symgraph.graphio import format_tag, parse_tag, read_edge_list, to_dot, write_edge_list
from symgraph.fixtures import three_cluster_worked
from symgraph.cardinality import solve_minimal
from symgraph.feasibility import build_system
from symgraph.wiring import generate


def test_tags_round_trip():
    for tag in [("self", 0), ("edge", 0, 2), ("self", 11)]:
        assert parse_tag(format_tag(tag)) == tag
    assert format_tag(("edge", 0, 1)) == "edge:1-2"
    for bad in ["self:0", "edge:2-1", "loop:1", "edge:1"]:
        with pytest.raises(ParseError):
            parse_tag(bad)


def test_generated_round_trip():
    q = three_cluster_worked()
    g, part = generate(q, solve_minimal(build_system(q)))
    h, p2 = read_edge_list(write_edge_list(g, part))
    assert h == g and dict(h.provenance) == dict(g.provenance) and p2 == part


@given(st.integers(0, 10**6))
def test_random_round_trip(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(0, 12)), 0.4)
    h, part = read_edge_list(write_edge_list(g))
    assert h == g and part is None


def test_partial_assignment_gives_no_partition():
    g, part = read_edge_list("graph 3\nnode 1 1\nedge 1 2\n")
    assert part is None and g.has_edge(0, 1)


@pytest.mark.parametrize(
    "text, line",
    [
        ("edge 1 2\n", 1),
        ("graph 3\nedge 2 1\n", 2),
        ("graph 3\nedge 1 2\nedge 1 2\n", 3),
        ("graph 3\n# c\nnode 4 1\n", 3),
        ("graph 2\nedge 1 x\n", 2),
        ("graph 2\nedge 1 2 self:0\n", 2),
        ("graph 2\nfoo\n", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError, match=f"line {line}:"):
        read_edge_list(text)


def test_cluster_gap_rejected():
    with pytest.raises(ParseError):
        read_edge_list("graph 2\nnode 1 1\nnode 2 3\n")


def test_dot():
    g = Graph(3, [(0, 1), (1, 2)], {(0, 1): ("self", 0), (1, 2): ("edge", 0, 1)})
    dot = to_dot(g, Partition([0, 0, 1]))
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert "1 -- 2 [style=" in dot and 'tooltip="edge:1-2"' in dot
    assert "cluster=2" in dot
    assert "1 -- 2;" in to_dot(Graph(2, [(0, 1)]))
