"""Edge-list text format and Graphviz DOT export.

Edge lists are 1-indexed and line oriented, ``#`` starts a comment::

    graph 5
    node 1 1
    node 2 1
    node 3 1
    node 4 2
    node 5 2
    edge 1 4 edge:1-2
    edge 4 5 self:2

``node <id> <cluster>`` lines are optional; cluster 0 means unassigned. The
provenance field of an ``edge`` line is optional.
"""
from __future__ import annotations

from .errors import ParseError
from .graph import Graph, Partition

__all__ = ["read_edge_list", "write_edge_list", "to_dot", "format_tag", "parse_tag"]

_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5",
)
_STYLES = ("solid", "dashed", "dotted", "bold")


def format_tag(tag) -> str:
    if tag[0] == "self":
        return f"self:{tag[1] + 1}"
    return f"edge:{tag[1] + 1}-{tag[2] + 1}"


def parse_tag(text: str, lineno=None):
    kind, _, rest = text.partition(":")
    try:
        if kind == "self":
            i = int(rest)
            if i >= 1:
                return ("self", i - 1)
        elif kind == "edge":
            j, k = (int(x) for x in rest.split("-"))
            if 1 <= j < k:
                return ("edge", j - 1, k - 1)
    except ValueError:
        pass
    raise ParseError(f"bad provenance tag {text!r}", lineno)


def write_edge_list(g: Graph, part: Partition | None = None) -> str:
    lines = [f"graph {g.n}"]
    if part is not None:
        lines += [f"node {v + 1} {c + 1}" for v, c in enumerate(part.cluster_of)]
    for u, v in g.sorted_edges():
        tag = g.provenance.get((u, v))
        suffix = f" {format_tag(tag)}" if tag else ""
        lines.append(f"edge {u + 1} {v + 1}{suffix}")
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> tuple[Graph, Partition | None]:
    """Parse an edge list; the partition is None unless every vertex is assigned."""
    n = None
    clusters: list[int] = []
    seen_nodes: set[int] = set()
    edges = []
    seen_edges = set()
    prov = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        kw, args = tokens[0], tokens[1:]
        try:
            if n is None:
                if kw != "graph" or len(args) != 1:
                    raise ParseError("first statement must be 'graph <n>'", lineno)
                n = int(args[0])
                if n < 0:
                    raise ParseError("vertex count must be nonnegative", lineno)
                clusters = [0] * n
            elif kw == "node":
                if len(args) != 2:
                    raise ParseError("expected 'node <id> <cluster>'", lineno)
                v, c = int(args[0]), int(args[1])
                if not 1 <= v <= n:
                    raise ParseError(f"node {v} outside [1, {n}]", lineno)
                if c < 0:
                    raise ParseError(f"negative cluster {c}", lineno)
                if v in seen_nodes:
                    raise ParseError(f"duplicate node {v}", lineno)
                seen_nodes.add(v)
                clusters[v - 1] = c
            elif kw == "edge":
                if len(args) not in (2, 3):
                    raise ParseError("expected 'edge <u> <v> [provenance]'", lineno)
                u, v = int(args[0]), int(args[1])
                if not (1 <= u < v <= n):
                    raise ParseError(f"edge {u} {v} needs 1 <= u < v <= {n}", lineno)
                if (u - 1, v - 1) in seen_edges:
                    raise ParseError(f"duplicate edge {u} {v}", lineno)
                seen_edges.add((u - 1, v - 1))
                edges.append((u - 1, v - 1))
                if len(args) == 3:
                    prov[(u - 1, v - 1)] = parse_tag(args[2], lineno)
            else:
                raise ParseError(f"unknown statement {kw!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"expected integers in {raw.strip()!r}", lineno) from None
    if n is None:
        raise ParseError("missing 'graph <n>' header")
    part = None
    if n and all(c > 0 for c in clusters):
        used = sorted(set(clusters))
        if used != list(range(1, len(used) + 1)):
            raise ParseError(f"cluster indices must be 1..p without gaps, got {used}")
        part = Partition([c - 1 for c in clusters])
    return Graph(n, edges, prov), part


def to_dot(g: Graph, part: Partition | None = None, name: str = "G") -> str:
    """Undirected DOT; vertices filled by cluster, edges styled by provenance."""
    out = [f"graph {name} {{", "  node [shape=circle, style=filled];"]
    for v in range(g.n):
        if part is None:
            out.append(f'  {v + 1} [fillcolor="white"];')
        else:
            c = part[v]
            out.append(f'  {v + 1} [fillcolor="{_PALETTE[c % len(_PALETTE)]}", cluster={c + 1}];')
    tags = sorted({t for t in g.provenance.values()})
    style_of = {t: _STYLES[i % len(_STYLES)] for i, t in enumerate(tags)}
    for u, v in g.sorted_edges():
        tag = g.provenance.get((u, v))
        if tag is None:
            out.append(f"  {u + 1} -- {v + 1};")
        else:
            out.append(f'  {u + 1} -- {v + 1} [style={style_of[tag]}, tooltip="{format_tag(tag)}"];')
    out.append("}")
    return "\n".join(out) + "\n"
