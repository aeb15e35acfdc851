import pytest
from hypothesis import settings

from symgraph.graph import Graph, Partition

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = []


def record_acceptance(name, passed, detail=""):
    _ACCEPTANCE.append((name, passed, detail))


@pytest.fixture
def acceptance():
    return record_acceptance


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}" + (f"  ({detail})" if detail else ""))


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def p3():
    return path(3)


def random_graph(rng, n, density):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density])


def blocks(part: Partition):
    return sorted(sorted(b) for b in part.blocks())
