from __future__ import annotations

import random
import sys

import pytest
from hypothesis import strategies as st

from indpoly.families import complete, cycle, path
from indpoly.graph import Graph, from_edge_list, graph6_pairs


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return from_edge_list(n, [pair for pair in graph6_pairs(n) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return from_edge_list(n, [pair for pair, keep in zip(graph6_pairs(n), bits) if keep])


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def K3():
    return complete(3)


@pytest.fixture
def K4():
    return complete(4)


@pytest.fixture
def P4():
    return path(4)


@pytest.fixture
def C6():
    return cycle(6)


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run the n=7 exhaustive sweep")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="long run; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
