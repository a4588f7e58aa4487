import random
from functools import lru_cache
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from preinforce.graph import Graph


def brute_dominates(g, p, S):
    S = set(S)
    return all(v in S or sum(1 for u in g.adjacency[v] if u in S) >= p for v in range(g.n))


def brute_gamma(g, p):
    for k in range(g.n + 1):
        for S in combinations(range(g.n), k):
            if brute_dominates(g, p, S):
                return k
    raise AssertionError


def brute_min_sets(g, p):
    k = brute_gamma(g, p)
    return {frozenset(S) for S in combinations(range(g.n), k) if brute_dominates(g, p, S)}


def to_graph(G):
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph.from_edges(len(mapping), ((mapping[u], mapping[v]) for u, v in G.edges()))


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@lru_cache(maxsize=None)
def atlas_graphs(connected_only=True, min_n=1):
    out = []
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() < min_n:
            continue
        if connected_only and not nx.is_connected(G):
            continue
        out.append(to_graph(G))
    return tuple(out)


@lru_cache(maxsize=None)
def random_connected(n, count, seed):
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    out = []
    while len(out) < count:
        density = rng.uniform(0.15, 0.8)
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < density])
        if g.is_connected():
            out.append(g)
    return tuple(out)


@pytest.fixture(scope="session")
def small_connected():
    """Every connected graph on 1..7 vertices plus a seeded sample on 8."""
    return atlas_graphs() + random_connected(8, 5000, 2024)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
