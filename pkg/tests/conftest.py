"""Shared test corpora: the small-graph atlas and seeded random graphs."""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import strategies as st

from antiforce import Graph, edge


def nx_to_graph(ng: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(ng.nodes()))}
    return Graph(
        ng.number_of_nodes(),
        frozenset(edge(mapping[u], mapping[v]) for u, v in ng.edges()),
    )


def graph_to_nx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.sorted_edges)
    return ng


@lru_cache(maxsize=1)
def connected_atlas() -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on <= 7 vertices."""
    out = []
    for ng in nx.graph_atlas_g():
        if ng.number_of_nodes() > 0 and nx.is_connected(ng):
            out.append(nx_to_graph(ng))
    return tuple(out)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random attachment tree plus a sprinkle of extra edges."""
    if n < 1:
        raise ValueError("need n >= 1")
    edges: set[tuple[int, int]] = set()
    for v in range(1, n):
        edges.add(edge(rng.randrange(v), v))
    pool = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(pool)
    extra = rng.randint(0, len(pool))
    edges.update(pool[:extra])
    return Graph(n, frozenset(edges))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7):
    """Arbitrary simple graph on 0..max_n vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    chosen = draw(st.sets(st.sampled_from(pairs)))
    return Graph(n, frozenset(chosen))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7):
    """Connected simple graph: random tree skeleton plus extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    tree = {
        edge(draw(st.integers(min_value=0, max_value=v - 1)), v)
        for v in range(1, n)
    }
    pairs = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in tree
    ]
    extra = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph(n, frozenset(tree | extra))


@pytest.fixture(scope="session")
def atlas() -> tuple[Graph, ...]:
    return connected_atlas()
