import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from degen.graph import Graph


def random_graph(n, p, rng):
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def subset_min_degree_degeneracy(g: Graph) -> int:
    """max over vertex subsets of the induced minimum degree (exponential)."""
    best = 0
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        low = min(sum(1 for w in g.adjacency[v] if mask >> w & 1) for v in vs)
        best = max(best, low)
    return best


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture
def rng():
    return random.Random(20261019)
