from itertools import combinations

import networkx as nx
import pytest

from conftest import to_nx
from degen.corpus import (
    bundled_corpus,
    bundled_fixtures,
    corpus_lines,
    graph_from_mask,
    labelled_graphs,
    mask_of,
    orbit_classes,
    pair_list,
    unique_graphs,
)
from degen.graph import parse_graph6, write_graph6
from degen.named import FIXTURES

# number of graphs on n unlabelled vertices, n = 0..7
UNLABELLED = [1, 1, 2, 4, 11, 34, 156, 1044]


def test_pair_list_is_graph6_column_order():
    assert pair_list(4) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))


def test_mask_roundtrip():
    for mask in range(1 << 6):
        assert mask_of(graph_from_mask(4, mask)) == mask


@pytest.mark.parametrize("n", range(1, 6))
def test_labelled_counts(n):
    assert sum(1 for _ in labelled_graphs(n)) == 2 ** (n * (n - 1) // 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_class_counts(n):
    class_of, reps = orbit_classes(n)
    assert len(reps) == UNLABELLED[n]
    assert len(class_of) == 2 ** (n * (n - 1) // 2)
    for c, r in enumerate(reps):
        assert class_of[r] == c


@pytest.mark.parametrize("n", range(1, 6))
def test_classes_match_networkx_isomorphism(n):
    class_of, reps = orbit_classes(n)
    rep_graphs = [to_nx(graph_from_mask(n, r)) for r in reps]
    for mask in range(0, 2 ** (n * (n - 1) // 2), 7):
        g = to_nx(graph_from_mask(n, mask))
        hits = [i for i, h in enumerate(rep_graphs) if nx.is_isomorphic(g, h)]
        assert hits == [class_of[mask]]


def test_representatives_are_smallest_masks():
    n = 5
    class_of, reps = orbit_classes(n)
    first = {}
    for mask in range(2 ** 10):
        first.setdefault(int(class_of[mask]), mask)
    assert [first[c] for c in range(len(reps))] == reps


def test_unique_graphs_pairwise_non_isomorphic():
    gs = [to_nx(g) for g in unique_graphs(5)]
    assert len(gs) == sum(UNLABELLED[1:6])
    for a, b in combinations(gs, 2):
        if a.number_of_nodes() == b.number_of_nodes():
            assert not nx.is_isomorphic(a, b)


def test_bundled_corpus_matches_generator():
    assert bundled_corpus() == list(corpus_lines(7))
    assert len(bundled_corpus()) == sum(UNLABELLED[1:8])


def test_bundled_fixtures_match_constructors():
    fixtures = bundled_fixtures()
    assert set(fixtures) == set(FIXTURES)
    for name, make in FIXTURES.items():
        assert fixtures[name] == make()
    for name in ("K4", "C5", "octahedron", "icosahedron", "subdivided_K4", "petersen", "K33"):
        assert name in fixtures


def test_corpus_lines_parse():
    lines = list(corpus_lines(4, labelled=True))
    assert len(lines) == 1 + 2 + 8 + 64
    assert all(write_graph6(parse_graph6(s)) == s for s in lines)
