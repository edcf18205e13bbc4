import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph, subset_min_degree_degeneracy, to_nx
from degen.graph import (
    INFINITE,
    Graph,
    Graph6Error,
    VertexOrdering,
    degeneracy,
    degeneracy_ordering,
    girth,
    has_triangle,
    induced_subgraph,
    is_d_degenerate,
    is_d_degenerate_mask,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from degen.named import (
    complete_bipartite,
    complete_graph,
    cube,
    cycle_graph,
    grid_graph,
    icosahedron,
    octahedron,
    path_graph,
    petersen,
    star_graph,
    subdivided_k4,
)


# ---------------------------------------------------------------- construction


def test_from_edges_rejects_bad_input():
    with pytest.raises(IndexError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_from_bits_requires_symmetry():
    with pytest.raises(ValueError):
        Graph.from_bits([0b10, 0])
    g = Graph.from_bits([0b10, 0b01])
    assert g.m == 1 and g.has_edge(0, 1)


def test_equality_and_hash():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph.from_edges(3, [(0, 1)])


# ---------------------------------------------------------------- graph6


def test_graph6_k4():
    g = parse_graph6("C~")
    assert (g.n, g.m) == (4, 6)


def test_graph6_single_vertex():
    g = parse_graph6("@")
    assert (g.n, g.m) == (1, 0)


def test_graph6_star_example():
    # D?{ decodes to the star K_{1,4} centred at vertex 4
    g = parse_graph6("D?{")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    ref = nx.from_graph6_bytes(b"D?{")
    assert sorted(ref.edges()) == sorted(g.edges())


def test_graph6_empty_graph_and_header():
    assert parse_graph6("?").n == 0
    assert parse_graph6(">>graph6<<C~") == parse_graph6("C~")
    assert parse_graph6(b"C~\n") == parse_graph6("C~")


@pytest.mark.parametrize(
    "text",
    ["C", "C~~", "C\x7f", "D?~", "~??"],
)
def test_graph6_malformed(text):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset >= 0


def test_graph6_offset_points_at_bad_byte():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("D?\x01")
    assert info.value.offset == 2


def test_graph6_large_headers_roundtrip():
    for n in (62, 63, 200, 5000):
        g = Graph.from_edges(n, [(0, n - 1), (1, 2)])
        code = write_graph6(g)
        assert code.startswith("~") == (n >= 63)
        assert parse_graph6(code) == g


def test_graph6_eight_byte_header_decodes():
    # the long form is legal for any n; 4 vertices written as ~~ + six bytes
    assert parse_graph6("~~?????C~") == parse_graph6("C~")


def test_graph6_vertex_cap():
    with pytest.raises(Graph6Error):
        parse_graph6("~~??@???")  # n = 2**18


def test_graph6_non_ascii():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("Cé")
    assert info.value.offset == 1


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_roundtrip_matches_networkx(g):
    code = write_graph6(g)
    assert parse_graph6(code) == g
    ref = nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()
    assert code == ref


def test_read_lines_reports_line_numbers():
    out = list(read_graph6_lines(["C~\n", "\n", "bad!\n", "@"]))
    assert [i for i, _ in out] == [1, 3, 4]
    assert isinstance(out[1][1], Graph6Error)
    assert out[2][1].n == 1


# ---------------------------------------------------------------- degeneracy


@pytest.mark.parametrize(
    "g, k",
    [
        (complete_graph(4), 3),
        (cycle_graph(5), 2),
        (path_graph(6), 1),
        (star_graph(5), 1),
        (complete_graph(1), 0),
        (Graph.from_edges(0, []), 0),
        (octahedron(), 4),
        (icosahedron(), 5),
        (petersen(), 3),
        (complete_bipartite(3, 3), 3),
        (grid_graph(3, 3), 2),
        (cube(), 3),
        (subdivided_k4(), 2),
    ],
)
def test_degeneracy_known_values(g, k):
    assert degeneracy(g) == k


def test_smallest_last_tie_break_lowest_id():
    ordering, k = degeneracy_ordering(complete_graph(4))
    assert ordering.order == (0, 1, 2, 3)
    assert k == 3
    # path 0-1-2: vertex 0 and 2 have degree 1; 0 goes first
    ordering, _ = degeneracy_ordering(path_graph(3))
    assert ordering.order == (0, 1, 2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_degeneracy_matches_subset_oracle(g):
    ordering, k = degeneracy_ordering(g)
    assert k == subset_min_degree_degeneracy(g)
    assert ordering.is_permutation_of(g)
    assert ordering.max_forward_degree == k
    assert VertexOrdering.of(g, ordering.order).forward_degree == ordering.forward_degree


def test_degeneracy_matches_core_number(rng):
    for _ in range(100):
        n = rng.randint(1, 40)
        g = random_graph(n, rng.random() * 0.5, rng)
        assert degeneracy(g) == max(nx.core_number(to_nx(g)).values())


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.integers(0, 7))
def test_is_d_degenerate_threshold(g, d):
    assert is_d_degenerate(g, d) == (degeneracy(g) <= d)
    full = (1 << g.n) - 1
    assert is_d_degenerate_mask(g.adjacency_bits, full, d) == (degeneracy(g) <= d)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.data())
def test_degeneracy_hereditary(g, data):
    keep = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    h, _ = induced_subgraph(g, keep)
    assert degeneracy(h) <= degeneracy(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.integers(0, 6))
def test_d_degenerate_monotone_in_d(g, d):
    if is_d_degenerate(g, d):
        assert is_d_degenerate(g, d + 1)


def test_is_d_degenerate_rejects_negative():
    with pytest.raises(ValueError):
        is_d_degenerate(complete_graph(2), -1)


def test_induced_subgraph_relabels():
    h, relabel = induced_subgraph(cycle_graph(5), [4, 0, 1])
    assert relabel == {0: 0, 1: 1, 4: 2}
    assert sorted(h.edges()) == [(0, 1), (0, 2)]
    with pytest.raises(IndexError):
        induced_subgraph(cycle_graph(5), [5])


def test_vertex_ordering_of_subset_counts_later_neighbours():
    g = complete_graph(4)
    o = VertexOrdering.of(g, [2, 0])
    assert o.forward_degree == {2: 1, 0: 0}
    assert o.max_forward_degree == 1
    assert not o.is_permutation_of(g)


# ---------------------------------------------------------------- girth, triangles


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle_graph(5), 5),
        (complete_graph(4), 3),
        (petersen(), 5),
        (cube(), 4),
        (path_graph(5), INFINITE),
        (grid_graph(3, 3), 4),
    ],
)
def test_girth(g, expected):
    assert girth(g) == expected


def test_girth_matches_networkx(rng):
    for _ in range(60):
        g = random_graph(rng.randint(1, 12), 0.3, rng)
        ref = nx.girth(to_nx(g))
        assert girth(g) == ref
        assert has_triangle(g) == (ref == 3)


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(to_nx(icosahedron()), nx.icosahedral_graph())
    assert nx.is_isomorphic(to_nx(octahedron()), nx.octahedral_graph())
    assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(cube()), nx.hypercube_graph(3))


def test_induced_subgraph_examples():
    h, _ = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert h == complete_graph(3)
    h, _ = induced_subgraph(cycle_graph(5), {1, 2, 3, 4})
    assert h == path_graph(4)
    for drop in range(6):
        h, _ = induced_subgraph(octahedron(), set(range(6)) - {drop})
        assert sorted(h.degrees(), reverse=True) == [4, 3, 3, 3, 3]


def test_write_examples():
    assert write_graph6(complete_graph(4)) == "C~"
    assert write_graph6(Graph.from_edges(1, [])) == "@"
    assert parse_graph6(write_graph6(cycle_graph(5))).degrees() == [2] * 5


def test_is_d_degenerate_examples():
    assert is_d_degenerate(path_graph(7), 1)
    assert not is_d_degenerate(complete_graph(4), 2)
    assert is_d_degenerate(octahedron(), 4)
    assert subset_min_degree_degeneracy(octahedron()) == 4
    assert has_triangle(octahedron()) and not has_triangle(cycle_graph(5))


def test_bitsets_only_for_small_graphs():
    assert Graph.from_edges(3, [(0, 1)]).adjacency_bits == (0b10, 0b01, 0)
    big = Graph.from_edges(600, [(0, 599)])
    assert big.adjacency_bits is None
    assert degeneracy(big) == 1 and big.has_edge(599, 0)
