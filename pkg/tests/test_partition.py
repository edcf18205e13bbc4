import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from degen.exact import alpha_brute
from degen.graph import Graph, VertexOrdering, degeneracy, degeneracy_ordering, induced_subgraph, is_d_degenerate
from degen.named import complete_graph, cycle_graph, empty_graph, octahedron, path_graph, star_graph
from degen.partition import Partition, colour_forward, partition_theorem, size_bound, verify_partition


def blue_red_degeneracy(g, p):
    return degeneracy(induced_subgraph(g, p.blue)[0]), degeneracy(induced_subgraph(g, p.red)[0])


def test_size_bound_is_ceiling():
    assert size_bound(5, 2, 0) == 2
    assert size_bound(6, 4, 2) == 3
    assert size_bound(7, 2, 1) == 4  # 14/4 rounds up
    assert size_bound(0, 3, 1) == 0


# ---------------------------------------------------------------- forward scan


def test_forward_k4_natural_order():
    p = colour_forward(complete_graph(4), range(4), 1)
    assert p.blue == {0, 1} and p.red == {2, 3}
    assert p.red_witness is None and p.variant == "forward"


def test_forward_edgeless_all_blue():
    p = colour_forward(empty_graph(6), [5, 3, 1, 0, 2, 4], 0)
    assert p.blue == set(range(6)) and not p.red


def test_forward_c5_cycle_order():
    g = cycle_graph(5)
    p = colour_forward(g, range(5), 0)
    assert p.blue == {0, 2} and p.red == {1, 3, 4}
    report = verify_partition(g, p)
    assert report.ok and report["blue_size_bound"].passed


def test_forward_rejects_non_permutation():
    with pytest.raises(ValueError):
        colour_forward(cycle_graph(5), [0, 1, 2, 3], 0)
    with pytest.raises(ValueError):
        colour_forward(cycle_graph(5), [0, 1, 2, 3, 3], 0)


def test_forward_deterministic():
    g = octahedron()
    order = [3, 1, 4, 0, 5, 2]
    assert colour_forward(g, order, 1) == colour_forward(g, order, 1)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.integers(0, 4), st.randoms(use_true_random=False))
def test_forward_bound_along_any_order(g, d, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    p = colour_forward(g, order, d)
    # the guarantee uses the order's later-neighbour count as k
    report = verify_partition(g, p)
    assert report.ok, report.failures()
    assert len(p.blue) >= size_bound(g.n, p.k, d)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.integers(0, 4))
def test_forward_all_blue_iff_every_vertex_fits(g, d):
    ordering, k = degeneracy_ordering(g)
    seq = list(reversed(ordering.order))
    p = colour_forward(g, seq, d)
    pos = {v: i for i, v in enumerate(seq)}
    fits = all(sum(pos[w] < pos[v] for w in g.adjacency[v]) <= d for v in seq)
    assert (not p.red) == fits
    if d >= k:
        assert not p.red


# ---------------------------------------------------------------- theorem partition


def test_theorem_k4_d1():
    g = complete_graph(4)
    p = partition_theorem(g, 1)
    assert len(p.blue) == 2 and len(p.red) == 2
    assert p.k == 3 and p.params == (1, 3)
    assert is_d_degenerate(induced_subgraph(g, p.red)[0], 1)
    assert verify_partition(g, p).ok


@pytest.mark.parametrize("g", [path_graph(6), star_graph(4), empty_graph(3)])
def test_theorem_forest_all_blue(g):
    p = partition_theorem(g, 1)
    assert p.blue == set(range(g.n)) and not p.red
    assert verify_partition(g, p).ok


def test_theorem_octahedron_d2():
    g = octahedron()
    p = partition_theorem(g, 2)
    assert p.k == 4
    b, r = blue_red_degeneracy(g, p)
    assert b <= 2 and r <= 1
    assert len(p.blue) >= 3
    assert verify_partition(g, p).ok


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.integers(0, 5))
def test_theorem_certificates_always_verify(g, d):
    p = partition_theorem(g, d)
    report = verify_partition(g, p)
    assert report.ok, report.failures()
    b, r = blue_red_degeneracy(g, p)
    assert b <= d
    if p.k > d:
        assert r <= p.k - d - 1
        # second bound: the red side is a (k-d-1)-degenerate set
        assert len(p.blue) >= g.n - alpha_brute(g, p.k - d - 1).value


def test_size_bound_unreachable_example_is_reported_not_hidden():
    # no split into a 0-degenerate set of 3 and a 1-degenerate rest exists here
    g = Graph.from_edges(
        7, [(0, 1), (1, 2), (0, 3), (2, 3), (0, 4), (2, 4), (3, 4), (0, 5), (1, 5), (0, 6), (1, 6)]
    )
    assert degeneracy(g) == 2
    p = partition_theorem(g, 0)
    report = verify_partition(g, p)
    assert report.ok
    assert not report["blue_size_bound"].passed
    assert not report["blue_size_bound"].required
    # exhaustive: no independent set of 3 or more leaves a forest behind
    for mask in range(1 << 7):
        blue = [v for v in range(7) if mask >> v & 1]
        red = [v for v in range(7) if not mask >> v & 1]
        if len(blue) >= 3 and is_d_degenerate(induced_subgraph(g, blue)[0], 0):
            assert not is_d_degenerate(induced_subgraph(g, red)[0], 1)


# ---------------------------------------------------------------- verification


def test_verify_flags_triangle_in_blue():
    g = complete_graph(3)
    p = Partition(
        blue=frozenset({0, 1, 2}),
        red=frozenset(),
        blue_witness=VertexOrdering.of(g, [0, 1, 2]),
        red_witness=None,
        d=0,
        k=2,
        variant="forward",
    )
    report = verify_partition(g, p)
    assert not report.ok
    assert not report["blue_degenerate"].passed
    assert not report["blue_witness"].passed


def test_verify_rejects_bad_cover():
    g = complete_graph(3)
    w = VertexOrdering.of(g, [0])
    with pytest.raises(ValueError):
        verify_partition(g, Partition(frozenset({0}), frozenset({0, 1, 2}), w, None, 0, 2, "forward"))
    with pytest.raises(ValueError):
        verify_partition(g, Partition(frozenset({0}), frozenset({1}), w, None, 0, 2, "forward"))
