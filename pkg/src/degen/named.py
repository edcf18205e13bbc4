"""Small named graphs used as fixtures and witnesses."""

from __future__ import annotations

from itertools import combinations

from degen.graph import Graph


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def octahedron() -> Graph:
    # K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5)
    return Graph.from_edges(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def icosahedron() -> Graph:
    # apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        lo, lo_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (up, lo), (up_next, lo), (lo, lo_next), (lo, 11)]
    return Graph.from_edges(12, edges)


def subdivided_k4() -> Graph:
    """K_4 with edge 2-3 subdivided by vertex 4."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cube() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


FIXTURES = {
    "K4": lambda: complete_graph(4),
    "C5": lambda: cycle_graph(5),
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "subdivided_K4": subdivided_k4,
    "petersen": petersen,
    "K33": lambda: complete_bipartite(3, 3),
    "C6": lambda: cycle_graph(6),
    "K23": lambda: complete_bipartite(2, 3),
    "cube": cube,
    "grid3x3": lambda: grid_graph(3, 3),
    "star5": lambda: star_graph(5),
}

# fixtures known to be planar (usable with genus claim 0)
PLANAR_FIXTURES = ("K4", "C5", "octahedron", "icosahedron", "subdivided_K4", "C6", "K23", "cube", "grid3x3", "star5")
BIPARTITE_PLANAR_FIXTURES = ("C6", "K23", "cube", "grid3x3", "star5")
