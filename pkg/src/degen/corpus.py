"""Internal enumeration of small labelled graphs and the bundled fixtures.

Graphs on ``n`` vertices are indexed by an edge mask whose bit ``b`` is the
``b``-th upper-triangle pair in graph6 column order: (0,1), (0,2), (1,2),
(0,3), ...  Relabelling-invariant quantities (alpha_d, degeneracy, degree
multisets) only need computing once per isomorphism class; :func:`orbit_classes`
groups all labelled masks into classes without any canonical-labelling code
by sweeping masks in increasing order and expanding each new class under all
``n!`` vertex permutations.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from itertools import permutations
from typing import Iterator

import numpy as np

from degen.graph import Graph, parse_graph6, write_graph6

MAX_ENUM_N = 7


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(n) for i in range(j))


def graph_from_mask(n: int, mask: int) -> Graph:
    bits = [0] * n
    for b, (i, j) in enumerate(pair_list(n)):
        if mask >> b & 1:
            bits[i] |= 1 << j
            bits[j] |= 1 << i
    return Graph.from_bits(bits)


def mask_of(g: Graph) -> int:
    index = {p: b for b, p in enumerate(pair_list(g.n))}
    return sum(1 << index[(u, v)] for u, v in g.edges())


def labelled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` labelled graphs on ``n`` vertices."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


@lru_cache(maxsize=None)
def _pair_images(n: int) -> np.ndarray:
    # images[p, b] = bit index of pair b under permutation p
    index = {p: b for b, p in enumerate(pair_list(n))}
    rows = []
    for perm in permutations(range(n)):
        rows.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in pair_list(n)])
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(pair_list(n)))


def orbit_classes(n: int) -> tuple[np.ndarray, list[int]]:
    """Assign every labelled mask on ``n`` vertices to its isomorphism class.

    Returns ``(class_of, reps)`` where ``class_of[mask]`` is a class index and
    ``reps[c]`` is the smallest mask in class ``c``.
    """
    if n > MAX_ENUM_N:
        raise ValueError(f"orbit enumeration supports n <= {MAX_ENUM_N}")
    npairs = n * (n - 1) // 2
    class_of = np.full(1 << npairs, -1, dtype=np.int32)
    images = _pair_images(n)
    one = np.int64(1)
    reps: list[int] = []
    for mask in range(1 << npairs):
        if class_of[mask] >= 0:
            continue
        bits = [b for b in range(npairs) if mask >> b & 1]
        orbit = (one << images[:, bits]).sum(axis=1) if bits else np.zeros(1, dtype=np.int64)
        class_of[orbit] = len(reps)
        reps.append(mask)
    return class_of, reps


def unique_graphs(max_n: int = MAX_ENUM_N, min_n: int = 1) -> list[Graph]:
    """One graph per isomorphism class, for each order ``min_n..max_n``."""
    out = []
    for n in range(min_n, max_n + 1):
        _, reps = orbit_classes(n)
        out.extend(graph_from_mask(n, r) for r in reps)
    return out


def corpus_lines(max_n: int = MAX_ENUM_N, labelled: bool = False) -> Iterator[str]:
    for n in range(1, max_n + 1):
        if labelled:
            for g in labelled_graphs(n):
                yield write_graph6(g)
        else:
            _, reps = orbit_classes(n)
            for r in reps:
                yield write_graph6(graph_from_mask(n, r))


def bundled_corpus() -> list[str]:
    """The shipped deduplicated corpus: one graph6 line per graph, n <= 7."""
    text = resources.files("degen.data").joinpath("corpus_n7.g6").read_text()
    return [line for line in text.splitlines() if line.strip()]


def bundled_fixtures() -> dict[str, Graph]:
    """Named witness graphs shipped as ``name graph6`` lines."""
    text = resources.files("degen.data").joinpath("fixtures.g6").read_text()
    out = {}
    for line in text.splitlines():
        if line.strip() and not line.startswith("#"):
            name, code = line.split()
            out[name] = parse_graph6(code)
    return out
