"""Exact alpha_d: the largest vertex set inducing a d-degenerate subgraph.

:func:`alpha_exact` is a bitset branch-and-bound for n <= 64;
:func:`alpha_brute` enumerates subsets (n <= 20) and exists to cross-check it.
Both return the lexicographically smallest optimal vertex set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from degen.graph import Graph, degeneracy_ordering, is_d_degenerate, is_d_degenerate_mask
from degen.partition import partition_theorem

EXACT_LIMIT = 64
BRUTE_LIMIT = 20


class SizeLimitError(ValueError):
    """Graph too large for an exact method; use a heuristic instead."""


class Cancelled(RuntimeError):
    pass


@dataclass(frozen=True)
class AlphaResult:
    d: int
    value: int
    witness: tuple[int, ...]
    optimal: bool
    nodes_explored: int


def _bits_to_list(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Search:
    """Branch-and-bound state over a relabelled copy of the graph in which
    bit ``i`` is the ``i``-th vertex of the branching order, so the next
    vertex to branch on is always the lowest set bit of the candidate mask."""

    def __init__(self, bits, d, cancel):
        self.bits = bits
        self.d = d
        self.cancel = cancel
        self.nodes = 0

    def addable(self, kept, cand):
        """Members ``u`` of ``cand`` with ``kept | u`` still d-degenerate."""
        bits, d = self.bits, self.d
        out = 0
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            # kept is d-degenerate, so u peeling first is enough
            if (bits[u] & kept).bit_count() <= d or is_d_degenerate_mask(bits, kept | low, d):
                out |= low
        return out

    def clique_bound(self, cand):
        """Greedy clique partition of ``cand``: a d-degenerate set holds at
        most ``d + 1`` vertices of any clique."""
        bits, cap = self.bits, self.d + 1
        total = 0
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            size = 1
            pool = rest & bits[low.bit_length() - 1]
            while pool:
                u = pool & -pool
                size += 1
                rest ^= u
                pool &= bits[u.bit_length() - 1]
            total += min(size, cap)
        return total

    def edge_bound(self, kept, cand):
        """Edge-counting bound on how many of ``cand`` can join ``kept``.

        A d-degenerate graph on s vertices has at most ``cap(s) = sum(min(i, d)
        for i < s)`` edges.  Deleting candidates one at a time from
        ``H = G[kept | cand]`` removes at most their degrees in H, so at least
        ``r`` deletions are needed, where ``r`` is the first count at which the
        ``r`` largest candidate degrees can bring ``e(H)`` under the cap.
        """
        bits, d = self.bits, self.d
        live = kept | cand
        total = 0
        degs = []
        rest = live
        while rest:
            low = rest & -rest
            rest ^= low
            deg = (bits[low.bit_length() - 1] & live).bit_count()
            total += deg
            if low & cand:
                degs.append(deg)
        edges = total // 2
        degs.sort(reverse=True)
        size = live.bit_count()
        # cap(size) in closed form, then peel one vertex per step
        cap = size * (size - 1) // 2 if size <= d + 1 else d * size - d * (d + 1) // 2
        removed = 0
        for r, deg in enumerate(degs):
            if edges - removed <= cap:
                return len(degs) - r
            removed += deg
            size -= 1
            cap -= min(size, d)
        return 0 if edges - removed <= cap else -1

    def tick(self):
        self.nodes += 1
        if self.cancel is not None and self.cancel.is_set():
            raise Cancelled(f"cancelled after {self.nodes} nodes")

    def maximise(self, kept, cand, best_size, best_mask):
        """Largest d-degenerate superset of ``kept`` within ``kept | cand``."""
        self.best_size, self.best_mask = best_size, best_mask
        self._max(kept, cand)
        return self.best_size, self.best_mask

    def _max(self, kept, cand):
        self.tick()
        size = kept.bit_count()
        if size > self.best_size:
            self.best_size, self.best_mask = size, kept
        if size + cand.bit_count() <= self.best_size:
            return
        if size + self.clique_bound(cand) <= self.best_size:
            return
        if size + self.edge_bound(kept, cand) <= self.best_size:
            return
        low = cand & -cand
        rest = cand ^ low
        self._max(kept | low, self.addable(kept | low, rest))
        self._max(kept, rest)

    def first_of_size(self, kept, cand, target):
        """First set of exactly ``target`` vertices in include-first order, or None."""
        self.tick()
        size = kept.bit_count()
        if size == target:
            return kept
        if size + cand.bit_count() < target or size + self.clique_bound(cand) < target:
            return None
        if size + self.edge_bound(kept, cand) < target:
            return None
        low = cand & -cand
        rest = cand ^ low
        found = self.first_of_size(kept | low, self.addable(kept | low, rest), target)
        if found is not None:
            return found
        return self.first_of_size(kept, rest, target)


def _check_d(d):
    if d < 0:
        raise ValueError("d must be non-negative")


def alpha_exact(g: Graph, d: int, incumbent=None, cancel=None) -> AlphaResult:
    """Exact alpha_d(g) by branch-and-bound.

    Vertices are branched on in smallest-last order, highest forward degree
    first, include before exclude.  The incumbent starts at the blue side of
    :func:`partition_theorem` (or ``incumbent``, any d-degenerate vertex set,
    if larger).  A second search in vertex-id order then recovers the
    lexicographically smallest optimal set.

    ``cancel`` is any object with ``is_set()`` (e.g. ``threading.Event``),
    polled at every node.
    """
    _check_d(d)
    n = g.n
    if n > EXACT_LIMIT:
        raise SizeLimitError(f"alpha_exact supports n <= {EXACT_LIMIT}, got {n}; use a heuristic")
    if is_d_degenerate(g, d):
        return AlphaResult(d, n, tuple(range(n)), True, 1)

    ordering, k = degeneracy_ordering(g)
    pos = {v: i for i, v in enumerate(ordering.order)}
    branch = sorted(range(n), key=lambda v: (-ordering.forward_degree[v], pos[v]))
    relabel = {v: i for i, v in enumerate(branch)}
    bits = [0] * n
    for v in range(n):
        bits[relabel[v]] = sum(1 << relabel[w] for w in g.adjacency[v])

    seeds = [partition_theorem(g, d, ordering=(ordering, k)).blue]
    if incumbent is not None:
        seeds.append(frozenset(incumbent))
    best = max(seeds, key=len)
    best_mask = sum(1 << relabel[v] for v in best)
    if not is_d_degenerate_mask(bits, best_mask, d):
        raise ValueError("incumbent does not induce a d-degenerate subgraph")

    search = _Search(bits, d, cancel)
    full = (1 << n) - 1
    value, _ = search.maximise(0, full, len(best), best_mask)

    lex = _Search(list(g.adjacency_bits), d, cancel)
    lex.nodes = search.nodes
    found = lex.first_of_size(0, (1 << n) - 1, value)
    assert found is not None
    return AlphaResult(d, value, tuple(_bits_to_list(found)), True, lex.nodes)


def _naive_degenerate(g: Graph, verts, d):
    # repeatedly delete a minimum-degree vertex; fail if that degree exceeds d
    live = {v: set(g.adjacency[v]) for v in verts}
    for v in live:
        live[v] &= live.keys()
    while live:
        v = min(live, key=lambda x: len(live[x]))
        if len(live[v]) > d:
            return False
        for w in live.pop(v):
            live[w].discard(v)
    return True


def alpha_brute(g: Graph, d: int) -> AlphaResult:
    """Enumerate vertex subsets from the largest size down, in lexicographic
    order within a size, and return the first d-degenerate one."""
    _check_d(d)
    n = g.n
    if n > BRUTE_LIMIT:
        raise SizeLimitError(f"alpha_brute supports n <= {BRUTE_LIMIT}, got {n}")
    checked = 0
    for size in range(n, -1, -1):
        for combo in itertools.combinations(range(n), size):
            checked += 1
            if _naive_degenerate(g, combo, d):
                return AlphaResult(d, size, combo, True, checked)
    raise AssertionError("unreachable: the empty set is d-degenerate")


def alpha_profile(g: Graph, d_max: int, cancel=None) -> list[AlphaResult]:
    """``[alpha_0, ..., alpha_{d_max}]``, each level seeded with the previous witness."""
    _check_d(d_max)
    out = []
    prev = None
    for d in range(d_max + 1):
        res = alpha_exact(g, d, incumbent=prev, cancel=cancel)
        out.append(res)
        prev = res.witness
    return out
