"""Simple undirected graphs, graph6 I/O and degeneracy orderings.

Vertices are always labelled ``0..n-1``.  Small graphs (``n <= BITSET_LIMIT``)
also carry one adjacency bitset per vertex, stored as a Python ``int``, which
the exact solver and the triangle test use.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

MAX_VERTICES = 1 << 16
BITSET_LIMIT = 512
INFINITE = math.inf

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    adjacency_bits: tuple[int, ...] | None = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls._build(n, [sorted(s) for s in nbrs])

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> Graph:
        """Build from per-vertex neighbour bitsets (must be symmetric, loop-free)."""
        n = len(bits)
        adj = []
        for v, b in enumerate(bits):
            if b >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            row = []
            while b:
                low = b & -b
                row.append(low.bit_length() - 1)
                b ^= low
            adj.append(row)
        for v, row in enumerate(adj):
            for w in row:
                if w >= n or not bits[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        return cls._build(n, adj, tuple(bits) if n <= BITSET_LIMIT else None)

    @classmethod
    def _build(cls, n, adj, bits=None) -> Graph:
        adjacency = tuple(tuple(row) for row in adj)
        if bits is None and n <= BITSET_LIMIT:
            rows = []
            for row in adjacency:
                b = 0
                for w in row:
                    b |= 1 << w
                rows.append(b)
            bits = tuple(rows)
        return cls(n, adjacency, bits)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if self.adjacency_bits is not None:
            return bool(self.adjacency_bits[u] >> v & 1)
        row = self.adjacency[u]
        i = _bisect(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bisect(row, x):
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class VertexOrdering:
    """A sequence of distinct vertices with, for each, the number of its
    neighbours that appear strictly later in the sequence.

    Orderings over a subset of the vertices count only neighbours inside that
    subset, which is how witnesses for induced subgraphs are expressed.
    """

    order: tuple[int, ...]
    forward_degree: Mapping[int, int]
    max_forward_degree: int

    @classmethod
    def of(cls, g: Graph, order: Iterable[int]) -> VertexOrdering:
        order = tuple(order)
        pos = [-1] * g.n
        for i, v in enumerate(order):
            if not 0 <= v < g.n:
                raise IndexError(f"vertex {v} out of range for n={g.n}")
            if pos[v] >= 0:
                raise ValueError(f"vertex {v} repeated in ordering")
            pos[v] = i
        adj = g.adjacency
        fwd = {}
        top = 0
        for i, v in enumerate(order):
            c = 0
            for w in adj[v]:
                if pos[w] > i:
                    c += 1
            fwd[v] = c
            if c > top:
                top = c
        return cls(order, fwd, top)

    def is_permutation_of(self, g: Graph) -> bool:
        return len(self.order) == g.n and set(self.order) == set(range(g.n))

    def reversed(self, g: Graph) -> VertexOrdering:
        return VertexOrdering.of(g, reversed(self.order))

    def __len__(self):
        return len(self.order)


# ---------------------------------------------------------------- graph6


def _decode_size(data: bytes, start: int) -> tuple[int, int]:
    def chunk(i):
        if i >= len(data):
            raise Graph6Error("truncated size header", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {c!r} outside 63..126", i)
        return c - 63

    if start >= len(data):
        raise Graph6Error("empty graph6 string", start)
    if data[start] != 126:
        return chunk(start), start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        n = 0
        for i in range(start + 2, start + 8):
            n = (n << 6) | chunk(i)
        return n, start + 8
    n = 0
    for i in range(start + 1, start + 4):
        n = (n << 6) | chunk(i)
    return n, start + 4


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is accepted)."""
    if isinstance(line, str):
        try:
            data = line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ascii character", exc.start) from None
    else:
        data = bytes(line)
    data = data.rstrip(b"\r\n")
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER.encode()) else 0
    n, pos = _decode_size(data, start)
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}", start)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(data) - pos < nbytes:
        raise Graph6Error(f"truncated payload: expected {nbytes} bytes, got {len(data) - pos}", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after payload", pos + nbytes)

    nbrs: list[list[int]] = [[] for _ in range(n)]
    i, j = 0, 1
    for off in range(pos, pos + nbytes):
        c = data[off]
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {c!r} outside 63..126", off)
        x = c - 63
        for shift in range(5, -1, -1):
            if j >= n:
                if x & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("nonzero padding bits", off)
                break
            if x >> shift & 1:
                nbrs[i].append(j)
                nbrs[j].append(i)
            i += 1
            if i == j:
                i, j = 0, j + 1
    for row in nbrs:
        row.sort()
    return Graph._build(n, nbrs)


def write_graph6(g: Graph) -> str:
    n = g.n
    nbits = n * (n - 1) // 2
    payload = bytearray(-(-nbits // 6))
    for j, row in enumerate(g.adjacency):
        base = j * (j - 1) // 2
        for i in row:
            if i >= j:
                break
            b = base + i
            payload[b // 6] |= 1 << (5 - b % 6)
    for k in range(len(payload)):
        payload[k] += 63
    return (_encode_size(n) + bytes(payload)).decode("ascii")


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line (1-based)."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc


# ---------------------------------------------------------------- degeneracy


def degeneracy_ordering(g: Graph) -> tuple[VertexOrdering, int]:
    """Smallest-last ordering: repeatedly remove a minimum-degree vertex
    (lowest id on ties).  Each removed vertex is placed before its surviving
    neighbours, so its forward degree is its degree at removal time.

    Buckets are indexed by current degree; each bucket is a heap so the lowest
    id is found without scanning.  Entries go stale when a degree drops and are
    skipped lazily, giving O((n + m) log n).
    """
    n = g.n
    adj = g.adjacency
    deg = [len(a) for a in adj]
    buckets: list[list[int]] = [[] for _ in range(max(deg, default=0) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending ids already form a heap
    removed = bytearray(n)
    order = []
    fwd = {}
    k = 0
    cur = 0
    for _ in range(n):
        while True:
            bucket = buckets[cur]
            while bucket and (removed[bucket[0]] or deg[bucket[0]] != cur):
                heapq.heappop(bucket)
            if bucket:
                break
            cur += 1
        v = heapq.heappop(bucket)
        removed[v] = 1
        order.append(v)
        fwd[v] = cur
        if cur > k:
            k = cur
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(buckets[deg[w]], w)
        if cur:
            cur -= 1
    return VertexOrdering(tuple(order), fwd, k), k


def degeneracy(g: Graph) -> int:
    return degeneracy_ordering(g)[1]


def is_d_degenerate(g: Graph, d: int) -> bool:
    """True iff every subgraph has a vertex of degree at most ``d``.

    Peels vertices of degree <= d until none remain (degenerate) or the
    survivors all have degree > d (not degenerate).
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    adj = g.adjacency
    deg = [len(a) for a in adj]
    stack = [v for v in range(g.n) if deg[v] <= d]
    gone = bytearray(g.n)
    for v in stack:
        gone[v] = 1
    peeled = 0
    while stack:
        v = stack.pop()
        peeled += 1
        for w in adj[v]:
            if not gone[w]:
                deg[w] -= 1
                if deg[w] <= d:
                    gone[w] = 1
                    stack.append(w)
    return peeled == g.n


def is_d_degenerate_mask(bits: Sequence[int], mask: int, d: int) -> bool:
    """Bitset form of :func:`is_d_degenerate` for the subgraph induced by ``mask``."""
    while mask:
        rest = mask
        progressed = False
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if (bits[v] & mask).bit_count() <= d:
                mask ^= low
                progressed = True
        if not progressed:
            return False
    return True


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, relabelled ``0..len(keep)-1`` in
    increasing order of the original labels.  Returns ``(graph, old_to_new)``."""
    verts = sorted(set(keep))
    if verts and (verts[0] < 0 or verts[-1] >= g.n):
        bad = verts[0] if verts[0] < 0 else verts[-1]
        raise IndexError(f"vertex {bad} out of range for n={g.n}")
    relabel = {v: i for i, v in enumerate(verts)}
    adj = [[relabel[w] for w in g.adjacency[v] if w in relabel] for v in verts]
    return Graph._build(len(verts), adj), relabel


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``INFINITE`` for forests."""
    best = INFINITE
    adj = g.adjacency
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def has_triangle(g: Graph) -> bool:
    bits = g.adjacency_bits
    if bits is not None:
        for u, v in g.edges():
            if bits[u] & bits[v]:
                return True
        return False
    sets = [set(a) for a in g.adjacency]
    return any(sets[u] & sets[v] for u, v in g.edges())
