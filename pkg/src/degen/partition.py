"""Blue/red colouring of a vertex scan, with checkable certificates.

A vertex is coloured blue when at most ``d`` of its earlier neighbours in the
scan are already blue, otherwise red.  Scanning a degeneracy ordering in its
stored direction (each vertex has at most ``k`` later neighbours) gives the
cardinality guarantee ``|blue| >= (d+1)n/(k+d+1)``; scanning it reversed (each
vertex has at most ``k`` earlier neighbours) makes the red side
``(k-d-1)``-degenerate as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from degen.graph import (
    Graph,
    VertexOrdering,
    degeneracy_ordering,
    induced_subgraph,
)

DEFAULT_SEARCH_BUDGET = 20_000


def size_bound(n: int, k: int, d: int) -> int:
    """``ceil((d+1) n / (k+d+1))`` in integer arithmetic."""
    return -(-(d + 1) * n // (k + d + 1))


@dataclass(frozen=True)
class Partition:
    blue: frozenset[int]
    red: frozenset[int]
    blue_witness: VertexOrdering
    red_witness: VertexOrdering | None
    d: int
    k: int
    variant: str  # "forward" or "reversed"
    scan_order: tuple[int, ...] = field(repr=False, default=())

    @property
    def params(self) -> tuple[int, int]:
        return self.d, self.k


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str
    required: bool = True


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        """All required checks passed (informational checks are ignored)."""
        return all(c.passed for c in self.checks if c.required)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _scan(g: Graph, seq: Sequence[int], d: int) -> tuple[list[int], list[int]]:
    # blue_before[w] counts blue neighbours of w already scanned
    blue_before = [0] * g.n
    seen = bytearray(g.n)
    adj = g.adjacency
    blue, red = [], []
    for v in seq:
        seen[v] = 1
        if blue_before[v] <= d:
            blue.append(v)
            for w in adj[v]:
                if not seen[w]:
                    blue_before[w] += 1
        else:
            red.append(v)
    return blue, red


def _as_order(g: Graph, ordering) -> tuple[int, ...]:
    order = tuple(ordering.order if isinstance(ordering, VertexOrdering) else ordering)
    if len(order) != g.n or set(order) != set(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    return order


def colour_forward(g: Graph, ordering: VertexOrdering | Iterable[int], d: int) -> Partition:
    """Colour along ``ordering`` left to right.

    ``k`` is taken as the ordering's largest count of later neighbours, for
    which ``|blue| >= ceil((d+1)n/(k+d+1))`` holds.  Only the blue side gets a
    witness.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    order = _as_order(g, ordering)
    k = VertexOrdering.of(g, order).max_forward_degree
    blue, red = _scan(g, order, d)
    return Partition(
        blue=frozenset(blue),
        red=frozenset(red),
        blue_witness=VertexOrdering.of(g, reversed(blue)),
        red_witness=None,
        d=d,
        k=k,
        variant="forward",
        scan_order=order,
    )


def _choice_search(g, seq, d, red_cap, need, budget):
    """Depth-first search over scan colourings where each vertex may be blue
    (at most ``d`` earlier blue neighbours) or red (at most ``red_cap`` earlier
    red neighbours), looking for at least ``need`` blue vertices.

    Blue is tried first.  Returns ``(blue, red)`` in scan order, or ``None``
    when the budget runs out or no such colouring exists.
    """
    n = len(seq)
    adj = g.adjacency
    pos = [0] * g.n
    for i, v in enumerate(seq):
        pos[v] = i
    later = [[w for w in adj[v] if pos[w] > i] for i, v in enumerate(seq)]
    bcnt = [0] * g.n
    rcnt = [0] * g.n
    colour = [0] * n  # 1 blue, 2 red
    tried = [0] * (n + 1)  # 0 nothing tried, 1 blue tried, 2 both tried
    i = nblue = nodes = 0
    while True:
        if i == n:
            blue = [seq[j] for j in range(n) if colour[j] == 1]
            red = [seq[j] for j in range(n) if colour[j] == 2]
            return blue, red
        v = seq[i]
        if tried[i] == 0:
            tried[i] = 1
            if nblue + n - i >= need and bcnt[v] <= d:
                colour[i] = 1
                nblue += 1
                for w in later[i]:
                    bcnt[w] += 1
                i += 1
                tried[i] = 0
                continue
        if tried[i] == 1:
            tried[i] = 2
            if nblue + n - i - 1 >= need and rcnt[v] <= red_cap:
                colour[i] = 2
                for w in later[i]:
                    rcnt[w] += 1
                i += 1
                tried[i] = 0
                continue
        i -= 1
        nodes += 1
        if i < 0 or nodes > budget:
            return None
        counts = bcnt if colour[i] == 1 else rcnt
        if colour[i] == 1:
            nblue -= 1
        for w in later[i]:
            counts[w] -= 1
        colour[i] = 0


def partition_theorem(
    g: Graph,
    d: int,
    ordering: tuple[VertexOrdering, int] | None = None,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> Partition:
    """Split ``V(g)`` into a ``d``-degenerate blue part and a
    ``(k-d-1)``-degenerate red part, ``k`` being the degeneracy of ``g``.

    The reversed smallest-last ordering is scanned greedily.  If the blue side
    falls short of ``ceil((d+1)n/(k+d+1))``, the scan's free choices (a vertex
    that may legally take either colour) are searched, within
    ``search_budget`` backtracks, for a colouring that reaches it.  Such a
    colouring does not always exist; the greedy result is returned then.

    ``ordering`` may pass in a precomputed ``degeneracy_ordering(g)`` result.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    order, k = ordering if ordering is not None else degeneracy_ordering(g)
    if k <= d:
        return Partition(
            blue=frozenset(range(g.n)),
            red=frozenset(),
            blue_witness=order,
            red_witness=VertexOrdering((), {}, 0),
            d=d,
            k=k,
            variant="reversed",
            scan_order=tuple(reversed(order.order)),
        )
    seq = tuple(reversed(order.order))
    blue, red = _scan(g, seq, d)
    need = size_bound(g.n, k, d)
    if len(blue) < need and search_budget > 0:
        found = _choice_search(g, seq, d, k - d - 1, need, search_budget)
        if found is not None:
            blue, red = found
    return Partition(
        blue=frozenset(blue),
        red=frozenset(red),
        blue_witness=VertexOrdering.of(g, reversed(blue)),
        red_witness=VertexOrdering.of(g, reversed(red)),
        d=d,
        k=k,
        variant="reversed",
        scan_order=seq,
    )


def verify_partition(g: Graph, p: Partition) -> VerificationReport:
    """Re-check a partition from scratch, without trusting its witnesses.

    The size bound is a required check only for forward scans; for the
    reversed variant it is reported but not required.
    """
    if p.blue & p.red:
        raise ValueError(f"colour classes overlap on {sorted(p.blue & p.red)}")
    if len(p.blue) + len(p.red) != g.n or (p.blue | p.red) != frozenset(range(g.n)):
        raise ValueError("colour classes do not cover the vertex set")

    checks = []
    _, blue_k = degeneracy_ordering(induced_subgraph(g, p.blue)[0])
    checks.append(Check("blue_degenerate", blue_k <= p.d, f"degeneracy(G[blue])={blue_k}, d={p.d}"))
    w = p.blue_witness
    wk = VertexOrdering.of(g, w.order).max_forward_degree
    checks.append(
        Check(
            "blue_witness",
            set(w.order) == p.blue and wk <= p.d,
            f"witness covers blue: {set(w.order) == p.blue}, recounted max forward degree {wk}",
        )
    )
    if p.red_witness is not None and p.k > p.d:
        cap = p.k - p.d - 1
        _, red_k = degeneracy_ordering(induced_subgraph(g, p.red)[0])
        checks.append(Check("red_degenerate", red_k <= cap, f"degeneracy(G[red])={red_k}, cap={cap}"))
        w = p.red_witness
        wk = VertexOrdering.of(g, w.order).max_forward_degree
        checks.append(
            Check(
                "red_witness",
                set(w.order) == p.red and wk <= cap,
                f"witness covers red: {set(w.order) == p.red}, recounted max forward degree {wk}",
            )
        )
    need = size_bound(g.n, p.k, p.d)
    checks.append(
        Check(
            "blue_size_bound",
            len(p.blue) >= need,
            f"|blue|={len(p.blue)} vs ceil(({p.d}+1)*{g.n}/({p.k}+{p.d}+1))={need}",
            required=p.variant == "forward",
        )
    )
    return VerificationReport(tuple(checks))
