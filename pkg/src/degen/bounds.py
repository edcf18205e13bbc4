"""Exact-rational bound evaluators and one-sided falsifiers.

All values are :class:`fractions.Fraction`; nothing on these paths touches
floating point.  Genus is always a number supplied by the caller: the
falsifiers can only certify that a graph's genus *exceeds* a claim.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from degen.exact import AlphaResult, alpha_exact
from degen.graph import Graph, degeneracy_ordering, girth, has_triangle, induced_subgraph
from degen.partition import colour_forward

Rational = Fraction


class BoundName(str, enum.Enum):
    THEOREM1 = "theorem1"
    THEOREM1_COMBINED = "theorem1_combined"
    AKS = "aks"
    THEOREM2 = "theorem2"
    LEMMA1 = "lemma1_edges"
    LEMMA2 = "lemma2_min_degree"
    CONJECTURE = "conjecture_target"
    GIRTH_CONJECTURE = "girth_conjecture"


@dataclass(frozen=True)
class BoundReport:
    bound_name: BoundName
    value: Fraction
    satisfied: bool | None = None
    context: dict = field(default_factory=dict)
    note: str = ""


@dataclass(frozen=True)
class ConjectureTarget:
    value: Fraction
    conjectured: bool  # False: only the clique upper bound (d+1)/(k+1) is known here


def theorem1_bound(n: int, k: int, d: int) -> Fraction:
    """``(d+1) n / (k+d+1)`` for a k-degenerate graph on n vertices."""
    if d < 0 or n < 0:
        raise ValueError("n and d must be non-negative")
    if k <= d:
        raise ValueError(f"need k > d, got k={k}, d={d}")
    return Fraction((d + 1) * n, k + d + 1)


def theorem1_combined(g: Graph, d: int) -> BoundReport:
    if d < 0:
        raise ValueError("d must be non-negative")
    n = g.n
    _, k = degeneracy_ordering(g)
    if k <= d:
        return BoundReport(
            BoundName.THEOREM1_COMBINED,
            Fraction(n),
            True,
            {"n": n, "k": k, "d": d, "alpha_d": n},
            "k <= d: the whole graph is d-degenerate",
        )
    first = theorem1_bound(n, k, d)
    other = alpha_exact(g, k - d - 1).value
    second = Fraction(n - other)
    value = max(first, second)
    alpha_d = alpha_exact(g, d).value
    ctx = {
        "n": n,
        "k": k,
        "d": d,
        "first": first,
        "second": second,
        f"alpha_{k - d - 1}": other,
        "alpha_d": alpha_d,
    }
    return BoundReport(BoundName.THEOREM1_COMBINED, value, alpha_d >= value, ctx)


def aks_bound(g: Graph, d: int) -> Fraction:
    """``sum_v min(1, (d+1)/(deg v + 1))``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    total = Fraction(0)
    for deg in g.degrees():
        total += 1 if deg <= d else Fraction(d + 1, deg + 1)
    return total


def theorem2_bound(n: int, g: int, d: int) -> Fraction:
    """Lower bound on alpha_d for graphs of genus at most ``g``, 1 <= d <= 5."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    if d == 1:
        return Fraction(2 * n - 24 * g + 2, 7)
    if d == 2:
        return Fraction(n - 2 * g + 4, 3)
    if d == 3:
        return Fraction(n, 2) - g + 1
    if d == 4:
        return Fraction(3 * n - 2 * g + 4, 5)
    if d == 5:
        return Fraction(2 * n - g + 2, 3)
    raise ValueError(f"d must be in 1..5, got {d}")


def lemma1_falsifier(g: Graph, genus_claim: int) -> BoundReport:
    """Triangle-free graphs of genus <= g have at most ``2n + 4g - 4`` edges;
    a violation certifies ``genus(G) > genus_claim``."""
    if has_triangle(g):
        raise ValueError("edge bound applies to triangle-free graphs only")
    limit = Fraction(2 * g.n + 4 * genus_claim - 4)
    ok = g.m <= limit
    note = "" if ok else f"certifies genus > {genus_claim}"
    return BoundReport(BoundName.LEMMA1, limit, ok, {"n": g.n, "m": g.m, "g": genus_claim}, note)


def lemma2_falsifier(g: Graph, genus_claim: int, k: int) -> BoundReport:
    """Graphs of genus <= g with minimum degree >= k+6 have fewer than 12g/k
    vertices.  ``satisfied`` is ``None`` when the degree hypothesis fails."""
    if k < 1:
        raise ValueError("k must be at least 1")
    limit = Fraction(12 * genus_claim, k)
    delta = g.min_degree()
    ctx = {"n": g.n, "min_degree": delta, "g": genus_claim, "k": k}
    if g.n == 0 or delta < k + 6:
        return BoundReport(BoundName.LEMMA2, limit, None, ctx, f"inapplicable: min degree {delta} < {k + 6}")
    ok = g.n < limit
    note = "" if ok else f"certifies genus > {genus_claim}"
    return BoundReport(BoundName.LEMMA2, limit, ok, ctx, note)


def conjecture_targets(k: int, d: int) -> ConjectureTarget:
    if d < 0 or k <= d:
        raise ValueError(f"need k > d >= 0, got k={k}, d={d}")
    if (k, d) == (2, 1):
        return ConjectureTarget(Fraction(3, 5), True)
    return ConjectureTarget(Fraction(d + 1, k + 1), k >= 3)


def girth_conjecture_check(g: Graph, k: int) -> BoundReport:
    """Compare alpha_1(g) with ``n - m/k`` for a graph of girth at least k."""
    if k < 3:
        raise ValueError("k must be at least 3")
    gr = girth(g)
    if gr < k:
        raise ValueError(f"girth {gr} is below k={k}")
    value = Fraction(g.n) - Fraction(g.m, k)
    alpha = alpha_exact(g, 1).value
    ctx = {"n": g.n, "m": g.m, "k": k, "girth": gr, "alpha_1": alpha, "slack": alpha - value}
    return BoundReport(BoundName.GIRTH_CONJECTURE, value, alpha >= value, ctx)


def surface_forest(g: Graph, genus: int) -> AlphaResult:
    """Induced forest from the bounded-genus construction.

    Takes the ordering in which each vertex has minimum degree among itself
    and the vertices before it (the reverse of smallest-last removal), drops
    its first ``12g - 1`` vertices, and colours the rest with ``d = 1`` along
    a degeneracy ordering.  Heuristic: ``optimal`` is False.  When ``genus``
    really bounds the genus of ``g``, the forest has at least
    ``(2n - 24g + 2)/7`` vertices.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    ordering, _ = degeneracy_ordering(g)
    growth = ordering.order[::-1]
    strip = max(12 * genus - 1, 0)
    rest = sorted(growth[strip:])
    h, relabel = induced_subgraph(g, rest)
    back = {i: v for v, i in relabel.items()}
    h_order, _ = degeneracy_ordering(h)
    p = colour_forward(h, h_order, 1)
    witness = tuple(sorted(back[v] for v in p.blue))
    return AlphaResult(1, len(witness), witness, False, 0)
