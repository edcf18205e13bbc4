"""Exhaustive checks over every labelled graph on up to 7 vertices.

alpha_d is computed with :func:`alpha_profile` once per isomorphism class and
looked up by class for each labelled graph; the partition itself depends on
vertex labels, so it is rebuilt and re-verified for every labelled graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from degen.bounds import aks_bound
from degen.corpus import MAX_ENUM_N, graph_from_mask, orbit_classes
from degen.exact import alpha_profile
from degen.graph import Graph, degeneracy_ordering
from degen.named import complete_graph, disjoint_union, empty_graph
from degen.partition import _scan, partition_theorem, size_bound, verify_partition

MAX_EXAMPLES = 5


@dataclass
class SweepStats:
    graphs: int = 0
    cases: int = 0  # (graph, d) pairs with 0 <= d < k
    certificate_failures: int = 0
    size_bound_failures: int = 0  # partition_theorem blue side below ceil((d+1)n/(k+d+1))
    forward_size_failures: int = 0  # forward scan blue side below the same bound
    alpha_sum_failures: int = 0  # alpha_d + alpha_{k-d-1} < n
    combined_failures: int = 0  # alpha_d below max{(d+1)n/(k+d+1), n - alpha_{k-d-1}}
    examples: dict = field(default_factory=dict)

    def note(self, kind, n, mask, d, k):
        self.examples.setdefault(kind, [])
        if len(self.examples[kind]) < MAX_EXAMPLES:
            self.examples[kind].append({"n": n, "mask": mask, "d": d, "k": k})

    def merge(self, other: SweepStats):
        for name in ("graphs", "cases", "certificate_failures", "size_bound_failures",
                     "forward_size_failures", "alpha_sum_failures", "combined_failures"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        for kind, items in other.examples.items():
            mine = self.examples.setdefault(kind, [])
            mine.extend(items[: MAX_EXAMPLES - len(mine)])


def alpha_table(n: int):
    """``(class_of, reps, values)`` with ``values[c][d]`` = alpha_d of class ``c``, d < n."""
    class_of, reps = orbit_classes(n)
    values = [[r.value for r in alpha_profile(graph_from_mask(n, rep), max(n - 1, 0))] for rep in reps]
    return class_of, reps, values


def partition_sweep_n(n: int) -> SweepStats:
    stats = SweepStats()
    class_of, _, values = alpha_table(n)
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_mask(n, mask)
        stats.graphs += 1
        ordering = degeneracy_ordering(g)
        k = ordering[1]
        alpha = values[class_of[mask]]
        forward = ordering[0].order
        for d in range(k):
            stats.cases += 1
            need = size_bound(n, k, d)
            p = partition_theorem(g, d, ordering=ordering)
            report = verify_partition(g, p)
            if not report.ok:
                stats.certificate_failures += 1
                stats.note("certificate", n, mask, d, k)
            if len(p.blue) < need:
                stats.size_bound_failures += 1
                stats.note("size_bound", n, mask, d, k)
            if len(_scan(g, forward, d)[0]) < need:
                stats.forward_size_failures += 1
                stats.note("forward_size", n, mask, d, k)
            other = alpha[k - d - 1]
            if alpha[d] + other < n:
                stats.alpha_sum_failures += 1
                stats.note("alpha_sum", n, mask, d, k)
            if alpha[d] * (k + d + 1) < (d + 1) * n or alpha[d] < n - other:
                stats.combined_failures += 1
                stats.note("combined", n, mask, d, k)
    return stats


def partition_sweep(max_n: int = MAX_ENUM_N) -> SweepStats:
    total = SweepStats()
    for n in range(1, max_n + 1):
        total.merge(partition_sweep_n(n))
    return total


def integer_partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - part, part):
            yield (part,) + rest


def clique_union(parts) -> Graph:
    return disjoint_union(*(complete_graph(p) for p in parts)) if parts else empty_graph(0)


@dataclass
class AksStats:
    checked: int = 0
    violations: list = field(default_factory=list)
    clique_unions: int = 0
    clique_union_mismatches: list = field(default_factory=list)


def aks_sweep(max_n: int = MAX_ENUM_N) -> AksStats:
    """alpha_d >= the AKS sum on one graph per isomorphism class (both sides
    are relabelling-invariant), and equality on every disjoint union of cliques."""
    stats = AksStats()
    for n in range(1, max_n + 1):
        _, reps, values = alpha_table(n)
        for rep, alphas in zip(reps, values):
            g = graph_from_mask(n, rep)
            for d in range(n):
                stats.checked += 1
                bound = aks_bound(g, d)
                if alphas[d] < bound:
                    stats.violations.append((n, rep, d, alphas[d], bound))
        for parts in integer_partitions(n):
            g = clique_union(parts)
            stats.clique_unions += 1
            for d, res in enumerate(alpha_profile(g, n - 1)):
                if Fraction(res.value) != aks_bound(g, d):
                    stats.clique_union_mismatches.append((parts, d, res.value, aks_bound(g, d)))
    return stats
