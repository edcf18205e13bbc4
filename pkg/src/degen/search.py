"""Extremal alpha_d/n searches among graphs of degeneracy exactly k.

Two drivers: :func:`scan_stream` walks a graph6 corpus, :func:`evolve` runs a
genetic algorithm.  Every fitness value is an exact :func:`alpha_exact` call,
so a reported ratio is always achieved by its witness.
"""

from __future__ import annotations

import enum
import hashlib
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import combinations, islice
from typing import Callable, Iterable, NamedTuple

from degen.bounds import conjecture_targets
from degen.exact import EXACT_LIMIT, alpha_exact
from degen.graph import Graph, Graph6Error, degeneracy, degeneracy_ordering, parse_graph6, write_graph6

log = logging.getLogger(__name__)


class ConfigError(ValueError):
    pass


class Classification(str, enum.Enum):
    CONSISTENT = "CONSISTENT"
    TIGHT = "TIGHT"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class ExtremalRecord:
    k: int
    d: int
    best_ratio: Fraction | None
    witness: Graph | None
    n_scanned: int
    source: str  # "stream" or "evolve"
    n_matched: int = 0
    n_skipped: int = 0
    seed: int | None = None

    @property
    def witness_graph6(self) -> str | None:
        return None if self.witness is None else write_graph6(self.witness)


# ---------------------------------------------------------------- scanning


def _evaluate_line(item):
    seq, line, k, d = item
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return seq, "parse", exc, None
    if g.n > EXACT_LIMIT:
        return seq, "limit", f"n={g.n} exceeds exact-solver limit {EXACT_LIMIT}", None
    if degeneracy(g) != k:
        return seq, "filtered", None, None
    alpha = alpha_exact(g, d).value
    return seq, "ok", Fraction(alpha, g.n), line


def scan_stream(
    lines: Iterable[str],
    k: int,
    d: int,
    strict: bool = False,
    threads: int = 1,
    chunk: int = 64,
) -> ExtremalRecord:
    """Minimum alpha_d/n over graph6 lines whose graph has degeneracy exactly ``k``.

    Lines that fail to parse are logged and skipped (``strict`` re-raises with
    the line number); graphs beyond the exact solver's size limit are skipped
    with a warning.  On equal ratios the earliest line wins, whatever
    ``threads`` is.
    """
    if d < 0 or k <= d:
        raise ValueError(f"need k > d >= 0, got k={k}, d={d}")
    items = ((i, line.strip(), k, d) for i, line in enumerate(lines, 1) if line.strip())
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None

    def results():
        # bounded: at most a few chunks per worker in flight
        while batch := list(islice(items, threads * chunk * 4)):
            if pool is None:
                yield from map(_evaluate_line, batch)
            else:
                yield from pool.map(_evaluate_line, batch, chunksize=chunk)

    best = None
    witness_line = None
    scanned = matched = skipped = 0
    try:
        for seq, status, payload, line in results():
            if status == "parse":
                if strict:
                    raise Graph6Error(f"line {seq}: {payload}", payload.offset)
                log.warning("line %d: %s", seq, payload)
                skipped += 1
                continue
            scanned += 1
            if status == "limit":
                log.warning("line %d: %s", seq, payload)
                skipped += 1
            elif status == "ok":
                matched += 1
                if best is None or payload < best:
                    best, witness_line = payload, line
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    witness = parse_graph6(witness_line) if witness_line else None
    return ExtremalRecord(k, d, best, witness, scanned, "stream", matched, skipped)


# ---------------------------------------------------------------- genetic search


@dataclass(frozen=True)
class EvolveConfig:
    k: int
    d: int
    n_vertices: int = 10
    population_size: int = 20
    generations: int = 20
    mutation_rate: float = 0.05
    crossover: bool = True
    seed: int = 0
    elitism_count: int = 2

    def validate(self) -> EvolveConfig:
        if self.d < 0 or self.k <= self.d:
            raise ConfigError(f"need k > d >= 0, got k={self.k}, d={self.d}")
        if not 1 <= self.n_vertices <= EXACT_LIMIT:
            raise ConfigError(f"n_vertices must be in 1..{EXACT_LIMIT}")
        if self.k >= self.n_vertices:
            raise ConfigError(f"degeneracy {self.k} is impossible on {self.n_vertices} vertices")
        if self.population_size < 2:
            raise ConfigError("population_size must be at least 2")
        if not 0 < self.mutation_rate < 1:
            raise ConfigError("mutation_rate must lie strictly between 0 and 1")
        if not 0 <= self.elitism_count < self.population_size:
            raise ConfigError("elitism_count must be in 0..population_size-1")
        if self.generations < 0:
            raise ConfigError("generations must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        return self

    @classmethod
    def from_mapping(cls, values: dict) -> EvolveConfig:
        """Build from string-valued ``key=value`` settings."""
        types = {f.name: f.type for f in fields(cls)}
        kwargs = {}
        for key, raw in values.items():
            if key not in types:
                raise ConfigError(f"unknown setting {key!r}")
            kind = types[key]
            try:
                if kind == "bool":
                    if str(raw).lower() not in ("true", "false", "1", "0", "yes", "no"):
                        raise ValueError(raw)
                    kwargs[key] = str(raw).lower() in ("true", "1", "yes")
                elif kind == "float":
                    kwargs[key] = float(raw)
                else:
                    kwargs[key] = int(raw)
            except ValueError:
                raise ConfigError(f"bad value for {key}: {raw!r}") from None
        missing = {"k", "d"} - kwargs.keys()
        if missing:
            raise ConfigError(f"missing settings: {sorted(missing)}")
        return cls(**kwargs)


def parse_config_text(text: str) -> dict:
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {lineno}: expected key=value")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def child_rng(seed: int, *path: int) -> random.Random:
    """Independent stream for one (generation, individual) slot."""
    digest = hashlib.sha256(repr((seed,) + path).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class Repaired(NamedTuple):
    graph: Graph
    reached: bool  # degeneracy is exactly k


def repair_degeneracy(g: Graph, k: int, rng: random.Random, max_retries: int | None = None) -> Repaired:
    """Push ``g`` to degeneracy exactly ``k``.

    Too dense: delete a random edge at the last vertex of the smallest-last
    ordering (always in the innermost core) until degeneracy <= k.  Too
    sparse: add random non-edges that keep degeneracy <= k, giving up after
    ``max_retries`` rejected draws.
    """
    n = g.n
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    nbrs = [set(row) for row in g.adjacency]

    def rebuild():
        return Graph._build(n, [sorted(s) for s in nbrs])

    h = g
    ordering, cur = degeneracy_ordering(h)
    while cur > k:
        last = ordering.order[-1]
        w = rng.choice(sorted(nbrs[last]))
        nbrs[last].discard(w)
        nbrs[w].discard(last)
        h = rebuild()
        ordering, cur = degeneracy_ordering(h)
    if cur < k:
        retries = max_retries if max_retries is not None else n * n
        non_edges = [(u, v) for u, v in combinations(range(n), 2) if v not in nbrs[u]]
        rng.shuffle(non_edges)
        rejected = 0
        while cur < k and non_edges and rejected <= retries:
            u, v = non_edges.pop()
            nbrs[u].add(v)
            nbrs[v].add(u)
            trial = rebuild()
            t = degeneracy(trial)
            if t <= k:
                h, cur = trial, t
            else:
                nbrs[u].discard(v)
                nbrs[v].discard(u)
                rejected += 1
    return Repaired(h, cur == k)


def _random_individual(n, k, rng):
    # each vertex joins up to k earlier vertices of a random order: degeneracy <= k
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for t, v in enumerate(order):
        if t:
            for w in rng.sample(order[:t], rng.randint(0, min(k, t))):
                edges.append((v, w))
    return Graph.from_edges(n, edges)


def _crossover(a: Graph, b: Graph, rng):
    n = a.n
    edges = []
    for u, v in combinations(range(n), 2):
        src = a if rng.random() < 0.5 else b
        if src.has_edge(u, v):
            edges.append((u, v))
    return Graph.from_edges(n, edges)


def _mutate(g: Graph, rate, rng):
    edges = []
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v) != (rng.random() < rate):
            edges.append((u, v))
    return Graph.from_edges(g.n, edges)


def _fitness(item):
    code, d = item
    g = parse_graph6(code)
    return Fraction(alpha_exact(g, d).value, g.n)


def evolve(
    config: EvolveConfig,
    threads: int = 1,
    on_generation: Callable[[int, list[str]], None] | None = None,
) -> ExtremalRecord:
    """Genetic search for graphs with small alpha_d/n and degeneracy exactly k.

    Elitism, tournament selection of size 3, uniform crossover over vertex
    pairs, per-pair edge-toggle mutation, then degeneracy repair.  Individual
    ``i`` of generation ``t`` draws from its own RNG stream derived from
    ``(seed, t, i)``, so results do not depend on ``threads``.
    ``on_generation`` receives each generation's graph6 strings.
    """
    cfg = config.validate()
    n, k, d, size = cfg.n_vertices, cfg.k, cfg.d, cfg.population_size
    cache: dict[str, Fraction] = {}
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None

    best: Fraction | None = None
    best_code: str | None = None
    visited = 0

    def score(population):
        nonlocal best, best_code, visited
        codes = [write_graph6(g) for g in population]
        usable = [degeneracy(g) == k for g in population]
        todo = sorted({c for c, ok in zip(codes, usable) if ok and c not in cache})
        items = [(c, d) for c in todo]
        values = pool.map(_fitness, items, chunksize=4) if pool else map(_fitness, items)
        cache.update(zip(todo, values))
        fits = []
        for ok, code in zip(usable, codes):
            visited += 1
            if not ok:
                fits.append(None)
                continue
            f = cache[code]
            fits.append(f)
            if best is None or f < best:
                best, best_code = f, code
        return codes, fits

    def rank_key(fits):
        # unusable individuals (degeneracy below k) sort last
        return lambda i: (fits[i] is None, fits[i] if fits[i] is not None else 0, i)

    try:
        population = []
        for i in range(size):
            rng = child_rng(cfg.seed, 0, i)
            population.append(repair_degeneracy(_random_individual(n, k, rng), k, rng).graph)
        codes, fits = score(population)
        if on_generation:
            on_generation(0, codes)

        for gen in range(1, cfg.generations + 1):
            ranked = sorted(range(size), key=rank_key(fits))
            nxt = [population[i] for i in ranked[: cfg.elitism_count]]
            for i in range(cfg.elitism_count, size):
                rng = child_rng(cfg.seed, gen, i)

                def pick():
                    entrants = rng.sample(range(size), 3) if size >= 3 else rng.choices(range(size), k=3)
                    return population[min(entrants, key=rank_key(fits))]

                a, b = pick(), pick()
                child = _crossover(a, b, rng) if cfg.crossover else a
                child = _mutate(child, cfg.mutation_rate, rng)
                nxt.append(repair_degeneracy(child, k, rng).graph)
            population = nxt
            codes, fits = score(population)
            if on_generation:
                on_generation(gen, codes)
    finally:
        if pool is not None:
            pool.shutdown()

    witness = parse_graph6(best_code) if best_code else None
    return ExtremalRecord(k, d, best, witness, visited, "evolve", len(cache), 0, cfg.seed)


# ---------------------------------------------------------------- reporting


def classify(record: ExtremalRecord) -> Classification:
    """Compare the record with the target for (k, d).  Falling below a target
    that is only the clique upper bound contradicts nothing, so only
    conjectured targets can yield COUNTEREXAMPLE."""
    if record.best_ratio is None:
        return Classification.CONSISTENT
    target = conjecture_targets(record.k, record.d)
    if record.best_ratio == target.value:
        return Classification.TIGHT
    if record.best_ratio < target.value and target.conjectured:
        return Classification.COUNTEREXAMPLE
    return Classification.CONSISTENT


def conjecture_report(record: ExtremalRecord) -> str:
    target = conjecture_targets(record.k, record.d)
    cls = classify(record)
    kind = "conjectured value" if target.conjectured else "clique upper bound only"
    lines = [
        f"k={record.k} d={record.d} source={record.source}",
        f"graphs scanned: {record.n_scanned}, with degeneracy k: {record.n_matched}",
        f"target alpha_{record.d}({record.k}) = {target.value} ({kind})",
        f"best ratio: {record.best_ratio if record.best_ratio is not None else 'none'}",
        f"classification: {cls.value}",
    ]
    if cls is not Classification.CONSISTENT and record.witness is not None:
        lines.append(f"witness: {record.witness_graph6}")
    if cls is Classification.COUNTEREXAMPLE:
        lines.append("*** ratio below the conjectured value: verify and preserve this witness ***")
        lines.append(f"run: source={record.source} seed={record.seed} n_scanned={record.n_scanned}")
    return "\n".join(lines)

