"""Command-line front end.

Results go to stdout as JSON (one object per result); diagnostics go to
stderr.  Exit codes:

    0  success / consistent
    1  usage error
    2  input parse error
    3  graph exceeds an exact-solver size limit
    4  counterexample to a conjectured value found
    5  internal verification failure
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import platform
import sys
import time
from fractions import Fraction

from degen import __version__
from degen.bounds import (
    aks_bound,
    conjecture_targets,
    lemma1_falsifier,
    lemma2_falsifier,
    theorem1_bound,
    theorem1_combined,
    theorem2_bound,
)
from degen.corpus import bundled_corpus, corpus_lines
from degen.exact import EXACT_LIMIT, SizeLimitError, alpha_brute, alpha_exact
from degen.graph import Graph6Error, degeneracy_ordering, has_triangle, parse_graph6, read_graph6_lines
from degen.partition import partition_theorem, verify_partition
from degen.search import (
    Classification,
    ConfigError,
    EvolveConfig,
    classify,
    conjecture_report,
    evolve,
    parse_config_text,
    scan_stream,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_COUNTEREXAMPLE = 4
EXIT_INTERNAL = 5

THREADS_ENV = "DEGEN_THREADS"

log = logging.getLogger("degen")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def ratio(x: Fraction | int | None) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _jsonable(v):
    if isinstance(v, Fraction):
        return ratio(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    return v


def digest(chunks) -> dict:
    h = hashlib.sha256()
    size = 0
    for c in chunks:
        b = c.encode()
        h.update(b)
        size += len(b)
    return {"bytes": size, "sha256": h.hexdigest()}


class _HashingLines:
    """Iterate lines while accumulating a digest of everything read."""

    def __init__(self, lines):
        self._lines = lines
        self._h = hashlib.sha256()
        self.bytes = 0
        self.count = 0

    def __iter__(self):
        for line in self._lines:
            b = line.encode()
            self._h.update(b)
            self.bytes += len(b)
            self.count += 1
            yield line

    def summary(self):
        return {"lines": self.count, "bytes": self.bytes, "sha256": self._h.hexdigest()}


def manifest(args, inputs=None, seed=None) -> dict:
    # threads only changes scheduling, never results, so it stays out
    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("func", "input", "verbose", "threads") and not k.startswith("_")
    }
    return {
        "subcommand": args.command,
        "params": params,
        "inputs": inputs,
        "versions": {"degen": __version__, "python": platform.python_version()},
        "seed": seed,
    }


def emit(obj) -> None:
    sys.stdout.write(json.dumps(_jsonable(obj), sort_keys=True) + "\n")


def _open_lines(path):
    if path in (None, "-"):
        return sys.stdin
    return open(path)


def _default_threads():
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def _graph_records(args):
    """Yield (lineno, line, graph) for valid lines; log and count bad ones."""
    bad = 0
    with _open_lines(args.input) as fh:
        lines = [line for line in fh]
    for lineno, item in read_graph6_lines(lines):
        if isinstance(item, Graph6Error):
            log.error("line %d: %s", lineno, item)
            bad += 1
            continue
        yield lineno, lines[lineno - 1].strip(), item
    args._bad_lines = bad


# ---------------------------------------------------------------- subcommands


def cmd_degeneracy(args) -> int:
    for _, line, g in _graph_records(args):
        ordering, k = degeneracy_ordering(g)
        emit(
            {
                "graph6": line,
                "n": g.n,
                "m": g.m,
                "degeneracy": k,
                "ordering": list(ordering.order),
                "manifest": manifest(args, digest([line])),
            }
        )
    return EXIT_PARSE if args._bad_lines else EXIT_OK


def cmd_partition(args) -> int:
    status = EXIT_OK
    for _, line, g in _graph_records(args):
        p = partition_theorem(g, args.d)
        report = verify_partition(g, p)
        emit(
            {
                "graph6": line,
                "n": g.n,
                "d": p.d,
                "k": p.k,
                "blue": sorted(p.blue),
                "red": sorted(p.red),
                "blue_witness": list(p.blue_witness.order),
                "red_witness": list(p.red_witness.order) if p.red_witness is not None else None,
                "checks": [
                    {"name": c.name, "passed": c.passed, "required": c.required, "detail": c.detail}
                    for c in report.checks
                ],
                "ok": report.ok,
                "manifest": manifest(args, digest([line])),
            }
        )
        if not report.ok:
            log.error("line %s: partition failed verification: %s", line, report.failures())
            status = EXIT_INTERNAL
    if status == EXIT_OK and args._bad_lines:
        status = EXIT_PARSE
    return status


def cmd_alpha(args) -> int:
    solver = alpha_exact if args.method == "exact" else alpha_brute
    status = EXIT_OK
    for lineno, line, g in _graph_records(args):
        try:
            res = solver(g, args.d)
        except SizeLimitError as exc:
            log.error("line %d: %s", lineno, exc)
            status = EXIT_SIZE
            continue
        emit(
            {
                "graph6": line,
                "n": g.n,
                "d": res.d,
                "method": args.method,
                "value": res.value,
                "witness": list(res.witness),
                "optimal": res.optimal,
                "nodes_explored": res.nodes_explored,
                "manifest": manifest(args, digest([line])),
            }
        )
    if status == EXIT_OK and args._bad_lines:
        status = EXIT_PARSE
    return status


def _bound_row(report):
    return {
        "name": report.bound_name.value,
        "value": ratio(report.value),
        "satisfied": report.satisfied,
        "context": report.context,
        "note": report.note,
    }


def cmd_bounds(args) -> int:
    n, k, d, genus = args.n, args.k, args.d, args.g
    g = None
    if args.graph is not None:
        try:
            g = parse_graph6(args.graph)
        except Graph6Error as exc:
            log.error("graph: %s", exc)
            return EXIT_PARSE
        if n is not None and n != g.n:
            raise UsageError(f"--n {n} disagrees with the graph's {g.n} vertices")
        gk = degeneracy_ordering(g)[1]
        if k is not None and k != gk:
            raise UsageError(f"--k {k} disagrees with the graph's degeneracy {gk}")
        n, k = g.n, gk
    if n is None:
        raise UsageError("give --n or a graph")
    if d is not None and d < 0:
        raise UsageError("--d must be non-negative")

    rows = []
    if k is not None and d is not None and k > d:
        rows.append({"name": "theorem1", "value": ratio(theorem1_bound(n, k, d)), "context": {"n": n, "k": k, "d": d}})
        t = conjecture_targets(k, d)
        rows.append(
            {
                "name": "conjecture_target",
                "value": ratio(t.value),
                "context": {"k": k, "d": d, "conjectured": t.conjectured},
            }
        )
    if genus is not None:
        for dd in [d] if d is not None else range(1, 6):
            if 1 <= dd <= 5:
                rows.append(
                    {"name": "theorem2", "value": ratio(theorem2_bound(n, genus, dd)), "context": {"n": n, "g": genus, "d": dd}}
                )
    if g is not None:
        for dd in [d] if d is not None else range(0, max(k, 1)):
            rows.append({"name": "aks", "value": ratio(aks_bound(g, dd)), "context": {"n": n, "d": dd}})
        if d is not None and g.n <= EXACT_LIMIT:
            rows.append(_bound_row(theorem1_combined(g, d)))
        if genus is not None:
            if not has_triangle(g):
                rows.append(_bound_row(lemma1_falsifier(g, genus)))
            rows.append(_bound_row(lemma2_falsifier(g, genus, args.lemma2_k)))
    emit({"bounds": rows, "manifest": manifest(args, digest([args.graph]) if args.graph else None)})
    return EXIT_OK


def _record_json(record, cls, args, inputs):
    return {
        "k": record.k,
        "d": record.d,
        "best_ratio": ratio(record.best_ratio),
        "witness_graph6": record.witness_graph6,
        "n_scanned": record.n_scanned,
        "n_matched": record.n_matched,
        "n_skipped": record.n_skipped,
        "seed": record.seed,
        "source": record.source,
        "classification": cls.value,
        "target": ratio(conjecture_targets(record.k, record.d).value),
        "manifest": manifest(args, inputs, record.seed),
    }


def _finish_search(record, args, inputs) -> int:
    cls = classify(record)
    emit(_record_json(record, cls, args, inputs))
    sys.stderr.write(conjecture_report(record) + "\n")
    return EXIT_COUNTEREXAMPLE if cls is Classification.COUNTEREXAMPLE else EXIT_OK


def cmd_scan(args) -> int:
    if args.d < 0 or args.k <= args.d:
        raise UsageError("need k > d >= 0")
    threads = args.threads or _default_threads()
    log.debug("threads: %d", threads)
    if args.corpus == "bundled":
        source = bundled_corpus()
    elif args.corpus == "generate":
        source = corpus_lines(args.max_n)
    else:
        source = _open_lines(args.input)
    lines = _HashingLines(source)
    try:
        record = scan_stream(lines, args.k, args.d, strict=args.strict, threads=threads)
    except Graph6Error as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    return _finish_search(record, args, lines.summary())


def cmd_evolve(args) -> int:
    settings = {}
    inputs = None
    if args.config:
        with open(args.config) as fh:
            text = fh.read()
        settings.update(parse_config_text(text))
        inputs = digest([text])
    for key in ("k", "d", "n_vertices", "population_size", "generations", "mutation_rate", "seed", "elitism_count"):
        value = getattr(args, key)
        if value is not None:
            settings[key] = str(value)
    if args.no_crossover:
        settings["crossover"] = "false"
    config = EvolveConfig.from_mapping(settings).validate()
    threads = args.threads or _default_threads()
    args.resolved = {k: getattr(config, k) for k in config.__dataclass_fields__}
    record = evolve(config, threads=threads)
    return _finish_search(record, args, inputs)


def cmd_corpus(args) -> int:
    for line in corpus_lines(args.max_n, labelled=args.labelled):
        sys.stdout.write(line + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    from degen.sweep import aks_sweep, partition_sweep

    t1 = partition_sweep(args.max_n)
    aks = aks_sweep(args.max_n)
    emit(
        {
            "partition": vars(t1),
            "aks": {
                "checked": aks.checked,
                "violations": len(aks.violations),
                "clique_unions": aks.clique_unions,
                "clique_union_mismatches": len(aks.clique_union_mismatches),
            },
            "manifest": manifest(args),
        }
    )
    failed = t1.certificate_failures or t1.alpha_sum_failures or t1.combined_failures or aks.violations
    return EXIT_INTERNAL if failed else EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="degen", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(sp):
        sp.add_argument("input", nargs="?", help="graph6 file, one graph per line (default: stdin)")

    sp = sub.add_parser("degeneracy", help="smallest-last ordering and degeneracy")
    graph_input(sp)
    sp.set_defaults(func=cmd_degeneracy)

    sp = sub.add_parser("partition", help="certified d-degenerate / (k-d-1)-degenerate split")
    sp.add_argument("--d", type=int, required=True)
    graph_input(sp)
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("alpha", help="exact alpha_d")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--method", choices=("exact", "brute"), default="exact")
    graph_input(sp)
    sp.set_defaults(func=cmd_alpha)

    sp = sub.add_parser("bounds", help="evaluate bounds for parameters and/or a graph")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--g", type=int, help="genus claim")
    sp.add_argument("--lemma2-k", type=int, default=1)
    sp.add_argument("graph", nargs="?", help="graph6 string")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("scan", help="extremal alpha_d/n over a graph6 stream")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--corpus", choices=("bundled", "generate"), help="use a built-in corpus instead of input")
    sp.add_argument("--max-n", type=int, default=7, help="order limit for --corpus generate")
    sp.add_argument("--strict", action="store_true", help="abort on the first malformed line")
    sp.add_argument("--threads", type=int, default=None)
    graph_input(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("evolve", help="genetic search for small alpha_d/n")
    sp.add_argument("--config", help="key=value settings file (flags override it)")
    sp.add_argument("--k", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--n-vertices", type=int, dest="n_vertices")
    sp.add_argument("--population-size", type=int, dest="population_size")
    sp.add_argument("--generations", type=int)
    sp.add_argument("--mutation-rate", type=float, dest="mutation_rate")
    sp.add_argument("--elitism-count", type=int, dest="elitism_count")
    sp.add_argument("--no-crossover", action="store_true")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--threads", type=int, default=None)
    sp.set_defaults(func=cmd_evolve)

    sp = sub.add_parser("corpus", help="print all graphs up to --max-n vertices as graph6")
    sp.add_argument("--max-n", type=int, default=7)
    sp.add_argument("--labelled", action="store_true", help="every labelled graph, not one per class")
    sp.set_defaults(func=cmd_corpus)

    sp = sub.add_parser("sweep", help="exhaustive partition and bound checks on small graphs")
    sp.add_argument("--max-n", type=int, default=7)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False
    log.setLevel(logging.DEBUG if args.verbose else logging.INFO)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (UsageError, ConfigError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    log.debug("wall time %.3fs", time.perf_counter() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
