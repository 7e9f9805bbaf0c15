"""Exhaustive verification of biclique bounds and structural properties.

Sources are iterables of graphs: ``generate_all_connected`` for n <= 6, or
``ingest_graph6`` over the output of an external generator.  Each graph is
processed independently (optionally in a process pool) and the per-graph
results are merged by canonical key, so reports do not depend on worker
count or input order.
"""

from __future__ import annotations

import csv
import gzip
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice, permutations
from pathlib import Path
from typing import Callable, Iterable, Iterator

import networkx as nx

from .bicliques import Biclique, count_bicliques, enumerate_bicliques
from .families import conjecture1_bound, conjecture2_bound
from .graph import (
    Graph,
    GraphError,
    bits,
    delete_vertex,
    from_edges,
    is_bipartite,
    is_connected,
    is_induced_c4_free,
    is_tree,
    is_triangle_free,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    to_edge_list,
)
from .twins import false_twin_classes, good_assignment, is_false_twin_free
from .witness import augment_pendants, build_witness, verify_witness, witness_violations

GENERATE_MAX_N = 6
TREE_SPECTRUM_RANGE = (4, 10)


# ---------------------------------------------------------------- sources

def _pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _code(n: int, adj: list[int], perm, pairs) -> int:
    code = 0
    for i, j in pairs:
        code = code << 1 | (adj[perm[i]] >> perm[j] & 1)
    return code


def canonical_code(g: Graph) -> int:
    """Smallest upper-triangle adjacency bitstring over all relabelings."""
    pairs = _pair_order(g.n)
    return min(_code(g.n, g.adj, p, pairs) for p in permutations(range(g.n)))


def canonical_form(g: Graph) -> Graph:
    """The relabeling of ``g`` whose code is ``canonical_code(g)``."""
    return _from_code(g.n, canonical_code(g), _pair_order(g.n))


def _from_code(n: int, code: int, pairs) -> Graph:
    adj = [0] * n
    for k, (i, j) in enumerate(reversed(pairs)):
        if code >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, adj)


def generate_all_connected(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on n <= 6 vertices.

    Masks are scanned in increasing order; an unseen mask starts a new class,
    all its relabelings are marked seen, and the class is represented by its
    minimal code.  Output is sorted by that code.
    """
    if not 1 <= n <= GENERATE_MAX_N:
        raise ValueError(f"internal generation supports 1 <= n <= {GENERATE_MAX_N}; ingest graph6 for larger n")
    pairs = _pair_order(n)
    perms = list(permutations(range(n)))
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        g = _from_code(n, mask, pairs)
        codes = {_code(n, g.adj, p, pairs) for p in perms}
        seen |= codes
        if is_connected(g):
            reps.append(min(codes))
    for code in sorted(reps):
        yield _from_code(n, code, pairs)


@dataclass(frozen=True)
class IngestError:
    line: int
    text: str
    message: str


def _open_text(source):
    if isinstance(source, (str, Path)):
        path = str(source)
        if path == "-":
            return sys.stdin, False
        if path.endswith(".gz"):
            return gzip.open(path, "rt"), True
        return open(path), True
    return source, False


def ingest_graph6(source, errors: list | None = None, strict: bool = False) -> Iterator[Graph]:
    """Parse one graph6 line per graph from a path, ``"-"`` or a text stream.

    Malformed lines are appended to ``errors`` as IngestError records (with
    their 1-based line number) and skipped, unless ``strict`` is set.
    """
    fh, close = _open_text(source)
    try:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                yield parse_graph6(text)
            except GraphError as exc:
                if strict:
                    raise GraphError(f"line {lineno}: {exc}") from None
                if errors is not None:
                    errors.append(IngestError(lineno, text, str(exc)))
    finally:
        if close:
            fh.close()


# ---------------------------------------------------------------- filters

@dataclass(frozen=True)
class CensusFilter:
    connected: bool = True
    false_twin_free: bool = False
    triangle_free: bool = False
    c4_free: bool = False
    bipartite: bool = False
    tree: bool = False
    good_assignment_feasible: bool = False
    min_degree: int = 0
    min_n: int = 0

    TOKENS = {
        "connected": "connected",
        "twinfree": "false_twin_free",
        "k3free": "triangle_free",
        "c4free": "c4_free",
        "bipartite": "bipartite",
        "tree": "tree",
        "good": "good_assignment_feasible",
    }

    @classmethod
    def parse(cls, text: str) -> "CensusFilter":
        """Build from a dash-joined class name such as ``k3free-twinfree``."""
        kwargs = {}
        for tok in filter(None, text.lower().split("-")):
            if tok in cls.TOKENS:
                kwargs[cls.TOKENS[tok]] = True
            elif tok.startswith("mindeg"):
                kwargs["min_degree"] = int(tok[len("mindeg"):])
            elif tok.startswith("minn"):
                kwargs["min_n"] = int(tok[len("minn"):])
            elif tok != "all":
                raise ValueError(f"unknown class token {tok!r}")
        return cls(**kwargs)

    def describe(self) -> str:
        parts = [tok for tok, attr in self.TOKENS.items() if getattr(self, attr)]
        if self.min_degree:
            parts.append(f"mindeg{self.min_degree}")
        if self.min_n:
            parts.append(f"minn{self.min_n}")
        return "-".join(parts) or "all"

    def matches(self, g: Graph) -> bool:
        if g.n < self.min_n:
            return False
        if self.min_degree and g.min_degree() < self.min_degree:
            return False
        if self.false_twin_free and not is_false_twin_free(g):
            return False
        if self.connected and not is_connected(g):
            return False
        if self.tree and not is_tree(g):
            return False
        if self.triangle_free and not is_triangle_free(g):
            return False
        if self.bipartite and not is_bipartite(g):
            return False
        if self.c4_free and not is_induced_c4_free(g):
            return False
        if self.good_assignment_feasible and not good_assignment(g).feasible:
            return False
        return True


# ---------------------------------------------------------------- per-graph context

class GraphContext:
    """Lazily computed facts about one graph, shared by all checks."""

    def __init__(self, g: Graph):
        self.g = g
        self._bics = None
        self._membership = None
        self._twin_free = None
        self._k3_free = None

    @property
    def bicliques(self) -> frozenset[Biclique]:
        if self._bics is None:
            self._bics = enumerate_bicliques(self.g)
        return self._bics

    @property
    def count(self) -> int:
        return len(self.bicliques)

    @property
    def membership(self) -> list[list[Biclique]]:
        """For every vertex, the bicliques containing it."""
        if self._membership is None:
            out = [[] for _ in range(self.g.n)]
            for b in self.bicliques:
                for v in bits(b.vertices):
                    out[v].append(b)
            self._membership = out
        return self._membership

    @property
    def twin_free(self) -> bool:
        if self._twin_free is None:
            self._twin_free = is_false_twin_free(self.g)
        return self._twin_free

    @property
    def k3_free(self) -> bool:
        if self._k3_free is None:
            self._k3_free = is_triangle_free(self.g)
        return self._k3_free


# ---------------------------------------------------------------- bounds

def half(g: Graph) -> int:
    return (g.n + 1) // 2


def n_minus_k(g: Graph) -> int:
    return g.n - sum(1 for v in range(g.n) if g.degree(v) == 1)


BOUNDS: dict[str, Callable[[Graph], int]] = {
    "half": half,
    "n-minus-k": n_minus_k,
    "n": lambda g: g.n,
    "conjecture1": lambda g: conjecture1_bound(g.n),
    "conjecture2": lambda g: conjecture2_bound(g.n),
}


# ---------------------------------------------------------------- property checks

@dataclass(frozen=True)
class PropertyCheck:
    """A named property check.  ``run`` returns None when it holds, else a detail."""

    name: str
    statement: str
    applies: Callable[[GraphContext], bool]
    run: Callable[[GraphContext], str | None]


def _twin_free(ctx):
    return ctx.g.n >= 2 and ctx.twin_free


def _k3_twin_free(ctx):
    return _twin_free(ctx) and ctx.k3_free


def _p1(ctx):
    for v in range(ctx.g.n):
        if not any(b.is_star() for b in ctx.membership[v]):
            return f"vertex {v} lies in no star biclique"
    return None


def _p2(ctx):
    g = ctx.g
    delta = g.max_degree()
    for v in range(g.n):
        if g.degree(v) == delta and g.is_independent(g.adj[v]):
            if Biclique.make(1 << v, g.adj[v]) not in ctx.bicliques:
                return f"closed neighborhood of max-degree vertex {v} is not a biclique"
    return None


def _p3(ctx):
    for v in range(ctx.g.n):
        if len(ctx.membership[v]) < ctx.g.degree(v):
            return f"vertex {v} has degree {ctx.g.degree(v)} but lies in {len(ctx.membership[v])} bicliques"
    return None


def _p4(ctx):
    g = ctx.g
    for v in range(g.n):
        h, _ = delete_vertex(g, v)
        k = len(false_twin_classes(h).nontrivial())
        lost = ctx.count - count_bicliques(h)
        if lost < k:
            return f"removing {v} creates {k} twin classes but loses only {lost} bicliques"
    return None


def _p5(ctx):
    g = ctx.g
    ones = sum(1 for v in range(g.n) if g.degree(v) == 1)
    if ones > g.n // 2:
        return f"{ones} degree-one vertices exceed floor(n/2)={g.n // 2}"
    return None


def _has_triangle(ctx):
    return _twin_free(ctx) and not ctx.k3_free


def _in_all(ctx) -> list[int]:
    total = ctx.count
    return [v for v in range(ctx.g.n) if len(ctx.membership[v]) == total]


def _p6(ctx):
    common = _in_all(ctx)
    if common:
        return f"vertices {common} lie in every biclique"
    return None


def _p7(ctx):
    g = ctx.g
    common = _in_all(ctx)
    if len(common) > 2:
        return f"{len(common)} vertices lie in every biclique"
    if len(common) == 2:
        v, w = common
        if not g.has_edge(v, w):
            return f"universal-membership vertices {v},{w} are not adjacent"
        for u in range(g.n):
            if u not in (v, w) and g.has_edge(u, v) == g.has_edge(u, w):
                return f"vertex {u} does not split between {v} and {w}"
    return None


def _p8(ctx):
    owners: dict[Biclique, int] = {}
    for v in range(ctx.g.n):
        if len(ctx.membership[v]) == 1:
            b = ctx.membership[v][0]
            owners[b] = owners.get(b, 0) + 1
    for b, k in owners.items():
        if k > 1:
            return f"{k} vertices belong only to {b}"
    return None


def _p9(ctx):
    for v in range(ctx.g.n):
        if ctx.g.degree(v) >= 2 and len(ctx.membership[v]) < 2:
            return f"vertex {v} of degree {ctx.g.degree(v)} lies in {len(ctx.membership[v])} bicliques"
    return None


def _p10(ctx):
    many = sum(1 for v in range(ctx.g.n) if len(ctx.membership[v]) >= 2)
    if many < (ctx.g.n + 1) // 2:
        return f"only {many} vertices lie in two or more bicliques"
    return None


def _p11(ctx):
    g = ctx.g
    ones = mask = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            mask |= 1 << v
            ones += 1
    if ones < 2:
        return None
    for b in ctx.bicliques:
        if (b.vertices & mask).bit_count() >= 2:
            return f"degree-one vertices {list(bits(b.vertices & mask))} share {b}"
    return None


PROPERTY_CHECKS: list[PropertyCheck] = [
    PropertyCheck("P1", "every vertex lies in a star biclique ({K3,twin}-free)", _k3_twin_free, _p1),
    PropertyCheck("P2", "v of max degree in no triangle: {v} + N(v) is a biclique", _twin_free, _p2),
    PropertyCheck("P3", "v lies in at least d(v) bicliques ({K3,twin}-free)", _k3_twin_free, _p3),
    PropertyCheck("P4", "G - v loses at least k bicliques when it has k twin classes ({K3,twin}-free)",
                  _k3_twin_free, _p4),
    PropertyCheck("P5", "at most floor(n/2) degree-one vertices (n >= 3)",
                  lambda c: c.g.n >= 3 and c.twin_free, _p5),
    PropertyCheck("P6", "with a triangle, no vertex lies in every biclique", _has_triangle, _p6),
    PropertyCheck("P7", "at most two vertices lie in every biclique, adjacent and splitting the rest",
                  _twin_free, _p7),
    PropertyCheck("P8", "at most one vertex belongs only to a given biclique (n >= 3)",
                  lambda c: c.g.n >= 3 and c.twin_free, _p8),
    PropertyCheck("P9", "a vertex of degree >= 2 lies in two bicliques", _twin_free, _p9),
    PropertyCheck("P10", "at least ceil(n/2) vertices lie in two bicliques (n >= 3)",
                  lambda c: c.g.n >= 3 and c.twin_free, _p10),
    PropertyCheck("P11", "two degree-one vertices never share a biclique (G != K2)",
                  lambda c: c.g.n >= 3 and c.twin_free, _p11),
]


def _witness_applies(ctx):
    return ctx.g.n >= 3 and ctx.twin_free and ctx.g.min_degree() >= 2 and not witness_violations(ctx.g)


def _witness_run(ctx):
    w, _ = build_witness(ctx.g)
    if not verify_witness(ctx.g, w, ctx.bicliques):
        return "witness map fails verification"
    if ctx.count < ctx.g.n:
        return f"only {ctx.count} bicliques on {ctx.g.n} vertices"
    return None


def _accounting_applies(ctx):
    g = ctx.g
    return g.n >= 3 and ctx.twin_free and is_connected(g) and is_induced_c4_free(g)


def _accounting_run(ctx):
    aug = augment_pendants(ctx.g)
    gained = count_bicliques(aug.graph) - ctx.count
    if gained != 3 * aug.k:
        return f"augmenting {aug.k} pendants added {gained} bicliques, expected {3 * aug.k}"
    return None


WITNESS_CHECK = PropertyCheck("witness", "injective vertex -> biclique witness exists and verifies",
                              _witness_applies, _witness_run)
ACCOUNTING_CHECK = PropertyCheck("pendant-accounting", "pendant triangles add exactly 3k bicliques",
                                 _accounting_applies, _accounting_run)

ALL_CHECKS = {c.name: c for c in PROPERTY_CHECKS + [WITNESS_CHECK, ACCOUNTING_CHECK]}


def bound_check(name: str) -> PropertyCheck:
    fn = BOUNDS[name]

    def run(ctx):
        b = fn(ctx.g)
        if ctx.count < b:
            return f"{ctx.count} bicliques < bound {b}"
        return None

    return PropertyCheck(f"bound:{name}", f"count_bicliques >= {name}", lambda c: True, run)


def check_by_name(name: str) -> PropertyCheck:
    if name.startswith("bound:"):
        return bound_check(name[len("bound:"):])
    return ALL_CHECKS[name]


# ---------------------------------------------------------------- reports

@dataclass(frozen=True)
class Violation:
    graph: str  # graph6 when n <= 62, else edge list
    check: str
    detail: str


@dataclass
class CensusReport:
    n: int | None
    class_description: str
    graphs_examined: int = 0
    min_bicliques: int | None = None
    argmin_graph: str | None = None
    violations: list[Violation] = field(default_factory=list)
    wall_time: float = 0.0
    checks: list[str] = field(default_factory=list)
    applications: dict[str, int] = field(default_factory=dict)
    per_n: dict[int, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        d = asdict(self)
        d["per_n"] = {str(k): v for k, v in sorted(self.per_n.items())}
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def csv_row(self) -> list:
        return [self.n, self.class_description, self.graphs_examined, self.min_bicliques, len(self.violations)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "class", "graphs", "min", "violations"])
        w.writerow(self.csv_row())
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"class {self.class_description}, n={self.n}: {self.graphs_examined} graphs",
            f"  checks: {', '.join(self.checks) or '-'}",
            f"  min bicliques: {self.min_bicliques} (attained by {self.argmin_graph})",
        ]
        for k, v in sorted(self.per_n.items()):
            lines.append(f"  n={k}: {v['graphs']} graphs, min {v['min']}")
        lines.append(f"  violations: {len(self.violations)}")
        for v in self.violations[:20]:
            lines.append(f"    {v.check} on {v.graph}: {v.detail}")
        lines.append(f"  wall time: {self.wall_time:.2f}s")
        return "\n".join(lines)


def graph_key(g: Graph) -> str:
    return to_graph6(g) if g.n <= 62 else to_edge_list(g)


def _examine(args) -> tuple | None:
    g, filt, names = args
    if not filt.matches(g):
        return None
    if g.n <= GENERATE_MAX_N:
        # small graphs are relabeled canonically so that reports do not depend
        # on the source's labeling; larger ones keep the generator's labels
        g = canonical_form(g)
    ctx = GraphContext(g)
    key = graph_key(g)
    applied, found = [], []
    for name in names:
        check = check_by_name(name)
        if not check.applies(ctx):
            continue
        applied.append(name)
        detail = check.run(ctx)
        if detail is not None:
            found.append(Violation(key, name, detail))
    return key, g.n, ctx.count, applied, found


def _merge(report: CensusReport, rec) -> None:
    key, n, count, applied, found = rec
    report.graphs_examined += 1
    if report.min_bicliques is None or (count, key) < (report.min_bicliques, report.argmin_graph):
        report.min_bicliques, report.argmin_graph = count, key
    slot = report.per_n.setdefault(n, {"graphs": 0, "min": None, "argmin": None})
    slot["graphs"] += 1
    if slot["min"] is None or (count, key) < (slot["min"], slot["argmin"]):
        slot["min"], slot["argmin"] = count, key
    for name in applied:
        report.applications[name] = report.applications.get(name, 0) + 1
    report.violations.extend(found)


def default_jobs() -> int:
    return int(os.environ.get("BICLIQUE_JOBS", "1"))


def run_checks(source: Iterable[Graph], filt: CensusFilter, names: list[str],
               jobs: int | None = None, chunksize: int = 256) -> CensusReport:
    """Apply the named checks to every graph of ``source`` passing ``filt``."""
    jobs = default_jobs() if jobs is None else jobs
    t0 = time.perf_counter()
    report = CensusReport(None, filt.describe(), checks=list(names))
    tasks = ((g, filt, names) for g in source)
    if jobs <= 1:
        results = map(_examine, tasks)
        for rec in results:
            if rec is not None:
                _merge(report, rec)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            while True:
                batch = list(islice(tasks, chunksize * jobs * 4))
                if not batch:
                    break
                for rec in pool.map(_examine, batch, chunksize=chunksize):
                    if rec is not None:
                        _merge(report, rec)
    report.violations.sort(key=lambda v: (v.graph, v.check, v.detail))
    if len(report.per_n) == 1:
        report.n = next(iter(report.per_n))
    report.wall_time = time.perf_counter() - t0
    return report


def run_bound_census(source, filt: CensusFilter, bound: str = "half", jobs: int | None = None) -> CensusReport:
    return run_checks(source, filt, [f"bound:{bound}"], jobs)


def run_property_suite(source, filt: CensusFilter | None = None, checks: list[str] | None = None,
                       jobs: int | None = None) -> CensusReport:
    filt = filt or CensusFilter(false_twin_free=True)
    names = checks or [c.name for c in PROPERTY_CHECKS]
    return run_checks(source, filt, names, jobs)


def conjecture_search(source, which: int = 1, jobs: int | None = None) -> CensusReport:
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    filt = CensusFilter(false_twin_free=True, min_n=2)
    return run_checks(source, filt, [f"bound:conjecture{which}"], jobs)


def recheck(violation: Violation) -> bool:
    """Re-run one recorded violation standalone; True if it reproduces."""
    text = violation.graph
    g = parse_edge_list(text) if "\n" in text else parse_graph6(text)
    return check_by_name(violation.check).run(GraphContext(g)) is not None


# ---------------------------------------------------------------- trees

def twin_free_trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1, [0])
        return
    for t in nx.nonisomorphic_trees(n):
        g = from_edges(n, t.edges())
        if is_false_twin_free(g):
            yield g


def tree_spectrum(n: int) -> frozenset[int]:
    """Biclique counts attained by false-twin-free trees on n vertices."""
    lo, hi = TREE_SPECTRUM_RANGE
    if not lo <= n <= hi:
        raise ValueError(f"tree_spectrum supports {lo} <= n <= {hi}")
    return frozenset(count_bicliques(t) for t in twin_free_trees(n))


def tree_spectrum_gaps(n: int) -> list[int]:
    """Values in [ceil(n/2), n-2] that no twin-free tree attains."""
    spec = tree_spectrum(n)
    return [k for k in range((n + 1) // 2, n - 1) if k not in spec]
