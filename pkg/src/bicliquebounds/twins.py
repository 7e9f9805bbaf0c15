"""False/true twins, twin reduction, simplicial structure and good assignments."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .graph import Graph, GraphError, bits, lowest, mask_of


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[int, ...]  # masks, ordered by representative
    representatives: tuple[int, ...]

    def class_of(self, v: int) -> int:
        for c in self.classes:
            if c >> v & 1:
                return c
        raise KeyError(v)

    def nontrivial(self) -> list[int]:
        return [c for c in self.classes if c & (c - 1)]

    def as_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.classes]


def false_twin_classes(g: Graph) -> TwinPartition:
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | (1 << v)
    classes = sorted(groups.values(), key=lowest)
    return TwinPartition(tuple(classes), tuple(lowest(c) for c in classes))


def is_false_twin_free(g: Graph) -> bool:
    return len(set(g.adj)) == g.n


def tw_reduce(g: Graph) -> tuple[Graph, dict[int, int | None]]:
    """Keep one representative per false-twin class, repeated to a fixpoint.

    Returns the reduced graph and a map from every original vertex to its new
    index, or ``None`` for deleted vertices.
    """
    mapping: dict[int, int | None] = {v: v for v in range(g.n)}
    while True:
        part = false_twin_classes(g)
        if len(part.classes) == g.n:
            return g, mapping
        keep = mask_of(part.representatives)
        g, kept = g.induced(keep)
        pos = {old: new for new, old in enumerate(kept)}
        mapping = {v: (None if cur is None else pos.get(cur)) for v, cur in mapping.items()}


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    for x in (u, v):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range for n={g.n}")
    return u != v and g.closed(u) == g.closed(v)


def is_dominated(g: Graph, v: int, vp: int) -> bool:
    """True when N(v) is contained in N[vp]."""
    if v == vp:
        raise ValueError("domination needs two distinct vertices")
    return g.adj[v] & ~g.closed(vp) == 0


def simplicial_vertices(g: Graph) -> int:
    return mask_of(v for v in range(g.n) if g.is_clique(g.closed(v)))


def simplicial_cliques(g: Graph) -> list[int]:
    """Maximal sets of pairwise adjacent simplicial vertices.

    Adjacent simplicial vertices are true twins, so these are simply the
    closed-neighborhood classes of the simplicial vertices.
    """
    groups: dict[int, int] = {}
    for v in bits(simplicial_vertices(g)):
        key = g.closed(v)
        groups[key] = groups.get(key, 0) | (1 << v)
    return sorted(groups.values(), key=lowest)


def alone_vertices(g: Graph) -> int:
    simp = simplicial_vertices(g)
    return mask_of(x for x in bits(simp) if not g.adj[x] & simp)


def assignable_alone(g: Graph) -> int:
    """Alone vertices of degree at least two; the good-assignment domain."""
    return mask_of(x for x in bits(alone_vertices(g)) if g.degree(x) >= 2)


# ---------------------------------------------------------------- good assignments

def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def edge_capacity(g: Graph, u: int, v: int) -> int:
    if are_true_twins(g, u, v) or is_dominated(g, u, v) or is_dominated(g, v, u):
        return 1
    return 2


def slot_eligible(g: Graph, x: int, v: int, vp: int) -> bool:
    nx = g.adj[x]
    if v == vp or not (nx >> v & 1 and nx >> vp & 1):
        return False
    return not is_dominated(g, v, vp) or are_true_twins(g, v, vp)


@dataclass(frozen=True)
class GoodAssignment:
    """Alone vertex -> (associated vertex v, other endpoint v') of edge vv'."""

    slots: dict[int, tuple[int, int]] = field(default_factory=dict)
    feasible = True

    def to_json(self) -> list[dict]:
        return [{"alone": x, "vertex": v, "edge": [v, vp]} for x, (v, vp) in sorted(self.slots.items())]

    @classmethod
    def from_json(cls, recs: list[dict]) -> "GoodAssignment":
        slots = {}
        for r in recs:
            v, vp = r["edge"]
            if r["vertex"] != v:
                if r["vertex"] != vp:
                    raise ValueError(f"associated vertex {r['vertex']} is not an endpoint of {r['edge']}")
                v, vp = vp, v
            slots[r["alone"]] = (v, vp)
        return cls(slots)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class Infeasible:
    max_matched: int
    required: int
    partial: dict[int, tuple[int, int]] = field(default_factory=dict)
    feasible = False

    def __str__(self):
        return f"infeasible({self.max_matched})"


def good_assignment(g: Graph, domain: int | None = None) -> GoodAssignment | Infeasible:
    """Solve the assignment as a unit-capacity max flow.

    source -> alone x -> slot (v, e) -> edge e -> sink, where an edge carries
    2 units unless its endpoints are true twins or one dominates the other.
    ``domain`` restricts the alone vertices to a sub-mask of the eligible set.
    """
    full = assignable_alone(g)
    if domain is None:
        domain = full
    elif domain & ~full:
        raise GraphError(f"vertices {list(bits(domain & ~full))} are not assignable alone vertices")
    domain = list(bits(domain))
    if not domain:
        return GoodAssignment({})

    slots: list[tuple[int, int]] = []
    slot_id: dict[tuple[int, int], int] = {}
    x_slots: dict[int, list[int]] = {}
    for x in domain:
        nx = list(bits(g.adj[x]))
        for v in nx:
            for vp in nx:
                if slot_eligible(g, x, v, vp):
                    key = (v, vp)
                    if key not in slot_id:
                        slot_id[key] = len(slots)
                        slots.append(key)
                    x_slots.setdefault(x, []).append(slot_id[key])
    edges = sorted({_edge(v, vp) for v, vp in slots})
    edge_id = {e: i for i, e in enumerate(edges)}

    nx_, ns, ne = len(domain), len(slots), len(edges)
    source, sink = 0, 1 + nx_ + ns + ne
    rows, cols, caps = [], [], []

    def arc(a, b, c):
        rows.append(a)
        cols.append(b)
        caps.append(c)

    for i, x in enumerate(domain):
        arc(source, 1 + i, 1)
        for s in x_slots.get(x, []):
            arc(1 + i, 1 + nx_ + s, 1)
    for s, (v, vp) in enumerate(slots):
        arc(1 + nx_ + s, 1 + nx_ + ns + edge_id[_edge(v, vp)], 1)
    for e, (u, v) in enumerate(edges):
        arc(1 + nx_ + ns + e, sink, edge_capacity(g, u, v))

    size = sink + 1
    cap = csr_matrix((np.array(caps, dtype=np.int32), (rows, cols)), shape=(size, size))
    res = maximum_flow(cap, source, sink, method="edmonds_karp")
    flow = res.flow.tocsr()

    chosen: dict[int, tuple[int, int]] = {}
    for i, x in enumerate(domain):
        for s in x_slots.get(x, []):
            if flow[1 + i, 1 + nx_ + s] > 0:
                chosen[x] = slots[s]
                break
    if res.flow_value == len(domain):
        return GoodAssignment(chosen)
    return Infeasible(int(res.flow_value), len(domain), chosen)


def verify_good_assignment(g: Graph, asg) -> bool:
    if isinstance(asg, Infeasible):
        return False
    slots = asg.slots if isinstance(asg, GoodAssignment) else dict(asg)
    if mask_of(slots) != assignable_alone(g):
        return False
    users: dict[tuple[int, int], list[int]] = {}
    for x, (v, vp) in slots.items():
        if not slot_eligible(g, x, v, vp):
            return False
        users.setdefault(_edge(v, vp), []).append(v)
    for (u, v), assoc in users.items():
        if len(assoc) > edge_capacity(g, u, v):
            return False
        if len(set(assoc)) != len(assoc):
            return False
    return True
