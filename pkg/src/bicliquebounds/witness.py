"""Constructive lower bounds for {C4, false-twin}-free graphs.

``build_witness`` assigns every vertex its own maximal biclique, which
certifies at least n bicliques.  Simplicial vertices are handled per class of
mutually adjacent simplicial vertices; some of them get an edge biclique, the
others a star centered at a non-simplicial neighbor ``v``.  Stars centered at
the same ``v`` are kept apart by labelled edge pairs owned by ``v``: a label-1
leaf and an adjacent label-2 leaf, so no star can hold both.  Each star
assigned to a simplicial vertex holds exactly one owned label-2 leaf, the
star assigned to ``v`` itself holds none.

``augment_pendants`` hangs a triangle on every degree-one vertex, which adds
exactly three bicliques per pendant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .bicliques import Biclique, enumerate_bicliques, is_maximal_biclique, maximal_independent_sets
from .graph import Graph, bits, from_edges, is_connected, is_induced_c4_free, mask_of
from .twins import (
    GoodAssignment,
    are_true_twins,
    good_assignment,
    is_false_twin_free,
    simplicial_cliques,
    simplicial_vertices,
)


class PreconditionError(ValueError):
    """The input graph is outside the class a construction is valid for."""

    def __init__(self, violation: str, message: str | None = None):
        super().__init__(message or violation)
        self.violation = violation


class WitnessDefect(RuntimeError):
    """A step the construction guarantees could not be carried out."""


@dataclass(frozen=True)
class LabeledPair:
    owner: int
    first: int   # leaf of the label-1 edge (owner, first)
    second: int  # leaf of the label-2 edge (owner, second)


@dataclass
class EdgeLabeling:
    pairs: list[LabeledPair] = field(default_factory=list)

    def label1(self, v: int) -> int:
        return mask_of(p.first for p in self.pairs if p.owner == v)

    def label2(self, v: int) -> int:
        return mask_of(p.second for p in self.pairs if p.owner == v)

    def to_json(self) -> list[dict]:
        out = []
        for p in self.pairs:
            out.append({"edge": sorted((p.owner, p.first)), "label": 1, "owner": p.owner})
            out.append({"edge": sorted((p.owner, p.second)), "label": 2, "owner": p.owner})
        return out


def witness_to_json(witness: dict[int, Biclique]) -> dict[str, dict]:
    return {str(v): b.to_json() for v, b in sorted(witness.items())}


def dumps_witness(witness: dict[int, Biclique]) -> str:
    return json.dumps(witness_to_json(witness))


def witness_violations(g: Graph, asg=None) -> list[str]:
    """Names of the build_witness preconditions that ``g`` fails."""
    out = []
    if g.n < 3:
        out.append("n_lt_3")
    if not is_connected(g):
        out.append("disconnected")
    if not is_induced_c4_free(g):
        out.append("induced_c4")
    if not is_false_twin_free(g):
        out.append("false_twins")
    if g.n and g.min_degree() < 2:
        out.append("degree_one")
    if not out:
        asg = good_assignment(g) if asg is None else asg
        if not asg.feasible:
            out.append("no_good_assignment")
    return out


def _complete_star(g: Graph, v: int, seed: int, forbidden: int) -> Biclique:
    """Lexicographically first maximal v-star with at least two leaves whose
    leaves contain ``seed`` and avoid ``forbidden``.

    Two leaves make ``v`` the unique center, which keeps the star apart from
    every edge biclique and from stars centered elsewhere.  The lowest-index
    greedy extension is tried first (it is the lex-first candidate), but it
    can stall on a single leaf that sees all of N(v), so the remaining
    maximal independent extensions are scanned as well.
    """
    if seed & ~g.adj[v] or not g.is_independent(seed) or seed & forbidden:
        raise WitnessDefect(f"invalid star seed {list(bits(seed))} at center {v}")
    blocked = seed
    for u in bits(seed):
        blocked |= g.adj[u]
    pool = g.adj[v] & ~forbidden & ~blocked
    extensions = maximal_independent_sets(g, pool) if pool else [0]
    for ext in sorted(extensions, key=lambda m: list(bits(m))):
        leaves = seed | ext
        if leaves.bit_count() >= 2 and is_maximal_biclique(g, 1 << v, leaves):
            return Biclique.make(1 << v, leaves)
    raise WitnessDefect(f"no maximal {v}-star extends seed {list(bits(seed))}")


def _edge_biclique(u: int, v: int) -> Biclique:
    return Biclique.make(1 << u, 1 << v)


def build_witness(g: Graph, asg: GoodAssignment | None = None) -> tuple[dict[int, Biclique], EdgeLabeling]:
    """Map every vertex to a distinct maximal biclique.

    Requires a connected {C4, false-twin}-free graph on n >= 3 vertices with
    minimum degree 2 whose alone vertices admit a good assignment; raises
    PreconditionError otherwise.  Choices are made by lowest index.
    """
    asg = good_assignment(g) if asg is None else asg
    bad = witness_violations(g, asg)
    if bad:
        raise PreconditionError(bad[0], f"build_witness precondition failed: {', '.join(bad)}")

    labels = EdgeLabeling()
    if g.m == g.n * (g.n - 1) // 2:
        edges = g.edges()
        return {v: _edge_biclique(*edges[v]) for v in range(g.n)}, labels

    simp = simplicial_vertices(g)
    witness: dict[int, Biclique] = {}
    pending_z: list[LabeledPair] = []
    pending_x: list[tuple[int, LabeledPair]] = []

    for cls in simplicial_cliques(g):
        members = list(bits(cls))
        if len(members) >= 2:
            v = _owner_for(g, cls, simp)
            w1, w2 = list(bits(g.adj[v] & cls))[:2]
            pair = LabeledPair(v, w1, w2)
            labels.pairs.append(pair)
            if len(members) >= 3:
                for x, (p, q) in zip(members, combinations(members, 2)):
                    witness[x] = _edge_biclique(p, q)
            else:
                witness[w1] = _edge_biclique(w1, w2)
                pending_z.append(pair)
        else:
            x = members[0]
            v, vp = asg.slots[x]
            if are_true_twins(g, v, vp):
                witness[x] = _edge_biclique(v, vp)
            else:
                pair = LabeledPair(v, x, vp)
                labels.pairs.append(pair)
                pending_x.append((x, pair))

    for v in bits(g.all_mask & ~simp):
        witness[v] = _complete_star(g, v, labels.label1(v), labels.label2(v))

    for pair in pending_z:
        v, y, z = pair.owner, pair.first, pair.second
        seed = (labels.label1(v) & ~(1 << y)) | (1 << z)
        witness[z] = _complete_star(g, v, seed, labels.label2(v) & ~(1 << z))

    for x, pair in pending_x:
        v, vp = pair.owner, pair.second
        compatible = mask_of(p for p in bits(labels.label1(v)) if not g.has_edge(p, vp))
        seed = (1 << vp) | compatible
        witness[x] = _complete_star(g, v, seed, labels.label2(v) & ~(1 << vp))

    if len(witness) != g.n or len(set(witness.values())) != g.n:
        raise WitnessDefect("witness map is not injective")
    return witness, labels


def _owner_for(g: Graph, cls: int, simp: int) -> int:
    for v in bits(g.all_mask & ~simp):
        if (g.adj[v] & cls).bit_count() >= 2:
            return v
    raise WitnessDefect(f"no non-simplicial vertex sees two of {list(bits(cls))}")


def verify_witness(g: Graph, witness: dict[int, Biclique], bics=None) -> bool:
    if bics is None:
        bics = enumerate_bicliques(g)
    if set(witness) != set(range(g.n)):
        return False
    images = list(witness.values())
    if len(set(images)) != len(images):
        return False
    return all(b in bics for b in images)


@dataclass(frozen=True)
class Augmented:
    graph: Graph
    k: int
    triangles: list[tuple[int, int, int]]


def augment_pendants(g: Graph) -> Augmented:
    """Attach a new triangle {v, u, w} to every degree-one vertex v."""
    if not is_connected(g):
        raise PreconditionError("disconnected")
    if not is_induced_c4_free(g):
        raise PreconditionError("induced_c4")
    if not is_false_twin_free(g):
        raise PreconditionError("false_twins")
    pendants = [v for v in range(g.n) if g.degree(v) == 1]
    edges = g.edges()
    triangles = []
    for i, v in enumerate(pendants):
        u, w = g.n + 2 * i, g.n + 2 * i + 1
        edges += [(v, u), (v, w), (u, w)]
        triangles.append((v, u, w))
    return Augmented(from_edges(g.n + 2 * len(pendants), edges), len(pendants), triangles)


def lower_bound_c4(g: Graph) -> int:
    """n - k, with k the number of degree-one vertices, for the C4 class."""
    if g.n < 3:
        raise PreconditionError("n_lt_3")
    if not is_connected(g):
        raise PreconditionError("disconnected")
    if not is_induced_c4_free(g):
        raise PreconditionError("induced_c4")
    if not is_false_twin_free(g):
        raise PreconditionError("false_twins")
    if not good_assignment(g).feasible:
        raise PreconditionError("no_good_assignment")
    return g.n - sum(1 for v in range(g.n) if g.degree(v) == 1)
