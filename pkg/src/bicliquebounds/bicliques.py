"""Maximal induced bicliques: enumeration, counting and a brute-force oracle.

A biclique is a pair of disjoint, nonempty, independent vertex sets (A, B)
with every A-B pair adjacent, maximal under adding a vertex to either side.

``enumerate_bicliques`` reduces the problem to maximal cliques.  Take two
copies of every vertex, a left copy and a right copy.  Two copies on the same
side are joined when the original vertices are distinct and nonadjacent; a
left and a right copy are joined when the originals are adjacent.  Cliques of
this doubled graph are exactly the pairs (A, B) above (a vertex can never sit
on both sides), and the maximal cliques with both sides nonempty are exactly
the bicliques.  Pivoted Bron-Kerbosch lists them with int bitsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, bits, component_masks, is_induced_c4_free, lowest, mask_of

ORACLE_MAX_N = 16


@dataclass(frozen=True, order=True)
class Biclique:
    """Canonically oriented biclique: side ``a`` holds the smallest vertex."""

    amask: int
    bmask: int

    @classmethod
    def make(cls, a, b) -> "Biclique":
        """Build from two masks or two iterables of vertices, in either order."""
        am = a if isinstance(a, int) else mask_of(a)
        bm = b if isinstance(b, int) else mask_of(b)
        if not am or not bm:
            raise ValueError("biclique sides must be nonempty")
        if am & bm:
            raise ValueError("biclique sides must be disjoint")
        if lowest(bm) < lowest(am):
            am, bm = bm, am
        return cls(am, bm)

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(bits(self.amask))

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(bits(self.bmask))

    @property
    def vertices(self) -> int:
        return self.amask | self.bmask

    def __contains__(self, v: int) -> bool:
        return bool(self.vertices >> v & 1)

    def is_star(self) -> bool:
        return self.amask.bit_count() == 1 or self.bmask.bit_count() == 1

    def star_center(self, v: int) -> bool:
        """True when one side is exactly ``{v}``."""
        return self.amask == 1 << v or self.bmask == 1 << v

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json(cls, rec: dict) -> "Biclique":
        return cls.make(rec["a"], rec["b"])

    def __repr__(self):
        return f"Biclique({list(self.a)}, {list(self.b)})"


def dumps_bicliques(bics: Iterable[Biclique]) -> str:
    return json.dumps([b.to_json() for b in sorted(bics)])


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def is_maximal_biclique(g: Graph, a, b) -> bool:
    am = a if isinstance(a, int) else mask_of(a)
    bm = b if isinstance(b, int) else mask_of(b)
    if not am or not bm or am & bm:
        return False
    if not (g.is_independent(am) and g.is_independent(bm)):
        return False
    for v in bits(am):
        if g.adj[v] & bm != bm:
            return False
    for w in bits(g.all_mask & ~(am | bm)):
        nw = g.adj[w]
        if nw & am == am and not nw & bm:
            return False
        if nw & bm == bm and not nw & am:
            return False
    return True


# ---------------------------------------------------------------- oracle

def oracle_bicliques(g: Graph) -> frozenset[Biclique]:
    """Subset scan over all 2^n vertex sets; the reference for the fast path.

    Every 2-coloring of every induced bipartite subgraph is tried (one color
    choice per component, the first component pinned), so disconnected
    induced subgraphs are handled without assuming they cannot qualify.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle_bicliques is limited to n <= {ORACLE_MAX_N}, got n={g.n}")
    candidates = set()
    for s in range(1, 1 << g.n):
        if s & (s - 1) == 0:
            continue
        sides = _two_colorings(g, s)
        for x, y in sides:
            if not x or not y:
                continue
            if all(g.adj[v] & y == y for v in bits(x)):
                candidates.add(Biclique.make(x, y))
    return frozenset(c for c in candidates if _not_extendable(g, c))


def _two_colorings(g: Graph, s: int) -> list[tuple[int, int]]:
    comps = []
    for comp in component_masks(g, s):
        root = lowest(comp)
        color = {root: 0}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v] & comp):
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return []
        zero = mask_of(v for v, c in color.items() if c == 0)
        comps.append((zero, comp & ~zero))
    out = []
    first, rest = comps[0], comps[1:]
    for flips in range(1 << len(rest)):
        x, y = first
        for i, (p, q) in enumerate(rest):
            if flips >> i & 1:
                x, y = x | q, y | p
            else:
                x, y = x | p, y | q
        out.append((x, y))
    return out


def _not_extendable(g: Graph, c: Biclique) -> bool:
    a, b = c.amask, c.bmask
    for w in range(g.n):
        if (a | b) >> w & 1:
            continue
        nw = g.adj[w]
        if nw & b == b and not nw & a:
            return False
        if nw & a == a and not nw & b:
            return False
    return True


# ---------------------------------------------------------------- enumeration

def _side_graph(g: Graph) -> list[int]:
    n, full = g.n, g.all_mask
    nbr = [0] * (2 * n)
    for v in range(n):
        non = full & ~g.adj[v] & ~(1 << v)
        nbr[v] = non | (g.adj[v] << n)
        nbr[v + n] = g.adj[v] | (non << n)
    return nbr


def _bk_general(g: Graph) -> set[Biclique]:
    n = g.n
    nbr = _side_graph(g)
    low = (1 << n) - 1
    out: set[Biclique] = set()

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                a, b = r & low, r >> n
                if a and b:
                    out.add(Biclique.make(a, b))
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (nbr[u] & p).bit_count())
        for u in bits(p & ~nbr[pivot]):
            bit = 1 << u
            expand(r | bit, p & nbr[u], x & nbr[u])
            p &= ~bit
            x |= bit

    # Root each clique at its smallest original vertex, placed on the left;
    # the mirror image (that vertex on the right) is then never generated.
    for v in range(n):
        later = low & ~((2 << v) - 1)
        earlier = (1 << v) - 1
        p = nbr[v] & (later | later << n)
        x = nbr[v] & (earlier | earlier << n)
        expand(1 << v, p, x)
    return out


def maximal_independent_sets(g: Graph, within: int) -> list[int]:
    """Maximal independent sets of the subgraph induced by ``within``."""
    comp = [(g.all_mask & ~g.closed(v)) & within for v in range(g.n)]
    out = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (comp[u] & p).bit_count())
        for u in bits(p & ~comp[pivot]):
            bit = 1 << u
            expand(r | bit, p & comp[u], x & comp[u])
            p &= ~bit
            x |= bit

    expand(0, within, 0)
    return out


def _stars_c4_free(g: Graph) -> set[Biclique]:
    # Without induced C4 every biclique is a star: a center v and a maximal
    # independent subset S of N(v) that no vertex outside N[v] fully sees.
    out: set[Biclique] = set()
    for v in range(g.n):
        if not g.adj[v]:
            continue
        outside = g.all_mask & ~g.closed(v)
        for s in maximal_independent_sets(g, g.adj[v]):
            if any(g.adj[w] & s == s for w in bits(outside)):
                continue
            out.add(Biclique.make(1 << v, s))
    return out


def enumerate_bicliques(g: Graph) -> frozenset[Biclique]:
    if g.n >= 12 and is_induced_c4_free(g):
        return frozenset(_stars_c4_free(g))
    return frozenset(_bk_general(g))


def count_bicliques(g: Graph) -> int:
    return len(enumerate_bicliques(g))


def bicliques_containing(g: Graph, v: int, bics=None) -> frozenset[Biclique]:
    _check_vertex(g, v)
    if bics is None:
        bics = enumerate_bicliques(g)
    return frozenset(b for b in bics if v in b)


def star_bicliques(g: Graph, v: int, bics=None) -> frozenset[Biclique]:
    """Bicliques with one side exactly ``{v}`` (the v-stars)."""
    _check_vertex(g, v)
    if bics is None:
        bics = enumerate_bicliques(g)
    return frozenset(b for b in bics if b.star_center(v))
