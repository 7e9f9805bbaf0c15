"""Immutable simple graphs over dense vertex indices.

Adjacency is stored as one Python ``int`` bitmask per vertex, so vertex sets
(neighborhoods, biclique sides, twin classes) are plain ints throughout the
package.  ``bits`` and ``mask_of`` convert between masks and index lists.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, bad encodings)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are read-only after construction and hash by content, so they
    can be shared freely between census workers.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency length {len(adj)} does not match n={n}")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if a >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(a):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, self.adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a mask."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | (1 << v)) & mask == mask for v in bits(mask))

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``mask`` plus the list of original indices."""
        keep = list(bits(mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = [mask_of(pos[u] for u in bits(self.adj[v] & mask)) for v in keep]
        return Graph(len(keep), adj), keep


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within`` (default: all)."""
    rest = g.all_mask if within is None else within
    comps = []
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rest & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v]):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        higher = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            if g.adj[v] & higher:
                return False
    return True


def is_induced_c4_free(g: Graph) -> bool:
    # An induced C4 is a nonadjacent pair whose common neighborhood is not a clique.
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if g.adj[u] >> w & 1:
                continue
            common = g.adj[u] & g.adj[w]
            for a in bits(common):
                if common & ~g.closed(a):
                    return False
    return True


def is_diamond_free(g: Graph) -> bool:
    # A diamond is an edge uv whose common neighborhood contains a nonadjacent pair.
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        for a in bits(common):
            if common & ~g.closed(a):
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove ``v``; returns the new graph and the old->new index map."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    sub, keep = g.induced(g.all_mask & ~(1 << v))
    return sub, {old: new for new, old in enumerate(keep)}


def brute_force_has_induced(g: Graph, k: int, pattern) -> bool:
    """Scan every k-subset and apply ``pattern`` to its induced subgraph.

    Slow reference used by the tests to check the fast predicates.
    """
    for combo in combinations(range(g.n), k):
        sub, _ = g.induced(mask_of(combo))
        if pattern(sub):
            return True
    return False


# ---------------------------------------------------------------- graph6

def _upper_bits(g: Graph) -> list[int]:
    return [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]


def to_graph6(g: Graph) -> str:
    """Short-form graph6 encoding (n <= 62), without header or newline."""
    if g.n > 62:
        raise GraphError(f"graph6 short form supports n <= 62, got n={g.n}")
    bitlist = _upper_bits(g)
    bitlist += [0] * (-len(bitlist) % 6)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bitlist), 6):
        val = 0
        for b in bitlist[i:i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise GraphError(f"bad graph6 length header {s[0]!r} (only n <= 62 supported)")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {(nbits + 5) // 6} for n={n}")
    vals = []
    for c in body:
        x = ord(c) - 63
        if not 0 <= x < 64:
            raise GraphError(f"invalid graph6 character {c!r}")
        vals.append(x)
    bitlist = [(x >> (5 - k)) & 1 for x in vals for k in range(6)]
    if any(bitlist[nbits:]):
        raise GraphError("graph6 padding bits are not zero")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitlist[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, adj)


# ---------------------------------------------------------------- edge list

def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"`` (0-based)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty edge list")
    try:
        header = [int(t) for t in lines[0]]
    except ValueError:
        raise GraphError(f"malformed header line: {' '.join(lines[0])!r}") from None
    if len(header) != 2:
        raise GraphError("header must be 'n m'")
    n, m = header
    if len(lines) - 1 != m:
        raise GraphError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for k, parts in enumerate(lines[1:], start=2):
        try:
            u, v = (int(t) for t in parts)
        except ValueError:
            raise GraphError(f"malformed edge on line {k}: {' '.join(parts)!r}") from None
        edges.append((u, v))
    return from_edges(n, edges)
