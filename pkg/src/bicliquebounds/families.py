"""Graph families with known biclique counts, plus the conjectured bounds."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, from_edges

POWERSET_MAX_K = 7


@dataclass(frozen=True)
class FamilySpec:
    name: str
    param: int | tuple[int, int]
    expected_vertices: int
    expected_bicliques: int | None


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def crown_cycle(k: int) -> Graph:
    """C_k on vertices 0..k-1 with pendant k+i hung on cycle vertex i."""
    if k < 5:
        raise ValueError("crown_cycle needs k >= 5")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k + i) for i in range(k)]
    return from_edges(2 * k, edges)


def powerset_family(k: int) -> Graph:
    """Clique on 0..k-1 plus one independent vertex per nonempty subset of it.

    The subset vertex for bitmask ``s`` (1 <= s < 2^k, binary-counter order)
    is vertex ``k + s - 1`` and is adjacent to exactly the clique vertices in s.
    """
    if not 2 <= k <= POWERSET_MAX_K:
        raise ValueError(f"powerset_family needs 2 <= k <= {POWERSET_MAX_K}")
    edges = list(combinations(range(k), 2))
    for s in range(1, 1 << k):
        w = k + s - 1
        edges += [(i, w) for i in range(k) if s >> i & 1]
    return from_edges(k + (1 << k) - 1, edges)


def figure1_fixture() -> Graph:
    """Small {C4, false-twin}-free graph with a good assignment.

    Vertices: 0=v1, 1=v1', 2=v2, 3=a, 4=b, 5=x1, 6=x2, 7=x3.  v1, v1' are
    true twins and x1 sits on their edge; x2 and x3 both hang on v2 through
    the distinct edges v2a and v2b.
    """
    edges = [(0, 1), (0, 2), (1, 2), (5, 0), (5, 1),
             (2, 3), (2, 4), (3, 4), (6, 2), (6, 3), (7, 2), (7, 4)]
    return from_edges(8, edges)


FIGURE1_PATTERN = {5: (0, 1), 6: (2, 3), 7: (2, 4)}


def figure2_fixture() -> Graph:
    """K5 on 0..4 plus 21 alone vertices over distinct clique subsets.

    Uses every subset of size >= 3 (16 of them) and the first five 2-subsets in
    lexicographic order, which keeps the clique vertices twin-free and free of
    domination.  The 10 clique edges then offer at most 20 slots.
    """
    subsets = [c for r in (3, 4, 5) for c in combinations(range(5), r)]
    subsets += list(combinations(range(5), 2))[:5]
    edges = list(combinations(range(5), 2))
    for i, sub in enumerate(subsets):
        edges += [(v, 5 + i) for v in sub]
    return from_edges(5 + len(subsets), edges)


def family(name: str, k: int | None = None, b: int | None = None) -> Graph:
    if k is None and name not in ("figure1", "figure2"):
        raise ValueError(f"family {name!r} needs a parameter k")
    if name == "crown":
        return crown_cycle(k)
    if name == "powerset":
        return powerset_family(k)
    if name == "complete":
        return complete(k)
    if name == "path":
        return path(k)
    if name == "cycle":
        return cycle(k)
    if name == "bipartite":
        return complete_bipartite(k, b if b is not None else k)
    if name == "figure1":
        return figure1_fixture()
    if name == "figure2":
        return figure2_fixture()
    raise ValueError(f"unknown family {name!r}")


def family_spec(name: str, k: int, b: int | None = None) -> FamilySpec:
    if name == "crown":
        return FamilySpec(name, k, 2 * k, k)
    if name == "powerset":
        return FamilySpec(name, k, k + 2 ** k - 1, k * k)
    if name == "complete":
        return FamilySpec(name, k, k, k * (k - 1) // 2 if k >= 2 else 0)
    if name == "bipartite":
        b = k if b is None else b
        return FamilySpec(name, (k, b), k + b, 1)
    if name == "cycle":
        return FamilySpec(name, k, k, 1 if k == 4 else k)
    if name == "path":
        return FamilySpec(name, k, k, max(k - 2, 1) if k >= 2 else 0)
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------- conjectures

def powerset_order(k: int) -> int:
    return k + 2 ** k - 1


def bracket(n: int) -> int:
    """The k with k + 2^k - 1 <= n < (k+1) + 2^(k+1) - 1."""
    if n < 2:
        raise ValueError("bracket needs n >= 2")
    k = 1
    while powerset_order(k + 1) <= n:
        k += 1
    return k


def conjecture1_bound(n: int) -> int:
    k = bracket(n)
    return (n + 1) // 2 if n <= 75 else k * k


def conjecture2_bound(n: int) -> int:
    k = bracket(n)
    if n <= 75:
        return (n + 1) // 2
    return k * k + (2 * k + 1) * (n - powerset_order(k)) // (2 ** k + 1)
