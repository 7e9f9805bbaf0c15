"""Biclique counts on the extremal families.

Run from the repository root:  python docs/examples/01_extremal_families.py
"""

from bicliquebounds import count_bicliques, crown_cycle, enumerate_bicliques, powerset_family
from bicliquebounds.families import conjecture1_bound, conjecture2_bound, powerset_order

# A cycle with one pendant per cycle vertex has n = 2k vertices and only k
# bicliques, the stars centred on the cycle.  Half of n is as low as it gets.
for k in range(5, 9):
    g = crown_cycle(k)
    print(f"crown_cycle({k}): n={g.n}, bicliques={count_bicliques(g)}")

# The bicliques are all stars; print the centre and leaves of each one
for b in sorted(enumerate_bicliques(crown_cycle(5))):
    centre, leaves = (b.a, b.b) if len(b.a) == 1 else (b.b, b.a)
    print("  centre", centre[0], "leaves", leaves)

# Powerset family: a clique on k vertices plus one independent vertex per
# nonempty subset.  It has k^2 bicliques against (n+1)//2 for n = k + 2^k - 1,
# so the half bound fails from k = 7 on.
print()
for k in range(2, 8):
    g = powerset_family(k)
    c = count_bicliques(g)
    half = (g.n + 1) // 2
    flag = "below n/2" if c < half else ""
    print(f"powerset_family({k}): n={g.n:3d} bicliques={c:2d} ceil(n/2)={half:2d} {flag}")

# The two conjectured bounds agree up to n = 75 and split afterwards
print()
for n in (69, 75, 76, 134, 141, 200, powerset_order(8)):
    print(f"n={n:3d}: conjecture 1 -> {conjecture1_bound(n):3d}, conjecture 2 -> {conjecture2_bound(n):3d}")
