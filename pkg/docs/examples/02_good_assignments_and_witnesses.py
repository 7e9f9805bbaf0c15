"""Alone vertices, good assignments and the vertex-to-biclique witness.

Run from the repository root:  python docs/examples/02_good_assignments_and_witnesses.py
"""

from bicliquebounds import (
    alone_vertices,
    augment_pendants,
    build_witness,
    count_bicliques,
    crown_cycle,
    figure1_fixture,
    figure2_fixture,
    good_assignment,
    verify_witness,
)
from bicliquebounds.graph import bits

# figure1_fixture: a small C4-free graph with three alone vertices.  The
# solver finds edges for all of them (5 on a true-twin edge, 6 and 7 sharing
# the associated vertex 2 on different edges).
g = figure1_fixture()
print("alone vertices:", list(bits(alone_vertices(g))))
asg = good_assignment(g)
print("assignment:", asg.to_json())

# Every vertex gets its own maximal biclique, so there are at least n
w, labels = build_witness(g)
for v, b in sorted(w.items()):
    print(f"  {v} -> {b.a} | {b.b}")
print("witness verifies:", verify_witness(g, w), " bicliques:", count_bicliques(g), ">= n =", g.n)

# figure2_fixture: K5 with 21 alone vertices hung on distinct subsets.  The
# ten clique edges offer 20 slots, so one alone vertex is always left over.
res = good_assignment(figure2_fixture())
print()
print("figure2:", res, f"({res.max_matched} of {res.required} placed)")

# Pendant vertices are handled by hanging a triangle on each one; the count
# grows by exactly three per pendant and the witness applies to the result.
print()
base = crown_cycle(6)
aug = augment_pendants(base)
print(f"crown_cycle(6): {count_bicliques(base)} bicliques, augmented: {count_bicliques(aug.graph)} "
      f"(+{3 * aug.k} expected)")
w, _ = build_witness(aug.graph)
print("augmented witness verifies:", verify_witness(aug.graph, w))
