"""A census over every connected graph on six vertices.

Run from the repository root:  python docs/examples/03_small_census.py
Larger orders read graph6 files, e.g. tests/data/connected8.g6.
"""

from pathlib import Path

from bicliquebounds.census import (
    CensusFilter,
    generate_all_connected,
    ingest_graph6,
    run_bound_census,
    run_property_suite,
    tree_spectrum,
)

graphs = list(generate_all_connected(6))
print(len(graphs), "connected graphs on 6 vertices")

# Lower bound for the triangle-free twin-free class
report = run_bound_census(graphs, CensusFilter.parse("k3free-twinfree"), "half")
print(report.to_text())

# All structural checks at once, each on its own class
print()
print(run_property_suite(graphs).to_text())

# Which counts do twin-free trees reach?
print()
for n in range(4, 11):
    print(f"trees n={n:2d}: {sorted(tree_spectrum(n))}")

# The same machinery on an ingested file, if the test data is around
data = Path(__file__).resolve().parents[2] / "tests" / "data" / "connected7.g6"
if data.exists():
    print()
    r = run_bound_census(ingest_graph6(data), CensusFilter.parse("twinfree-bipartite"), "half")
    print(r.to_csv(), end="")
