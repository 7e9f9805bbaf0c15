import random
from pathlib import Path

import pytest

from bicliquebounds.census import generate_all_connected, ingest_graph6
from bicliquebounds.graph import from_edges, is_connected

DATA = Path(__file__).parent / "data"


def census_path(n):
    for name in (f"connected{n}.g6", f"connected{n}.g6.gz"):
        if (DATA / name).exists():
            return DATA / name
    raise FileNotFoundError(f"no census file for n={n} under {DATA}")


def connected_graphs(n):
    """All connected graphs on n vertices: internal for n <= 6, files above."""
    if n <= 6:
        return list(generate_all_connected(n))
    return list(ingest_graph6(census_path(n), strict=True))


def random_graph(rng, n, p):
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected(rng, n, p=None):
    while True:
        g = random_graph(rng, n, p if p is not None else rng.uniform(0.2, 0.7))
        if is_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(20240611)


P4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
C4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K3 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
DIAMOND = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


# one line per acceptance criterion, filled by test_acceptance.record
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
