import json

import pytest

from bicliquebounds.bicliques import Biclique, count_bicliques, enumerate_bicliques, oracle_bicliques
from bicliquebounds.families import complete, complete_bipartite, crown_cycle, cycle, figure1_fixture, path
from bicliquebounds.graph import bits, from_edges, is_induced_c4_free
from bicliquebounds.twins import is_false_twin_free, simplicial_vertices
from bicliquebounds.witness import (
    PreconditionError,
    augment_pendants,
    build_witness,
    dumps_witness,
    lower_bound_c4,
    verify_witness,
    witness_violations,
)

from conftest import C4, connected_graphs

# a triangle 0,1,2 with a pendant triangle hung on each corner
TRIANGLE_OF_TRIANGLES = from_edges(9, [
    (0, 1), (1, 2), (0, 2),
    (0, 3), (0, 4), (3, 4),
    (1, 5), (1, 6), (5, 6),
    (2, 7), (2, 8), (7, 8),
])


def check_structure(g, w, labels):
    assert verify_witness(g, w)
    simp = simplicial_vertices(g)
    for p in labels.pairs:
        assert g.has_edge(p.owner, p.first) and g.has_edge(p.owner, p.second)
        assert g.has_edge(p.first, p.second)
    for v in bits(g.all_mask & ~simp):
        b = w[v]
        assert b.star_center(v)
        assert not b.vertices & labels.label2(v)


def test_complete_graph_maps_to_edges():
    g = complete(5)
    w, labels = build_witness(g)
    assert len(set(w.values())) == 5 and labels.pairs == []
    assert all(len(b.a) == len(b.b) == 1 for b in w.values())
    assert verify_witness(g, w)


def test_augmented_crown():
    aug = augment_pendants(crown_cycle(5))
    g = aug.graph
    assert g.n == 20 and g.min_degree() == 2
    w, labels = build_witness(g)
    assert len(set(w.values())) == 20
    assert count_bicliques(g) == 20
    check_structure(g, w, labels)


def test_triangle_of_triangles():
    g = TRIANGLE_OF_TRIANGLES
    w, labels = build_witness(g)
    assert set(w.values()) <= oracle_bicliques(g)
    assert len(set(w.values())) == 9
    check_structure(g, w, labels)


def test_figure1_fixture_has_witness():
    g = figure1_fixture()
    w, labels = build_witness(g)
    check_structure(g, w, labels)


@pytest.mark.parametrize("g,violation", [
    (from_edges(2, [(0, 1)]), "n_lt_3"),
    (from_edges(4, [(0, 1), (1, 2), (0, 2)]), "disconnected"),
    (C4, "induced_c4"),
    (complete_bipartite(1, 2), "false_twins"),
    (crown_cycle(5), "degree_one"),
])
def test_preconditions_are_named(g, violation):
    assert violation in witness_violations(g)
    with pytest.raises(PreconditionError) as exc:
        build_witness(g)
    assert exc.value.violation == witness_violations(g)[0]


def test_verify_rejects_bad_maps():
    g = complete(5)
    w, _ = build_witness(g)
    shared = dict(w)
    shared[1] = shared[0]
    assert not verify_witness(g, shared)
    partial = dict(w)
    del partial[4]
    assert not verify_witness(g, partial)
    c5 = cycle(5)
    star = Biclique.make([0], [1])  # extendable by 4
    assert not verify_witness(c5, {v: star for v in range(5)})


def test_augment_pendants():
    aug = augment_pendants(crown_cycle(5))
    assert aug.k == 5 and len(aug.triangles) == 5
    g = aug.graph
    assert is_induced_c4_free(g) and is_false_twin_free(g)
    assert count_bicliques(g) == count_bicliques(crown_cycle(5)) + 15
    same = augment_pendants(cycle(5))
    assert same.k == 0 and same.graph == cycle(5)
    with pytest.raises(PreconditionError):
        augment_pendants(complete_bipartite(1, 2))


@pytest.mark.parametrize("k", range(5, 9))
def test_pendant_accounting_crowns(k):
    g = crown_cycle(k)
    aug = augment_pendants(g)
    assert count_bicliques(aug.graph) - count_bicliques(g) == 3 * aug.k == 3 * k


def test_lower_bound_c4():
    assert lower_bound_c4(crown_cycle(5)) == 5
    assert lower_bound_c4(complete(5)) == 5
    # spider with legs of length 2: twin-free, C4-free tree
    spider = from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert lower_bound_c4(spider) == 4 <= count_bicliques(spider)
    with pytest.raises(PreconditionError):
        lower_bound_c4(C4)
    with pytest.raises(PreconditionError):
        lower_bound_c4(path(3))


def test_witness_json():
    w, labels = build_witness(TRIANGLE_OF_TRIANGLES)
    payload = json.loads(dumps_witness(w))
    assert sorted(payload, key=int) == [str(v) for v in range(9)]
    assert all(set(rec) == {"a", "b"} for rec in payload.values())
    for rec in labels.to_json():
        assert set(rec) == {"edge", "label", "owner"} and rec["label"] in (1, 2)


@pytest.mark.parametrize("n", range(3, 9))
def test_witness_over_census(n):
    built = 0
    for g in connected_graphs(n):
        if witness_violations(g):
            continue
        bics = enumerate_bicliques(g)
        w, labels = build_witness(g)
        assert verify_witness(g, w, bics)
        assert len(bics) >= n
        built += 1
    assert built > 0
