import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from johnsondim.graph import all_pairs_distances
from johnsondim.johnson import OBSERVATION1_BASIS, johnson_graph, lemma1_witness, sprime, subset_mask, theorem2_set
from johnsondim.resolve import (
    Item,
    coordinate_vector,
    first_collision,
    is_distance_equalizer,
    is_resolving,
    items_of,
    ze,
)

import numpy as np

from conftest import cycle_graph, naive_resolves, path_graph


def idx(g, *pairs):
    return g.indices_of(subset_mask(p) for p in pairs)


def test_item_order_vertices_first():
    g = path_graph(3)
    assert items_of(g, "mixed") == [Item(0), Item(1), Item(2), Item(0, 1), Item(1, 2)]


def test_edge_distance_is_min_of_endpoints():
    g = path_graph(4)
    d = all_pairs_distances(g)
    assert coordinate_vector(Item.edge(1, 2), [0, 3], d) == (1, 1)


def test_coordinate_vector_rejects_bad_landmarks():
    d = all_pairs_distances(path_graph(3))
    with pytest.raises(ValueError):
        coordinate_vector(Item(0), [], d)
    with pytest.raises(ValueError):
        coordinate_vector(Item(0), [1, 1], d)


def test_observation_basis_resolves(j42):
    g, d = j42
    assert is_resolving(g.indices_of(OBSERVATION1_BASIS), "mixed", g, d)


def test_sprime_fails_with_lemma_witness():
    g = johnson_graph(5, 2)
    d = all_pairs_distances(g)
    s = g.indices_of(sprime(5, 2, 1, 2, 3))
    v = is_resolving(s, "edge", g, d)
    assert not v.ok
    (a, b), (_, c) = lemma1_witness(5, 2, 1, 2, 3, ())
    e1 = Item.edge(*g.indices_of([a, b]))
    e2 = Item.edge(*g.indices_of([a, c]))
    assert coordinate_vector(e1, s, d) == coordinate_vector(e2, s, d)
    assert coordinate_vector(v.witness[0], s, d) == coordinate_vector(v.witness[1], s, d) == v.vector


def test_theorem2_set_mixed_resolving():
    g = johnson_graph(6, 2)
    assert is_resolving(g.indices_of(theorem2_set(6)), "mixed", g)


def test_path_endpoint_resolves_vertices_only():
    g = path_graph(4)
    assert is_resolving([0], "vertex", g)
    assert not is_resolving([0], "mixed", g)


def test_first_collision_is_lexicographic():
    rows = np.array([[1], [2], [3], [2], [1]])
    assert first_collision(rows) == (0, 4)
    assert first_collision(np.array([[1], [2]])) is None


def test_ze_counts():
    g = path_graph(3)
    d = all_pairs_distances(g)
    assert ze(Item(1), [1, 2], d).count == 1
    assert ze(Item(0, 1), [0, 1], d).count == 2
    assert ze(Item(1, 2), [0], d).count == 0


def test_full_set_zero_entry_iff_ze():
    g = cycle_graph(5)
    d = all_pairs_distances(g)
    full = list(range(5))
    for it in items_of(g, "mixed"):
        assert (0 in coordinate_vector(it, full, d)) == (ze(it, full, d).count > 0)


def test_ze_every_edge_of_theorem2_set():
    for n in (5, 6, 7):
        g = johnson_graph(n, 2)
        d = all_pairs_distances(g)
        s = g.indices_of(theorem2_set(n))
        assert min(ze(Item(u, v), s, d).count for u, v in g.edges) >= 1


def test_equalizer_examples(j42):
    g, d = j42
    assert is_distance_equalizer(idx(g, (1, 2), (3, 4)), g, d)
    assert is_distance_equalizer(range(6), g, d)
    v = is_distance_equalizer(idx(g, (1, 2)), g, d)
    assert not v.ok
    assert {g.labels[w] for w in v.witness} == {subset_mask((3, 4)), subset_mask((1, 3))}


@given(st.integers(4, 7), st.data())
@settings(max_examples=40, deadline=None)
def test_matches_naive_check(n, data):
    g = johnson_graph(n, 2) if data.draw(st.booleans()) else cycle_graph(n + 2)
    d = all_pairs_distances(g)
    s = data.draw(st.lists(st.integers(0, g.vertex_count - 1), min_size=1, max_size=6, unique=True))
    kind = data.draw(st.sampled_from(["vertex", "edge", "mixed"]))
    assert is_resolving(s, kind, g, d).ok == naive_resolves(g, d.tolist(), s, kind)


@given(st.integers(5, 8), st.data())
@settings(max_examples=30, deadline=None)
def test_monotone_and_mixed_implies_both(n, data):
    g = johnson_graph(n, 2)
    d = all_pairs_distances(g)
    s = data.draw(st.lists(st.integers(0, g.vertex_count - 1), min_size=1, max_size=g.vertex_count, unique=True))
    extra = data.draw(st.lists(st.integers(0, g.vertex_count - 1), unique=True))
    bigger = sorted(set(s) | set(extra))
    for kind in ("vertex", "edge", "mixed"):
        if is_resolving(s, kind, g, d):
            assert is_resolving(bigger, kind, g, d)
    if is_resolving(s, "mixed", g, d):
        assert is_resolving(s, "vertex", g, d) and is_resolving(s, "edge", g, d)


@given(st.integers(4, 7), st.data())
@settings(max_examples=30, deadline=None)
def test_different_ze_means_different_vectors(n, data):
    g = johnson_graph(n, 2)
    d = all_pairs_distances(g)
    s = data.draw(st.lists(st.integers(0, g.vertex_count - 1), min_size=1, max_size=5, unique=True))
    items = items_of(g, "mixed")
    a, b = data.draw(st.sampled_from(items)), data.draw(st.sampled_from(items))
    if ze(a, s, d).count != ze(b, s, d).count:
        assert coordinate_vector(a, s, d) != coordinate_vector(b, s, d)
