from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from johnsondim.graph import GraphError, all_pairs_distances, graph_stats
from johnsondim.johnson import (
    KSubset,
    johnson_graph,
    johnson_params,
    k_subsets,
    lemma1_witness,
    parse_subsets,
    sprime,
    sprime_size,
    subset_distance,
    subset_mask,
    theorem2_set,
    theorem2_value,
)

from conftest import bfs_oracle

small_nk = st.integers(4, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n // 2)))


def test_colex_order():
    # colex on 2-subsets of [4]: 12 13 23 14 24 34
    assert k_subsets(4, 2) == [subset_mask(p) for p in [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]]


def test_j42_is_octahedron():
    g = johnson_graph(4, 2)
    assert g.vertex_count == 6 and g.edge_count == 12
    # each vertex misses exactly its complement
    for i, m in enumerate(g.labels):
        non = [j for j in range(6) if j != i and j not in g.neighbors[i]]
        assert [g.labels[j] for j in non] == [0b1111 ^ m]


def test_j52_is_petersen_complement():
    s = graph_stats(johnson_graph(5, 2))
    assert (s.vertex_count, s.edge_count, s.min_degree, s.diameter) == (10, 30, 6, 2)


@given(small_nk)
@settings(max_examples=25, deadline=None)
def test_structure_and_closed_form_distance(nk):
    n, k = nk
    g = johnson_graph(n, k)
    s = graph_stats(g)
    assert s.vertex_count == comb(n, k)
    assert s.min_degree == s.max_degree == k * (n - k)
    assert s.diameter == k
    d = all_pairs_distances(g)
    expected = [[k - (a & b).bit_count() for b in g.labels] for a in g.labels]
    assert d.tolist() == expected


def test_bfs_oracle_on_johnson():
    g = johnson_graph(6, 3)
    assert all_pairs_distances(g).tolist() == bfs_oracle(g)


def test_remap_large_k():
    p = johnson_params(7, 5)
    assert (p.n, p.k, p.requested_k, p.remapped) == (7, 2, 5, True)
    assert johnson_graph(7, 5).johnson == (7, 2)


@pytest.mark.parametrize("n, k", [(3, 5), (4, 4), (4, 0), (65, 2)])
def test_invalid_params(n, k):
    with pytest.raises(GraphError):
        johnson_graph(n, k)


def test_subset_distance():
    a, b = KSubset.of([1, 2, 3], 6), KSubset.of([3, 4, 5], 6)
    assert subset_distance(a, b) == 2


def test_sprime_j52():
    s = sprime(5, 2, 1, 2, 3)
    removed = set(k_subsets(5, 2)) - s
    assert removed == {subset_mask((1, 3)), subset_mask((2, 3))}
    assert len(s) == sprime_size(5, 2) == 8


@given(small_nk, st.data())
@settings(max_examples=40, deadline=None)
def test_sprime_size_formula(nk, data):
    n, k = nk
    x, y, z = data.draw(st.permutations(range(1, n + 1)))[:3]
    assert len(sprime(n, k, x, y, z)) == comb(n, k) - 2 * comb(n - 3, k - 2)


def test_lemma1_witness_j52():
    (a, b), (a2, c) = lemma1_witness(5, 2, 1, 2, 3, ())
    assert a == a2 == subset_mask((1, 2))
    assert {b, c} == {subset_mask((1, 3)), subset_mask((2, 3))}


@pytest.mark.parametrize("t_star", [(1,), (4, 5), (6,)])
def test_lemma1_witness_rejects_bad_t(t_star):
    with pytest.raises(GraphError):
        lemma1_witness(5, 3, 1, 2, 3, t_star)


def test_lemma1_rejects_repeated_elements():
    with pytest.raises(GraphError):
        sprime(5, 2, 1, 1, 3)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_theorem2_set_size(n):
    assert len(theorem2_set(n)) == theorem2_value(n) == comb(n, 2) - n // 2


def test_theorem2_domain():
    with pytest.raises(GraphError):
        theorem2_value(4)


def test_parse_subsets():
    assert parse_subsets("1,2; 2,3") == [subset_mask((1, 2)), subset_mask((2, 3))]
    assert parse_subsets("") == []
