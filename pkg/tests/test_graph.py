import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from johnsondim.graph import (
    GraphError,
    all_pairs_distances,
    build_graph,
    from_json,
    graph_stats,
    to_json,
)
from johnsondim.johnson import johnson_graph

from conftest import bfs_oracle, cycle_graph, path_graph


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    # random spanning tree plus extra edges
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    if n > 1:
        extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
        edges += [(a, b) for a, b in extra if a != b]
    return build_graph(n, edges)


def test_edges_are_canonical():
    g = build_graph(3, [(2, 1), (1, 0), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "n, edges, msg",
    [
        (3, [(0, 0), (0, 1), (1, 2)], "self-loop"),
        (3, [(0, 3)], "range"),
        (4, [(0, 1), (2, 3)], "disconnected"),
    ],
)
def test_bad_input_rejected(n, edges, msg):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_disconnected_error_names_vertices():
    with pytest.raises(GraphError, match="0.*2|2.*0"):
        build_graph(4, [(0, 1), (2, 3)])


def test_path_and_cycle_stats():
    p = graph_stats(path_graph(4))
    assert (p.min_degree, p.max_degree, p.diameter) == (1, 2, 3)
    c = graph_stats(cycle_graph(6))
    assert (c.min_degree, c.max_degree, c.diameter) == (2, 2, 3)
    assert c.regular and not p.regular


def test_single_vertex():
    g = build_graph(1, [])
    assert all_pairs_distances(g).tolist() == [[0]]


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_bfs_matches_queue_oracle(g):
    assert all_pairs_distances(g).tolist() == bfs_oracle(g)


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_metric_axioms(g):
    d = all_pairs_distances(g).astype(int)
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    n = g.vertex_count
    off = ~np.eye(n, dtype=bool)
    assert (d[off] > 0).all()
    # triangle inequality through every midpoint
    assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()


def test_distance_matrix_read_only():
    d = all_pairs_distances(path_graph(3))
    with pytest.raises(ValueError):
        d[0, 1] = 5


@pytest.mark.parametrize("graph", [path_graph(5), johnson_graph(5, 2)])
def test_json_round_trip(graph):
    doc = json.loads(json.dumps(to_json(graph)))
    assert from_json(doc) == graph


def test_json_johnson_shape():
    doc = to_json(johnson_graph(4, 2))
    assert doc["n"] == 4 and doc["k"] == 2
    assert doc["vertices"][:3] == [[1, 2], [1, 3], [2, 3]]
    assert all(a < b for a, b in doc["edges"])


def test_json_rejects_fake_johnson():
    doc = to_json(johnson_graph(4, 2))
    doc["edges"] = doc["edges"][:-1]
    with pytest.raises(GraphError):
        from_json(doc)
