"""Shared fixtures and small independent oracles (plain Python, no numpy)."""

import sys
from collections import deque
from itertools import combinations

import pytest

from johnsondim.graph import build_graph


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def bfs_oracle(graph):
    """Distances by one queue-based BFS per source."""
    out = []
    for s in range(graph.vertex_count):
        d = [-1] * graph.vertex_count
        d[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in graph.neighbors[u]:
                if d[w] < 0:
                    d[w] = d[u] + 1
                    q.append(w)
        out.append(d)
    return out


def naive_items(graph, kind):
    items = []
    if kind in ("vertex", "mixed"):
        items += [(v, v) for v in range(graph.vertex_count)]
    if kind in ("edge", "mixed"):
        items += list(graph.edges)
    return items


def naive_resolves(graph, dist, landmarks, kind):
    """Pairwise comparison of coordinate tuples."""
    vecs = [tuple(min(dist[a][w], dist[b][w]) for w in landmarks) for a, b in naive_items(graph, kind)]
    return len(set(vecs)) == len(vecs)


def naive_dimension(graph, dist, kind):
    for c in range(1, graph.vertex_count + 1):
        for combo in combinations(range(graph.vertex_count), c):
            if naive_resolves(graph, dist, combo, kind):
                return c


@pytest.fixture(scope="session")
def j42():
    from johnsondim import johnson_graph, all_pairs_distances

    g = johnson_graph(4, 2)
    return g, all_pairs_distances(g)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS.values():
        terminalreporter.write_line(line)
