"""Undirected simple graphs, all-pairs BFS distances and degree/diameter statistics."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

# dist[u, v]; int16 is plenty, diameters of the target graphs are tiny
DistanceMatrix = np.ndarray


class GraphError(ValueError):
    """Raised for malformed or disconnected graph input."""


@dataclass(frozen=True)
class Graph:
    """Immutable connected simple graph on vertices ``0..vertex_count-1``.

    ``labels`` optionally carries one ground-set bitmask per vertex (bit ``e-1``
    stands for element ``e``).  ``johnson`` is ``(n, k)`` only when the graph is
    exactly J(n, k) in canonical vertex order; the solver relies on that flag to
    exploit the symmetric group acting on the ground set.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[int, ...]] = None
    johnson: Optional[tuple[int, int]] = field(default=None, compare=False)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def label_index(self) -> dict[int, int]:
        if self.labels is None:
            raise GraphError("graph has no vertex labels")
        return {lab: i for i, lab in enumerate(self.labels)}

    def indices_of(self, masks: Iterable[int]) -> list[int]:
        """Sorted vertex indices of the given label bitmasks."""
        index = self.label_index
        try:
            return sorted(index[m] for m in masks)
        except KeyError as exc:
            raise GraphError(f"label {exc.args[0]:#b} is not a vertex of this graph") from None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        if self.edges:
            e = np.asarray(self.edges)
            a[e[:, 0], e[:, 1]] = True
            a[e[:, 1], e[:, 0]] = True
        return a


@dataclass(frozen=True)
class GraphStats:
    min_degree: int
    max_degree: int
    diameter: int
    vertex_count: int
    edge_count: int

    @property
    def regular(self) -> bool:
        return self.min_degree == self.max_degree


def build_graph(
    vertex_count: int,
    edge_list: Iterable[Sequence[int]],
    labels: Optional[Sequence[int]] = None,
    johnson: Optional[tuple[int, int]] = None,
) -> Graph:
    """Validate input and return a connected :class:`Graph`.

    Duplicate edges (in either orientation) are merged; edges are stored as
    ``(u, v)`` with ``u < v`` in lexicographic order.
    """
    if vertex_count < 1:
        raise GraphError("vertex_count must be positive")
    edges = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    if labels is not None:
        labels = tuple(int(x) for x in labels)
        if len(labels) != vertex_count:
            raise GraphError("need exactly one label per vertex")
        if len(set(labels)) != vertex_count:
            raise GraphError("vertex labels must be distinct")
        if len({lab.bit_count() for lab in labels}) > 1:
            raise GraphError("vertex labels must all have the same cardinality")
    g = Graph(vertex_count, tuple(sorted(edges)), labels, johnson)
    _check_connected(g)
    return g


def _check_connected(g: Graph) -> None:
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    if not all(seen):
        other = seen.index(False)
        raise GraphError(
            f"graph is disconnected: vertex 0 and vertex {other} lie in different components"
        )


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """Exact hop distances by breadth-first search from every source.

    All sources advance one level at a time; a level step is a boolean
    frontier-times-adjacency product, so the whole sweep costs
    ``diameter`` matrix products.
    """
    nv = graph.vertex_count
    adj = graph.adjacency_matrix().astype(np.float32)
    dist = np.full((nv, nv), -1, dtype=np.int16)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(nv, dtype=bool)
    reached = frontier.copy()
    level = 0
    while True:
        level += 1
        nxt = (frontier.astype(np.float32) @ adj) > 0
        nxt &= ~reached
        if not nxt.any():
            break
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    if (dist < 0).any():
        raise GraphError("graph is disconnected")
    dist.setflags(write=False)
    return dist


def graph_stats(graph: Graph, dist: Optional[DistanceMatrix] = None) -> GraphStats:
    if dist is None:
        dist = all_pairs_distances(graph)
    degrees = [graph.degree(v) for v in range(graph.vertex_count)]
    return GraphStats(
        min_degree=min(degrees),
        max_degree=max(degrees),
        diameter=int(dist.max()),
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
    )


def label_elements(mask: int) -> list[int]:
    """Ground elements (1-based) of a label bitmask."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def to_json(graph: Graph) -> dict:
    if graph.labels is not None:
        n = graph.johnson[0] if graph.johnson else max(graph.labels).bit_length()
        vertices = [label_elements(lab) for lab in graph.labels]
    else:
        n = graph.vertex_count
        vertices = None
    return {
        "n": n,
        "k": graph.johnson[1] if graph.johnson else None,
        "vertices": vertices,
        "edges": [list(e) for e in graph.edges],
    }


def from_json(data: dict) -> Graph:
    """Inverse of :func:`to_json`.

    A document with ``"k"`` set must describe J(n, k) exactly (canonical vertex
    order, full edge set); anything else is rejected.
    """
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    if data.get("k") is not None:
        from johnsondim.johnson import johnson_graph

        ref = johnson_graph(int(data["n"]), int(data["k"]))
        got = build_graph(len(vertices), edges, [_mask(v) for v in vertices])
        if got.labels != ref.labels or got.edges != ref.edges:
            raise GraphError("document claims J(n, k) but vertices/edges do not match")
        return ref
    if vertices is not None:
        return build_graph(len(vertices), edges, [_mask(v) for v in vertices])
    return build_graph(int(data["n"]), edges)


def _mask(elements: Sequence[int]) -> int:
    m = 0
    for e in elements:
        if e < 1:
            raise GraphError("ground elements are 1-based")
        m |= 1 << (e - 1)
    return m
