"""Item distances, metric coordinates and resolvability checks.

Items are vertices and edges; the distance from edge ``uv`` to vertex ``w`` is
``min(d(u, w), d(v, w))``.  Pair checks group items by their coordinate rows
(an exact sort-based grouping) instead of comparing all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Sequence

import numpy as np

from johnsondim.graph import DistanceMatrix, Graph, all_pairs_distances

Kind = Literal["vertex", "edge", "mixed"]
KINDS: tuple[str, ...] = ("vertex", "edge", "mixed")


@dataclass(frozen=True)
class Item:
    """A vertex (``v is None``) or an edge ``(u, v)`` with ``u < v``."""

    u: int
    v: Optional[int] = None

    @classmethod
    def vertex(cls, i: int) -> "Item":
        return cls(int(i))

    @classmethod
    def edge(cls, u: int, v: int) -> "Item":
        u, v = int(u), int(v)
        if u == v:
            raise ValueError("edge endpoints must differ")
        return cls(min(u, v), max(u, v))

    @property
    def is_edge(self) -> bool:
        return self.v is not None

    def __repr__(self) -> str:
        return f"edge({self.u},{self.v})" if self.is_edge else f"vertex({self.u})"


@dataclass(frozen=True)
class ZeResult:
    count: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Optional[tuple] = None
    vector: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.ok


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def items_of(graph: Graph, kind: str) -> list[Item]:
    """Items in canonical order: vertices by index, then edges by index."""
    _check_kind(kind)
    items: list[Item] = []
    if kind in ("vertex", "mixed"):
        items.extend(Item(i) for i in range(graph.vertex_count))
    if kind in ("edge", "mixed"):
        items.extend(Item(u, v) for u, v in graph.edges)
    return items


def item_matrix(graph: Graph, dist: DistanceMatrix, kind: str) -> np.ndarray:
    """Row per item (canonical order), column per vertex: ``d(item, w)``."""
    _check_kind(kind)
    rows = []
    if kind in ("vertex", "mixed"):
        rows.append(np.asarray(dist))
    if kind in ("edge", "mixed") and graph.edges:
        e = np.asarray(graph.edges)
        rows.append(np.minimum(dist[e[:, 0]], dist[e[:, 1]]))
    return np.concatenate(rows, axis=0)


def item_distance(a: Item, w: int, dist: DistanceMatrix) -> int:
    if a.is_edge:
        return int(min(dist[a.u, w], dist[a.v, w]))
    return int(dist[a.u, w])


def coordinate_vector(a: Item, landmarks: Sequence[int], dist: DistanceMatrix) -> tuple[int, ...]:
    if len(landmarks) == 0:
        raise ValueError("landmark set must be non-empty")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError("landmark set contains duplicates")
    return tuple(item_distance(a, w, dist) for w in landmarks)


def first_collision(rows: np.ndarray) -> Optional[tuple[int, int]]:
    """Lexicographically first pair ``(i, j)``, ``i < j``, of identical rows."""
    if len(rows) < 2:
        return None
    if rows.shape[1] == 0:
        return (0, 1)
    _, inverse, counts = np.unique(rows, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    dup = counts[inverse] > 1
    if not dup.any():
        return None
    i = int(np.argmax(dup))
    same = np.nonzero(inverse == inverse[i])[0]
    return i, int(same[1])


def collision_pairs(rows: np.ndarray) -> int:
    """Number of unordered pairs of identical rows."""
    if rows.shape[1] == 0:
        m = len(rows)
        return m * (m - 1) // 2
    _, counts = np.unique(rows, axis=0, return_counts=True)
    return int((counts * (counts - 1) // 2).sum())


def is_resolving(
    landmarks: Sequence[int],
    kind: str,
    graph: Graph,
    dist: Optional[DistanceMatrix] = None,
) -> Verdict:
    """Check that every pair of items of ``kind`` gets distinct coordinates.

    On failure the verdict carries the first colliding pair (canonical item
    order) and their shared coordinate vector.
    """
    if dist is None:
        dist = all_pairs_distances(graph)
    cols = list(landmarks)
    rows = item_matrix(graph, dist, kind)[:, cols]
    hit = first_collision(rows)
    if hit is None:
        return Verdict(True)
    items = items_of(graph, kind)
    i, j = hit
    return Verdict(False, (items[i], items[j]), tuple(int(x) for x in rows[i]))


def ze(a: Item, landmarks: Sequence[int], dist: DistanceMatrix) -> ZeResult:
    """Landmarks at distance 0 from ``a``."""
    members = tuple(w for w in landmarks if item_distance(a, w, dist) == 0)
    return ZeResult(len(members), members)


def is_distance_equalizer(
    landmarks: Sequence[int],
    graph: Graph,
    dist: Optional[DistanceMatrix] = None,
) -> Verdict:
    """Every pair outside ``landmarks`` must have a landmark equidistant from both."""
    if dist is None:
        dist = all_pairs_distances(graph)
    inside = set(int(w) for w in landmarks)
    outside = [v for v in range(graph.vertex_count) if v not in inside]
    if len(outside) < 2:
        return Verdict(True)
    cols = sorted(inside)
    sub = np.asarray(dist)[np.ix_(outside, cols)]
    for i in range(len(outside) - 1):
        ok = (sub[i + 1 :] == sub[i]).any(axis=1)
        if not ok.all():
            j = i + 1 + int(np.argmin(ok))
            return Verdict(False, (outside[i], outside[j]))
    return Verdict(True)
