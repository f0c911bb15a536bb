"""Metric dimensions and equidistant dimension via minimum hitting sets.

For items ``a != b`` let ``R(a, b) = {w : d(a, w) != d(b, w)}``.  A vertex set
resolves every pair of a kind exactly when it hits every ``R(a, b)`` of that
kind, so the dimension is the minimum hitting set of those sets.  Likewise a
vertex set S is distance-equalizing iff for each pair ``x, y`` it meets
``{x, y} ∪ {w : d(x, w) = d(y, w)}``: either an endpoint lies in S, or S
holds an equidistant witness.
"""

from __future__ import annotations

import logging
import time
from itertools import combinations
from typing import Optional

import numpy as np

from johnsondim.family import SetFamily
from johnsondim.graph import DistanceMatrix, Graph, all_pairs_distances
from johnsondim.hitting import HittingInstance, SolveResult, min_hitting_set
from johnsondim.resolve import (
    _check_kind,
    collision_pairs,
    is_distance_equalizer,
    is_resolving,
    item_matrix,
    items_of,
)

log = logging.getLogger(__name__)

ENUMERATION_LIMIT = 25


def _symmetry(graph: Graph) -> Optional[tuple[int, ...]]:
    # J(n, k) automorphisms include every permutation of the ground set
    return graph.labels if graph.johnson is not None else None


def _rows_to_masks(diff: np.ndarray) -> list[int]:
    packed = np.packbits(diff, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def resolving_family(graph: Graph, dist: Optional[DistanceMatrix], kind: str) -> SetFamily:
    """One set ``R(a, b)`` per unordered item pair of ``kind``, deduplicated.

    Sets equal to the whole vertex set are dropped: any non-empty landmark set
    hits them.  Provenance tags are item-index pairs in canonical item order.
    """
    _check_kind(kind)
    if dist is None:
        dist = all_pairs_distances(graph)
    rows = item_matrix(graph, dist, kind)
    nv = graph.vertex_count
    full = (1 << nv) - 1
    found: dict[int, list] = {}
    for i in range(len(rows) - 1):
        diff = rows[i + 1 :] != rows[i]
        for j, mask in enumerate(_rows_to_masks(diff), start=i + 1):
            if mask == full:
                continue
            tags = found.get(mask)
            if tags is None:
                found[mask] = [(i, j)]
            else:
                tags.append((i, j))
    sets = tuple(found)
    provenance = tuple(tuple(t) for t in found.values())
    return SetFamily(nv, sets, provenance, _symmetry(graph))


def implied_families(graph: Graph, dist: DistanceMatrix, kind: str) -> tuple[SetFamily, ...]:
    """Grouped families every resolving set of ``kind`` must hit (pruning only).

    On J(n, k), k >= 2, an edge (hence also mixed) resolving set meets every
    set of ``mhsp_family``; a mixed one also meets every W_uv.
    """
    if graph.johnson is None or graph.johnson[1] < 2 or kind == "vertex":
        return ()
    from johnsondim.bounds import mhsp_family, mixed_w_family

    fams = [mhsp_family(*graph.johnson)]
    if kind == "mixed":
        fams.append(mixed_w_family(graph, dist))
    return tuple(fams)


def _finish_dimension(graph, dist, kind, result: SolveResult, family: SetFamily) -> SolveResult:
    if result.status == "infeasible" and family.infeasible:
        items = items_of(graph, kind)
        i, j = family.provenance[family.sets.index(0)][0]
        result.extra["twins"] = (items[i], items[j])
        return result
    if result.witness == () and result.status in ("optimal", "upper_bound_only") and graph.vertex_count >= 2:
        result.witness = (0,)
        result.cardinality = 1
    if result.cardinality is not None:
        verdict = is_resolving(result.witness, kind, graph, dist)
        if not verdict.ok:
            raise RuntimeError(f"solver returned a non-resolving set: {verdict}")
    if result.optimal and result.witness:
        result.extra["minimal"] = all(
            not is_resolving([w for w in result.witness if w != drop], kind, graph, dist).ok
            for drop in result.witness
        )
    return result


def exact_dimension(
    graph: Graph,
    kind: str,
    budget: Optional[float] = None,
    dist: Optional[DistanceMatrix] = None,
) -> SolveResult:
    """Metric (``vertex``), edge or mixed metric dimension with a basis."""
    if graph.vertex_count < 2:
        raise ValueError("dimension needs at least two vertices")
    start = time.monotonic()
    if dist is None:
        dist = all_pairs_distances(graph)
    family = resolving_family(graph, dist, kind)
    log.debug("%s family: %d sets", kind, len(family))
    implied = implied_families(graph, dist, kind)
    left = None if budget is None else max(0.0, budget - (time.monotonic() - start))
    result = min_hitting_set(HittingInstance(family, time_budget=left, implied=implied))
    result.elapsed = time.monotonic() - start
    result.extra["family_size"] = len(family)
    return _finish_dimension(graph, dist, kind, result, family)


def brute_force_dimension(
    graph: Graph,
    kind: str,
    max_cardinality: int,
    dist: Optional[DistanceMatrix] = None,
) -> Optional[int]:
    """Smallest resolving set size by total enumeration, or ``None`` if above the cap."""
    if graph.vertex_count > ENUMERATION_LIMIT:
        raise ValueError(
            f"{graph.vertex_count} vertices exceeds enumeration budget of {ENUMERATION_LIMIT}"
        )
    if dist is None:
        dist = all_pairs_distances(graph)
    rows = item_matrix(graph, dist, kind)
    for c in range(1, min(max_cardinality, graph.vertex_count) + 1):
        for combo in combinations(range(graph.vertex_count), c):
            if collision_pairs(rows[:, combo]) == 0:
                return c
    return None


def eqdim_family(graph: Graph, dist: Optional[DistanceMatrix] = None) -> SetFamily:
    if dist is None:
        dist = all_pairs_distances(graph)
    d = np.asarray(dist)
    nv = graph.vertex_count
    tagged = []
    for x in range(nv - 1):
        same = d[x + 1 :] == d[x]
        for j, mask in enumerate(_rows_to_masks(same), start=x + 1):
            tagged.append((mask | (1 << x) | (1 << j), (x, j)))
    return SetFamily.build(nv, tagged, _symmetry(graph))


def exact_eqdim(
    graph: Graph,
    dist: Optional[DistanceMatrix] = None,
    max_cardinality: Optional[int] = None,
    budget: Optional[float] = None,
) -> SolveResult:
    """Minimum distance-equalizer set.

    With ``max_cardinality`` the search only looks at sets up to that size
    and reports ``infeasible`` if none qualifies.
    """
    if dist is None:
        dist = all_pairs_distances(graph)
    start = time.monotonic()
    family = eqdim_family(graph, dist)
    result = min_hitting_set(HittingInstance(family, max_cardinality, budget))
    result.elapsed = time.monotonic() - start
    if result.cardinality is not None:
        verdict = is_distance_equalizer(result.witness, graph, dist)
        if not verdict.ok:
            raise RuntimeError(f"solver returned a non-equalizing set: {verdict}")
    return result


def brute_force_eqdim(
    graph: Graph,
    max_cardinality: int,
    dist: Optional[DistanceMatrix] = None,
) -> Optional[int]:
    """Smallest distance-equalizer set by enumeration in increasing size."""
    if graph.vertex_count > ENUMERATION_LIMIT:
        raise ValueError(
            f"{graph.vertex_count} vertices exceeds enumeration budget of {ENUMERATION_LIMIT}"
        )
    if dist is None:
        dist = all_pairs_distances(graph)
    for c in range(0, min(max_cardinality, graph.vertex_count) + 1):
        for combo in combinations(range(graph.vertex_count), c):
            if is_distance_equalizer(combo, graph, dist).ok:
                return c
    return None


def basis_labels(graph: Graph, basis) -> list:
    """Basis as element lists for labelled graphs, else as vertex indices."""
    if graph.labels is None:
        return [int(v) for v in basis]
    from johnsondim.graph import label_elements

    return [label_elements(graph.labels[v]) for v in basis]


def result_json(graph: Graph, kind: str, result: SolveResult) -> dict:
    return {
        "kind": kind,
        "value": result.cardinality,
        "status": result.status,
        "basis": basis_labels(graph, result.witness),
        "nodes": result.nodes_explored,
        "elapsed_ms": round(result.elapsed * 1000, 1),
    }

