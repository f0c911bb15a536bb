"""Variable neighbourhood search for small edge/mixed/vertex resolving sets.

Candidates are landmark sets of a fixed size c; the objective is the number of
item pairs that still share a coordinate vector (0 means resolving).  Each
success drops c by one.  Neighbourhood N_r swaps r landmarks for r
non-landmarks; local search takes, for each landmark in random order, the best
replacement vertex and moves as soon as that improves the objective.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from johnsondim.graph import DistanceMatrix, Graph, all_pairs_distances
from johnsondim.hitting import SolveResult
from johnsondim.resolve import is_resolving, item_matrix


@dataclass(frozen=True)
class VnsConfig:
    seed: int = 0
    max_shake: int = 3
    time_budget: float = 120.0
    target_cardinality: Optional[int] = None
    lower_bound: Optional[int] = None

    def __post_init__(self):
        if self.max_shake < 1:
            raise ValueError("max_shake must be at least 1")
        if self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


def _class_labels(rows: np.ndarray) -> np.ndarray:
    if rows.shape[1] == 0:
        return np.zeros(len(rows), dtype=np.int64)
    _, inv = np.unique(rows, axis=0, return_inverse=True)
    return inv.reshape(-1).astype(np.int64)


def _pairs_per_column(keys: np.ndarray) -> np.ndarray:
    """Number of equal pairs in each column of ``keys``."""
    m = keys.shape[0]
    srt = np.sort(keys, axis=0)
    idx = np.arange(m)[:, None]
    new_run = np.ones_like(srt, dtype=bool)
    new_run[1:] = srt[1:] != srt[:-1]
    start = np.maximum.accumulate(np.where(new_run, idx, 0), axis=0)
    return (idx - start).sum(axis=0)


class _Objective:
    def __init__(self, rows: np.ndarray):
        self.rows = rows
        self.radix = int(rows.max()) + 1
        self.nv = rows.shape[1]

    def value(self, landmarks: Sequence[int]) -> int:
        labels = _class_labels(self.rows[:, list(landmarks)])
        counts = np.bincount(labels)
        return int((counts * (counts - 1) // 2).sum())

    def best_insertions(self, base: Sequence[int]) -> np.ndarray:
        """Objective of ``base + [t]`` for every vertex t."""
        labels = _class_labels(self.rows[:, list(base)])
        keys = labels[:, None] * self.radix + self.rows
        return _pairs_per_column(keys)


def _greedy(obj: _Objective, rng: np.random.Generator) -> list[int]:
    chosen: list[int] = []
    current = obj.value(chosen)
    while current > 0 and len(chosen) < obj.nv:
        scores = obj.best_insertions(chosen).astype(float)
        scores[chosen] = np.inf
        best = np.flatnonzero(scores == scores.min())
        chosen.append(int(rng.choice(best)))
        new = obj.value(chosen)
        if new >= current:
            break
        current = new
    return chosen


def _local_search(obj: _Objective, sol: list[int], f: int, rng, deadline) -> tuple[list[int], int]:
    improved = True
    while improved and f > 0 and time.monotonic() < deadline:
        improved = False
        for pos in rng.permutation(len(sol)):
            base = sol[:pos] + sol[pos + 1 :]
            scores = obj.best_insertions(base).astype(float)
            scores[base] = np.inf
            low = scores.min()
            if low < f:
                choices = np.flatnonzero(scores == low)
                sol = base + [int(rng.choice(choices))]
                f = int(low)
                improved = True
                break
    return sol, f


def _shake(sol: list[int], r: int, nv: int, rng) -> list[int]:
    r = min(r, len(sol), nv - len(sol))
    if r <= 0:
        return list(sol)
    keep = list(rng.permutation(sol)[r:])
    outside = np.setdiff1d(np.arange(nv), sol)
    add = rng.choice(outside, size=r, replace=False)
    return [int(x) for x in keep] + [int(x) for x in add]


def _vns_fixed_size(obj, start, rng, config, deadline, counter) -> Optional[list[int]]:
    sol = list(start)
    f = obj.value(sol)
    sol, f = _local_search(obj, sol, f, rng, deadline)
    r = 1
    while f > 0 and time.monotonic() < deadline:
        counter[0] += 1
        cand = _shake(sol, r, obj.nv, rng)
        cand, fc = _local_search(obj, cand, obj.value(cand), rng, deadline)
        if fc < f:
            sol, f, r = cand, fc, 1
        else:
            if fc == f:
                sol = cand
            r = r + 1 if r < config.max_shake else 1
    return sol if f == 0 else None


def vns_upper_bound(
    graph: Graph,
    dist: Optional[DistanceMatrix],
    kind: str,
    config: VnsConfig = VnsConfig(),
) -> SolveResult:
    """Smallest resolving set of ``kind`` found within the time budget.

    The result is always verified and always has status ``upper_bound_only``.
    """
    start_time = time.monotonic()
    deadline = start_time + config.time_budget
    if dist is None:
        dist = all_pairs_distances(graph)
    rng = np.random.default_rng(config.seed)
    obj = _Objective(item_matrix(graph, dist, kind).astype(np.int32))
    floor = max(config.target_cardinality or 0, config.lower_bound or 0, 1)

    best = _greedy(obj, rng)
    if obj.value(best) != 0:
        best = list(range(graph.vertex_count))
    counter = [0]
    while len(best) > floor and time.monotonic() < deadline:
        # start from the best set with the least harmful landmark removed
        scores = [obj.value(best[:i] + best[i + 1 :]) for i in range(len(best))]
        i = int(np.argmin(scores))
        found = _vns_fixed_size(obj, best[:i] + best[i + 1 :], rng, config, deadline, counter)
        if found is None:
            break
        best = found
    witness = tuple(sorted(int(v) for v in best))
    if not is_resolving(witness, kind, graph, dist).ok:
        witness = tuple(range(graph.vertex_count))
    return SolveResult(
        "upper_bound_only",
        len(witness),
        witness,
        counter[0],
        time.monotonic() - start_time,
        extra={"seed": config.seed},
    )


def vns_best_of(
    graph: Graph,
    dist: Optional[DistanceMatrix],
    kind: str,
    seeds: Sequence[int],
    config: VnsConfig = VnsConfig(),
) -> SolveResult:
    """Independent restarts; the smallest verified set wins (ties: earliest seed)."""
    best = None
    for s in seeds:
        res = vns_upper_bound(graph, dist, kind, replace(config, seed=s))
        if best is None or res.cardinality < best.cardinality:
            best = res
        if config.target_cardinality is not None and best.cardinality <= config.target_cardinality:
            break
    return best
