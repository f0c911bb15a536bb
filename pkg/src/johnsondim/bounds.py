"""Closed-form and hitting-set lower bounds for edge and mixed metric dimension."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from johnsondim.family import SetFamily
from johnsondim.graph import DistanceMatrix, Graph, GraphError, GraphStats, all_pairs_distances, graph_stats
from johnsondim.hitting import HittingInstance, SolveResult, min_hitting_set
from johnsondim.johnson import johnson_params, k_subsets


def ceil_log2(x: int) -> int:
    if x < 1:
        raise ValueError("log2 of a non-positive value")
    return (x - 1).bit_length()


@dataclass
class BoundsReport:
    ed_prop1: int
    ed_thm2: int
    mi1: int
    mi1_regular: bool
    mi2: int
    mhsp: Optional[int] = None
    mhs_less: Optional[int] = None
    mhsp_status: Optional[str] = None
    mhs_less_status: Optional[str] = None
    beta_le_mixed: str = "max(beta, beta_E) <= beta_M"
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def formula_bounds(stats: GraphStats) -> BoundsReport:
    """Degree/diameter lower bounds.

    * ``ed_prop1 = ceil(log2 Δ)`` and ``ed_thm2 = 1 + ceil(log2 δ)`` bound β_E;
    * ``mi1 = 1 + ceil(log2(1 + δ))`` bounds β_M (every landmark x forces
      ``1 + ceil(log2(1 + deg x))``; the minimum degree is the safe choice and
      equals the r-regular form when δ = Δ = r);
    * ``mi2`` is the least b with ``|V| + |E| <= Diam^b + b(Δ + 1)``.
    """
    if stats.diameter == 0:
        raise GraphError("bounds need at least one edge (diameter 0)")
    return BoundsReport(
        ed_prop1=ceil_log2(stats.max_degree),
        ed_thm2=1 + ceil_log2(stats.min_degree),
        mi1=1 + ceil_log2(1 + stats.min_degree),
        mi1_regular=stats.regular,
        mi2=_mi2(stats),
    )


def _mi2(stats: GraphStats) -> int:
    target = stats.vertex_count + stats.edge_count
    b = 1
    while stats.diameter**b + b * (stats.max_degree + 1) < target:
        b += 1
    return b


def w_sets(u: int, v: int, dist: DistanceMatrix) -> tuple[frozenset[int], frozenset[int]]:
    """(W_uv, W_vu): vertices strictly closer to u, resp. to v, for an edge uv."""
    if dist[u, v] != 1:
        raise GraphError(f"({u}, {v}) is not an edge")
    du, dv = dist[u], dist[v]
    closer_u = frozenset(int(w) for w in (du < dv).nonzero()[0])
    closer_v = frozenset(int(w) for w in (dv < du).nonzero()[0])
    return closer_u, closer_v


def mixed_w_family(graph: Graph, dist: Optional[DistanceMatrix] = None) -> SetFamily:
    """{W_uv, W_vu : uv ∈ E}; tags are ordered edges ``(u, v)`` naming W_uv.

    On Johnson graphs W_uv is {X : a ∈ X, b ∉ X} where u \\ v = {a}, v \\ u = {b};
    sets are grouped by ``a`` for the grouped bound.
    """
    if dist is None:
        dist = all_pairs_distances(graph)
    tagged = []
    for u, v in graph.edges:
        wu, wv = w_sets(u, v, dist)
        assert wu and wv, "W sets of an edge always contain its endpoints"
        tagged.append((sum(1 << w for w in wu), (u, v)))
        tagged.append((sum(1 << w for w in wv), (v, u)))
    if graph.johnson is None:
        return SetFamily.build(graph.vertex_count, tagged)
    labels = graph.labels

    def group_key(tag):
        u, v = tag
        return labels[u] & ~labels[v]

    return SetFamily.build(graph.vertex_count, tagged, labels, group_key)


def mhsp_family(n: int, k: int) -> SetFamily:
    """Complements of S'_{x,y,z} in J(n, k), one per ({x, y}, z).

    Each set is {{x,z}∪T, {y,z}∪T : T ⊆ [n] minus {x,y,z}, |T| = k-2}, i.e. the
    vertices containing z and exactly one of x, y.  Ground elements are the
    vertices of ``johnson_graph(n, k)``; sets are grouped by z.
    """
    if k < 2:
        raise GraphError("the family needs k >= 2")
    if n < 3 or n <= k:
        raise GraphError("the family needs n >= 3 and n > k")
    masks = k_subsets(n, k)
    tagged = []
    for x, y in combinations(range(1, n + 1), 2):
        bx, by = 1 << (x - 1), 1 << (y - 1)
        for z in range(1, n + 1):
            if z in (x, y):
                continue
            bz = 1 << (z - 1)
            s = 0
            for i, m in enumerate(masks):
                if m & bz and bool(m & bx) != bool(m & by):
                    s |= 1 << i
            tagged.append((s, (x, y, z)))
    return SetFamily.build(len(masks), tagged, masks, group_key=lambda t: t[2])


def compute_bounds(
    graph: Graph,
    dist: Optional[DistanceMatrix] = None,
    with_hitting: bool = True,
    budget: Optional[float] = None,
) -> BoundsReport:
    """Formula bounds plus, unless disabled, MHSP (Johnson graphs, k >= 2) and mhs_<."""
    if dist is None:
        dist = all_pairs_distances(graph)
    report = formula_bounds(graph_stats(graph, dist))
    if not with_hitting:
        return report
    if graph.johnson is not None and graph.johnson[1] >= 2:
        fam = mhsp_family(*graph.johnson)
        res = min_hitting_set(HittingInstance(fam, time_budget=budget))
        report.mhsp, report.mhsp_status = _bound_value(res), res.status
        report.provenance["mhsp_sets"] = len(fam)
        report.provenance["mhsp_triples"] = sum(len(p) for p in fam.provenance)
    fam = mixed_w_family(graph, dist)
    res = min_hitting_set(HittingInstance(fam, time_budget=budget))
    report.mhs_less, report.mhs_less_status = _bound_value(res), res.status
    report.provenance["w_sets"] = len(fam)
    report.provenance["w_edge_sides"] = sum(len(p) for p in fam.provenance)
    return report


def _bound_value(result: SolveResult) -> Optional[int]:
    # a timed-out search only certifies its root lower bound
    if result.optimal:
        return result.cardinality
    return result.lower_bound


def johnson_closed_forms(n: int, k: int) -> dict:
    """Known closed-form values for J(n, k); ``None`` where a formula does not apply."""
    p = johnson_params(n, k)
    n, k = p.n, p.k
    record: dict = {"n": n, "k": k, "remapped_from_k": p.requested_k if p.remapped else None}
    record["beta"] = -(-2 * n // 3) if k == 2 and n >= 6 else None
    record["beta_upper"] = k * (n + 1) // (k + 1) if k >= 3 and n >= 2 * k else None
    if k == 2 and n == 4:
        record["eqdim"] = 2
    elif k == 2 and n >= 5:
        record["eqdim"] = 3
    elif n == 2 * k and k >= 3 and k % 2 == 1:
        record["eqdim"] = comb(2 * k, k) // 2
    else:
        record["eqdim"] = None
    if k == 2 and n >= 5:
        record["beta_edge"] = record["beta_mixed"] = comb(n, 2) - n // 2
    elif k == 2 and n == 4:
        record["beta_edge"] = record["beta_mixed"] = 5
    else:
        record["beta_edge"] = record["beta_mixed"] = None
    return record


CHAIN = (
    ("MHSP <= beta_E", "mhsp", "beta_edge"),
    ("beta_E <= beta_M", "beta_edge", "beta_mixed"),
    ("mhs_< <= beta_M", "mhs_less", "beta_mixed"),
    ("beta <= beta_M", "beta", "beta_mixed"),
    ("Ed <= beta_E", "ed_thm2", "beta_edge"),
    ("ceil(log2 Δ) <= beta_E", "ed_prop1", "beta_edge"),
    ("Mi1 <= beta_M", "mi1", "beta_mixed"),
    ("Mi2 <= beta_M", "mi2", "beta_mixed"),
)


def chain_violations(values: dict) -> list[str]:
    """Inequalities of the bound chain that fail among the populated values."""
    bad = []
    for name, lo, hi in CHAIN:
        a, b = values.get(lo), values.get(hi)
        if a is not None and b is not None and a > b:
            bad.append(f"{name}: {a} > {b}")
    return bad
