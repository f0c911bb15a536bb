"""Rows of the Johnson-graph dimension table: exact values and lower bounds."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from johnsondim.bounds import chain_violations, compute_bounds
from johnsondim.graph import GraphError, all_pairs_distances
from johnsondim.johnson import johnson_graph, johnson_params
from johnsondim.solver import exact_dimension

DEFAULT_ROWS: tuple[tuple[int, int], ...] = ((6, 3), (7, 3), (8, 3), (8, 4), (9, 3), (9, 4))

# CSV header, in the printed table's column order
COLUMNS = ("n", "k", "V", "E", "beta", "beta_E", "beta_M", "Ed", "Mi1", "Mi2", "MHSP", "mhs_less")


@dataclass
class TableRow:
    n: int
    k: int
    V: Optional[int] = None
    E: Optional[int] = None
    beta: Optional[int] = None
    beta_E: Optional[int] = None
    beta_M: Optional[int] = None
    Ed: Optional[int] = None
    Mi1: Optional[int] = None
    Mi2: Optional[int] = None
    MHSP: Optional[int] = None
    mhs_less: Optional[int] = None
    status: dict = field(default_factory=dict)
    elapsed_ms: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    error: Optional[str] = None
    remapped_from_k: Optional[int] = None

    @property
    def timed_out(self) -> bool:
        return any(s == "timeout" for s in self.status.values())

    def values(self) -> dict:
        """Populated cells under the bound-chain names."""
        return {
            "beta": self.beta,
            "beta_edge": self.beta_E,
            "beta_mixed": self.beta_M,
            "ed_thm2": self.Ed,
            "mi1": self.Mi1,
            "mi2": self.Mi2,
            "mhsp": self.MHSP if self.status.get("MHSP") == "exact" else None,
            "mhs_less": self.mhs_less if self.status.get("mhs_less") == "exact" else None,
        }

    def csv_cells(self) -> list:
        return [getattr(self, c) for c in COLUMNS]

    def to_dict(self) -> dict:
        out = {c: getattr(self, c) for c in COLUMNS}
        out.update(
            status=self.status,
            elapsed_ms=self.elapsed_ms,
            violations=self.violations,
            error=self.error,
            remapped_from_k=self.remapped_from_k,
        )
        return out


def heavy(n: int, k: int) -> bool:
    """Edge/mixed exact cells that are off unless explicitly requested."""
    return k >= 3 and n >= 8


def _exact_status(result) -> str:
    return "exact" if result.optimal else "timeout"


def compute_row(
    n: int,
    k: int,
    exact_budget: float = 600.0,
    bound_budget: float = 60.0,
    extended: bool = False,
) -> TableRow:
    row = TableRow(n, k)
    try:
        params = johnson_params(n, k)
    except GraphError as exc:
        row.error = str(exc)
        return row
    if params.remapped:
        row.remapped_from_k = params.requested_k
    row.k = params.k
    g = johnson_graph(n, params.k)
    dist = all_pairs_distances(g)
    row.V, row.E = g.vertex_count, g.edge_count

    t = time.monotonic()
    bounds = compute_bounds(g, dist, with_hitting=params.k >= 2, budget=bound_budget)
    row.elapsed_ms["bounds"] = round(1000 * (time.monotonic() - t), 1)
    row.Ed, row.Mi1, row.Mi2 = bounds.ed_thm2, bounds.mi1, bounds.mi2
    row.status.update(Ed="exact", Mi1="exact", Mi2="exact")
    if bounds.mhsp_status is not None:
        row.MHSP = bounds.mhsp
        row.status["MHSP"] = "exact" if bounds.mhsp_status == "optimal" else "timeout"
    else:
        row.status["MHSP"] = "skipped"
    if bounds.mhs_less_status is not None:
        row.mhs_less = bounds.mhs_less
        row.status["mhs_less"] = "exact" if bounds.mhs_less_status == "optimal" else "timeout"

    for col, kind in (("beta", "vertex"), ("beta_E", "edge"), ("beta_M", "mixed")):
        if kind != "vertex" and heavy(n, params.k) and not extended:
            row.status[col] = "skipped"
            continue
        t = time.monotonic()
        res = exact_dimension(g, kind, budget=exact_budget, dist=dist)
        row.elapsed_ms[col] = round(1000 * (time.monotonic() - t), 1)
        row.status[col] = _exact_status(res)
        if res.optimal:
            setattr(row, col, res.cardinality)
    row.violations = chain_violations(row.values())
    return row


def _row_job(args) -> TableRow:
    return compute_row(*args)


def compute_table(
    rows: Sequence[tuple[int, int]] = DEFAULT_ROWS,
    exact_budget: float = 600.0,
    bound_budget: float = 60.0,
    extended: bool = False,
    threads: int = 1,
) -> list[TableRow]:
    jobs = [(n, k, exact_budget, bound_budget, extended) for n, k in rows]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_row_job, jobs))
    return [_row_job(j) for j in jobs]
