"""``johnsondim`` command line.

Exit codes: 0 success, 2 invalid input, 3 when some computation hit its budget.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Optional

import click

from johnsondim.bounds import compute_bounds, johnson_closed_forms
from johnsondim.graph import GraphError, all_pairs_distances, from_json, to_json
from johnsondim.johnson import johnson_graph, johnson_params
from johnsondim.resolve import KINDS
from johnsondim.solver import exact_dimension, exact_eqdim, result_json
from johnsondim.table import COLUMNS, DEFAULT_ROWS, compute_table
from johnsondim.verify import TARGETS, verify_hypothesis1, verify_lemma1, verify_observation1, verify_theorem1
from johnsondim.vns import VnsConfig, vns_best_of

EXIT_OK, EXIT_INVALID, EXIT_TIMEOUT = 0, 2, 3


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _load_graph(n: Optional[int], k: Optional[int], graph_file: Optional[str]):
    if graph_file:
        if n is not None or k is not None:
            raise click.UsageError("give either N K or --graph, not both")
        try:
            with open(graph_file, encoding="utf-8") as fh:
                return from_json(json.load(fh))
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise GraphError(f"cannot read graph file: {exc}") from exc
    if n is None or k is None:
        raise click.UsageError("need N K or --graph FILE")
    return johnson_graph(n, k)


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(p) for p in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected n,k but got {text!r}")
    return a, b


class _Group(click.Group):
    """Maps domain errors to exit code 2."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (GraphError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_INVALID)


@click.group(cls=_Group)
@click.version_option(package_name="johnsondim")
def main():
    """Metric, edge, mixed and equidistant dimension tools for Johnson graphs."""


graph_args = [
    click.argument("n", type=int, required=False),
    click.argument("k", type=int, required=False),
    click.option("--graph", "graph_file", type=click.Path(dir_okay=False), help="Graph JSON instead of N K."),
]


def with_graph(f):
    for deco in reversed(graph_args):
        f = deco(f)
    return f


@main.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--out", type=click.Path(dir_okay=False))
def johnson(n, k, out):
    """Emit J(N, K) as graph JSON."""
    _emit(_dump(to_json(johnson_graph(n, k))), out)


@main.command()
@with_graph
@click.option("--kind", type=click.Choice(KINDS), default="mixed", show_default=True)
@click.option("--vns", "use_vns", is_flag=True, help="Heuristic upper bound instead of exact search.")
@click.option("--seed", type=int, multiple=True, help="VNS seed; repeat for restarts.")
@click.option("--budget", type=float, default=None, help="Seconds (exact default: none, VNS: 120).")
@click.option("--max-shake", type=int, default=3, show_default=True)
@click.option("--target", type=int, default=None, help="VNS stops once a set this small is found.")
@click.option("--canonical", is_flag=True, help="Deterministic witness (search is single threaded anyway).")
@click.option("--out", type=click.Path(dir_okay=False))
def dim(n, k, graph_file, kind, use_vns, seed, budget, max_shake, target, canonical, out):
    """Metric dimension of the given KIND."""
    g = _load_graph(n, k, graph_file)
    dist = all_pairs_distances(g)
    if use_vns:
        cfg = VnsConfig(max_shake=max_shake, time_budget=budget or 120.0, target_cardinality=target)
        res = vns_best_of(g, dist, kind, seed or (0,), cfg)
    else:
        res = exact_dimension(g, kind, budget=budget, dist=dist)
    payload = result_json(g, kind, res)
    if use_vns:
        payload["seed"] = res.extra.get("seed")
    _emit(_dump(payload), out)
    # exact search that ran out of budget reports upper_bound_only or timeout
    sys.exit(EXIT_OK if use_vns or res.optimal else EXIT_TIMEOUT)


@main.command()
@with_graph
@click.option("--budget", type=float, default=60.0, show_default=True, help="Seconds per hitting-set bound.")
@click.option("--no-hitting", is_flag=True, help="Only the degree/diameter formulas.")
@click.option("--out", type=click.Path(dir_okay=False))
def bounds(n, k, graph_file, budget, no_hitting, out):
    """Lower bounds as JSON (plus closed forms for Johnson graphs)."""
    g = _load_graph(n, k, graph_file)
    rep = compute_bounds(g, with_hitting=not no_hitting, budget=budget)
    payload = rep.to_dict()
    if g.johnson is not None:
        payload["closed_forms"] = johnson_closed_forms(*g.johnson)
    _emit(_dump(payload), out)
    timed_out = any(st not in (None, "optimal") for st in (rep.mhsp_status, rep.mhs_less_status))
    sys.exit(EXIT_TIMEOUT if timed_out else EXIT_OK)


@main.command()
@with_graph
@click.option("--budget", type=float, default=None)
@click.option("--out", type=click.Path(dir_okay=False))
def eqdim(n, k, graph_file, budget, out):
    """Equidistant dimension (smallest distance-equalizer set)."""
    g = _load_graph(n, k, graph_file)
    res = exact_eqdim(g, budget=budget)
    _emit(_dump(result_json(g, "eqdim", res)), out)
    sys.exit(EXIT_OK if res.optimal else EXIT_TIMEOUT)


@main.command()
@click.option("--row", "rows", multiple=True, help="n,k (repeatable); default: the six standard rows.")
@click.option("--extended", is_flag=True, help="Also run exact edge/mixed cells for n >= 8, k >= 3.")
@click.option("--budget", type=float, default=600.0, show_default=True, help="Seconds per exact cell.")
@click.option("--bound-budget", type=float, default=60.0, show_default=True, help="Seconds per bound cell.")
@click.option("--threads", type=int, default=1, show_default=True, help="Rows computed in parallel.")
@click.option("--canonical", is_flag=True, help="Omit timings so output is byte-stable.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
def table1(rows, extended, budget, bound_budget, threads, canonical, fmt, out):
    """Exact dimensions and lower bounds for Johnson graphs, one row per (n, k)."""
    selected = [_parse_pair(r) for r in rows] if rows else list(DEFAULT_ROWS)
    result = compute_table(selected, budget, bound_budget, extended, max(1, threads))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in result:
            w.writerow(["" if c is None else c for c in r.csv_cells()])
        text = buf.getvalue()
    else:
        docs = [r.to_dict() for r in result]
        if canonical:
            for d in docs:
                d.pop("elapsed_ms")
        text = _dump(docs)
    _emit(text, out)
    for r in result:
        if r.error:
            click.echo(f"row ({r.n},{r.k}): {r.error}", err=True)
        for v in r.violations:
            click.echo(f"row ({r.n},{r.k}): bound chain violated: {v}", err=True)
    if any(r.error for r in result):
        sys.exit(EXIT_INVALID)
    sys.exit(EXIT_TIMEOUT if any(r.timed_out for r in result) else EXIT_OK)


@main.command()
@click.argument("target", type=click.Choice(TARGETS))
@click.option("--n", "n", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@click.option("--draws", type=int, default=100, show_default=True, help="lemma1 sample size.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--instance", "instances", multiple=True, help="hypothesis1 n,k (repeatable).")
@click.option("--no-exact", is_flag=True, help="theorem1: skip the exact optimality check.")
@click.option("--budget", type=float, default=600.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
def verify(target, n, k, draws, seed, instances, no_exact, budget, out):
    """Check a construction or exact value; hypothesis1 reports evidence only."""
    if target == "theorem1":
        if n is None:
            raise click.UsageError("theorem1 needs --n")
        rep = verify_theorem1(n, exact=not no_exact, budget=budget)
    elif target == "lemma1":
        if n is not None and k is not None:
            johnson_params(n, k)
        rep = verify_lemma1(draws, seed, n, k)
    elif target == "observation1":
        rep = verify_observation1(budget)
    else:
        pairs = [_parse_pair(t) for t in instances] or [(6, 3), (7, 3)]
        rep = verify_hypothesis1(pairs, budget)
    _emit(_dump(rep), out)
    if target == "hypothesis1":
        undecided = any(c["verdict"] == "undecided" for c in rep["checks"])
        sys.exit(EXIT_TIMEOUT if undecided else EXIT_OK)
    sys.exit(EXIT_OK if rep["passed"] else 1)
