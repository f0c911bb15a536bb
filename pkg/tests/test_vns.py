import numpy as np
import pytest

from johnsondim.graph import all_pairs_distances
from johnsondim.johnson import johnson_graph
from johnsondim.resolve import collision_pairs, is_resolving, item_matrix
from johnsondim.solver import exact_dimension
from johnsondim.vns import VnsConfig, _Objective, _pairs_per_column, vns_best_of, vns_upper_bound

from conftest import cycle_graph, path_graph


@pytest.fixture(scope="module")
def j63():
    g = johnson_graph(6, 3)
    return g, all_pairs_distances(g)


@pytest.mark.parametrize("kwargs", [{"max_shake": 0}, {"time_budget": 0}, {"time_budget": -1.0}])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        VnsConfig(**kwargs)


def test_pairs_per_column():
    keys = np.array([[1, 1], [1, 2], [2, 3], [1, 4]])
    assert _pairs_per_column(keys).tolist() == [3, 0]


def test_insertion_scores_match_recount(j63):
    g, d = j63
    rows = item_matrix(g, d, "mixed").astype(np.int32)
    obj = _Objective(rows)
    base = [0, 5, 11]
    scores = obj.best_insertions(base)
    for t in (1, 7, 19):
        assert scores[t] == collision_pairs(rows[:, base + [t]]) == obj.value(base + [t])


@pytest.mark.parametrize("kind", ["vertex", "edge", "mixed"])
def test_result_is_verified_upper_bound(j63, kind):
    g, d = j63
    opt = exact_dimension(g, kind, dist=d).cardinality
    res = vns_upper_bound(g, d, kind, VnsConfig(seed=3, time_budget=20, lower_bound=opt))
    assert res.status == "upper_bound_only"
    assert is_resolving(res.witness, kind, g, d)
    assert res.cardinality >= opt


def test_same_seed_same_output(j63):
    g, d = j63
    # runs that stop at the floor rather than the clock are reproducible
    cfg = VnsConfig(seed=7, time_budget=60, target_cardinality=8)
    assert vns_upper_bound(g, d, "edge", cfg).witness == vns_upper_bound(g, d, "edge", cfg).witness


def test_reaches_optimum_on_j63(j63):
    g, d = j63
    res = vns_upper_bound(g, d, "mixed", VnsConfig(seed=0, target_cardinality=8))
    assert res.cardinality == 8


def test_lower_bound_stops_search():
    g = cycle_graph(8)
    res = vns_upper_bound(g, None, "mixed", VnsConfig(lower_bound=3, time_budget=10))
    assert res.cardinality == 3


def test_tiny_budget_still_resolving():
    g = path_graph(6)
    res = vns_upper_bound(g, None, "mixed", VnsConfig(time_budget=1e-6))
    assert is_resolving(res.witness, "mixed", g)


def test_best_of_takes_smallest(j63):
    g, d = j63
    res = vns_best_of(g, d, "mixed", [0, 1], VnsConfig(time_budget=20, target_cardinality=8))
    assert res.cardinality == 8 and res.extra["seed"] == 0
