import json
import random

import pytest

from intervalcolor.coloring import verify_interval
from intervalcolor.generators import (
    complete,
    complete_bipartite,
    connected_graphs_on,
    cycle,
    path,
    petersen,
    random_graph,
    random_regular_bipartite,
    random_tree,
)
from intervalcolor.graph import build_graph
from intervalcolor.thickness import (
    Decomposition,
    NotAForestError,
    NotRegularBipartiteError,
    color_forest,
    color_regular_bipartite,
    decompose,
    degeneracy,
    degeneracy_ordering,
    exact_theta_small,
    forest_classes,
    max_bipartite_matching,
    overfull,
    sqrt_edge_bound,
)


def test_forest_coloring():
    rng = random.Random(1)
    for _ in range(30):
        g = random_tree(rng.randint(2, 60), rng)
        assert not verify_interval(g, color_forest(g))
    with pytest.raises(NotAForestError):
        color_forest(cycle(3))


def test_forest_root_colors():
    c = color_forest(path(4))
    assert sorted(c.values()) == [1, 2, 3]


def test_konig():
    g = complete_bipartite(3, 3)
    c = color_regular_bipartite(g)
    assert c.palette() == frozenset({1, 2, 3}) and not verify_interval(g, c)
    rng = random.Random(2)
    g = random_regular_bipartite(40, 5, rng)
    assert color_regular_bipartite(g).palette() == frozenset(range(1, 6))
    with pytest.raises(NotRegularBipartiteError):
        color_regular_bipartite(path(4))
    with pytest.raises(NotRegularBipartiteError):
        color_regular_bipartite(cycle(5))


def test_matching_is_maximum():
    adj = {"a": ["x", "y"], "b": ["x"], "c": ["y", "z"]}
    m = max_bipartite_matching(["a", "b", "c"], adj)
    assert len(m) == 3 and len(set(m.values())) == 3


def test_degeneracy_values():
    assert degeneracy(path(5)) == 1
    assert degeneracy(cycle(5)) == 2
    assert degeneracy(complete(6)) == 5
    assert degeneracy(petersen()) == 3
    k, order = degeneracy_ordering(complete(4))
    assert k == 3 and sorted(order) == [0, 1, 2, 3]


def test_forest_classes_are_forests_and_partition():
    rng = random.Random(3)
    g = random_graph(40, 0.3, rng)
    classes = forest_classes(g)
    assert len(classes) <= degeneracy(g)
    assert sorted(e for c in classes for e in c) == sorted(g.edges)


@pytest.mark.parametrize(
    "g, method, parts",
    [
        (build_graph([], []), "empty", 0),
        (path(5), "forest", 1),
        (complete_bipartite(3, 3), "regular-bipartite", 1),
        (cycle(6), "regular-bipartite", 1),
        (complete(4), "solver", 1),
    ],
)
def test_decompose_methods(g, method, parts):
    dec = decompose(g)
    assert dec.method == method and len(dec) == parts and dec.is_valid()


def test_decompose_class2_graph():
    dec = decompose(complete(5))
    assert dec.is_valid() and 2 <= len(dec) <= degeneracy(complete(5))
    assert overfull(complete(5))


def test_decomposition_json_round_trip():
    g = complete(5)
    dec = decompose(g)
    back = Decomposition.from_dict(g, json.loads(dec.to_json()))
    assert back.is_valid() and len(back) == len(dec)


def test_problems_reported():
    g = path(3)
    c = color_forest(g)
    dec = Decomposition(g, [(((0, 1),), c)], "manual")
    assert any("uncovered" in p for p in dec.problems())


def test_exact_theta():
    assert exact_theta_small(complete(3)) == 2
    assert exact_theta_small(path(5)) == 1
    assert exact_theta_small(complete(5)) == 2
    th = exact_theta_small(petersen())
    assert th is None or th >= 2  # Class 2, so never 1


def test_theta_small_graphs_in_range():
    for g in connected_graphs_on(4):
        th = exact_theta_small(g)
        assert th in (1, 2)
        if overfull(g):
            assert th == 2


def test_sqrt_edge_bound():
    assert sqrt_edge_bound(build_graph([], [])) == 0
    g = complete(6)
    assert sqrt_edge_bound(g) == 6  # ceil(sqrt(30))
    assert degeneracy(g) <= sqrt_edge_bound(g)
