import time

import pytest

from _oracles import brute_force_spectrum
from intervalcolor.coloring import verify_interval
from intervalcolor.gadgets import build_F, pendant_color_law
from intervalcolor.generators import complete, complete_bipartite, connected_graphs, cycle, path, petersen, star
from intervalcolor.graph import build_graph
from intervalcolor.spectrum import (
    DisconnectedGraphError,
    SearchBudgetExceeded,
    compute_spectrum,
    enumerate_colorings,
    find_coloring,
    gaps_of,
    max_colors_bound,
    twin_classes,
)


@pytest.mark.parametrize(
    "g, spectrum",
    [
        (complete(3), []),
        (path(4), [2, 3]),
        (cycle(4), [2, 3]),
        (star(5), [5]),
        (cycle(6), [2, 3, 4]),
        (complete_bipartite(2, 3), [4]),  # [m+n-gcd(m,n), m+n-1]
        (complete(4), [3, 4]),
    ],
)
def test_known_spectra(g, spectrum):
    assert compute_spectrum(g).achievable == spectrum


def test_petersen_not_interval_colorable():
    # Class 2 (chromatic index 4 > 3)
    rep = compute_spectrum(petersen())
    assert rep.achievable == [] and not rep.undecided


def test_witnesses_verify():
    rep = compute_spectrum(cycle(6))
    for t, c in rep.witnesses.items():
        assert not verify_interval(cycle(6), c) and c.palette() == frozenset(range(1, t + 1))


def test_against_oracle_up_to_five_edges():
    for g in connected_graphs(5):
        assert set(compute_spectrum(g).achievable) == brute_force_spectrum(g.vertices, g.edges)


def test_find_coloring_none_vs_timeout():
    assert find_coloring(complete(3), 3) is None
    g, _ = build_F(1, 27)
    with pytest.raises(SearchBudgetExceeded):
        find_coloring(g, 28, node_limit=5)


def test_wall_clock_budget_is_respected():
    g, _ = build_F(2, 37)
    start = time.monotonic()
    with pytest.raises(SearchBudgetExceeded):
        find_coloring(g, 60, budget_ms=200)
    assert time.monotonic() - start < 2


def test_disconnected_rejected():
    g = build_graph(range(4), [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        compute_spectrum(g)


def test_partial_report_lists_undecided():
    g, _ = build_F(1, 27)
    rep = compute_spectrum(g, t_hi=30, node_limit=3)
    assert rep.partial and rep.undecided
    assert set(rep.undecided).isdisjoint(rep.achievable)


def test_max_colors_bound_is_sound_on_small_graphs():
    for g in connected_graphs(6):
        rep = compute_spectrum(g)
        assert all(t <= max_colors_bound(g) for t in rep.achievable)


def test_enumeration_distinct_and_complete():
    g = path(3)
    res = enumerate_colorings(g, 2, 10)
    assert res.complete and len(res.colorings) == 2
    assert len(set(res.colorings)) == 2
    # K_{1,3}: all 3! orderings of 1..3 around the centre
    res = enumerate_colorings(star(3), 3, 100)
    assert len(res.colorings) == 6 and res.complete


def test_enumeration_matches_brute_force_count():
    import itertools

    g = cycle(4)
    brute = sum(
        1
        for cols in itertools.product(range(1, 4), repeat=4)
        if set(cols) == {1, 2, 3} and not verify_interval(g, dict(zip(g.edges, cols)))
    )
    assert len(enumerate_colorings(g, 3, 1000).colorings) == brute


def test_twin_classes_of_star():
    classes = twin_classes(star(4))
    assert len(classes) == 1
    hub, members = classes[0]
    assert hub == 0 and len(members) == 4


def test_rigidity_both_sides_f127():
    g, bp = build_F(1, 27)
    res = enumerate_colorings(g, 28, 64, budget_ms=60_000, canonical=True)
    sides = {pendant_color_law(bp, c).side for c in res.colorings}
    assert res.colorings and sides <= {"low", "high"}
    if res.complete:
        assert sides == {"low", "high"}


def test_gaps_of():
    gaps = gaps_of([2, 3, 7, 8, 12])
    assert [(gp.start, gp.stop, gp.size) for gp in gaps] == [(4, 6, 3), (9, 11, 3)]
