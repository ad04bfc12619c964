from itertools import combinations

import pytest

from cubic4 import (
    EdgeNotPresent,
    IdenticalEdges,
    SimplicityViolation,
    bridge,
    certificate,
    contract_edge,
    dedup,
    delete_edge,
    is_planar,
    k33,
    ladder,
    moebius,
    unbridge,
    wheel3,
)
from cubic4.spread import CycleSpread, cycle_spread


def test_bridge_shape():
    g = ladder(4)
    h = bridge(g, (0, 1), (5, 6))
    assert h.n == 10 and len(h.edges()) == len(g.edges()) + 3
    assert set(h.neighbors(8)) == {0, 1, 9}
    assert set(h.neighbors(9)) == {5, 6, 8}
    assert not h.has_edge(0, 1) and not h.has_edge(5, 6)


def test_bridge_errors():
    g = ladder(4)
    with pytest.raises(EdgeNotPresent):
        bridge(g, (0, 2), (4, 5))
    with pytest.raises(IdenticalEdges):
        bridge(g, (0, 1), (1, 0))


def test_bridge_adjacent_edges():
    h = bridge(wheel3(), (0, 1), (1, 2))
    assert h.n == 6
    assert set(h.neighbors(1)) == {3, 4, 5}


def test_wheel3_bridgings_are_k33_and_prism():
    w = wheel3()
    kids = dedup(bridge(w, e1, e2) for e1, e2 in combinations(w.edges(), 2))
    assert {c for c, _ in kids} == {certificate(k33()), certificate(ladder(3))}


def test_k33_non_adjacent_bridgings_give_v8():
    g = k33()
    pairs = [(e1, e2) for e1, e2 in combinations(g.edges(), 2) if not set(e1) & set(e2)]
    assert {certificate(bridge(g, *p)) for p in pairs} == {certificate(moebius(4))}


def test_prism_bridgings_include_cube():
    g = ladder(3)
    kids = {certificate(bridge(g, *p)) for p in combinations(g.edges(), 2)}
    assert certificate(ladder(4)) in kids


def test_cube_11_pairs_give_q10():
    g = ladder(4)
    pairs = [p for p in combinations(g.edges(), 2) if cycle_spread(g, *p) == CycleSpread(1, 1)]
    assert pairs
    assert {certificate(bridge(g, *p)) for p in pairs} == {certificate(ladder(5))}


def _all_pairs(g):
    return list(combinations(g.edges(), 2))


@pytest.mark.parametrize("g", [wheel3(), k33(), ladder(4), moebius(4), ladder(5)])
def test_unbridge_inverts_bridge(g):
    for e1, e2 in _all_pairs(g):
        h = bridge(g, e1, e2)
        assert unbridge(h, (g.n, g.n + 1)) == g


def test_unbridge_inverse_over_census(census10):
    for g in census10:
        for e1, e2 in _all_pairs(g):
            h = bridge(g, e1, e2)
            back, relabel = unbridge(h, (g.n, g.n + 1), return_map=True)
            assert back == g
            assert relabel == {v: v for v in range(g.n)}


def test_unbridge_ladder_rungs():
    g = ladder(5)
    for i in range(5):
        assert certificate(unbridge(g, (i, 5 + i))) == certificate(ladder(4))


@pytest.mark.parametrize("e", wheel3().edges())
def test_unbridge_k4_violates_simplicity(e):
    with pytest.raises(SimplicityViolation):
        unbridge(wheel3(), e)


def test_unbridge_missing_edge():
    with pytest.raises(EdgeNotPresent):
        unbridge(ladder(4), (0, 2))


def test_unbridge_relabels_densely():
    g = ladder(5)
    h, relabel = unbridge(g, (0, 5), return_map=True)
    assert sorted(relabel) == [1, 2, 3, 4, 6, 7, 8, 9]
    assert sorted(relabel.values()) == list(range(8))


def test_unbridge_preserves_planarity(planar14):
    for n in (10, 12, 14):
        for g in planar14.graphs(n):
            assert is_planar(g)
            for e in g.edges():
                try:
                    h = unbridge(g, e)
                except (SimplicityViolation, ValueError):
                    continue
                assert is_planar(h)


def test_delete_edge_degrees():
    h = delete_edge(ladder(4), (0, 1))
    assert sorted(h.degrees()) == [2, 2] + [3] * 6
    with pytest.raises(EdgeNotPresent):
        delete_edge(ladder(4), (0, 2))


@pytest.mark.parametrize("e", ladder(4).edges())
def test_contract_cube_edge(e):
    h = contract_edge(ladder(4), e)
    assert h.n == 7
    assert sorted(h.degrees()) == [3] * 6 + [4]
    assert h.degree(min(e)) == 4
    assert len(h.edges()) == 11


@pytest.mark.parametrize("e", wheel3().edges())
def test_contract_k4_edge_violates(e):
    with pytest.raises(SimplicityViolation):
        contract_edge(wheel3(), e)


def test_unbridge_equals_delete_then_contract():
    g = ladder(4)
    h = bridge(g, (0, 1), (5, 6))
    step = delete_edge(h, (8, 9))
    step = contract_edge(step, (0, 8))  # x = 8 merges into 0; y = 9 becomes 8
    step = contract_edge(step, (5, 8))
    assert step.to_cubic() == g
