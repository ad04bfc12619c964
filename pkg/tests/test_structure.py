import random
from itertools import combinations

import networkx as nx
import pytest

from cubic4 import (
    build,
    edge_chromatic_class,
    find_cycle_separating_cut,
    girth,
    is_cyclically_k_connected,
    is_planar,
    is_snark,
    k33,
    ladder,
    moebius,
    petersen,
    vertex_connectivity,
    wheel3,
)
from cubic4.structure import cut_witness, has_cut_edge, report, three_edge_coloring
from oracles import (
    girth_by_enumeration,
    planar_by_kuratowski,
    random_cubic,
    three_edge_colorable_by_matchings,
)


def _nx(g):
    h = nx.Graph()
    h.add_edges_from(g.edges())
    return h


def test_girth_examples():
    assert girth(wheel3()) == 3
    assert girth(ladder(4)) == 4
    assert girth(petersen()) == 5


@pytest.mark.parametrize("seed", range(30))
def test_girth_matches_enumeration(seed):
    g = random_cubic(random.Random(seed).choice([6, 8, 10, 12]), random.Random(seed))
    assert girth(g) == girth_by_enumeration(g)


@pytest.mark.parametrize("k", range(3, 9))
def test_ladder_connectivity(k):
    assert vertex_connectivity(ladder(k)) == 3


@pytest.mark.parametrize("seed", range(30))
def test_vertex_connectivity_matches_networkx(seed):
    g = random_cubic(10, random.Random(seed))
    assert vertex_connectivity(g) == min(3, nx.node_connectivity(_nx(g)))


def test_k4_connectivity():
    assert vertex_connectivity(wheel3()) == 3


def test_low_connectivity_graph():
    # Two K4-minus-an-edge blocks joined by a pair of edges: 2-connected only.
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
             (4, 5), (4, 6), (5, 6), (5, 7), (6, 7),
             (0, 4), (3, 7)]
    g = build(8, edges)
    assert vertex_connectivity(g) == 2
    assert not is_cyclically_k_connected(g, 4)


def test_prism_three_cut():
    w = find_cycle_separating_cut(ladder(3), 4)
    assert w is not None and len(w.edges) == 3
    assert w.edges == frozenset({(0, 3), (1, 4), (2, 5)})
    assert {w.side_a, w.side_b} == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    assert w.both_cyclic


def test_cube_cuts():
    assert find_cycle_separating_cut(ladder(4), 4) is None
    w = find_cycle_separating_cut(ladder(4), 5)
    assert w is not None and len(w.edges) == 4
    assert len(w.side_a) == 4 and len(w.side_b) == 4


def test_cut_witness_rejects_acyclic_side():
    # Isolating a vertex leaves one acyclic component.
    g = ladder(4)
    assert cut_witness(g, {e for e in g.edges() if 0 in e}) is None


def test_cut_k_range():
    with pytest.raises(ValueError):
        find_cycle_separating_cut(ladder(4), 3)


def test_cyclic_connectivity_examples():
    assert not is_cyclically_k_connected(k33(), 4)
    assert is_cyclically_k_connected(ladder(4), 4)
    assert is_cyclically_k_connected(moebius(4), 4)
    assert is_cyclically_k_connected(petersen(), 5)
    assert not is_cyclically_k_connected(ladder(5), 5)


def _cut_oracle(g, k):
    """Cycle-separating cut search via networkx components and cycle bases."""
    h = _nx(g)
    for size in range(1, k):
        for cut in combinations(list(h.edges()), size):
            r = h.copy()
            r.remove_edges_from(cut)
            cyclic = [c for c in nx.connected_components(r) if nx.cycle_basis(r.subgraph(c))]
            if len(cyclic) >= 2:
                return True
    return False


def test_cut_search_matches_networkx_oracle(census12):
    for g in census12[:12]:
        for k in (4, 5):
            assert (find_cycle_separating_cut(g, k) is not None) == _cut_oracle(g, k)


@pytest.mark.parametrize("seed", range(10))
def test_cut_search_matches_oracle_random(seed):
    g = random_cubic(10, random.Random(100 + seed))
    assert (find_cycle_separating_cut(g, 4) is not None) == _cut_oracle(g, 4)


def test_c5c_implies_c4c(wormald14):
    for n in (10, 12):
        for g in wormald14.graphs(n):
            if is_cyclically_k_connected(g, 5):
                assert is_cyclically_k_connected(g, 4)


@pytest.mark.parametrize("k", range(3, 11))
def test_ladders_planar(k):
    assert is_planar(ladder(k))
    if k <= 7:
        assert planar_by_kuratowski(ladder(k))


def test_nonplanar_examples():
    assert not is_planar(moebius(4))
    assert not planar_by_kuratowski(moebius(4))
    assert not is_planar(petersen())
    assert not planar_by_kuratowski(petersen())


def test_planarity_matches_kuratowski_on_census(wormald14):
    for n in (8, 10, 12, 14):
        for g in wormald14.graphs(n):
            assert is_planar(g) == planar_by_kuratowski(g)


@pytest.mark.parametrize("seed", range(20))
def test_planarity_matches_kuratowski_random(seed):
    g = random_cubic(random.Random(seed).choice([6, 8, 10]), random.Random(seed))
    assert is_planar(g) == planar_by_kuratowski(g)


def _proper(g, coloring):
    return all(
        len({coloring[tuple(sorted((v, w)))] for w in g.neighbors(v)}) == 3
        for v in range(g.n)
    )


def test_chromatic_class_examples():
    assert edge_chromatic_class(ladder(4)) == 3
    assert edge_chromatic_class(petersen()) == 4
    assert edge_chromatic_class(wheel3()) == 3
    assert _proper(ladder(4), three_edge_coloring(ladder(4)))


def test_edge_coloring_matches_matching_oracle(census12):
    for g in census12:
        col = three_edge_coloring(g)
        assert (col is not None) == three_edge_colorable_by_matchings(g)
        if col is not None:
            assert _proper(g, col)


@pytest.mark.parametrize("seed", range(20))
def test_edge_coloring_random(seed):
    g = random_cubic(random.Random(seed).choice([8, 10, 12]), random.Random(seed))
    col = three_edge_coloring(g)
    assert (col is not None) == three_edge_colorable_by_matchings(g)


def test_snarks():
    assert is_snark(petersen())
    for k in range(3, 9):
        assert not is_snark(ladder(k))
        assert not is_snark(moebius(k))


def test_cut_edge_detection():
    # Two copies of K4-with-a-subdivided-edge joined at the subdivision vertices.
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 4),
             (5, 6), (5, 7), (6, 7), (6, 8), (7, 8), (5, 9), (8, 9), (4, 9)]
    g = build(10, edges)
    assert has_cut_edge(g)
    assert not is_snark(g)


def test_small_c4c_graphs_not_snarks(census10):
    for g in census10:
        if g.n < 10:
            assert not is_snark(g)


def test_snarks_are_non_planar(wormald14):
    for n in (8, 10, 12, 14):
        for g in wormald14.graphs(n):
            if is_snark(g):
                assert not is_planar(g)


def test_c4c_graphs_have_girth_at_least_four(wormald14):
    for n in wormald14.per_n:
        for g in wormald14.graphs(n):
            assert girth(g) >= 4


def test_report():
    r = report(petersen())
    assert (r.girth, r.vertex_connectivity, r.cyclic_4, r.cyclic_5, r.planar, r.chromatic_class, r.snark) == (
        5, 3, True, True, False, 4, True)
    assert "snark=1" in r.line()
    r = report(ladder(3))
    assert not r.cyclic_4 and r.witness is not None
    assert "cut=[" in r.line()
