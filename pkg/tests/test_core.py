import pytest

from cubic4 import Disconnected, NotCubic, NotSimple, OddOrder, build, k33, ladder, petersen, wheel3
from cubic4.core import SimpleGraph, edge, neighbors
from cubic4.errors import GraphError

K33_EDGES = [(u, v) for u in range(3) for v in range(3, 6)]


def test_k4():
    g = build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert g == wheel3()
    assert neighbors(g, 0) == {1, 2, 3}
    assert len(g.edges()) == 6


def test_k33_build():
    g = build(6, K33_EDGES)
    assert g == k33()
    assert all(not g.has_edge(u, v) for u in range(3) for v in range(3) if u != v)


def test_five_cycle_plus_chord_rejected():
    with pytest.raises(NotCubic):
        build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def test_other_errors():
    with pytest.raises(OddOrder):
        build(5, [(0, 1)])
    with pytest.raises(NotSimple):
        build(4, [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    two_k4 = [(u + s, v + s) for s in (0, 4) for u in range(4) for v in range(u + 1, 4)]
    with pytest.raises(Disconnected):
        build(8, two_k4)
    with pytest.raises(GraphError):
        build(4, [(0, 7)])


def test_duplicates_collapsed():
    edges = K33_EDGES + [(v, u) for u, v in K33_EDGES]
    assert build(6, edges) == k33()


def test_cube_neighbors_pairwise_non_adjacent():
    g = ladder(4)
    for v in range(8):
        nb = g.neighbors(v)
        assert len(set(nb)) == 3 and v not in nb
        assert not any(g.has_edge(x, y) for x in nb for y in nb if x != y)


def test_petersen_neighbors_follow_labeling():
    # outer neighbors 1 and 4, spoke partner 5
    assert neighbors(petersen(), 0) == {1, 4, 5}


@pytest.mark.parametrize("g,m", [(wheel3(), 6), (ladder(4), 12), (petersen(), 15)])
def test_edge_counts(g, m):
    es = g.edges()
    assert len(es) == m == 3 * g.n // 2
    assert es == sorted(es)
    assert len(set(es)) == len(es)
    assert all(u < v for u, v in es)


@pytest.mark.parametrize("g", [wheel3(), k33(), ladder(5), petersen()])
def test_round_trip_and_invariants(g):
    assert build(g.n, g.edges()) == g
    assert sum(len(g.neighbors(v)) for v in range(g.n)) == 3 * g.n
    assert all(g.has_edge(w, v) for v in range(g.n) for w in g.neighbors(v))


def test_edge_normalization_and_hash():
    assert edge(5, 2) == (2, 5)
    assert hash(ladder(4)) == hash(build(8, ladder(4).edges()))
    assert SimpleGraph.from_cubic(k33()).to_cubic() == k33()
