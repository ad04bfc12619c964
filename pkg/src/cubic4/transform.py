"""Bridging, unbridging, and the deletion/contraction primitives behind them."""

from __future__ import annotations

from .core import CubicGraph, Edge, SimpleGraph, build, edge
from .errors import EdgeNotPresent, IdenticalEdges, SimplicityViolation


def bridge(g: CubicGraph, e1: Edge, e2: Edge) -> CubicGraph:
    """Subdivide ``e1`` by vertex ``n`` and ``e2`` by ``n+1``, then join them.

    The result has two more vertices and three more edges than ``g``.
    """
    a, b = g.require_edge(e1)
    c, d = g.require_edge(e2)
    if (a, b) == (c, d):
        raise IdenticalEdges(f"cannot bridge edge {(a, b)} with itself")
    n = g.n
    x, y = n, n + 1
    adj = [list(nb) for nb in g.adjacency]
    adj[a][adj[a].index(b)] = x
    adj[b][adj[b].index(a)] = x
    adj[c][adj[c].index(d)] = y
    adj[d][adj[d].index(c)] = y
    adj.append([a, b, y])
    adj.append([c, d, x])
    return CubicGraph(n + 2, adj)


def unbridge(g: CubicGraph, xy: Edge, *, return_map: bool = False):
    """Delete ``xy`` and contract one remaining edge at each of its ends.

    Returns the smaller cubic graph, densely relabeled with the surviving
    vertices kept in their original order. With ``return_map=True`` also
    returns a dict mapping old ids to new ids for the surviving vertices.

    Raises ``SimplicityViolation`` when an endpoint lies on a triangle (its
    two other neighbors are already adjacent), or when both endpoints would
    add the same edge.
    """
    x, y = g.require_edge(xy)
    a, b = g.other_neighbors(x, y)
    c, d = g.other_neighbors(y, x)
    if g.has_edge(a, b) or g.has_edge(c, d) or {a, b} == {c, d}:
        raise SimplicityViolation(f"unbridging {(x, y)} would create a parallel edge")
    survivors = [v for v in range(g.n) if v != x and v != y]
    relabel = {v: i for i, v in enumerate(survivors)}
    kept = [
        (relabel[u], relabel[v])
        for u, v in g.edges()
        if u not in (x, y) and v not in (x, y)
    ]
    kept.append((relabel[a], relabel[b]))
    kept.append((relabel[c], relabel[d]))
    h = build(g.n - 2, kept)
    return (h, relabel) if return_map else h


def delete_edge(g: CubicGraph | SimpleGraph, e: Edge) -> SimpleGraph:
    if isinstance(g, CubicGraph):
        g = SimpleGraph.from_cubic(g)
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise EdgeNotPresent(f"edge {e} is not in the graph")
    adj = [set(nb) for nb in g.adj]
    adj[u].discard(v)
    adj[v].discard(u)
    return SimpleGraph(g.n, adj)


def contract_edge(g: CubicGraph | SimpleGraph, e: Edge) -> SimpleGraph:
    """Identify the ends of ``e`` into its smaller endpoint and drop the loop.

    The larger endpoint disappears and later ids shift down by one. A shared
    neighbor of the two ends would produce a parallel edge, which raises
    ``SimplicityViolation`` rather than being merged.
    """
    if isinstance(g, CubicGraph):
        g = SimpleGraph.from_cubic(g)
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise EdgeNotPresent(f"edge {e} is not in the graph")
    if g.adj[u] & g.adj[v]:
        raise SimplicityViolation(f"contracting {(u, v)} creates a parallel edge")

    def shift(w: int) -> int:
        if w == v:
            w = u
        return w - 1 if w > v else w

    adj: list[set[int]] = [set() for _ in range(g.n - 1)]
    for p, q in g.edges():
        if (p, q) == (u, v):
            continue
        p2, q2 = shift(p), shift(q)
        adj[p2].add(q2)
        adj[q2].add(p2)
    return SimpleGraph(g.n - 1, adj)
