"""Structural certification of cubic graphs.

Everything here is exhaustive search sized for desk-scale graphs (n <= 24):
cut enumeration over small edge subsets, separator enumeration over vertex
pairs, and backtracking for 3-edge-colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import networkx as nx

from .core import CubicGraph, Edge


@dataclass(frozen=True)
class CutWitness:
    edges: frozenset[Edge]
    side_a: frozenset[int]
    side_b: frozenset[int]
    both_cyclic: bool = True


@dataclass(frozen=True)
class StructureReport:
    n: int
    girth: int
    vertex_connectivity: int
    cyclic_4: bool
    cyclic_5: bool
    planar: bool
    chromatic_class: int
    snark: bool
    witness: Optional[CutWitness] = None

    def line(self) -> str:
        parts = [
            f"n={self.n}",
            f"girth={self.girth}",
            f"kappa={self.vertex_connectivity}",
            f"c4c={int(self.cyclic_4)}",
            f"c5c={int(self.cyclic_5)}",
            f"planar={int(self.planar)}",
            f"chi'={self.chromatic_class}",
            f"snark={int(self.snark)}",
        ]
        if self.witness is not None:
            cut = " ".join(f"{u}-{v}" for u, v in sorted(self.witness.edges))
            parts.append(f"cut=[{cut}]")
        return " ".join(parts)


def girth(g: CubicGraph) -> int:
    """Length of a shortest cycle, by BFS from every vertex."""
    best = g.n + 1
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        while frontier and 2 * dist[frontier[0]] + 1 < best:
            nxt = []
            for u in frontier:
                for w in g.neighbors(u):
                    if w == parent[u]:
                        continue
                    if w in dist:
                        best = min(best, dist[u] + dist[w] + 1)
                    else:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
            frontier = nxt
    return best


def _connected_without(g: CubicGraph, removed: int) -> bool:
    """Is ``g`` minus the vertex bitmask ``removed`` connected?"""
    start = next(v for v in range(g.n) if not (removed >> v) & 1)
    seen = removed | (1 << start)
    stack = [start]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if not (seen >> w) & 1:
                seen |= 1 << w
                count += 1
                stack.append(w)
    return count == g.n - bin(removed).count("1")


def vertex_connectivity(g: CubicGraph) -> int:
    """Smallest vertex separator size, capped at 3 (connected input assumed)."""
    for v in range(g.n):
        if not _connected_without(g, 1 << v):
            return 1
    for u, v in combinations(range(g.n), 2):
        if not _connected_without(g, (1 << u) | (1 << v)):
            return 2
    return 3


def _components_without(g: CubicGraph, cut: frozenset[Edge] | set[Edge]) -> list[tuple[list[int], int]]:
    """Components of ``g`` minus ``cut`` as (vertices, edge count) pairs."""
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        cid = len(out)
        comp[s] = cid
        verts = [s]
        stack = [s]
        degsum = 0
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if (u, w) in cut or (w, u) in cut:
                    continue
                degsum += 1
                if comp[w] < 0:
                    comp[w] = cid
                    verts.append(w)
                    stack.append(w)
        out.append((verts, degsum // 2))
    return out


def cut_witness(g: CubicGraph, cut: set[Edge] | frozenset[Edge]) -> CutWitness | None:
    """Return a witness if removing ``cut`` leaves two components with cycles."""
    comps = _components_without(g, cut)
    if len(comps) < 2:
        return None
    # A component holds a cycle exactly when it has as many edges as vertices.
    cyclic = [verts for verts, m in comps if m >= len(verts)]
    if len(cyclic) < 2:
        return None
    side_a = frozenset(cyclic[0])
    side_b = frozenset(range(g.n)) - side_a
    return CutWitness(frozenset(cut), side_a, side_b, True)


def find_cycle_separating_cut(g: CubicGraph, k: int) -> CutWitness | None:
    """Exhaustively look for a cycle-separating edge cut with fewer than ``k`` edges."""
    if k not in (4, 5):
        raise ValueError(f"k must be 4 or 5, got {k}")
    edges = g.edges()
    for size in range(1, k):
        for cut in combinations(edges, size):
            w = cut_witness(g, set(cut))
            if w is not None:
                return w
    return None


def is_cyclically_k_connected(g: CubicGraph, k: int) -> bool:
    if g.n < 2 * k:
        return False
    if vertex_connectivity(g) < 3:
        return False
    return find_cycle_separating_cut(g, k) is None


def is_planar(g: CubicGraph) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    planar, _ = nx.check_planarity(h)
    return planar


def three_edge_coloring(g: CubicGraph) -> dict[Edge, int] | None:
    """Find a proper 3-edge-coloring by backtracking, or None.

    The next edge colored is always one with the fewest colors still free,
    counting colors already used at either end.
    """
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    color = [-1] * len(edges)
    used = [0] * g.n  # bitmask of colors at each vertex

    def free(idx: int) -> int:
        u, v = edges[idx]
        return 0b111 & ~(used[u] | used[v])

    def pick() -> int:
        best, best_count = -1, 4
        for idx in range(len(edges)):
            if color[idx] >= 0:
                continue
            cnt = bin(free(idx)).count("1")
            if cnt < best_count:
                best, best_count = idx, cnt
                if cnt <= 1:
                    break
        return best

    def solve(remaining: int) -> bool:
        if remaining == 0:
            return True
        idx = pick()
        avail = free(idx)
        u, v = edges[idx]
        for c in range(3):
            if not (avail >> c) & 1:
                continue
            color[idx] = c
            used[u] |= 1 << c
            used[v] |= 1 << c
            if solve(remaining - 1):
                return True
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)
            color[idx] = -1
        return False

    # Fixing the colors at one vertex is free by symmetry of the palette.
    for c, idx in enumerate(incident[0]):
        u, v = edges[idx]
        color[idx] = c
        used[u] |= 1 << c
        used[v] |= 1 << c
    if not solve(len(edges) - 3):
        return None
    return {e: color[i] for i, e in enumerate(edges)}


def edge_chromatic_class(g: CubicGraph) -> int:
    return 3 if three_edge_coloring(g) is not None else 4


def has_cut_edge(g: CubicGraph) -> bool:
    return any(len(_components_without(g, {e})) > 1 for e in g.edges())


def is_snark(g: CubicGraph) -> bool:
    return not has_cut_edge(g) and edge_chromatic_class(g) == 4


def is_triangle_free(g: CubicGraph) -> bool:
    return all(
        not g.has_edge(a, b)
        for v in range(g.n)
        for a, b in combinations(g.neighbors(v), 2)
    )


def report(g: CubicGraph) -> StructureReport:
    c4 = is_cyclically_k_connected(g, 4)
    witness = None if c4 else find_cycle_separating_cut(g, 4)
    chi = edge_chromatic_class(g)
    return StructureReport(
        n=g.n,
        girth=girth(g),
        vertex_connectivity=vertex_connectivity(g),
        cyclic_4=c4,
        cyclic_5=c4 and is_cyclically_k_connected(g, 5),
        planar=is_planar(g),
        chromatic_class=chi,
        snark=chi == 4 and not has_cut_edge(g),
        witness=witness,
    )
