"""Canonical certificates by partition refinement and individualization.

A certificate is the vertex count followed by the upper-triangle adjacency
bits of a canonical relabeling, so two graphs share a certificate exactly
when they are isomorphic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import CubicGraph

Certificate = bytes


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> tuple[list[int], tuple]:
    """Refine ``colors`` to the coarsest equitable partition below it.

    Colors are ranks, ordered so that the refinement commutes with vertex
    relabeling. Returns the new colors and a trace of the final cell
    signatures, which is itself a relabeling invariant.
    """
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted([colors[w] for w in adj[v]])))
            for v in range(n)
        ]
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        colors = [rank[s] for s in sigs]
        if len(order) == ncolors:
            return colors, tuple(order)
        ncolors = len(order)


def _target_cell(colors: list[int]) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best or []


def _pair_bit(n: int) -> list[list[int]]:
    # Bit weight of pair (i, j), i < j, with (0, 1) as the most significant bit.
    total = n * (n - 1) // 2
    weights = [[0] * n for _ in range(n)]
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            w = 1 << (total - 1 - idx)
            weights[i][j] = weights[j][i] = w
            idx += 1
    return weights


_WEIGHTS: dict[int, list[list[int]]] = {}


def _encode(g: CubicGraph, perm: Sequence[int]) -> int:
    weights = _WEIGHTS.get(g.n)
    if weights is None:
        weights = _WEIGHTS[g.n] = _pair_bit(g.n)
    return sum(weights[perm[u]][perm[v]] for u, v in g.edges())


def canonical_labeling(g: CubicGraph) -> list[int]:
    """Return ``perm`` such that ``g.relabel(perm)`` is the canonical form."""
    adj = g.adjacency
    n = g.n
    best_code = -1
    best_perm: list[int] = []

    stack = [_refine(adj, [0] * n)[0]]
    while stack:
        colors = stack.pop()
        cell = _target_cell(colors)
        if not cell:
            code = _encode(g, colors)
            if best_code < 0 or code < best_code:
                best_code, best_perm = code, colors
            continue
        # Only the children with the smallest trace survive; traces are
        # invariant, so the pruning commutes with isomorphism.
        children = []
        for v in cell:
            ind = [2 * c + (1 if c == colors[v] and u != v else 0) for u, c in enumerate(colors)]
            children.append(_refine(adj, ind))
        low = min(trace for _, trace in children)
        stack.extend(child for child, trace in children if trace == low)
    return best_perm


def certificate(g: CubicGraph) -> Certificate:
    perm = canonical_labeling(g)
    code = _encode(g, perm)
    nbits = g.n * (g.n - 1) // 2
    nbytes = (nbits + 7) // 8
    code <<= 8 * nbytes - nbits
    return g.n.to_bytes(2, "big") + code.to_bytes(nbytes, "big")


def canonical_form(g: CubicGraph) -> CubicGraph:
    return g.relabel(canonical_labeling(g))


def are_isomorphic(g: CubicGraph, h: CubicGraph) -> bool:
    if g.n != h.n:
        return False
    return certificate(g) == certificate(h)


def dedup(graphs: Iterable[CubicGraph]) -> list[tuple[Certificate, CubicGraph]]:
    """Keep the first graph seen per certificate; sort by certificate."""
    seen: dict[Certificate, CubicGraph] = {}
    for g in graphs:
        seen.setdefault(certificate(g), g)
    return sorted(seen.items(), key=lambda item: item[0])
