"""Cycle spread of edge pairs and the neighbor-selection rules for bridging.

The cycle spread of two distinct edges ``ab`` and ``cd`` is read off a
shortest cycle through both: removing the two edges leaves two paths joining
their endpoints, and the spread is the sorted pair of those path lengths.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import NamedTuple

from .core import CubicGraph, Edge, edge

EdgePair = tuple[Edge, Edge]


class CycleSpread(NamedTuple):
    i: int
    j: int


class SpreadThreshold(enum.Enum):
    DISTINCT = "distinct"
    AT_LEAST_11 = "1,1"
    AT_LEAST_12 = "1,2"
    AT_LEAST_22 = "2,2"

    @classmethod
    def parse(cls, text: str) -> SpreadThreshold:
        key = text.strip().lower().replace("(", "").replace(")", "").replace(" ", "")
        for t in cls:
            if key in (t.value, t.name.lower()):
                return t
        raise ValueError(f"unknown threshold {text!r}")


def edge_pair(e1: Edge, e2: Edge) -> EdgePair:
    """Normalize an unordered pair of edges."""
    e1, e2 = edge(*e1), edge(*e2)
    return (e1, e2) if e1 <= e2 else (e2, e1)


def _paths_of_length(g: CubicGraph, s: int, t: int, length: int, forbidden: int):
    """Yield vertex bitmasks of simple ``s``-``t`` paths with exactly ``length`` edges."""
    if (forbidden >> s) & 1 or (forbidden >> t) & 1:
        return
    if length == 0:
        if s == t:
            yield 1 << s
        return
    if s == t:
        return
    stack = [(s, 1 << s, 0)]
    while stack:
        u, used, depth = stack.pop()
        if depth == length - 1:
            if g.has_edge(u, t):
                yield used | (1 << t)
            continue
        for w in g.neighbors(u):
            if w == t or (used >> w) & 1 or (forbidden >> w) & 1:
                continue
            stack.append((w, used | (1 << w), depth + 1))


def _shortest_avoiding(g: CubicGraph, s: int, t: int, blocked: int) -> int | None:
    if (blocked >> s) & 1 or (blocked >> t) & 1:
        return None
    if s == t:
        return 0
    seen = blocked | (1 << s)
    frontier = [s]
    dist = 0
    while frontier:
        dist += 1
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w == t:
                    return dist
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    nxt.append(w)
        frontier = nxt
    return None


def cycle_spread(g: CubicGraph, e1: Edge, e2: Edge) -> CycleSpread | None:
    """Return the cycle spread of ``e1`` and ``e2``, or None if no cycle holds both.

    Among several shortest common cycles the lexicographically smallest
    ``(i, j)`` is reported. Identical edges give ``(0, 0)``.
    """
    a, b = g.require_edge(e1)
    c, d = g.require_edge(e2)
    if (a, b) == (c, d):
        return CycleSpread(0, 0)

    # A common cycle is e1 + e2 + two vertex-disjoint paths pairing {a,b}
    # with {c,d}. Enumerate the shorter path by increasing length and close
    # with a shortest disjoint partner; the shorter path never exceeds half
    # the best total found so far.
    routes = []
    for (s1, t1), (s2, t2) in (((a, c), (b, d)), ((a, d), (b, c))):
        if {s1, t1} & {s2, t2}:
            continue
        routes.append((s1, t1, s2, t2))
        routes.append((s2, t2, s1, t1))

    best: tuple[int, int] | None = None
    length = 0
    while best is None or 2 * length <= best[0]:
        if length > g.n:
            break
        for s1, t1, s2, t2 in routes:
            avoid = (1 << s2) | (1 << t2)
            for used in _paths_of_length(g, s1, t1, length, avoid):
                other = _shortest_avoiding(g, s2, t2, used)
                if other is None:
                    continue
                key = (length + other, min(length, other))
                if best is None or key < best:
                    best = key
        length += 1
    if best is None:
        return None
    total, short = best
    return CycleSpread(short, total - short)


# Selection criteria. The d-rule and the a-rule are kept apart so the
# tightening pattern across thresholds is visible: 1,1 -> 1,2 only tightens
# the d-rule, 1,2 -> 2,2 only tightens the a-rule.

def _d_allowed(g: CubicGraph, b: int, c: int, d: int, t: SpreadThreshold) -> bool:
    if d == b or not g.has_edge(c, d):
        return False
    if t in (SpreadThreshold.AT_LEAST_12, SpreadThreshold.AT_LEAST_22):
        return not g.has_edge(b, d)
    return True


def _a_allowed(g: CubicGraph, a: int, b: int, c: int, d: int, t: SpreadThreshold) -> bool:
    if a in (c, d) or not g.has_edge(a, b):
        return False
    if t is SpreadThreshold.AT_LEAST_22:
        return not (g.has_edge(a, c) or g.has_edge(a, d))
    return True


def configurations(g: CubicGraph, b: int, c: int, t: SpreadThreshold) -> list[tuple[int, int, int, int]]:
    """All ``(a, b, c, d)`` picked from the non-adjacent pair ``(b, c)`` under ``t``.

    Each configuration names the pair of edges ``ab`` and ``cd``.
    """
    if t is SpreadThreshold.DISTINCT:
        raise ValueError("neighbor selection needs a spread threshold of at least (1,1)")
    if b == c or g.has_edge(b, c):
        raise ValueError(f"vertices {b} and {c} must be distinct and non-adjacent")
    out = []
    for d in g.neighbors(c):
        if not _d_allowed(g, b, c, d, t):
            continue
        for a in g.neighbors(b):
            if _a_allowed(g, a, b, c, d, t):
                out.append((a, b, c, d))
    return out


def candidate_pairs(g: CubicGraph, t: SpreadThreshold) -> set[EdgePair]:
    """Edge pairs reachable by neighbor selection over every non-adjacent ``(b, c)``."""
    pairs: set[EdgePair] = set()
    for b in range(g.n):
        for c in range(g.n):
            if b == c or g.has_edge(b, c):
                continue
            for a, _, _, d in configurations(g, b, c, t):
                pairs.add(edge_pair((a, b), (c, d)))
    return pairs


def meets_threshold(g: CubicGraph, e1: Edge, e2: Edge, t: SpreadThreshold) -> bool:
    """Local test of whether ``e1``, ``e2`` clear the spread threshold ``t``.

    For (1,1) and (1,2) this agrees with :func:`cycle_spread` on 2-connected
    triangle-free graphs. The (2,2) test (no endpoint of one edge equal or
    adjacent to an endpoint of the other) is sufficient for spread >= (2,2).
    """
    a, b = g.require_edge(e1)
    c, d = g.require_edge(e2)
    if t is SpreadThreshold.DISTINCT:
        return (a, b) != (c, d)
    if {a, b} & {c, d}:
        return False
    if t is SpreadThreshold.AT_LEAST_11:
        return True
    if t is SpreadThreshold.AT_LEAST_12:
        crossed = g.has_edge(a, c) and g.has_edge(b, d)
        uncrossed = g.has_edge(a, d) and g.has_edge(b, c)
        return not (crossed or uncrossed)
    return not any(g.has_edge(p, q) for p in (a, b) for q in (c, d))


def bridge_pairs(g: CubicGraph, t: SpreadThreshold) -> list[EdgePair]:
    """Sorted edge pairs to bridge under ``t``; every distinct pair for DISTINCT."""
    if t is SpreadThreshold.DISTINCT:
        return list(combinations(g.edges(), 2))
    return sorted(candidate_pairs(g, t))
