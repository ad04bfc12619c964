"""Trading a (1,1) bridge for a wider one by hopping along 4-cycles.

Bridging two opposite edges ``ab``, ``cd`` of a 4-cycle ``a-c-d-b`` gives
the same graph as bridging ``be`` and ``df``, the edges leaving the cycle at
``b`` and ``d``. Repeating the hop either reaches a pair of spread at least
(1,2), or walks all the way around a ladder or Moebius ladder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .core import CubicGraph, Edge, edge
from .errors import PreconditionViolated
from .spread import CycleSpread, SpreadThreshold, cycle_spread, edge_pair, meets_threshold
from .structure import is_triangle_free, vertex_connectivity


@dataclass(frozen=True)
class ExchangeOutcome:
    tag: Literal["wider", "ladder", "moebius"]
    pair: Optional[tuple[Edge, Edge]] = None
    k: Optional[int] = None
    hops: int = 0


def _check(h: CubicGraph, e1: Edge, e2: Edge) -> None:
    if h.n < 8:
        raise PreconditionViolated(f"host needs at least 8 vertices, has {h.n}")
    if not is_triangle_free(h):
        raise PreconditionViolated("host contains a triangle")
    if vertex_connectivity(h) < 2:
        raise PreconditionViolated("host is not 2-connected")
    spread = cycle_spread(h, e1, e2)
    if spread != CycleSpread(1, 1):
        raise PreconditionViolated(f"edge pair has spread {spread}, expected (1, 1)")


def exchange_to_wider(h: CubicGraph, e1: Edge, e2: Edge, *, check: bool = True) -> ExchangeOutcome:
    """Hop the bridge on ``e1``, ``e2`` until its pair has spread at least (1,2).

    Returns ``wider`` with the new pair (the first edge carries the vertex
    that sat on ``e1``), or ``ladder``/``moebius`` with ``k = n/2`` when the
    hop comes back to the starting pair untwisted/twisted.
    """
    e1 = h.require_edge(e1)
    e2 = h.require_edge(e2)
    if check:
        _check(h, e1, e2)
    a, b = e1
    c, d = e2
    if not (h.has_edge(a, c) and h.has_edge(b, d)):
        c, d = d, c
    # Leave through whichever side of the 4-cycle is the larger edge.
    if edge(a, c) > edge(b, d):
        a, b, c, d = b, a, d, c

    start = edge_pair(e1, e2)
    for hops in range(1, h.n + 1):
        (e,) = h.other_neighbors(b, a, d)
        (f,) = h.other_neighbors(d, c, b)
        x_edge, y_edge = edge(b, e), edge(d, f)
        if edge_pair(x_edge, y_edge) == start:
            tag = "ladder" if x_edge == e1 else "moebius"
            return ExchangeOutcome(tag, k=h.n // 2, hops=hops)
        if meets_threshold(h, x_edge, y_edge, SpreadThreshold.AT_LEAST_12):
            return ExchangeOutcome("wider", pair=(x_edge, y_edge), hops=hops)
        a, b, c, d = b, e, d, f
    raise RuntimeError("hop did not terminate; host violates the preconditions")
