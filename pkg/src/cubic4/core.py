"""Immutable cubic graph values.

Vertices are dense integers ``0..n-1``. An edge is a plain ``(u, v)`` tuple
with ``u < v``; use :func:`edge` to normalize.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import Disconnected, EdgeNotPresent, GraphError, NotCubic, NotSimple, OddOrder

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Return the normalized edge ``(min, max)``."""
    return (u, v) if u < v else (v, u)


def _is_connected(n: int, adj: Sequence[Iterable[int]]) -> bool:
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


class CubicGraph:
    """A simple, connected, 3-regular graph on vertices ``0..n-1``.

    Instances are immutable and hashable. Besides the sorted neighbor
    triples, each vertex carries a bitmask of its neighbors so that
    :meth:`has_edge` is a single bit test.
    """

    __slots__ = ("n", "_adj", "_masks", "_hash")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        # Trusted constructor; use build() for validation.
        self.n = n
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)
        self._masks = tuple(sum(1 << w for w in nb) for nb in self._adj)
        self._hash = hash((n, self._adj))

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def m(self) -> int:
        return 3 * self.n // 2

    def edges(self) -> list[Edge]:
        return [(u, w) for u in range(self.n) for w in self._adj[u] if u < w]

    def other_neighbors(self, v: int, *exclude: int) -> list[int]:
        return [w for w in self._adj[v] if w not in exclude]

    def require_edge(self, e: Edge) -> Edge:
        u, v = edge(*e)
        if not (0 <= u < self.n and 0 <= v < self.n and self.has_edge(u, v)):
            raise EdgeNotPresent(f"edge {e} is not in the graph")
        return (u, v)

    def relabel(self, perm: Sequence[int]) -> CubicGraph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            adj[perm[v]] = [perm[w] for w in self._adj[v]]
        return CubicGraph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CubicGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[Sequence[int]]) -> CubicGraph:
    """Validate an edge list and return the cubic graph it describes.

    Duplicate edges are collapsed before validation. Raises ``OddOrder``,
    ``NotSimple``, ``NotCubic`` or ``Disconnected``.
    """
    if n % 2:
        raise OddOrder(f"cubic graphs have even order, got n={n}")
    pairs: set[Edge] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range 0..{n - 1} in edge {tuple(e)}")
        if u == v:
            raise NotSimple(f"loop at vertex {u}")
        pairs.add(edge(u, v))
    if n < 4:
        raise NotCubic(f"no cubic graph has {n} vertices")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    bad = [v for v in range(n) if len(adj[v]) != 3]
    if bad:
        raise NotCubic(f"vertex {bad[0]} has degree {len(adj[bad[0]])}")
    if not _is_connected(n, adj):
        raise Disconnected("graph is not connected")
    return CubicGraph(n, adj)


def neighbors(g: CubicGraph, v: int) -> set[int]:
    return set(g.neighbors(v))


def edges(g: CubicGraph) -> list[Edge]:
    return g.edges()


class SimpleGraph:
    """A simple graph of arbitrary degrees, the result of deletion/contraction."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        self.n = n
        self.adj = tuple(frozenset(nb) for nb in adj)

    @classmethod
    def from_cubic(cls, g: CubicGraph) -> SimpleGraph:
        return cls(g.n, g.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        return sorted((u, w) for u in range(self.n) for w in self.adj[u] if u < w)

    def is_connected(self) -> bool:
        return _is_connected(self.n, self.adj)

    def to_cubic(self) -> CubicGraph:
        return build(self.n, self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"
