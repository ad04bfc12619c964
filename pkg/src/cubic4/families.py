"""Named cubic graphs with fixed labelings.

The labelings below are part of the public contract; worked-example tests
refer to specific vertex ids.
"""

from __future__ import annotations

from .core import CubicGraph, build


def ladder(k: int) -> CubicGraph:
    """Circular ladder on ``2k`` vertices.

    Outer cycle ``0..k-1``, inner cycle ``k..2k-1``, rungs ``{i, k+i}``.
    ``ladder(3)`` is the prism and ``ladder(4)`` the cube.
    """
    if k < 3:
        raise ValueError(f"ladder needs k >= 3, got {k}")
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
    return build(2 * k, edges)


def moebius(k: int) -> CubicGraph:
    """Moebius ladder on ``2k`` vertices: cycle ``0..2k-1`` plus chords ``{i, i+k}``."""
    if k < 3:
        raise ValueError(f"moebius needs k >= 3, got {k}")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + k) for i in range(k)]
    return build(n, edges)


def petersen() -> CubicGraph:
    """Outer 5-cycle ``0..4``, inner pentagram on ``5..9``, spokes ``{i, i+5}``."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
        edges.append((i, i + 5))
    return build(10, edges)


def wheel3() -> CubicGraph:
    """The wheel with three spokes, i.e. K4."""
    return build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def k33() -> CubicGraph:
    """K3,3 with sides ``{0,1,2}`` and ``{3,4,5}``."""
    return build(6, [(u, v) for u in range(3) for v in range(3, 6)])


def family(name: str, k: int | None = None) -> CubicGraph:
    """Look up a family member by name, as used on the command line."""
    name = name.lower()
    if name in ("ladder", "q"):
        return ladder(_need_k(name, k))
    if name in ("moebius", "mobius", "v"):
        return moebius(_need_k(name, k))
    if name in ("petersen", "p10"):
        return petersen()
    if name in ("wheel3", "w3", "k4"):
        return wheel3()
    if name in ("k33", "k3,3"):
        return k33()
    raise ValueError(f"unknown family {name!r}")


def _need_k(name: str, k: int | None) -> int:
    if k is None:
        raise ValueError(f"family {name!r} needs a size parameter k")
    return k
