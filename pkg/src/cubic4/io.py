"""Text formats: graph6 (short form, n <= 62), edge lists, and counts CSV."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .core import CubicGraph, build
from .errors import GraphError


class FormatError(GraphError):
    """Malformed graph6, edge-list, or CSV input."""


def to_graph6(g: CubicGraph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("only the short graph6 form (n <= 62) is supported")
    bits = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6_edges(line: str) -> tuple[int, list[tuple[int, int]]]:
    """Decode one graph6 line into ``(n, edges)`` without cubic validation."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 line")
    if any(not (63 <= ord(ch) <= 126) for ch in s):
        raise FormatError(f"invalid graph6 character in {s!r}")
    if s[0] == "~":
        raise FormatError("long-form graph6 (n > 62) is not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} chars, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return n, edges


def from_graph6(line: str) -> CubicGraph:
    n, edges = parse_graph6_edges(line)
    return build(n, edges)


def to_edge_list(g: CubicGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"edge list header says {m} edges, found {len(edges)}")
    return n, edges


def from_edge_list(text: str) -> CubicGraph:
    n, edges = parse_edge_list(text)
    return build(n, edges)


def read_graphs(path: str | Path) -> list[CubicGraph]:
    """Read a graph6 file (one graph per line) or a single edge-list file.

    The format is sniffed from the first non-blank line: two integers mean
    an edge list.
    """
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return []
    head = lines[0].split()
    if len(head) == 2 and all(tok.isdigit() for tok in head):
        return [from_edge_list(text)]
    return [from_graph6(ln) for ln in lines]


def write_graph6(path: str | Path, graphs: Iterable[CubicGraph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def read_counts_csv(path: str | Path) -> dict[int, int]:
    """Read ``n,count`` rows; blank lines and ``#`` comments are skipped.

    A non-numeric first row is taken as a header.
    """
    out: dict[int, int] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.replace(" ", ",").split(",") if p.strip()]
        try:
            n, count = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            if not out:
                continue
            raise FormatError(f"{path}:{lineno}: expected 'n,count'") from None
        out[n] = count
    return out
