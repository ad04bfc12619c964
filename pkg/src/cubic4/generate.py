"""Isomorph-free closure under bridging, level by level.

Level ``n + 2`` is the certificate-deduplicated set of all bridgings of
level-``n`` graphs whose edge pairs pass the spread threshold. Parents are
expanded in certificate order and the first child per certificate is kept,
so the output does not depend on how many worker processes are used.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .canon import Certificate, certificate
from .core import CubicGraph, Edge
from .errors import SeedNotC5C
from .families import ladder, moebius, petersen
from .spread import SpreadThreshold, bridge_pairs
from .structure import is_cyclically_k_connected, is_planar
from .transform import bridge

log = logging.getLogger(__name__)

PLANAR_ONLY = "planar"


@dataclass
class PipelineConfig:
    seeds: Sequence[CubicGraph]
    threshold: SpreadThreshold
    max_n: int
    post_filter: Optional[str] = None
    verify: bool = False
    verify_k: int = 4
    name: str = "closure"

    def __post_init__(self):
        if not self.seeds:
            raise ValueError("closure needs at least one seed")
        if self.max_n % 2 or self.max_n < max(g.n for g in self.seeds):
            raise ValueError(f"max_n={self.max_n} must be even and cover every seed")
        if self.post_filter not in (None, PLANAR_ONLY):
            raise ValueError(f"unknown post filter {self.post_filter!r}")


@dataclass(frozen=True)
class Origin:
    parent: Certificate
    e1: Edge
    e2: Edge


@dataclass
class Census:
    name: str
    threshold: SpreadThreshold
    per_n: dict[int, list[tuple[Certificate, CubicGraph]]] = field(default_factory=dict)
    provenance: dict[Certificate, Origin] = field(default_factory=dict)
    seeds: set[Certificate] = field(default_factory=set)
    excluded: set[Certificate] = field(default_factory=set)
    verdicts: dict[Certificate, bool] = field(default_factory=dict)
    exhaustive: bool = True

    @property
    def counts(self) -> dict[int, int]:
        return {n: len(level) for n, level in sorted(self.per_n.items())}

    def certificates(self, n: int) -> list[Certificate]:
        return [c for c, _ in self.per_n.get(n, [])]

    def graphs(self, n: int) -> list[CubicGraph]:
        return [g for _, g in self.per_n.get(n, [])]

    def generated(self, n: int) -> list[tuple[Certificate, CubicGraph]]:
        """Level ``n`` without seeds and theorem exceptions."""
        return [
            (c, g) for c, g in self.per_n.get(n, [])
            if c not in self.seeds and c not in self.excluded
        ]

    def graph(self, cert: Certificate) -> CubicGraph:
        n = int.from_bytes(cert[:2], "big")
        for c, g in self.per_n.get(n, []):
            if c == cert:
                return g
        raise KeyError(cert.hex())

    @property
    def verified(self) -> bool:
        return all(self.verdicts.values())


def _children(args: tuple[CubicGraph, SpreadThreshold]) -> list[tuple[Certificate, CubicGraph, Edge, Edge]]:
    g, t = args
    seen: dict[Certificate, tuple[Certificate, CubicGraph, Edge, Edge]] = {}
    for e1, e2 in bridge_pairs(g, t):
        child = bridge(g, e1, e2)
        cert = certificate(child)
        if cert not in seen:
            seen[cert] = (cert, child, e1, e2)
    return list(seen.values())


def expand(g: CubicGraph, t: SpreadThreshold) -> list[CubicGraph]:
    """Non-isomorphic bridgings of ``g`` over edge pairs passing ``t``."""
    return [child for _, child, _, _ in sorted(_children((g, t)), key=lambda r: r[0])]


def closure(cfg: PipelineConfig, jobs: int = 1) -> Census:
    census = Census(cfg.name, cfg.threshold)
    seeds_by_n: dict[int, list[CubicGraph]] = {}
    for g in cfg.seeds:
        seeds_by_n.setdefault(g.n, []).append(g)
    lo = min(seeds_by_n)

    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        current: dict[Certificate, CubicGraph] = {}
        for n in range(lo, cfg.max_n + 1, 2):
            level: dict[Certificate, CubicGraph] = {}
            for g in seeds_by_n.get(n, []):
                cert = certificate(g)
                census.seeds.add(cert)
                level.setdefault(cert, g)
            parents = sorted(current.items(), key=lambda item: item[0])
            work = [(g, cfg.threshold) for _, g in parents]
            results = pool.map(_children, work, chunksize=4) if pool else map(_children, work)
            for (pcert, _), kids in zip(parents, results):
                for cert, child, e1, e2 in kids:
                    if cert in level:
                        continue
                    if cfg.post_filter == PLANAR_ONLY and not is_planar(child):
                        continue
                    level[cert] = child
                    census.provenance[cert] = Origin(pcert, e1, e2)
            census.per_n[n] = sorted(level.items(), key=lambda item: item[0])
            log.info("%s: level %d has %d graphs", cfg.name, n, len(level))
            current = level
    finally:
        if pool is not None:
            pool.shutdown()

    if cfg.verify:
        for n, level in census.per_n.items():
            for cert, g in level:
                census.verdicts[cert] = is_cyclically_k_connected(g, cfg.verify_k)
    return census


def pipeline_wormald(max_n: int, *, verify: bool = False, jobs: int = 1) -> Census:
    """Every cyclically 4-connected cubic graph up to ``max_n`` from Q8 and V8."""
    if max_n < 8:
        raise ValueError("max_n must be at least 8")
    cfg = PipelineConfig([ladder(4), moebius(4)], SpreadThreshold.AT_LEAST_11, max_n,
                         verify=verify, name="wormald")
    return closure(cfg, jobs)


def pipeline_nonplanar(max_n: int, *, verify: bool = False, jobs: int = 1) -> Census:
    """Non-planar cyclically 4-connected graphs other than Moebius ladders and P10.

    Grown from the cube with spread at least (1,2); the cube itself is a
    seed and is excluded from the outputs.
    """
    if max_n < 10:
        raise ValueError("max_n must be at least 10")
    cfg = PipelineConfig([ladder(4)], SpreadThreshold.AT_LEAST_12, max_n,
                         verify=verify, name="nonplanar")
    census = closure(cfg, jobs)
    if verify:
        for level in census.per_n.values():
            for cert, g in level:
                if cert not in census.seeds:
                    census.verdicts[cert] = census.verdicts[cert] and not is_planar(g)
    return census


def pipeline_planar(max_n: int, *, verify: bool = False, jobs: int = 1) -> Census:
    """Planar cyclically 4-connected graphs, grown from all ladders up to ``max_n``.

    Bridging a planar graph can yield a non-planar one, so children are
    filtered for planarity.
    """
    if max_n < 10:
        raise ValueError("max_n must be at least 10")
    seeds = [ladder(k) for k in range(4, max_n // 2 + 1)]
    cfg = PipelineConfig(seeds, SpreadThreshold.AT_LEAST_12, max_n, post_filter=PLANAR_ONLY,
                         verify=verify, name="planar")
    return closure(cfg, jobs)


def pipeline_c5c(seeds: Iterable[CubicGraph], max_n: int, *, verify: bool = True, jobs: int = 1) -> Census:
    """Cyclically 5-connected graphs reachable with spread (2,2) bridgings.

    Not exhaustive: some cyclically 5-connected graphs have no such ancestry.
    """
    seeds = list(seeds)
    for g in seeds:
        if not is_cyclically_k_connected(g, 5):
            raise SeedNotC5C(f"seed on {g.n} vertices is not cyclically 5-connected")
    cfg = PipelineConfig(seeds, SpreadThreshold.AT_LEAST_22, max_n, verify=verify,
                         verify_k=5, name="c5c")
    census = closure(cfg, jobs)
    census.exhaustive = False
    return census


@dataclass
class CountRow:
    n: int
    expected: Optional[int]
    raw: int
    generated: int

    @property
    def ok(self) -> bool:
        return self.expected is None or self.expected == self.raw


@dataclass
class CountReport:
    rows: list[CountRow]
    exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def mismatches(self) -> list[CountRow]:
        return [r for r in self.rows if not r.ok]

    def format(self) -> str:
        lines = ["n,expected,raw,generated,status"]
        for r in self.rows:
            exp = "" if r.expected is None else str(r.expected)
            status = "-" if r.expected is None else ("pass" if r.ok else "FAIL")
            lines.append(f"{r.n},{exp},{r.raw},{r.generated},{status}")
        if not self.exhaustive:
            lines.append("# census is not exhaustive")
        return "\n".join(lines)


def count_report(census: Census, expected: dict[int, int]) -> CountReport:
    """Compare raw per-level counts with expected values.

    Levels named in ``expected`` but absent from the census count as zero.
    """
    rows = []
    for n in sorted(set(census.per_n) | set(expected)):
        rows.append(CountRow(n, expected.get(n), len(census.per_n.get(n, [])),
                             len(census.generated(n))))
    return CountReport(rows, census.exhaustive)


def excluded_families(max_n: int) -> dict[str, CubicGraph]:
    """The exceptional graphs the non-planar generation theorem leaves out."""
    out = {f"V{2 * k}": moebius(k) for k in range(4, max_n // 2 + 1)}
    if max_n >= 10:
        out["P10"] = petersen()
    return out
