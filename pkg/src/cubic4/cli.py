"""Command-line entry point: ``cubic4 <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 unreadable input file,
3 count mismatch, 4 malformed graph6/edge-list input, 5 input graph not a
valid cubic graph.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import io as gio
from .canon import certificate
from .core import CubicGraph
from .errors import GraphError
from .families import family, petersen
from .generate import (
    Census,
    count_report,
    pipeline_c5c,
    pipeline_nonplanar,
    pipeline_planar,
    pipeline_wormald,
)
from .spread import SpreadThreshold, candidate_pairs, cycle_spread
from .structure import is_snark, report

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNREADABLE = 2
EXIT_MISMATCH = 3
EXIT_MALFORMED = 4
EXIT_NOT_CUBIC = 5

log = logging.getLogger("cubic4")


class InputError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunManifest:
    command: str
    config: dict = field(default_factory=dict)
    inputs: list[str] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)
    wall_time: float = 0.0
    counts: dict[int, int] = field(default_factory=dict)
    verdicts: dict[str, str] = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"config.{k}: {v}" for k, v in self.config.items()]
        lines += [f"input: {p}" for p in self.inputs]
        lines += [f"output: {p}" for p in self.outputs]
        lines.append(f"wall_time_s: {self.wall_time:.3f}")
        lines += [f"count.{n}: {c}" for n, c in sorted(self.counts.items())]
        lines += [f"verdict.{k}: {v}" for k, v in self.verdicts.items()]
        return "\n".join(lines) + "\n"


def _load(paths: list[str]) -> list[tuple[str, CubicGraph]]:
    out = []
    for p in paths:
        try:
            graphs = gio.read_graphs(p)
        except gio.FormatError as exc:
            raise InputError(f"{p}: {exc}", EXIT_MALFORMED) from None
        except GraphError as exc:
            raise InputError(f"{p}: not a cubic graph: {exc}", EXIT_NOT_CUBIC) from None
        except (OSError, UnicodeDecodeError) as exc:
            raise InputError(f"{p}: {exc}", EXIT_UNREADABLE) from None
        out += [(f"{p}:{i + 1}", g) for i, g in enumerate(graphs)]
    return out


def _parse_edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.replace("-", ",").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"edge must look like 'u,v', got {text!r}") from None
    return (u, v)


def cmd_families(args) -> int:
    g = family(args.family, args.k)
    text = gio.to_graph6(g) + "\n" if args.format == "graph6" else gio.to_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _write_census(census: Census, out_dir: Path) -> list[str]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for n, level in sorted(census.per_n.items()):
        path = out_dir / f"{census.name}_n{n}.g6"
        gio.write_graph6(path, (g for _, g in level))
        written.append(str(path))
    prov = out_dir / f"{census.name}_provenance.txt"
    with open(prov, "w") as fh:
        fh.write("# child parent e1 e2\n")
        for n, level in sorted(census.per_n.items()):
            for cert, _ in level:
                origin = census.provenance.get(cert)
                if origin is None:
                    fh.write(f"{cert.hex()} seed - -\n")
                else:
                    e1 = f"{origin.e1[0]}-{origin.e1[1]}"
                    e2 = f"{origin.e2[0]}-{origin.e2[1]}"
                    fh.write(f"{cert.hex()} {origin.parent.hex()} {e1} {e2}\n")
    written.append(str(prov))
    counts = out_dir / f"{census.name}_counts.csv"
    with open(counts, "w") as fh:
        if not census.exhaustive:
            fh.write("# not exhaustive\n")
        fh.write("n,count,generated\n")
        for n in sorted(census.per_n):
            fh.write(f"{n},{len(census.per_n[n])},{len(census.generated(n))}\n")
    written.append(str(counts))
    return written


def cmd_generate(args) -> int:
    t0 = time.perf_counter()
    if args.pipeline == "wormald":
        census = pipeline_wormald(args.max_n, verify=args.verify, jobs=args.jobs)
    elif args.pipeline == "nonplanar":
        census = pipeline_nonplanar(args.max_n, verify=args.verify, jobs=args.jobs)
    elif args.pipeline == "planar":
        census = pipeline_planar(args.max_n, verify=args.verify, jobs=args.jobs)
    else:
        seeds = [g for _, g in _load(args.seeds)] if args.seeds else [petersen()]
        census = pipeline_c5c(seeds, args.max_n, verify=True, jobs=args.jobs)
    out_dir = Path(args.out)
    manifest = RunManifest(
        command="generate",
        config={"pipeline": args.pipeline, "max_n": args.max_n, "jobs": args.jobs,
                "verify": args.verify, "threshold": census.threshold.value,
                "exhaustive": census.exhaustive},
        inputs=list(args.seeds or []) + ([args.expected] if args.expected else []),
        outputs=_write_census(census, out_dir),
        counts=census.counts,
    )
    code = EXIT_OK
    if census.verdicts:
        bad = [c for c, ok in census.verdicts.items() if not ok]
        manifest.verdicts["verify"] = "pass" if not bad else f"FAIL ({len(bad)} graphs)"
        if bad:
            code = EXIT_INVALID
    for n, c in census.counts.items():
        print(f"n={n} count={c} generated={len(census.generated(n))}")
    if args.expected:
        try:
            expected = gio.read_counts_csv(args.expected)
        except OSError as exc:
            raise InputError(f"{args.expected}: {exc}", EXIT_UNREADABLE) from None
        rep = count_report(census, {n: c for n, c in expected.items() if n <= args.max_n})
        print(rep.format())
        manifest.verdicts["counts"] = "pass" if rep.ok else "FAIL"
        if not rep.ok and code == EXIT_OK:
            code = EXIT_MISMATCH
    manifest.wall_time = time.perf_counter() - t0
    (out_dir / "manifest.txt").write_text(manifest.to_text())
    return code


def cmd_validate(args) -> int:
    failed = 0
    for name, g in _load(args.paths):
        rep = report(g)
        ok = rep.cyclic_4 if args.k == 4 else rep.cyclic_5
        failed += not ok
        print(f"{name} {'ok' if ok else 'FAIL'} {rep.line()}")
    return EXIT_INVALID if failed else EXIT_OK


def cmd_analyze(args) -> int:
    graphs = _load([args.path])
    if not 1 <= args.index <= len(graphs):
        raise InputError(f"{args.path} holds {len(graphs)} graphs, no index {args.index}", EXIT_MALFORMED)
    _, g = graphs[args.index - 1]
    if args.edge1 and args.edge2:
        try:
            s = cycle_spread(g, args.edge1, args.edge2)
        except GraphError as exc:
            raise InputError(str(exc), EXIT_MALFORMED) from None
        print("no common cycle" if s is None else f"({s.i},{s.j})")
    if args.threshold:
        t = SpreadThreshold.parse(args.threshold)
        for (a, b), (c, d) in sorted(candidate_pairs(g, t)):
            print(f"{a}-{b} {c}-{d}")
    return EXIT_OK


def cmd_cert(args) -> int:
    for name, g in _load(args.paths):
        print(f"{certificate(g).hex()} {name}")
    return EXIT_OK


def cmd_snark_filter(args) -> int:
    snarks = [g for _, g in _load(args.paths) if is_snark(g)]
    lines = "".join(gio.to_graph6(g) + "\n" for g in snarks)
    if args.output:
        Path(args.output).write_text(lines)
    else:
        sys.stdout.write(lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubic4", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("families", help="emit a named graph")
    p.add_argument("family", help="ladder, moebius, petersen, wheel3 or k33")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("generate", help="run a generation pipeline")
    p.add_argument("pipeline", choices=("wormald", "nonplanar", "planar", "c5c"))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--expected", help="CSV of 'n,count' to compare against")
    p.add_argument("--seeds", nargs="*", help="seed files for the c5c pipeline (default: Petersen)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="structural report per graph")
    p.add_argument("paths", nargs="+")
    p.add_argument("-k", type=int, choices=(4, 5), default=4)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="cycle spread and candidate pairs")
    p.add_argument("path")
    p.add_argument("--index", type=int, default=1, help="1-based graph index within the file")
    p.add_argument("--edge1", type=_parse_edge)
    p.add_argument("--edge2", type=_parse_edge)
    p.add_argument("--threshold", help="1,1 / 1,2 / 2,2")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cert", help="print certificates in hex")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("snark-filter", help="keep only snarks")
    p.add_argument("paths", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_snark_filter)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
