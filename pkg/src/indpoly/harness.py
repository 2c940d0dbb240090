"""Bound verification over graph corpora: |I(G;-1)| <= 2**phi(G) <= 2**nu(G)."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import IO, Iterable, Iterator, Union

from ._deadline import ComputeTimeout, Deadline
from .fvs import decycling_number
from .graph import (
    Graph,
    GraphError,
    components,
    cyclomatic_number,
    enumerate_labeled_graphs,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .poly import MaskMemo, alternating_number, eval_poly, ind_poly

__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_TIMEOUT",
    "InvariantReport",
    "CorpusEntry",
    "SkipRecord",
    "Summary",
    "check_graph",
    "check_corpus",
    "read_graph6_lines",
    "read_graph6_file",
    "read_edge_list_dir",
    "exhaustive_source",
    "ReportWriter",
]

CSV_COLUMNS = ("graph_id", "n", "m", "p", "nu", "phi", "alt", "fib", "bound_phi_ok", "tight", "elapsed_ms")
DEFAULT_TIMEOUT = 10.0
TIMEOUT = "timeout"


@dataclass(frozen=True)
class InvariantReport:
    """One graph's invariants. On timeout the computed fields are ``None``."""

    graph_id: str
    n: int
    m: int
    p: int
    nu: int
    phi: int | None
    alt: int | None
    fib: int | None
    bound_phi_ok: bool | None
    bound_nu_ok: bool | None
    tight: bool | None
    elapsed_ms: float
    certificate: tuple[int, ...] | None = None

    @property
    def timed_out(self) -> bool:
        return self.phi is None

    @property
    def violation(self) -> bool:
        return self.bound_phi_ok is False or self.bound_nu_ok is False

    def record(self, timing: bool = True) -> dict:
        """Flat row in :data:`CSV_COLUMNS` order."""

        def flag(value):
            return TIMEOUT if value is None else value

        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "nu": self.nu,
            "phi": flag(self.phi),
            "alt": flag(self.alt),
            "fib": flag(self.fib),
            "bound_phi_ok": flag(self.bound_phi_ok),
            "tight": flag(self.tight),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }


def check_graph(g: Graph, graph_id: str | None = None, *, timeout: float | None = None) -> InvariantReport:
    """Compute nu, phi, I(-1), I(1) and the bound flags for ``g``."""
    if graph_id is None:
        graph_id = to_graph6(g)
    start = time.perf_counter()
    deadline = Deadline(timeout) if timeout else None
    p = len(components(g))
    nu = cyclomatic_number(g)
    try:
        fvs = decycling_number(g, deadline=deadline)
        alt = alternating_number(g, deadline=deadline)
        fib = eval_poly(ind_poly(g, memo=MaskMemo(), deadline=deadline), 1)
    except ComputeTimeout:
        elapsed = (time.perf_counter() - start) * 1000
        return InvariantReport(graph_id, g.n, g.m, p, nu, None, None, None, None, None, None, elapsed)
    phi = fvs.size
    elapsed = (time.perf_counter() - start) * 1000
    return InvariantReport(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        p=p,
        nu=nu,
        phi=phi,
        alt=alt,
        fib=fib,
        bound_phi_ok=abs(alt) <= 2**phi,
        bound_nu_ok=phi <= nu,
        tight=abs(alt) == 2**phi,
        elapsed_ms=elapsed,
        certificate=tuple(fvs.vertices),
    )


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    graph: Graph


@dataclass(frozen=True)
class SkipRecord:
    line: int
    error: str
    source: str = ""


Item = Union[CorpusEntry, SkipRecord]


def read_graph6_lines(lines: Iterable[str], source: str = "") -> Iterator[Item]:
    """One graph per line; blank lines are ignored, bad lines become :class:`SkipRecord`."""
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except GraphError as exc:
            yield SkipRecord(lineno, str(exc), source)
            continue
        yield CorpusEntry(text.removeprefix(">>graph6<<"), g)


def read_graph6_file(path: str | Path) -> Iterator[Item]:
    with open(path, encoding="ascii", errors="replace") as fh:
        yield from read_graph6_lines(fh, str(path))


def read_edge_list_dir(path: str | Path) -> Iterator[Item]:
    """Every regular file in ``path`` (sorted by name) holds one edge list."""
    for file in sorted(p for p in Path(path).iterdir() if p.is_file()):
        try:
            g = parse_edge_list(file.read_text())
        except (GraphError, UnicodeDecodeError) as exc:
            yield SkipRecord(0, str(exc), str(file))
            continue
        yield CorpusEntry(file.name, g)


def exhaustive_source(n: int) -> Iterator[Item]:
    for g in enumerate_labeled_graphs(n):
        yield CorpusEntry(to_graph6(g), g)


@dataclass
class Summary:
    rows: int = 0
    tight: int = 0
    timeouts: int = 0
    violations: int = 0
    skips: list[SkipRecord] = field(default_factory=list)

    @property
    def processed(self) -> int:
        return self.rows + len(self.skips)

    @property
    def exit_status(self) -> int:
        return 1 if self.violations else 0

    def as_dict(self) -> dict:
        return {
            "processed": self.processed,
            "rows": self.rows,
            "skipped": len(self.skips),
            "tight": self.tight,
            "timeouts": self.timeouts,
            "violations": self.violations,
            "skips": [{"source": s.source, "line": s.line, "error": s.error} for s in self.skips],
        }


class ReportWriter:
    """Streams report rows as CSV or as a JSON array with the same fields."""

    def __init__(self, out: IO[str], fmt: str = "csv", timing: bool = True):
        if fmt not in ("csv", "json"):
            raise ValueError(f"unknown report format {fmt!r}")
        self.out = out
        self.fmt = fmt
        self.timing = timing
        self._count = 0
        if fmt == "csv":
            self._csv = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
            self._csv.writeheader()
        else:
            out.write("[")

    def write(self, report: InvariantReport) -> None:
        row = report.record(self.timing)
        if self.fmt == "csv":
            self._csv.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in row.items()})
        else:
            self.out.write(("\n" if self._count == 0 else ",\n") + json.dumps(row))
        self._count += 1

    def close(self) -> None:
        if self.fmt == "json":
            self.out.write("\n]\n" if self._count else "]\n")


def _check_entry(args: tuple[CorpusEntry, float | None]) -> InvariantReport:
    entry, timeout = args
    return check_graph(entry.graph, entry.graph_id, timeout=timeout)


def check_corpus(
    source: Iterable[Item],
    sink: ReportWriter | None = None,
    *,
    jobs: int = 1,
    timeout: float | None = DEFAULT_TIMEOUT,
    batch_size: int = 2048,
) -> Summary:
    """Check every graph of ``source`` and stream rows to ``sink`` in input order.

    With ``jobs > 1`` batches are farmed out to a process pool; results are
    written back in input order, so the output does not depend on ``jobs``.
    """
    summary = Summary()
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    it = iter(source)
    try:
        while True:
            batch = list(islice(it, batch_size))
            if not batch:
                break
            entries = [item for item in batch if isinstance(item, CorpusEntry)]
            work = [(entry, timeout) for entry in entries]
            if pool is None:
                reports = map(_check_entry, work)
            else:
                reports = pool.map(_check_entry, work, chunksize=max(1, len(work) // (4 * jobs)))
            reports = iter(reports)
            for item in batch:
                if isinstance(item, SkipRecord):
                    summary.skips.append(item)
                    continue
                report = next(reports)
                summary.rows += 1
                summary.tight += bool(report.tight)
                summary.timeouts += report.timed_out
                summary.violations += report.violation
                if sink is not None:
                    sink.write(report)
    finally:
        if pool is not None:
            pool.shutdown()
    return summary


def render(reports: Iterable[InvariantReport], fmt: str = "csv", timing: bool = False) -> str:
    """Whole report as a string (handy for golden comparisons)."""
    buf = io.StringIO()
    writer = ReportWriter(buf, fmt, timing)
    for report in reports:
        writer.write(report)
    writer.close()
    return buf.getvalue()
