"""Witness search for prescribed (decycling number, alternating number) pairs.

For every ``k >= 0`` and ``|q| <= 2**k`` we look for a graph ``G`` with
``phi(G) = k`` and ``I(G; -1) = q``. Over a disjoint union ``phi`` adds and
``I(-1)`` multiplies, so the search runs in two phases: tabulate the pairs
realised by small connected graphs ("atoms"), then combine atoms whose
``phi`` values sum to ``k`` and whose ``I(-1)`` values multiply to ``q``.
A miss is reported, never papered over.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterator

from .fvs import brute_force_fvs, decycling_number
from .graph import (
    CapacityError,
    Graph,
    GraphError,
    disjoint_union,
    is_connected,
    members,
    to_graph6,
)
from .poly import alternating_number, brute_force_poly, eval_poly

__all__ = [
    "ATOM_MAX_VERTICES",
    "Atom",
    "AtomTable",
    "Witness",
    "WitnessRow",
    "connected_graphs",
    "build_atom_table",
    "find_witness",
    "witness_table",
    "write_witness_table",
]

ATOM_MAX_VERTICES = 8
WITNESS_COLUMNS = ("k", "q", "status", "graph6", "n", "connected", "certificate", "alt")


@dataclass(frozen=True)
class Atom:
    graph: Graph
    graph6: str
    phi: int
    alt: int

    @property
    def n(self) -> int:
        return self.graph.n


class AtomTable(dict):
    """``(phi, alt) -> Atom``, holding the first connected graph found for each pair."""

    def __init__(self, max_n: int = 0):
        super().__init__()
        self.max_n = max_n


def _atlas_by_order():
    from networkx.generators.atlas import graph_atlas_g

    by_n: dict[int, list[Graph]] = {}
    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        adj = [0] * n
        for u, v in nxg.edges():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        by_n.setdefault(n, []).append(Graph(n, tuple(adj)))
    return by_n


def _one_vertex_extensions(graphs: list[Graph]) -> Iterator[Graph]:
    for h in graphs:
        n = h.n
        for nbrs in range(1, 1 << n):
            adj = [a | (1 << n if nbrs >> u & 1 else 0) for u, a in enumerate(h.adj)]
            adj.append(nbrs)
            yield Graph(n + 1, tuple(adj))


def connected_graphs(n: int, atlas=None) -> list[Graph]:
    """Connected graphs on ``n`` vertices covering every isomorphism class.

    Up to 7 vertices these are the atlas graphs, one per class. For 8 vertices
    every connected 7-vertex class is extended by a new vertex in all possible
    ways; each connected 8-vertex graph has a non-cut vertex, so every class
    appears (usually several times). Result is sorted by graph6 with exact
    duplicates removed.
    """
    if n > ATOM_MAX_VERTICES:
        raise CapacityError(f"atom scan is capped at n={ATOM_MAX_VERTICES}, got {n}")
    if n < 1:
        return []
    atlas = atlas if atlas is not None else _atlas_by_order()
    if n <= 7:
        found = [g for g in atlas[n] if is_connected(g)]
    else:
        found = list(_one_vertex_extensions([g for g in atlas[7] if is_connected(g)]))
    unique = {to_graph6(g): g for g in found}
    return [unique[key] for key in sorted(unique)]


def _profile(graphs: list[Graph]) -> list[tuple[int, int]]:
    return [(decycling_number(g).size, alternating_number(g)) for g in graphs]


def build_atom_table(max_n: int, *, jobs: int = 1) -> AtomTable:
    """Smallest connected representative for each realised ``(phi, alt)`` pair.

    Representatives are preferred by fewest vertices, then by graph6 order
    among the scanned graphs. Every stored atom is re-checked with the
    brute-force oracles.
    """
    if max_n > ATOM_MAX_VERTICES:
        raise CapacityError(f"atom scan is capped at n={ATOM_MAX_VERTICES}, got {max_n}")
    table = AtomTable(max_n)
    atlas = _atlas_by_order() if max_n >= 1 else None
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for n in range(1, max_n + 1):
            graphs = connected_graphs(n, atlas)
            if pool is None:
                profiles = _profile(graphs)
            else:
                step = max(1, len(graphs) // (4 * jobs))
                chunks = [graphs[i : i + step] for i in range(0, len(graphs), step)]
                profiles = [pair for chunk in pool.map(_profile, chunks) for pair in chunk]
            for g, key in zip(graphs, profiles):
                if key not in table:
                    table[key] = Atom(g, to_graph6(g), *key)
    finally:
        if pool is not None:
            pool.shutdown()
    for (phi, alt), atom in table.items():
        if brute_force_fvs(atom.graph).size != phi or eval_poly(brute_force_poly(atom.graph), -1) != alt:
            raise RuntimeError(f"atom {atom.graph6} failed oracle re-verification")
    return table


@dataclass(frozen=True)
class Witness:
    k: int
    q: int
    graph: Graph
    certificate: tuple[int, ...]
    alt_value: int
    atoms: tuple[str, ...]

    @property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @property
    def graph6(self) -> str:
        return to_graph6(self.graph)


def _multisets(atoms: list[Atom], k: int, start: int = 0) -> Iterator[list[Atom]]:
    """Multisets of ``atoms[start:]`` (each with phi >= 1) whose phi values sum to ``k``."""
    if k == 0:
        yield []
        return
    for i in range(start, len(atoms)):
        if atoms[i].phi <= k:
            for rest in _multisets(atoms, k - atoms[i].phi, i):
                yield [atoms[i]] + rest


def _compose(combo: list[Atom]) -> tuple[list[Atom], Graph]:
    parts = sorted(combo, key=lambda a: (-a.phi, a.n, a.graph6))
    return parts, disjoint_union(*(a.graph for a in parts))


def find_witness(k: int, q: int, atoms: AtomTable) -> Witness | None:
    """Smallest disjoint union of atoms with decycling number ``k`` and ``I(-1) = q``.

    Candidates are ranked by vertex count, then by the graph6 string of the
    union (atoms laid out by descending phi, then size, then graph6).

    Returns ``None`` when no combination of the tabulated atoms works. The
    returned graph is re-solved from scratch before it is handed out.
    """
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    if abs(q) > 2**k:
        raise GraphError(f"|q| = {abs(q)} exceeds 2**k = {2**k}; no graph can realise it")
    cyclic = sorted((a for a in atoms.values() if a.phi >= 1), key=lambda a: (a.phi, a.alt))
    # one forest atom suffices to fix a sign or force zero
    forest = {}
    for a in sorted((a for a in atoms.values() if a.phi == 0), key=lambda a: (a.n, a.graph6)):
        forest.setdefault(a.alt, a)

    best = None
    best_key = None
    for combo in _multisets(cyclic, k):
        product = 1
        for a in combo:
            product *= a.alt
        options = []
        if product == q:
            options.append(combo)
        for alt, a in forest.items():
            if product * alt == q:
                options.append(combo + [a])
        for option in options:
            size = sum(a.n for a in option)
            if best_key is not None and size > best_key[0]:
                continue
            key = (size, to_graph6(_compose(option)[1]))
            if best_key is None or key < best_key:
                best, best_key = option, key
    if best is None:
        return None

    parts, g = _compose(best)
    fvs = decycling_number(g)
    alt = alternating_number(g)
    if fvs.size != k or alt != q:
        raise RuntimeError(f"witness {to_graph6(g)} re-verified to phi={fvs.size}, alt={alt}, expected ({k}, {q})")
    if abs(alt) > 2**fvs.size:
        raise RuntimeError(f"witness {to_graph6(g)} violates |I(-1)| <= 2**phi")
    return Witness(k, q, g, tuple(members(fvs.certificate)), alt, tuple(a.graph6 for a in parts))


@dataclass(frozen=True)
class WitnessRow:
    k: int
    q: int
    witness: Witness | None

    @property
    def found(self) -> bool:
        return self.witness is not None

    def record(self) -> dict:
        w = self.witness
        if w is None:
            return {"k": self.k, "q": self.q, "status": "not found within search bounds",
                    "graph6": "", "n": "", "connected": "", "certificate": "", "alt": ""}
        return {"k": self.k, "q": self.q, "status": "found", "graph6": w.graph6, "n": w.graph.n,
                "connected": w.connected, "certificate": list(w.certificate), "alt": w.alt_value}


def witness_table(k_max: int, atoms: AtomTable) -> list[WitnessRow]:
    """A row for every ``k <= k_max`` and every ``|q| <= 2**k``."""
    return [WitnessRow(k, q, find_witness(k, q, atoms)) for k in range(k_max + 1) for q in range(-(2**k), 2**k + 1)]


def coverage(rows: list[WitnessRow]) -> dict[int, dict]:
    out: dict[int, dict] = {}
    for row in rows:
        entry = out.setdefault(row.k, {"targets": 0, "found": 0, "missing": []})
        entry["targets"] += 1
        if row.found:
            entry["found"] += 1
        else:
            entry["missing"].append(row.q)
    return out


def write_witness_table(rows: list[WitnessRow], out: IO[str], fmt: str = "csv") -> None:
    if fmt == "json":
        json.dump([row.record() for row in rows], out, indent=1)
        out.write("\n")
        return
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    writer = csv.DictWriter(out, fieldnames=WITNESS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        rec = row.record()
        if isinstance(rec["certificate"], list):
            rec["certificate"] = " ".join(map(str, rec["certificate"]))
        if isinstance(rec["connected"], bool):
            rec["connected"] = str(rec["connected"]).lower()
        writer.writerow(rec)


def render_witness_table(rows: list[WitnessRow], fmt: str = "csv") -> str:
    buf = io.StringIO()
    write_witness_table(rows, buf, fmt)
    return buf.getvalue()
