"""Named graph families for the harness and the test-suite."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graph import Graph, GraphError, disjoint_union, from_edge_list, graph6_pairs

__all__ = [
    "FAMILY_KINDS",
    "FamilySpec",
    "generate",
    "path",
    "cycle",
    "complete",
    "edgeless",
    "q_triangles",
    "complete_multipartite",
    "random_tree",
    "random_gnp",
    "prufer_decode",
]


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    return from_edge_list(n, [])


def q_triangles(q: int) -> Graph:
    """``q`` disjoint triangles."""
    if q < 0:
        raise GraphError(f"q must be non-negative, got {q}")
    return disjoint_union(*[complete(3)] * q)


def complete_multipartite(alpha: int, parts: int) -> Graph:
    """Complete multipartite graph with ``parts`` classes of ``alpha`` vertices each."""
    if alpha < 1 or parts < 1:
        raise GraphError(f"need alpha >= 1 and parts >= 1, got alpha={alpha}, parts={parts}")
    n = alpha * parts
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if i // alpha != j // alpha])


def prufer_decode(seq: list[int], n: int) -> Graph:
    """Labelled tree on ``n`` vertices with Prüfer sequence ``seq`` (length ``n - 2``)."""
    if n < 2:
        if seq:
            raise GraphError("a tree on fewer than 2 vertices has an empty Prüfer sequence")
        return edgeless(n)
    if len(seq) != n - 2 or any(not 0 <= s < n for s in seq):
        raise GraphError(f"invalid Prüfer sequence for n={n}")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree: decode a uniformly random Prüfer sequence."""
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return from_edge_list(n, [pair for pair in graph6_pairs(n) if rng.random() < p])


# kind -> (required parameters, builder)
_FAMILIES = {
    "path": (("n",), lambda s: path(s.n)),
    "cycle": (("n",), lambda s: cycle(s.n)),
    "complete": (("n",), lambda s: complete(s.n)),
    "edgeless": (("n",), lambda s: edgeless(s.n)),
    "q_triangles": (("q",), lambda s: q_triangles(s.q)),
    "complete_multipartite": (("alpha", "parts"), lambda s: complete_multipartite(s.alpha, s.parts)),
    "random_tree": (("n", "seed"), lambda s: random_tree(s.n, s.seed)),
    "random_gnp": (("n", "p", "seed"), lambda s: random_gnp(s.n, s.p, s.seed)),
}
FAMILY_KINDS = tuple(_FAMILIES)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    q: int | None = None
    alpha: int | None = None
    parts: int | None = None
    p: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in _FAMILIES:
            raise GraphError(f"unknown family {self.kind!r}; choose from {', '.join(FAMILY_KINDS)}")
        required, _ = _FAMILIES[self.kind]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise GraphError(f"family {self.kind!r} needs parameter(s): {', '.join(missing)}")
        if self.n is not None and self.n < 0:
            raise GraphError(f"n must be non-negative, got {self.n}")

    @property
    def label(self) -> str:
        required, _ = _FAMILIES[self.kind]
        args = ",".join(f"{name}={getattr(self, name)}" for name in required)
        return f"{self.kind}({args})"


def generate(spec: FamilySpec) -> Graph:
    return _FAMILIES[spec.kind][1](spec)
