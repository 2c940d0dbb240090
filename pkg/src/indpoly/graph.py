"""Simple undirected graphs on vertices ``0..n-1`` backed by neighbour bitmasks.

A vertex set is a plain ``int`` whose bit ``v`` is set when ``v`` is a member.
All recursive solvers in the package work on such masks over the vertex
universe of one original graph, so an induced subgraph is identified by the
mask of its surviving vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

__all__ = [
    "MAX_VERTICES",
    "GRAPH6_MAX_VERTICES",
    "ENUMERATION_MAX_VERTICES",
    "GraphError",
    "CapacityError",
    "Graph6Error",
    "Graph",
    "VertexSet",
    "mask_of",
    "members",
    "from_edge_list",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "format_edge_list",
    "neighborhood",
    "closed_neighborhood",
    "delete_vertices",
    "survivor_labels",
    "disjoint_union",
    "components",
    "component_masks",
    "is_connected",
    "cyclomatic_number",
    "is_acyclic",
    "find_cycle",
    "graph6_pairs",
    "enumerate_labeled_graphs",
    "labeled_graph",
    "shortest_cycle_in",
]

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62
ENUMERATION_MAX_VERTICES = 7

VertexSet = int


class GraphError(ValueError):
    """Invalid graph input."""


class CapacityError(GraphError):
    """Input exceeds a documented size cap."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbour mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if self.n > MAX_VERTICES:
            raise CapacityError(f"n={self.n} exceeds the {MAX_VERTICES}-vertex cap")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} neighbour masks, got {len(self.adj)}")
        universe = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~universe:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(nbrs):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(nbrs.bit_count() for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from ``(u, v)`` pairs; repeated edges collapse."""
    if n > MAX_VERTICES:
        raise CapacityError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def graph6_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    codes = []
    for i, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126", i)
        codes.append(c - 63)
    n = codes[0]
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", 0)
    pairs = graph6_pairs(n)
    need = (len(pairs) + 5) // 6
    if len(codes) - 1 != need:
        raise Graph6Error(f"n={n} needs {need} data bytes, found {len(codes) - 1}", min(len(codes), need + 1))
    adj = [0] * n
    for idx, (i, j) in enumerate(pairs):
        byte = codes[1 + idx // 6]
        if byte >> (5 - idx % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    used = len(pairs) % 6
    if used:
        if codes[-1] & ((1 << (6 - used)) - 1):
            raise Graph6Error("nonzero padding bits", len(codes) - 1)
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise CapacityError(f"graph6 short form supports n <= {GRAPH6_MAX_VERTICES}, got {g.n}")
    out = [chr(63 + g.n)]
    byte = 0
    nbits = 0
    for i, j in graph6_pairs(g.n):
        byte = byte << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + byte))
            byte = nbits = 0
    if nbits:
        out.append(chr(63 + (byte << (6 - nbits))))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``u v`` lines format; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("edge list is empty")
    lineno, head = rows[0]
    try:
        n, m = (int(tok) for tok in head)
    except ValueError:
        raise GraphError(f"line {lineno}: expected header 'n m', got {' '.join(head)!r}") from None
    if len(rows) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, toks in rows[1:]:
        try:
            u, v = (int(tok) for tok in toks)
        except ValueError:
            raise GraphError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}") from None
        edges.append((u, v))
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


def neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v] | 1 << v


def survivor_labels(g: Graph, w: VertexSet) -> tuple[int, ...]:
    """Original labels of the vertices of ``g - w``, indexed by new label."""
    return tuple(members(g.vertices & ~w))


def delete_vertices(g: Graph, w: VertexSet) -> Graph:
    """Induced subgraph on ``V - w``, relabelled ``0..`` in original order.

    :func:`survivor_labels` gives the new-to-old label map.
    """
    keep = survivor_labels(g, w)
    if len(keep) == g.n:
        return g
    new_label = {old: new for new, old in enumerate(keep)}
    adj = tuple(mask_of(new_label[u] for u in members(g.adj[old] & ~w)) for old in keep)
    return Graph(len(keep), adj)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the vertices of each operand follow the previous ones."""
    adj: list[int] = []
    for h in graphs:
        offset = len(adj)
        adj.extend(nbrs << offset for nbrs in h.adj)
    return Graph(len(adj), tuple(adj))


def component_masks(adj: tuple[int, ...] | list[int], mask: VertexSet) -> list[VertexSet]:
    """Connected components of the subgraph induced by ``mask``."""
    out = []
    rest = mask
    while rest:
        frontier = comp = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = adj[low.bit_length() - 1] & rest & ~comp
            comp |= fresh
            frontier |= fresh
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    """Components ordered by their smallest vertex."""
    return component_masks(g.adj, g.vertices)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def cyclomatic_number(g: Graph) -> int:
    return g.m - g.n + len(components(g))


def is_acyclic(g: Graph) -> bool:
    return cyclomatic_number(g) == 0


def shortest_cycle_in(adj: tuple[int, ...] | list[int], mask: VertexSet) -> list[int] | None:
    """A shortest cycle of the subgraph induced by ``mask``, or ``None``.

    BFS from every root. A non-tree edge ``(u, w)`` closes a walk of length
    ``dist[u] + dist[w] + 1`` through the root; the minimum over all roots is
    the girth, and a walk that short cannot repeat a vertex.
    """
    best_len = 0
    best: tuple[dict[int, int], int, int] | None = None
    for root in members(mask):
        parent = {root: -1}
        dist = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best_len:
                break
            for w in members(adj[u] & mask):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best_len:
                        best_len, best = length, (parent, u, w)
        if best_len == 3:
            break
    if best is None:
        return None
    parent, u, w = best
    left = [u]
    while parent[left[-1]] != -1:
        left.append(parent[left[-1]])
    right = [w]
    while parent[right[-1]] != -1:
        right.append(parent[right[-1]])
    return left[::-1] + right[:-1]


def find_cycle(g: Graph) -> list[int] | None:
    """A shortest cycle as a vertex sequence, or ``None`` for a forest."""
    return shortest_cycle_in(g.adj, g.vertices)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**(n*(n-1)/2)`` labelled graphs on ``n`` vertices.

    Graph number ``k`` has edge ``graph6_pairs(n)[i]`` iff bit ``i`` of ``k`` is set.
    """
    if n > ENUMERATION_MAX_VERTICES:
        raise CapacityError(f"exhaustive enumeration is capped at n={ENUMERATION_MAX_VERTICES}, got {n}")
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    for index in range(1 << (n * (n - 1) // 2)):
        yield labeled_graph(n, index)


def labeled_graph(n: int, index: int) -> Graph:
    """The ``index``-th graph of :func:`enumerate_labeled_graphs`."""
    adj = [0] * n
    for i, j in graph6_pairs(n):
        if index & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        index >>= 1
    return Graph(n, tuple(adj))
