"""Exact decycling number (minimum feedback vertex set)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ._deadline import Deadline, check
from .graph import CapacityError, Graph, VertexSet, component_masks, mask_of, members, shortest_cycle_in

__all__ = [
    "BRUTE_FORCE_MAX_VERTICES",
    "FvsResult",
    "decycling_number",
    "brute_force_fvs",
    "verify_decycling_set",
    "has_decycling_set_of_size",
]

BRUTE_FORCE_MAX_VERTICES = 16


@dataclass(frozen=True)
class FvsResult:
    size: int
    certificate: VertexSet

    @property
    def vertices(self) -> list[int]:
        return members(self.certificate)


def _acyclic_mask(adj, mask: int) -> bool:
    edges = 0
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        edges += (adj[low.bit_length() - 1] & mask).bit_count()
    return edges // 2 == mask.bit_count() - len(component_masks(adj, mask))


def _strip(adj, mask: int) -> int:
    """Repeatedly drop vertices of degree <= 1; they lie on no cycle."""
    changed = True
    while changed:
        changed = False
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            nbrs = adj[low.bit_length() - 1] & mask
            if nbrs & (nbrs - 1) == 0:
                mask ^= low
                changed = True
    return mask


def _cycle_rank(adj, mask: int) -> int:
    edges = sum((adj[v] & mask).bit_count() for v in members(mask)) // 2
    return edges - mask.bit_count() + len(component_masks(adj, mask))


def _search(adj, mask: int, budget: int, deadline: Deadline | None) -> list[int] | None:
    check(deadline)
    mask = _strip(adj, mask)
    # after stripping every vertex has degree >= 2, so a nonempty rest has a cycle
    if not mask:
        return []
    if budget == 0:
        return None
    # deleting a vertex of degree d lowers the cycle rank by at most d - 1
    gains = sorted(((adj[v] & mask).bit_count() - 1 for v in members(mask)), reverse=True)
    if sum(gains[:budget]) < _cycle_rank(adj, mask):
        return None
    cycle = shortest_cycle_in(adj, mask)
    for v in sorted(cycle):
        found = _search(adj, mask & ~(1 << v), budget - 1, deadline)
        if found is not None:
            return [v] + found
    return None


def has_decycling_set_of_size(g: Graph, k: int, *, deadline: Deadline | None = None) -> VertexSet | None:
    """A decycling set of at most ``k`` vertices, or ``None`` if none exists."""
    found = _search(g.adj, g.vertices, k, deadline)
    return None if found is None else mask_of(found)


def decycling_number(g: Graph, *, deadline: Deadline | None = None) -> FvsResult:
    """Minimum decycling set by iterative deepening on its size.

    Each round strips degree <= 1 vertices and branches on the vertices of a
    shortest cycle in ascending label order, so the certificate is
    deterministic. The cycle rank of ``g`` bounds the number of rounds.
    """
    adj = g.adj
    upper = _cycle_rank(adj, g.vertices)
    for k in range(upper + 1):
        found = _search(adj, g.vertices, k, deadline)
        if found is not None:
            return FvsResult(len(found), mask_of(found))
    raise AssertionError("decycling number exceeded the cycle rank")


def verify_decycling_set(g: Graph, s: VertexSet) -> bool:
    return _acyclic_mask(g.adj, g.vertices & ~s)


def brute_force_fvs(g: Graph) -> FvsResult:
    """Lexicographically first minimum decycling set, scanning sizes upward (n <= 16)."""
    if g.n > BRUTE_FORCE_MAX_VERTICES:
        raise CapacityError(f"brute force is capped at n={BRUTE_FORCE_MAX_VERTICES}, got {g.n}")
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            s = mask_of(subset)
            if verify_decycling_set(g, s):
                return FvsResult(size, s)
    raise AssertionError("removing every vertex always leaves an acyclic graph")
