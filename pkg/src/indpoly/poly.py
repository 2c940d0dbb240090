"""Independence polynomial I(G; x) and its evaluations.

Coefficient ``k`` of :func:`ind_poly` counts the independent sets of size
``k``. The recursive engines work on vertex masks of the input graph; every
recursive instance is an induced subgraph of that graph, so the mask alone
is a complete memo key.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import comb

from ._deadline import Deadline, check
from .graph import CapacityError, Graph, component_masks

__all__ = [
    "BRUTE_FORCE_MAX_VERTICES",
    "DEFAULT_MEMO_LIMIT",
    "Polynomial",
    "MaskMemo",
    "ind_poly",
    "brute_force_poly",
    "eval_poly",
    "alternating_number",
    "fibonacci_number",
    "reduced_euler_characteristic",
]

BRUTE_FORCE_MAX_VERTICES = 24
DEFAULT_MEMO_LIMIT = 1 << 20


@dataclass(frozen=True)
class Polynomial:
    """Dense integer polynomial, ``coeffs[k]`` is the coefficient of ``x**k``.

    Trailing zeros are stripped, so equal polynomials compare equal. The zero
    polynomial has no coefficients.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def binomial(cls, m: int) -> Polynomial:
        """``(1 + x) ** m``."""
        return cls(tuple(comb(m, k) for k in range(m + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return Polynomial(tuple(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    def shift(self, k: int = 1) -> Polynomial:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def __call__(self, t: int) -> int:
        return eval_poly(self, t)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def eval_poly(p: Polynomial, t: int) -> int:
    """Exact value of ``p`` at the integer ``t`` (Horner)."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


class MaskMemo(dict):
    """Memo table keyed by vertex masks of one fixed graph.

    Cleared wholesale once it holds ``limit`` entries. Individual ``get`` and
    ``__setitem__`` calls are atomic under the GIL, so one instance may be
    shared between threads working on the same graph.
    """

    def __init__(self, limit: int = DEFAULT_MEMO_LIMIT):
        super().__init__()
        self.limit = limit

    def put(self, key, value) -> None:
        if len(self) >= self.limit:
            self.clear()
        self[key] = value


def _max_degree_vertex(adj, mask: int) -> tuple[int, int]:
    best_v, best_d = -1, -1
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        d = (adj[v] & mask).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d


def ind_poly(
    g: Graph,
    *,
    memo: MaskMemo | None = None,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
    deadline: Deadline | None = None,
) -> Polynomial:
    """Independence polynomial of ``g``.

    Components are solved separately and multiplied. Inside a component the
    recursion pivots on a maximum-degree vertex ``v`` (lowest label on ties)
    using ``I(G) = I(G - v) + x * I(G - N[v])``. Pass a shared ``memo`` to
    reuse results between calls on the same graph.
    """
    adj = g.adj
    if memo is None:
        memo = MaskMemo(memo_limit)

    def solve(mask: int) -> tuple[int, ...]:
        if not mask:
            return (1,)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        check(deadline)
        comps = component_masks(adj, mask)
        if len(comps) > 1:
            result = Polynomial.one()
            for comp in comps:
                result = result * Polynomial(solve(comp))
            out = result.coeffs
        else:
            v, d = _max_degree_vertex(adj, mask)
            if d == 0:
                out = (1, 1)
            else:
                rest = solve(mask & ~(1 << v))
                closed = solve(mask & ~(adj[v] | 1 << v))
                out = tuple(a + b for a, b in zip_longest(rest, (0,) + closed, fillvalue=0))
        memo.put(mask, out)
        return out

    return Polynomial(solve(g.vertices))


def brute_force_poly(g: Graph) -> Polynomial:
    """Independence polynomial by testing every vertex subset (n <= 24)."""
    if g.n > BRUTE_FORCE_MAX_VERTICES:
        raise CapacityError(f"brute force is capped at n={BRUTE_FORCE_MAX_VERTICES}, got {g.n}")
    counts = [0] * (g.n + 1)
    adj = g.adj
    for subset in range(1 << g.n):
        independent = True
        rest = subset
        while rest:
            low = rest & -rest
            rest ^= low
            if adj[low.bit_length() - 1] & subset:
                independent = False
                break
        if independent:
            counts[subset.bit_count()] += 1
    return Polynomial(tuple(counts))


def alternating_number(
    g: Graph,
    *,
    memo: MaskMemo | None = None,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
    deadline: Deadline | None = None,
) -> int:
    """``I(g; -1)``: even-size minus odd-size independent sets.

    Evaluated directly at ``-1``. An isolated vertex contributes a factor
    ``0``; a leaf ``v`` with neighbour ``u`` gives ``I(G) = -I(G - N[u])``;
    otherwise pivot as in :func:`ind_poly`.
    """
    adj = g.adj
    if memo is None:
        memo = MaskMemo(memo_limit)

    def solve(mask: int) -> int:
        if not mask:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        check(deadline)
        comps = component_masks(adj, mask)
        if len(comps) > 1:
            out = 1
            # singletons first: they short-circuit the product to 0
            for comp in sorted(comps, key=int.bit_count):
                out *= solve(comp)
                if out == 0:
                    break
        else:
            out = _solve_connected(mask)
        memo.put(mask, out)
        return out

    def _solve_connected(mask: int) -> int:
        if mask & (mask - 1) == 0:
            return 0
        best_v, best_d = -1, -1
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            nbrs = adj[v] & mask
            d = nbrs.bit_count()
            if d == 1:
                return -solve(mask & ~(adj[nbrs.bit_length() - 1] | nbrs))
            if d > best_d:
                best_v, best_d = v, d
        v = best_v
        return solve(mask & ~(1 << v)) - solve(mask & ~(adj[v] | 1 << v))

    return solve(g.vertices)


def fibonacci_number(g: Graph, **kwargs) -> int:
    """``I(g; 1)``, the number of independent sets including the empty one."""
    return eval_poly(ind_poly(g, **kwargs), 1)


def reduced_euler_characteristic(g: Graph, **kwargs) -> int:
    """Reduced Euler characteristic of the independence complex of ``g``."""
    return -alternating_number(g, **kwargs)
