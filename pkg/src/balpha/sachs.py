"""Sachs-type expansions of ``det B_alpha(G)`` and its characteristic polynomial.

A modified elementary subgraph ``H`` is a subgraph whose components are single
vertices, single edges, or cycles (length >= 3).  With ``p = c + c1 + c2``
components (cycles, edges, isolated vertices) on ``k`` vertices, the ``k x k``
principal minor of ``B_alpha`` indexed by ``V(H)`` collects the terms

    (-1)^(k-p) * 2^c * (1-alpha)^c2 * (2alpha-1)^(k-c2) * prod_{v isolated in H} d_G(v)

and the characteristic-polynomial coefficient ``a_k`` is ``(-1)^k`` times the sum
of those minors, i.e. ``sum_H (-1)^p 2^c (1-alpha)^c2 (2alpha-1)^(k-c2) prod d_G``.

Every graph therefore has an integer table ``C[k][c2] = sum (-1)^p 2^c prod d_G``
over subgraphs with ``k`` vertices and ``c2`` isolated ones, and

    a_k(alpha) = sum_c2 C[k][c2] (1-alpha)^c2 (2alpha-1)^(k-c2).

The table is built by a subset recursion over the lowest unprocessed vertex;
:func:`enumerate_modified_elementary` lists the individual subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator

import numpy as np

from .errors import BudgetExceededError
from .family import as_alpha
from .graph import Graph
from .linalg import CharPoly

SACHS_MAX_N = 12


def _check_budget(g: Graph) -> None:
    if g.n > SACHS_MAX_N:
        raise BudgetExceededError(f"Sachs enumeration is limited to n <= {SACHS_MAX_N}, got n={g.n}")


@dataclass(frozen=True)
class MesSignature:
    """Combinatorial data of one modified elementary subgraph.

    ``components`` lists vertex tuples: ``(v,)`` isolated vertex, ``(u, v)`` edge,
    longer tuples are cycles in traversal order starting at their lowest vertex.
    ``degprod`` uses degrees in the full graph G.
    """

    k: int
    c: int
    c1: int
    c2: int
    degprod: int
    components: tuple[tuple[int, ...], ...] = ()

    @property
    def p(self) -> int:
        return self.c + self.c1 + self.c2


def term_weight(sig: MesSignature, alpha) -> Fraction:
    """Contribution of ``sig`` to the principal minor of ``B_alpha`` on its vertex set."""
    a = as_alpha(alpha)
    return (
        (-1) ** (sig.k - sig.p)
        * 2 ** sig.c
        * (1 - a) ** sig.c2
        * (2 * a - 1) ** (sig.k - sig.c2)
        * sig.degprod
    )


def enumerate_modified_elementary(g: Graph, k: int) -> Iterator[MesSignature]:
    """Yield every modified elementary subgraph of ``g`` on exactly ``k`` vertices.

    Vertices are processed in increasing order; the lowest unprocessed vertex is
    either left out, made an isolated vertex, matched to a higher unused
    neighbour, or made the lowest vertex of a cycle through higher unused
    vertices (each cycle is produced once, with its second vertex smaller than
    its last).
    """
    _check_budget(g)
    if not 0 <= k <= g.n:
        raise ValueError(f"k must lie in 0..{g.n}")
    n = g.n
    nbrs = [sorted(s) for s in g.neighbors]
    deg = g.degrees
    used = [False] * n

    def cycles_from(v: int, max_len: int) -> Iterator[tuple[int, ...]]:
        path = [v]

        def extend() -> Iterator[tuple[int, ...]]:
            last = path[-1]
            for x in nbrs[last]:
                if x <= v or used[x] or x in path:
                    continue
                path.append(x)
                if len(path) >= 3 and g.adj[x, v] and path[1] < x:
                    yield tuple(path)
                if len(path) < max_len:
                    yield from extend()
                path.pop()

        if max_len >= 3:
            yield from extend()

    comps: list[tuple[int, ...]] = []

    def rec(v: int, need: int) -> Iterator[MesSignature]:
        if need == 0:
            yield _signature(comps, deg)
            return
        while v < n and used[v]:
            v += 1
        if v == n or sum(1 for x in range(v, n) if not used[x]) < need:
            return
        # leave v out
        yield from rec(v + 1, need)
        used[v] = True
        comps.append((v,))
        yield from rec(v + 1, need - 1)
        comps.pop()
        if need >= 2:
            for u in nbrs[v]:
                if u > v and not used[u]:
                    used[u] = True
                    comps.append((v, u))
                    yield from rec(v + 1, need - 2)
                    comps.pop()
                    used[u] = False
        for cyc in list(cycles_from(v, need)):
            for x in cyc[1:]:
                used[x] = True
            comps.append(cyc)
            yield from rec(v + 1, need - len(cyc))
            comps.pop()
            for x in cyc[1:]:
                used[x] = False
        used[v] = False

    yield from rec(0, k)


def _signature(comps: list[tuple[int, ...]], deg: tuple[int, ...]) -> MesSignature:
    c = sum(1 for t in comps if len(t) >= 3)
    c1 = sum(1 for t in comps if len(t) == 2)
    iso = [t[0] for t in comps if len(t) == 1]
    return MesSignature(
        k=sum(len(t) for t in comps),
        c=c,
        c1=c1,
        c2=len(iso),
        degprod=prod(deg[v] for v in iso),
        components=tuple(sorted(comps)),
    )


# -- aggregated expansion ----------------------------------------------------

def hamiltonian_cycle_counts(g: Graph) -> dict[int, int]:
    """Number of distinct cycles of ``g`` with vertex set ``S`` (bitmask), for ``|S| >= 3``."""
    n = g.n
    nbr_lists = [sorted(s) for s in g.neighbors]
    # paths[mask][end]: paths from lowest(mask) to end covering mask, all other vertices > lowest
    paths: dict[int, dict[int, int]] = {}
    for v in range(n):
        paths[1 << v] = {v: 1}
    counts: dict[int, int] = {}
    for mask in range(1, 1 << n):
        ends = paths.get(mask)
        if not ends:
            continue
        start = (mask & -mask).bit_length() - 1
        size = bin(mask).count("1")
        closing = 0
        for end, ways in ends.items():
            if size >= 3 and g.adj[end, start]:
                closing += ways
            for x in nbr_lists[end]:
                if x > start and not mask >> x & 1:
                    slot = paths.setdefault(mask | 1 << x, {})
                    slot[x] = slot.get(x, 0) + ways
        if closing:
            counts[mask] = closing // 2
    return counts


def _shift_add(target: np.ndarray, source: np.ndarray, dk: int, dc2: int, factor: int) -> None:
    rows, cols = source.shape
    target[dk:, dc2:] += factor * source[: rows - dk, : cols - dc2]


def sachs_table(g: Graph) -> np.ndarray:
    """Integer table ``C[k][c2]`` (object array of Python ints), shape ``(n+1, n+1)``."""
    _check_budget(g)
    n = g.n
    size = n + 1
    cyc = hamiltonian_cycle_counts(g)
    cyc_by_low: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for S, count in cyc.items():
        low = (S & -S).bit_length() - 1
        cyc_by_low[low].append((S, count, bin(S).count("1")))
    nbr_mask = [sum(1 << u for u in g.neighbors[v]) for v in range(n)]

    zero = np.zeros((size, size), dtype=object)
    zero[:] = 0
    f: list[np.ndarray] = [None] * (1 << n)  # type: ignore[list-item]
    f[0] = zero.copy()
    f[0][0, 0] = 1
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        T = f[rest].copy()
        _shift_add(T, f[rest], 1, 1, -g.degrees[v])
        partners = nbr_mask[v] & rest
        while partners:
            low = partners & -partners
            _shift_add(T, f[rest ^ low], 2, 0, -1)
            partners ^= low
        for S, count, length in cyc_by_low[v]:
            if S & ~mask == 0:
                _shift_add(T, f[mask ^ S], length, 0, -2 * count)
        f[mask] = T
    return f[(1 << n) - 1]


def sachs_table_by_enumeration(g: Graph) -> np.ndarray:
    """Same table as :func:`sachs_table`, summed over the explicit subgraph stream."""
    size = g.n + 1
    C = np.zeros((size, size), dtype=object)
    C[:] = 0
    for k in range(size):
        for sig in enumerate_modified_elementary(g, k):
            C[k, sig.c2] += (-1) ** sig.p * 2 ** sig.c * sig.degprod
    return C


class SachsExpansion:
    """Characteristic polynomial of ``B_alpha(G)`` as exact polynomials in ``alpha``."""

    def __init__(self, g: Graph, table: np.ndarray | None = None):
        self.graph = g
        self.table = sachs_table(g) if table is None else table

    def coefficients(self, alpha) -> tuple[Fraction, ...]:
        a = as_alpha(alpha)
        u, w = 1 - a, 2 * a - 1
        n = self.graph.n
        out = []
        for k in range(n + 1):
            out.append(sum((self.table[k, c2] * u ** c2 * w ** (k - c2) for c2 in range(k + 1)), Fraction(0)))
        return tuple(out)

    def char_poly(self, alpha) -> CharPoly:
        return CharPoly(self.coefficients(alpha))

    def determinant(self, alpha) -> Fraction:
        n = self.graph.n
        a = as_alpha(alpha)
        u, w = 1 - a, 2 * a - 1
        a_n = sum((self.table[n, c2] * u ** c2 * w ** (n - c2) for c2 in range(n + 1)), Fraction(0))
        return (-1) ** n * a_n


def det_b_alpha_sachs(g: Graph, alpha) -> float:
    """``det B_alpha(G)`` from spanning modified elementary subgraphs, for ``alpha`` in (0, 1]."""
    a = as_alpha(alpha)
    if a == 0:
        raise ValueError("the expansion is stated for alpha in (0, 1]; at alpha=0, det L(G) = 0")
    return float(SachsExpansion(g).determinant(a))


def char_poly_sachs(g: Graph, alpha) -> CharPoly:
    return SachsExpansion(g).char_poly(alpha)


def det_adjacency_harary(g: Graph) -> int:
    """``det A(G) = sum_H (-1)^(n-p) 2^c`` over spanning elementary subgraphs (edges and cycles only)."""
    _check_budget(g)
    n = g.n
    cyc = hamiltonian_cycle_counts(g)
    cyc_by_low: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for S, count in cyc.items():
        cyc_by_low[(S & -S).bit_length() - 1].append((S, count))
    h = [0] * (1 << n)
    h[0] = 1
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        total = 0
        for u in g.neighbors[v]:
            if rest >> u & 1:
                total -= h[rest ^ (1 << u)]
        for S, count in cyc_by_low[v]:
            if S & ~mask == 0:
                total -= 2 * count * h[mask ^ S]
        h[mask] = total
    return (-1) ** n * h[(1 << n) - 1]
