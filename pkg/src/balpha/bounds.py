"""Eigenvalue bounds for ``B_alpha(G)`` and the exact solvers they depend on.

Lower and upper bounds on ``lambda_1``, upper bounds on ``lambda_n`` in terms
of the chromatic number, and the derived bounds on ``chi(G)`` and the
independence number through the PSD threshold ``beta_o``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from . import family
from . import graph as gr
from .errors import BudgetExceededError
from .family import HALF, as_alpha
from .graph import Graph

CHROMATIC_MAX_N = 16
INDEPENDENCE_MAX_N = 20


def _require_connected(g: Graph) -> None:
    if not gr.is_connected(g):
        raise ValueError("bound requires a connected graph")


# -- largest eigenvalue -------------------------------------------------------

def lower_lambda1_alpha_delta(g: Graph, alpha) -> float:
    """``alpha * delta``, a lower bound on ``lambda_1`` for connected graphs."""
    _require_connected(g)
    return float(as_alpha(alpha) * g.min_degree)


@dataclass(frozen=True)
class NeighborhoodSplit:
    """Edge census around a maximum-degree vertex ``center``.

    ``m1`` edges inside N(center), ``m2`` edges inside V minus N[center] and
    ``m3`` edges between those two sets.
    """

    center: int
    Delta: int
    m1: int
    m2: int
    m3: int


def neighborhood_split(g: Graph, center: int) -> NeighborhoodSplit:
    Delta = g.max_degree
    if g.degrees[center] != Delta:
        raise ValueError(f"vertex {center} has degree {g.degrees[center]}, not the maximum {Delta}")
    inner = g.neighbors[center]
    m1 = m2 = m3 = 0
    for i, j in g.edges:
        if center in (i, j):
            continue
        ii, jj = i in inner, j in inner
        if ii and jj:
            m1 += 1
        elif not ii and not jj:
            m2 += 1
        else:
            m3 += 1
    return NeighborhoodSplit(center, Delta, m1, m2, m3)


@dataclass(frozen=True)
class YZParts:
    P: Fraction
    Q: Fraction
    Y: Fraction
    Z: Fraction

    @property
    def ratio(self) -> Fraction:
        return self.Y / self.Z


def yz_parts(alpha, n: int, split: NeighborhoodSplit) -> YZParts:
    """Exact ``P, Q, Y, Z`` for the Rayleigh-quotient lower bound ``lambda_1 >= Y/Z``."""
    a = as_alpha(alpha)
    if a == HALF:
        raise ValueError("bound undefined at alpha=1/2")
    D, m1, m2, m3 = split.Delta, split.m1, split.m2, split.m3
    if D < 1:
        raise ValueError("bound needs at least one edge")
    w = 2 * a - 1
    u = 3 * a - 1
    K = 2 * D + 5 * a - 3 * a * a
    P = w * ((a - 1) * (3 * a - 2) * D + 2)
    Q = 16 * a * a - 6 * a ** 3 - 10 * a + 2
    if P == 0:
        # degenerate test vector: indicator of N(center)
        Y = 4 * w ** 2 * (D + 1) ** 2 * (2 * a * m1 + (1 - a) * (D + m3)) * Q ** 2
        Z = 4 * D * (D + 1) ** 2 * w ** 2 * Q ** 2
        if Z == 0:
            return YZParts(P, Q, 2 * a * m1 + (1 - a) * (D + m3), Fraction(D))
        return YZParts(P, Q, Y, Z)
    Y = (
        (a * a * u * u * (D + 1) ** 2 * (2 * a * m2 + (1 - a) * m3) + (1 - a) * w * w * K * K * D) * P * P
        + 4 * w * w * (D + 1) * (w * D * K + a * u * (D + 1) * m3) * P * Q
        + 4 * w * w * (D + 1) ** 2 * (2 * a * m1 + (1 - a) * (D + m3)) * Q * Q
    )
    Z = (w * w * K * K + a * a * u * u * (D + 1) ** 2 * (n - D - 1)) * P * P + 4 * D * (D + 1) ** 2 * w * w * Q * Q
    return YZParts(P, Q, Y, Z)


def lower_lambda1_yz(g: Graph, alpha) -> float:
    """``max Y/Z`` over all maximum-degree centres; a lower bound on ``lambda_1``."""
    if g.m == 0:
        raise ValueError("bound needs at least one edge")
    a = as_alpha(alpha)
    if a == HALF:
        raise ValueError("bound undefined at alpha=1/2")
    Delta = g.max_degree
    best = max(
        yz_parts(a, g.n, neighborhood_split(g, v)).ratio
        for v in range(g.n)
        if g.degrees[v] == Delta
    )
    return float(best)


@dataclass(frozen=True)
class SpecializedBounds:
    adjacency: float  # rho_1 >= 2m/n
    laplacian: float  # mu_1 >= Delta + 1 + m3/(Delta(Delta+1))
    signless: float  # q_1 >= 4m/n


def specialized_lower_bounds(g: Graph) -> SpecializedBounds:
    if g.m == 0:
        raise ValueError("bounds need at least one edge")
    Delta = g.max_degree
    m3 = max(neighborhood_split(g, v).m3 for v in range(g.n) if g.degrees[v] == Delta)
    return SpecializedBounds(
        adjacency=2 * g.m / g.n,
        laplacian=float(Delta + 1 + Fraction(m3, Delta * (Delta + 1))),
        signless=4 * g.m / g.n,
    )


def upper_lambda1_piecewise(g: Graph, alpha) -> float:
    """``(2 - 3alpha)*Delta`` on [0, 1/2] and ``alpha*Delta`` on (1/2, 1]."""
    _require_connected(g)
    a = as_alpha(alpha)
    Delta = g.max_degree
    return float((2 - 3 * a) * Delta if a <= HALF else a * Delta)


def f_alpha(a: int, b: int, alpha) -> float:
    """Largest eigenvalue of ``B_alpha(K_{a,b})``; upper bound for connected bipartite graphs with parts (a, b)."""
    if a < 1 or b < 1:
        raise ValueError("part sizes must be >= 1")
    x = float(as_alpha(alpha))
    return ((1 - x) * (a + b) + sqrt((1 - x) ** 2 * (a - b) ** 2 + 4 * (2 * x - 1) ** 2 * a * b)) / 2


# -- exact combinatorial solvers ---------------------------------------------

@dataclass(frozen=True)
class IndependenceCertificate:
    alpha_g: int
    witness: tuple[int, ...]


def independence_number(g: Graph) -> IndependenceCertificate:
    """Maximum independent set by branch and bound on bitmasks."""
    if g.n > INDEPENDENCE_MAX_N:
        raise BudgetExceededError(f"independence_number is limited to n <= {INDEPENDENCE_MAX_N}")
    nbr = [sum(1 << u for u in g.neighbors[v]) for v in range(g.n)]
    best: list[int] = [0, 0]  # size, mask

    def search(cand: int, chosen: int, size: int) -> None:
        if size + bin(cand).count("1") <= best[0]:
            return
        if cand == 0:
            best[0], best[1] = size, chosen
            return
        # branch on the candidate with most candidate neighbours
        v, dv = -1, -1
        c = cand
        while c:
            low = c & -c
            x = low.bit_length() - 1
            d = bin(nbr[x] & cand).count("1")
            if d > dv:
                v, dv = x, d
            c ^= low
        if dv == 0:
            search(0, chosen | cand, size + bin(cand).count("1"))
            return
        search(cand & ~(1 << v) & ~nbr[v], chosen | (1 << v), size + 1)
        search(cand & ~(1 << v), chosen, size)

    search((1 << g.n) - 1, 0, 0)
    witness = tuple(v for v in range(g.n) if best[1] >> v & 1)
    return IndependenceCertificate(best[0], witness)


def clique_number(g: Graph) -> int:
    return independence_number(gr.complement(g)).alpha_g


@dataclass(frozen=True)
class ColoringCertificate:
    chi: int
    classes: tuple[tuple[int, ...], ...]


def _k_coloring(g: Graph, k: int) -> list[int] | None:
    """DSATUR-ordered backtracking; colours are introduced in increasing order."""
    n = g.n
    color = [-1] * n
    nbrs = [list(s) for s in g.neighbors]

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in nbrs[v] if color[u] >= 0})
            kk = (sat, len(nbrs[v]))
            if kk > key:
                best, key = v, kk
        return best

    def rec(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        forbidden = {color[u] for u in nbrs[v]}
        for c in range(min(k, used + 1)):
            if c in forbidden:
                continue
            color[v] = c
            if rec(colored + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return color if rec(0, 0) else None


def chromatic_number(g: Graph) -> ColoringCertificate:
    """Exact chromatic number with an optimal colouring as certificate."""
    if g.n > CHROMATIC_MAX_N:
        raise BudgetExceededError(f"chromatic_number is limited to n <= {CHROMATIC_MAX_N}")
    k = clique_number(g)
    while True:
        col = _k_coloring(g, k)
        if col is not None:
            classes = tuple(tuple(v for v in range(g.n) if col[v] == c) for c in range(k))
            return ColoringCertificate(k, classes)
        k += 1


# -- smallest eigenvalue -----------------------------------------------------

def upper_lambda_n_chromatic(g: Graph, alpha, chi: int) -> float:
    """``(2m/n) * (chi*(1-alpha) - alpha) / (chi - 1)`` for a proper ``chi``-colourable graph."""
    if g.m == 0:
        raise ValueError("bound needs at least one edge")
    if chi < 2:
        raise ValueError("chi must be >= 2")
    a = as_alpha(alpha)
    return float(Fraction(2 * g.m, g.n) * (chi * (1 - a) - a) / (chi - 1))


class BipartiteEquality(enum.Enum):
    STRICT = "strict"
    EQUAL_ALPHA_TWO_THIRDS = "alpha_two_thirds"
    EQUAL_REGULAR_BIPARTITE = "regular_bipartite"


def bipartite_lambda_n_equality_case(g: Graph, alpha, tol: float = 1e-7) -> BipartiteEquality:
    """Which equality branch of ``lambda_n <= (2m/n)(2 - 3alpha)`` applies.

    The structural answer (``alpha = 2/3``, or regular with ``alpha >= 1/2``)
    is cross-checked against the computed ``lambda_n``; disagreement raises.
    """
    if g.m == 0:
        raise ValueError("bound needs at least one edge")
    if not gr.is_bipartite(g):
        raise ValueError("graph is not bipartite")
    a = as_alpha(alpha)
    if abs(float(a) - 2 / 3) <= 1e-12:
        branch = BipartiteEquality.EQUAL_ALPHA_TWO_THIRDS
    elif g.is_regular() and a >= HALF:
        branch = BipartiteEquality.EQUAL_REGULAR_BIPARTITE
    else:
        branch = BipartiteEquality.STRICT
    lam_n = family.spectrum(g, a)[-1]
    bound = upper_lambda_n_chromatic(g, a, 2)
    numeric_equal = abs(lam_n - bound) <= tol
    if numeric_equal != (branch is not BipartiteEquality.STRICT):
        raise RuntimeError(
            f"equality classification {branch.value} disagrees with lambda_n={lam_n!r}, bound={bound!r}"
        )
    return branch


def _balanced_equitable_partition(g: Graph, chi: int) -> tuple[tuple[int, ...], ...] | None:
    n, d = g.n, g.degrees[0]
    if n % chi or d % (chi - 1):
        return None
    size, cross = n // chi, d // (chi - 1)
    color = [-1] * n
    counts = [0] * chi
    nbrs = [sorted(s) for s in g.neighbors]

    def consistent(v: int) -> bool:
        # a vertex whose neighbourhood is fully coloured must see `cross` per other class
        for w in [v] + nbrs[v]:
            if color[w] < 0 or any(color[u] < 0 for u in nbrs[w]):
                continue
            per = [0] * chi
            for u in nbrs[w]:
                per[color[u]] += 1
            if any(per[c] != (0 if c == color[w] else cross) for c in range(chi)):
                return False
        return True

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(chi, used + 1)):
            if counts[c] == size or any(color[u] == c for u in nbrs[v]):
                continue
            color[v] = c
            counts[c] += 1
            if consistent(v) and rec(v + 1, max(used, c + 1)):
                return True
            color[v] = -1
            counts[c] -= 1
        return False

    if not rec(0, 0):
        return None
    return tuple(tuple(v for v in range(n) if color[v] == c) for c in range(chi))


def lambda_class_partition(g: Graph) -> tuple[tuple[int, ...], ...] | None:
    """A balanced, equitable optimal colouring witnessing membership in the Lambda class, or None.

    Lambda: regular ``chi``-partite graphs (``chi >= 3``) with ``n/chi`` vertices per
    part in which every vertex has ``d/(chi-1)`` neighbours in every other part.
    """
    if g.n > CHROMATIC_MAX_N:
        raise BudgetExceededError(f"Lambda-class test is limited to n <= {CHROMATIC_MAX_N}")
    if g.m == 0 or not g.is_regular():
        return None
    chi = chromatic_number(g).chi
    if chi < 3:
        return None
    return _balanced_equitable_partition(g, chi)


def is_in_lambda_class(g: Graph) -> bool:
    return lambda_class_partition(g) is not None


@dataclass(frozen=True)
class DerivedBounds:
    beta_o: float
    chi_lower: float  # chi >= beta_o / (1 - beta_o)
    independence_upper: float  # alpha(G) <= n (1 - beta_o) / beta_o, proved for regular graphs
    independence_hypothesis: bool  # True when G is regular

    @property
    def independence_unverified(self) -> bool:
        return not self.independence_hypothesis


def beta_derived_bounds(g: Graph) -> DerivedBounds:
    b = family.beta_o(g).value
    return DerivedBounds(
        beta_o=b,
        chi_lower=b / (1 - b),
        independence_upper=g.n * (1 - b) / b,
        independence_hypothesis=g.is_regular(),
    )

