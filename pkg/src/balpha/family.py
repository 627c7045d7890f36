"""The matrix family ``B_alpha(G) = alpha*A(G) + (1 - alpha)*L(G)``, ``alpha`` in [0, 1].

Equivalent forms used below::

    B_alpha = (2*alpha - 1)*A + (1 - alpha)*D = (1 - 2*alpha)*L + alpha*D

so ``B_0 = L``, ``B_1/2 = D/2``, ``B_2/3 = Q/3`` and ``B_1 = A``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import graph as gr
from .errors import IsolatedVertexError
from .graph import Graph
from .linalg import batched_eigenvalues, sym_eigenvalues
from .tolerances import DEFAULT, Tolerances

TWO_THIRDS = Fraction(2, 3)
HALF = Fraction(1, 2)


def as_alpha(alpha) -> Fraction:
    """Exact rational view of ``alpha``; accepts floats, ints, Fractions and strings like ``"2/3"``."""
    if isinstance(alpha, str):
        try:
            a = Fraction(alpha.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse alpha from {alpha!r}") from None
    elif isinstance(alpha, (float, np.floating)):
        if not np.isfinite(alpha):
            raise ValueError(f"alpha must be finite, got {alpha}")
        a = Fraction(float(alpha))
    else:
        a = Fraction(alpha)
    if not 0 <= a <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return a


def b_alpha_exact(g: Graph, alpha, form: str = "AL") -> np.ndarray:
    """``B_alpha`` as an object array of Fractions, assembled from one of three forms.

    ``form`` is ``"AL"`` (alpha*A + (1-alpha)*L), ``"AD"`` ((2alpha-1)*A + (1-alpha)*D)
    or ``"LD"`` ((1-2alpha)*L + alpha*D).
    """
    a = as_alpha(alpha)
    # (off-diagonal weight on A, diagonal weight per unit degree) for each form;
    # L contributes -1 off the diagonal and d on it
    if form == "AL":
        off, per_degree = a * 1 + (1 - a) * -1, (1 - a)
    elif form == "AD":
        off, per_degree = 2 * a - 1, 1 - a
    elif form == "LD":
        off, per_degree = (1 - 2 * a) * -1, (1 - 2 * a) + a
    else:
        raise ValueError(f"unknown form {form!r}")
    B = np.full((g.n, g.n), Fraction(0), dtype=object)
    B[g.adj] = off
    B[np.diag_indices(g.n)] = [per_degree * d for d in g.degrees]
    return B


def b_alpha(g: Graph, alpha) -> np.ndarray:
    """``B_alpha(G)`` as a float array; every entry is the correctly rounded exact value."""
    a = as_alpha(alpha)
    off = float(2 * a - 1)
    B = np.where(g.adj, off, 0.0)
    diag = {d: float((1 - a) * d) for d in set(g.degrees)}
    B[np.diag_indices(g.n)] = [diag[d] for d in g.degrees]
    return B


def spectrum(g: Graph, alpha, method: str = "lapack") -> np.ndarray:
    """Eigenvalues of ``B_alpha(G)``, descending."""
    return sym_eigenvalues(b_alpha(g, alpha), method=method)


def spectra(g: Graph, alphas: Iterable) -> np.ndarray:
    """Descending spectra at many ``alpha`` values at once, shape ``(len(alphas), n)``."""
    alphas = [as_alpha(a) for a in alphas]
    if not alphas:
        return np.zeros((0, g.n))
    return batched_eigenvalues(np.stack([b_alpha(g, a) for a in alphas]))


def spectrum_complete(n: int, alpha) -> np.ndarray:
    """Closed-form spectrum of ``B_alpha(K_n)``."""
    if n < 2:
        raise ValueError("spectrum_complete needs n >= 2")
    a = float(as_alpha(alpha))
    vals = [(1 - a) * n - a] * (n - 1) + [(n - 1) * a]
    return np.sort(vals)[::-1]


def spectrum_complete_bipartite(a: int, b: int, alpha) -> np.ndarray:
    """Closed-form spectrum of ``B_alpha(K_{a,b})``.

    At ``alpha = 1`` the same expressions give the adjacency spectrum
    ``{+-sqrt(ab), 0^(a+b-2)}``.
    """
    if a < 1 or b < 1:
        raise ValueError("part sizes must be >= 1")
    x = float(as_alpha(alpha))
    s = (1 - x) * (a + b)
    r = np.sqrt((1 - x) ** 2 * (a - b) ** 2 + 4 * (2 * x - 1) ** 2 * a * b)
    vals = [(1 - x) * a] * (b - 1) + [(1 - x) * b] * (a - 1) + [(s + r) / 2, (s - r) / 2]
    return np.sort(vals)[::-1]


def lipschitz_constant(g: Graph) -> float:
    """``2*mu_1(G) + Delta(G)``: bounds ``|lambda_k(B_a) - lambda_k(B_b)| / |a - b|``."""
    mu1 = sym_eigenvalues(gr.laplacian(g))[0]
    return float(2 * mu1 + g.max_degree)


# -- positive semidefiniteness ----------------------------------------------

def _require_no_isolated(g: Graph) -> None:
    if g.has_isolated_vertex():
        raise IsolatedVertexError("graph has an isolated vertex")
    if g.m == 0:
        raise IsolatedVertexError("graph has no edges")


@dataclass(frozen=True)
class BetaO:
    """Largest ``beta`` in (0, 1) with ``lambda_n(B_beta) = 0``."""

    value: float
    bracket_width: float

    def __float__(self) -> float:
        return self.value


def _lambda_min(g: Graph, alpha: float) -> float:
    return float(np.linalg.eigvalsh(b_alpha(g, alpha))[0])


def beta_o(g: Graph, tol: Tolerances = DEFAULT) -> BetaO:
    """Bisection for the PSD threshold on [2/3, 1].

    ``B_alpha`` is positive definite below 2/3, and past the threshold the
    smallest eigenvalue stays negative up to ``alpha = 1``, so the sign of
    ``lambda_n`` is a monotone predicate on this interval.
    """
    _require_no_isolated(g)
    slack = tol.beta_sign * g.n * g.max_degree
    lo, hi = 2.0 / 3.0, 1.0
    while hi - lo >= tol.beta_bracket:
        mid = 0.5 * (lo + hi)
        if _lambda_min(g, mid) >= -slack:
            lo = mid
        else:
            hi = mid
    return BetaO(_secant_polish(g, lo, hi), hi - lo)


def _secant_polish(g: Graph, lo: float, hi: float) -> float:
    """Zero of the chord of ``lambda_n`` through the bracket ends.

    The sign slack lets the bracket settle slightly past the true zero; near a
    simple root ``lambda_n`` is close to linear, so the chord removes that bias.
    The bracket midpoint is kept when the chord lands far away.
    """
    mid = 0.5 * (lo + hi)
    f_lo, f_hi = _lambda_min(g, lo), _lambda_min(g, hi)
    if f_lo == f_hi:
        return mid
    x = lo - f_lo * (hi - lo) / (f_hi - f_lo)
    return x if abs(x - mid) <= 1e-6 else mid


def beta_o_regular(g: Graph) -> float:
    """``(r - rho_n) / (r - 2*rho_n)`` for an ``r``-regular graph with least adjacency eigenvalue ``rho_n``."""
    if g.m == 0:
        raise ValueError("beta_o is undefined for edgeless graphs")
    if not g.is_regular():
        raise ValueError("beta_o_regular needs a regular graph")
    r = g.degrees[0]
    rho_n = sym_eigenvalues(gr.adjacency_matrix(g))[-1]
    return float((r - rho_n) / (r - 2 * rho_n))


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE_SINGULAR = "positive_semidefinite_singular"
    INDEFINITE = "indefinite"


def classify_definiteness(g: Graph, alpha, tol: Tolerances = DEFAULT) -> Definiteness:
    _require_no_isolated(g)
    lam = spectrum(g, alpha)
    if lam[-1] > tol.psd:
        return Definiteness.POSITIVE_DEFINITE
    if lam[-1] < -tol.psd:
        if not lam[0] > 0:
            raise AssertionError(f"negative lambda_n with lambda_1={lam[0]} at alpha={alpha}")
        return Definiteness.INDEFINITE
    return Definiteness.POSITIVE_SEMIDEFINITE_SINGULAR
