"""Dense real symmetric linear algebra for small graph matrices.

Eigenvalues are always returned in nonincreasing order,
``lambda_1 >= lambda_2 >= ... >= lambda_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError, ConvergenceError
from .tolerances import DEFAULT, Tolerances

CHAR_POLY_MAX_ORDER = 64


def as_symmetric(M) -> np.ndarray:
    """Return ``M`` as a float array, refusing anything not exactly symmetric."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    return A


def sym_eigenvalues(M, method: str = "lapack", tol: Tolerances = DEFAULT) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, sorted descending.

    ``method="lapack"`` calls ``numpy.linalg.eigvalsh``; ``method="jacobi"``
    runs the cyclic Jacobi iteration in :func:`jacobi_eigenvalues`.
    """
    A = as_symmetric(M)
    if A.shape[0] == 0:
        return np.zeros(0)
    if method == "lapack":
        w = np.linalg.eigvalsh(A)
    elif method == "jacobi":
        w = jacobi_eigenvalues(A, tol)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return np.sort(w)[::-1]


def batched_eigenvalues(stack: np.ndarray) -> np.ndarray:
    """Descending eigenvalues for a stack of symmetric matrices, shape ``(k, n, n)``."""
    return np.linalg.eigvalsh(stack)[:, ::-1]


def jacobi_eigenvalues(M, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Cyclic Jacobi rotations on a dense copy of ``M`` (unsorted output)."""
    A = as_symmetric(M).copy()
    n = A.shape[0]
    fro = np.linalg.norm(A)
    if fro == 0.0:
        return np.zeros(n)
    target = tol.jacobi_off * fro
    mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        # summed directly: ||A||^2 - sum(diag^2) cancels to ~sqrt(eps)*||A||
        return float(np.sqrt(np.sum(A[mask] ** 2)))

    for _ in range(tol.jacobi_max_sweeps):
        if off_norm() < target:
            return np.diag(A).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    t = apq / diff  # small-angle limit, avoids overflow in tau
                else:
                    tau = diff / (2.0 * apq)
                    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                colp, colq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                rowp, rowq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                A[p, q] = A[q, p] = 0.0
    off = off_norm()
    if off < target:
        return np.diag(A).copy()
    raise ConvergenceError(
        f"Jacobi did not converge in {tol.jacobi_max_sweeps} sweeps (off-norm {off:.3e})"
    )


def determinant(M, tol: Tolerances = DEFAULT) -> float:
    """Determinant by Gaussian elimination with partial pivoting.

    A pivot below ``tol.det * max(1, ||M||_inf)`` is taken as an exact zero.
    """
    A = np.array(M, dtype=float)
    n = A.shape[0]
    if n == 0:
        return 1.0
    eps = tol.det * max(1.0, np.abs(A).sum(axis=1).max())
    det = 1.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[piv, k]) <= eps:
            return 0.0
        if piv != k:
            A[[k, piv]] = A[[piv, k]]
            det = -det
        det *= A[k, k]
        A[k + 1:, k:] -= np.outer(A[k + 1:, k] / A[k, k], A[k, k:])
    return float(det)


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial ``x^n + a_1 x^(n-1) + ... + a_n``.

    ``coeffs`` holds exact rationals ``(a_0 = 1, a_1, ..., a_n)``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_array(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + float(c)
        return acc

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]


def _to_fractions(M) -> list[list[Fraction]]:
    arr = np.asarray(M, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    out = []
    for row in arr:
        frow = []
        for x in row:
            if isinstance(x, (float, np.floating)):
                frow.append(Fraction(float(x)))
            else:
                frow.append(Fraction(x))
        out.append(frow)
    return out


def char_poly(M) -> CharPoly:
    """Coefficients of ``det(xI - M)`` by the Faddeev-LeVerrier recurrence.

    Entries are lifted to exact rationals (binary floats are exact rationals),
    the matrix is scaled to integers by a common denominator ``D`` and the
    recurrence runs in Python integers, where every division by ``k`` is exact.
    The result for ``M`` is recovered as ``a_k = c_k / D^k``.
    """
    F = _to_fractions(M)
    n = len(F)
    if n > CHAR_POLY_MAX_ORDER:
        raise BudgetExceededError(f"char_poly is limited to order <= {CHAR_POLY_MAX_ORDER}, got {n}")
    D = lcm(1, *(x.denominator for row in F for x in row))
    N = np.array([[int(x * D) for x in row] for row in F], dtype=object)
    if n == 0:
        return CharPoly((Fraction(1),))
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    c = [1]
    Mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        Mk = N @ Mk + c[-1] * eye
        tr = int(sum((N @ Mk)[i, i] for i in range(n)))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact for integer input"
        c.append(q)
    return CharPoly(tuple(Fraction(ck, D ** k) for k, ck in enumerate(c)))


def is_irreducible(M) -> bool:
    """True iff the support digraph of ``M`` is strongly connected.

    Equivalent to ``(I + |M|)^(n-1) > 0`` entrywise, without forming the power.
    """
    A = np.asarray(M)
    n = A.shape[0]
    if n <= 1:
        return True
    support = A != 0
    np.fill_diagonal(support, False)

    def reaches_all(S: np.ndarray) -> bool:
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for u in np.flatnonzero(S[v] & ~seen):
                seen[u] = True
                frontier.append(int(u))
        return bool(seen.all())

    return reaches_all(support) and reaches_all(support.T)


def spectral_radius(values: Sequence[float]) -> float:
    return float(np.max(np.abs(values)))
