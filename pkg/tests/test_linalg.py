from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from balpha import graph as gr
from balpha import linalg
from balpha.errors import BudgetExceededError, ConvergenceError
from balpha.tolerances import DEFAULT

from conftest import graphs


def leibniz_det(M) -> Fraction:
    """Permutation expansion in exact arithmetic; only for small matrices."""
    F = [[Fraction(x) for x in row] for row in np.asarray(M, dtype=object)]
    n = len(F)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction(-1) ** inversions
        for i, j in enumerate(perm):
            term *= F[i][j]
        total += term
    return total


def random_symmetric(rng, n, integer=False):
    X = rng.integers(-4, 5, (n, n)) if integer else rng.normal(size=(n, n))
    return (X + X.T) if integer else (X + X.T) / 2


@pytest.mark.parametrize("n", [2, 3, 6, 9])
def test_path_adjacency_spectrum(n):
    expected = sorted((2 * np.cos(np.pi * k / (n + 1)) for k in range(1, n + 1)), reverse=True)
    for method in ("lapack", "jacobi"):
        got = linalg.sym_eigenvalues(gr.adjacency_matrix(gr.path(n)), method=method)
        assert np.allclose(got, expected, atol=1e-12)


@pytest.mark.parametrize("n", [3, 4, 7])
def test_cycle_laplacian_spectrum(n):
    expected = sorted((2 - 2 * np.cos(2 * np.pi * k / n) for k in range(n)), reverse=True)
    assert np.allclose(linalg.sym_eigenvalues(gr.laplacian(gr.cycle(n))), expected, atol=1e-12)


def test_eigenvalues_descending_and_empty():
    w = linalg.sym_eigenvalues(np.diag([1.0, 3.0, 2.0]))
    assert list(w) == [3.0, 2.0, 1.0]
    assert linalg.sym_eigenvalues(np.zeros((0, 0))).shape == (0,)


def test_rejects_non_symmetric_and_unknown_method():
    with pytest.raises(ValueError):
        linalg.sym_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        linalg.sym_eigenvalues(np.eye(2), method="qr")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_jacobi_agrees_with_lapack(n, seed):
    M = random_symmetric(np.random.default_rng(seed), n)
    a = linalg.sym_eigenvalues(M, method="jacobi")
    b = linalg.sym_eigenvalues(M)
    scale = max(1.0, np.abs(M).sum(axis=1).max())
    assert np.max(np.abs(a - b)) <= DEFAULT.eig * scale


def test_jacobi_reports_non_convergence():
    M = random_symmetric(np.random.default_rng(0), 5)
    with pytest.raises(ConvergenceError):
        linalg.jacobi_eigenvalues(M, DEFAULT.with_overrides(jacobi_max_sweeps=0))


def test_batched_matches_single():
    rng = np.random.default_rng(3)
    stack = np.stack([random_symmetric(rng, 4) for _ in range(5)])
    out = linalg.batched_eigenvalues(stack)
    for M, row in zip(stack, out):
        assert np.allclose(row, linalg.sym_eigenvalues(M))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_determinant_matches_permutation_expansion(n, seed):
    M = random_symmetric(np.random.default_rng(seed), n, integer=True)
    exact = leibniz_det(M.astype(object))
    assert abs(linalg.determinant(M) - float(exact)) <= 1e-9 * max(1.0, abs(float(exact)))


def test_determinant_snaps_singular_to_zero():
    assert linalg.determinant(gr.laplacian(gr.petersen())) == 0.0
    assert linalg.determinant(np.zeros((0, 0))) == 1.0
    assert linalg.determinant(np.array([[0.0, 1.0], [1.0, 0.0]])) == -1.0


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_char_poly_matches_sympy(n, seed):
    M = random_symmetric(np.random.default_rng(seed), n, integer=True)
    x = sympy.Symbol("x")
    expected = sympy.Matrix(M.tolist()).charpoly(x).all_coeffs()
    assert linalg.char_poly(M).coeffs == tuple(Fraction(int(c)) for c in expected)


def test_char_poly_rational_entries_exact():
    M = np.array([[Fraction(1, 3), Fraction(1, 2)], [Fraction(1, 2), Fraction(2, 3)]], dtype=object)
    p = linalg.char_poly(M)
    # x^2 - tr x + det
    assert p.coeffs == (1, -1, Fraction(2, 9) - Fraction(1, 4))


def test_char_poly_float_input_and_evaluation():
    M = gr.signless_laplacian(gr.cycle(5)) / 3.0
    p = linalg.char_poly(M)
    assert p.degree == 5
    for lam in linalg.sym_eigenvalues(M):
        assert abs(p(lam)) < 1e-10
    assert np.allclose(p.as_array(), np.poly(M))


def test_char_poly_budget_and_monic_check():
    with pytest.raises(BudgetExceededError):
        linalg.char_poly(np.zeros((linalg.CHAR_POLY_MAX_ORDER + 1,) * 2))
    with pytest.raises(ValueError):
        linalg.CharPoly((Fraction(2), Fraction(1)))


@given(graphs(max_n=8))
def test_irreducible_iff_connected(g):
    assert linalg.is_irreducible(gr.laplacian(g)) == gr.is_connected(g)


def test_irreducible_directed_support():
    assert not linalg.is_irreducible(np.array([[0, 1], [0, 0]]))
    assert linalg.is_irreducible(np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))


def test_spectral_radius():
    assert linalg.spectral_radius([2.0, -3.0, 1.0]) == 3.0
