from collections import defaultdict
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from balpha import family as fam
from balpha import graph as gr
from balpha import linalg, sachs
from balpha.corpus import from_spec, to_networkx
from balpha.errors import BudgetExceededError

from conftest import alphas, graphs
from test_linalg import leibniz_det


@pytest.mark.parametrize("spec, count", [("K2", 2), ("P3", 3), ("K3", 5), ("C4", 8)])
def test_spanning_subgraph_counts(spec, count):
    g = from_spec(spec)
    assert sum(1 for _ in sachs.enumerate_modified_elementary(g, g.n)) == count


def test_enumeration_components_are_valid():
    g = gr.complete(5)
    for k in range(6):
        for sig in sachs.enumerate_modified_elementary(g, k):
            verts = [v for comp in sig.components for v in comp]
            assert len(verts) == len(set(verts)) == k
            for comp in sig.components:
                if len(comp) == 2:
                    assert g.has_edge(*comp)
                elif len(comp) >= 3:
                    assert all(g.has_edge(comp[i], comp[(i + 1) % len(comp)]) for i in range(len(comp)))
            assert sig.p == len(sig.components)


def test_cycle_counts_complete_graph():
    by_size = defaultdict(int)
    for mask, c in sachs.hamiltonian_cycle_counts(gr.complete(5)).items():
        by_size[bin(mask).count("1")] += c
    # K5: 10 triangles, 15 four-cycles, 12 five-cycles
    assert dict(by_size) == {3: 10, 4: 15, 5: 12}


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_cycle_counts_match_networkx(g):
    expected = defaultdict(int)
    for cyc in nx.simple_cycles(to_networkx(g)):
        if len(cyc) >= 3:
            expected[sum(1 << v for v in cyc)] += 1
    assert sachs.hamiltonian_cycle_counts(g) == dict(expected)


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7))
def test_table_routes_agree(g):
    assert np.array_equal(sachs.sachs_table(g), sachs.sachs_table_by_enumeration(g))


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=5), alphas)
def test_term_weights_give_principal_minors(g, a):
    B = fam.b_alpha_exact(g, a)
    by_support = defaultdict(Fraction)
    for k in range(1, g.n + 1):
        for sig in sachs.enumerate_modified_elementary(g, k):
            support = tuple(sorted(v for comp in sig.components for v in comp))
            by_support[support] += sachs.term_weight(sig, a)
    for k in range(1, g.n + 1):
        for S in combinations(range(g.n), k):
            assert by_support[S] == leibniz_det(B[np.ix_(S, S)])


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7), alphas.filter(lambda a: a != 0))
def test_determinant_matches_leibniz_and_elimination(g, a):
    exact = sachs.SachsExpansion(g).determinant(a)
    if g.n <= 6:
        assert exact == leibniz_det(fam.b_alpha_exact(g, a))
    lu = linalg.determinant(fam.b_alpha(g, a))
    assert abs(float(exact) - lu) <= 1e-8 * max(1.0, abs(lu))
    assert sachs.det_b_alpha_sachs(g, a) == pytest.approx(float(exact), rel=1e-15, abs=1e-300)


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7), alphas)
def test_char_poly_matches_exact_leverrier(g, a):
    assert sachs.char_poly_sachs(g, a).coeffs == linalg.char_poly(fam.b_alpha_exact(g, a)).coeffs


def test_char_poly_matches_sympy_symbolically():
    x, t = sympy.symbols("x t")
    g = gr.petersen()
    table = sachs.sachs_table(g)
    B = sympy.Matrix(g.n, g.n, lambda i, j: (1 - t) * g.degrees[i] if i == j else ((2 * t - 1) if g.adj[i, j] else 0))
    expected = sympy.Poly(B.charpoly(x).as_expr(), x).all_coeffs()
    for k, coeff in enumerate(expected):
        mine = sum(table[k, c2] * (1 - t) ** c2 * (2 * t - 1) ** (k - c2) for c2 in range(k + 1))
        assert sympy.expand(mine - coeff) == 0


def test_k2_polynomial():
    for a in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(9, 10), Fraction(1)):
        p = sachs.char_poly_sachs(gr.complete(2), a)
        assert p.coeffs == (1, -2 * (1 - a), (1 - a) ** 2 - (2 * a - 1) ** 2)


def test_exponent_must_follow_subgraph_order():
    """Using ``n - c2`` instead of ``k - c2`` for the (2alpha-1) power breaks a_k for k < n."""
    g = gr.path(3)
    a = Fraction(1, 3)
    truth = linalg.char_poly(fam.b_alpha_exact(g, a)).coeffs
    table = sachs.sachs_table(g)
    literal = tuple(
        sum((table[k, c2] * (1 - a) ** c2 * (2 * a - 1) ** (g.n - c2) for c2 in range(k + 1)), Fraction(0))
        for k in range(g.n + 1)
    )
    assert sachs.SachsExpansion(g).coefficients(a) == truth
    assert literal != truth
    assert literal[g.n] == truth[g.n]  # the two readings coincide for the determinant


@pytest.mark.parametrize("spec, alpha, det", [("P3", "2/3", 0), ("K3", "1", 2), ("K2", "1", -1)])
def test_determinant_examples(spec, alpha, det):
    g = from_spec(spec)
    assert sachs.SachsExpansion(g).determinant(alpha) == det
    assert linalg.determinant(fam.b_alpha(g, alpha)) == pytest.approx(det, abs=1e-12)


@pytest.mark.parametrize("spec, det", [("P3", 0), ("K3", 2), ("K2", -1), ("C4", 0), ("petersen", 48), ("C6", -4)])
def test_harary(spec, det):
    g = from_spec(spec)
    assert sachs.det_adjacency_harary(g) == det
    assert sachs.SachsExpansion(g).determinant(1) == det


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_harary_matches_integer_determinant(g):
    A = gr.adjacency_matrix(g)
    assert sachs.det_adjacency_harary(g) == int(sympy.Matrix(A.tolist()).det())


@given(graphs(min_n=2, max_n=7))
def test_alpha_zero_continuity_gives_singular_laplacian(g):
    # the expansion is only claimed on (0, 1]; its value at 0 still matches det L = 0
    assert sachs.SachsExpansion(g).determinant(0) == 0
    with pytest.raises(ValueError):
        sachs.det_b_alpha_sachs(g, 0)


def test_budget():
    big = gr.cycle(sachs.SACHS_MAX_N + 1)
    for fn in (sachs.sachs_table, sachs.det_adjacency_harary):
        with pytest.raises(BudgetExceededError):
            fn(big)
    with pytest.raises(BudgetExceededError):
        next(sachs.enumerate_modified_elementary(big, 2))
    with pytest.raises(ValueError):
        next(sachs.enumerate_modified_elementary(gr.path(3), 4))
