from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balpha import family as fam
from balpha import graph as gr
from balpha.corpus import from_spec
from balpha.errors import IsolatedVertexError
from balpha.family import Definiteness

from conftest import alphas, graphs


@pytest.mark.parametrize("raw, expected", [
    ("2/3", Fraction(2, 3)), (" 0.3 ", Fraction(3, 10)), (0.5, Fraction(1, 2)), (1, Fraction(1)),
    (Fraction(1, 7), Fraction(1, 7)), (np.float64(0.25), Fraction(1, 4)),
])
def test_as_alpha(raw, expected):
    assert fam.as_alpha(raw) == expected


@pytest.mark.parametrize("raw", ["abc", "1/0", "1.5", -0.1, float("nan"), float("inf")])
def test_as_alpha_rejects(raw):
    with pytest.raises(ValueError):
        fam.as_alpha(raw)


@settings(max_examples=80)
@given(graphs(max_n=8), alphas)
def test_three_forms_agree_exactly(g, a):
    B = fam.b_alpha_exact(g, a, "AL")
    assert np.array_equal(B, fam.b_alpha_exact(g, a, "AD"))
    assert np.array_equal(B, fam.b_alpha_exact(g, a, "LD"))
    A = gr.adjacency_matrix(g).astype(object)
    L = gr.laplacian(g).astype(object)
    assert np.array_equal(B, a * A + (1 - a) * L)


def test_unknown_form():
    with pytest.raises(ValueError):
        fam.b_alpha_exact(gr.complete(3), 0.5, "XY")


@pytest.mark.parametrize("g", [gr.petersen(), gr.path(5), gr.complete_bipartite(2, 3)])
def test_specialisations_exact(g):
    A, D = gr.adjacency_matrix(g), gr.degree_matrix(g)
    assert np.array_equal(fam.b_alpha_exact(g, 0), gr.laplacian(g))
    assert np.array_equal(fam.b_alpha_exact(g, fam.HALF), D * Fraction(1, 2))
    assert np.array_equal(fam.b_alpha_exact(g, fam.TWO_THIRDS), gr.signless_laplacian(g) * Fraction(1, 3))
    assert np.array_equal(fam.b_alpha_exact(g, 1), A)


@given(graphs(max_n=8), alphas)
def test_float_matrix_is_rounded_exact_matrix(g, a):
    exact = fam.b_alpha_exact(g, a)
    assert np.array_equal(fam.b_alpha(g, a), exact.astype(float))


def test_spectrum_examples():
    assert np.allclose(fam.spectrum(gr.complete(4), "0.3"), [2.5, 2.5, 2.5, 0.9], atol=1e-12)
    assert abs(fam.spectrum(from_spec("K1,24"), 0)[0] - 25) < 1e-12
    assert np.allclose(fam.spectrum(gr.cycle(6), 0.5), 1.0)


def test_spectrum_jacobi_method():
    g = gr.petersen()
    assert np.allclose(fam.spectrum(g, 0.3, method="jacobi"), fam.spectrum(g, 0.3), atol=1e-12)


def test_spectra_batched():
    g = gr.cycle(5)
    out = fam.spectra(g, [0, "1/3", 1])
    assert out.shape == (3, 5)
    assert np.allclose(out[2], fam.spectrum(g, 1))
    assert fam.spectra(g, []).shape == (0, 5)


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_closed_form(n):
    for a in np.linspace(0, 1, 21):
        assert np.allclose(fam.spectrum(gr.complete(n), a), fam.spectrum_complete(n, a), atol=1e-9)


@pytest.mark.parametrize("a, b", [(1, 1), (1, 4), (2, 3), (3, 3), (2, 7)])
def test_complete_bipartite_closed_form(a, b):
    g = gr.complete_bipartite(a, b)
    for x in np.linspace(0, 1, 21):
        assert np.allclose(fam.spectrum(g, x), fam.spectrum_complete_bipartite(a, b, x), atol=1e-9)


def test_closed_form_argument_checks():
    with pytest.raises(ValueError):
        fam.spectrum_complete(1, 0.5)
    with pytest.raises(ValueError):
        fam.spectrum_complete_bipartite(0, 3, 0.5)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.floats(0, 1), st.floats(0, 1))
def test_lipschitz(g, a, b):
    gap = np.abs(fam.spectrum(g, a) - fam.spectrum(g, b)).max()
    assert gap <= abs(a - b) * fam.lipschitz_constant(g) + 2e-10


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8, connected=True), alphas.filter(lambda a: a != Fraction(1, 2)))
def test_perron_root_is_spectral_radius(g, a):
    lam = fam.spectrum(g, a)
    assert abs(np.abs(lam).max() - lam[0]) <= 1e-10 * max(1, 2 * g.max_degree)


@pytest.mark.parametrize("spec, value", [
    ("K4", 0.8), ("petersen", 5 / 7), ("K2,3", 2 / 3), ("C6", 2 / 3), ("K1,24", 2 / 3),
])
def test_beta_o_values(spec, value):
    res = fam.beta_o(from_spec(spec))
    assert abs(res.value - value) < 1e-9
    assert res.bracket_width < 1e-10
    assert float(res) == res.value


@pytest.mark.parametrize("spec", ["K3", "K5", "C5", "C7", "petersen", "T3,3,3"])
def test_beta_o_regular_formula(spec):
    g = from_spec(spec)
    assert abs(fam.beta_o(g).value - fam.beta_o_regular(g)) < 1e-8


def test_beta_o_errors():
    with pytest.raises(IsolatedVertexError):
        fam.beta_o(gr.from_edge_list(3, [(0, 1)]))
    with pytest.raises(IsolatedVertexError):
        fam.beta_o(gr.empty(1))
    with pytest.raises(ValueError):
        fam.beta_o_regular(gr.path(3))
    with pytest.raises(ValueError):
        fam.beta_o_regular(gr.empty(3))


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7).filter(lambda g: not g.has_isolated_vertex()))
def test_psd_threshold(g):
    b = fam.beta_o(g).value
    assert 2 / 3 - 1e-12 <= b < 1
    assert fam.spectrum(g, max(0.0, b - 0.01))[-1] >= -1e-9
    assert fam.spectrum(g, min(1.0, b + 0.01))[-1] < -1e-9
    assert abs(fam.spectrum(g, b)[-1]) < 1e-8


def test_classify_definiteness():
    g = gr.petersen()
    assert fam.classify_definiteness(g, 0.3) is Definiteness.POSITIVE_DEFINITE
    assert fam.classify_definiteness(g, 0) is Definiteness.POSITIVE_SEMIDEFINITE_SINGULAR
    assert fam.classify_definiteness(g, "5/7") is Definiteness.POSITIVE_SEMIDEFINITE_SINGULAR
    assert fam.classify_definiteness(g, 0.9) is Definiteness.INDEFINITE
