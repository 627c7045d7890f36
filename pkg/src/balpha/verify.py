"""Property sweep over a graph corpus; backs the ``balpha verify`` command.

Each property is checked on every applicable (graph, alpha) pair and records
the number of checks performed and any counterexamples (graph6 + alpha +
observed values).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import bounds as bd
from . import family as fam
from . import graph as gr
from . import linalg, sachs
from .errors import BudgetExceededError
from .formats import encode_graph6, parse_graph6
from .graph import Graph

BOUND_TOL = 1e-7
EQ_TOL = 1e-8
EIG_TOL = 1e-10


def alpha_grid(step: Fraction | str = Fraction(1, 20)) -> list[Fraction]:
    step = Fraction(step)
    count = int(1 / step)
    if count * step != 1:
        raise ValueError(f"grid step {step} does not divide 1")
    return [i * step for i in range(count + 1)]


@dataclass
class Failure:
    prop: str
    graph6: str
    alpha: float | None
    detail: str

    def __str__(self) -> str:
        a = "" if self.alpha is None else f" alpha={self.alpha:.6g}"
        return f"  FAIL {self.prop}: graph6={self.graph6}{a} {self.detail}"


@dataclass
class PropertyResult:
    name: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class VerifyReport:
    results: dict[str, PropertyResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    @property
    def total_checks(self) -> int:
        return sum(r.checks for r in self.results.values())

    def lines(self, max_failures: int = 5) -> list[str]:
        out = []
        for name in sorted(self.results):
            r = self.results[name]
            out.append(f"{'PASS' if r.ok else 'FAIL'} {name}: {r.checks} checks, {len(r.failures)} failures")
            out.extend(str(f) for f in r.failures[:max_failures])
        out.append(f"{'OK' if self.ok else 'FAILED'}: {self.total_checks} checks in {len(self.results)} properties")
        return out


# bound name -> (function(g, alpha, ctx) -> value, direction) ; ">=" means lambda >= value
BoundFn = Callable[[Graph, Fraction, "GraphContext"], float]


def _default_bounds() -> dict[str, tuple[BoundFn, str, str]]:
    return {
        "lower_lambda1_alpha_delta": (lambda g, a, c: bd.lower_lambda1_alpha_delta(g, a), "lambda1", ">="),
        "lower_lambda1_yz": (lambda g, a, c: bd.lower_lambda1_yz(g, a), "lambda1", ">="),
        "upper_lambda1_piecewise": (lambda g, a, c: bd.upper_lambda1_piecewise(g, a), "lambda1", "<="),
        "upper_lambda_n_chromatic": (lambda g, a, c: bd.upper_lambda_n_chromatic(g, a, c.chi), "lambda_n", "<="),
    }


class GraphContext:
    """Lazily cached per-graph quantities."""

    def __init__(self, g: Graph):
        self.g = g
        self.g6 = encode_graph6(g)
        self.connected = gr.is_connected(g)
        self.parts = gr.bipartition(g)
        self._chi = None
        self._beta = None

    @property
    def chi(self) -> int:
        if self._chi is None:
            self._chi = bd.chromatic_number(self.g).chi
        return self._chi

    @property
    def beta(self) -> float:
        if self._beta is None:
            self._beta = fam.beta_o(self.g).value
        return self._beta

    def is_complete_bipartite(self) -> bool:
        return self.parts is not None and self.g.m == len(self.parts[0]) * len(self.parts[1])


class Verifier:
    def __init__(self, alphas: Sequence[Fraction], seed: int = 42, lipschitz_pairs: int = 50,
                 psd_step: Fraction = Fraction(1, 100), sachs_max_n: int = 10,
                 bound_functions: dict[str, tuple[BoundFn, str, str]] | None = None):
        self.alphas = [Fraction(a) for a in alphas]
        self.rng = np.random.default_rng(seed)
        self.lipschitz_pairs = lipschitz_pairs
        self.psd_alphas = alpha_grid(psd_step)
        self.sachs_max_n = sachs_max_n
        self.bound_functions = _default_bounds() if bound_functions is None else bound_functions
        self.results: dict[str, PropertyResult] = {}

    def _record(self, prop: str, ok: bool, ctx: GraphContext, alpha=None, detail: str = "") -> None:
        r = self.results.setdefault(prop, PropertyResult(prop))
        r.checks += 1
        if not ok:
            r.failures.append(Failure(prop, ctx.g6, None if alpha is None else float(alpha), detail))

    def run(self, graphs: Iterable[Graph]) -> VerifyReport:
        for g in graphs:
            ctx = GraphContext(g)
            self.check_graph_core(ctx)
            self.check_family(ctx)
            if g.m >= 1:
                self.check_bounds(ctx)
            if g.n <= self.sachs_max_n:
                self.check_sachs(ctx)
        return VerifyReport(self.results)

    # -- graph core -----------------------------------------------------------
    def check_graph_core(self, ctx: GraphContext) -> None:
        g = ctx.g
        A = gr.adjacency_matrix(g)
        ok = np.array_equal(A, A.T) and not A.diagonal().any() and sum(g.degrees) == 2 * g.m
        self._record("graph.invariants", ok, ctx)
        self._record("graph.graph6_roundtrip", parse_graph6(ctx.g6) == g, ctx)
        if g.m >= 1:
            M = gr.incidence_matrix(g)
            lhs = M.T @ M
            rhs = gr.adjacency_matrix(gr.line_graph(g)) + 2 * np.eye(g.m, dtype=np.int64)
            self._record("graph.incidence_line_identity", np.array_equal(lhs, rhs), ctx)
            if g.is_regular():
                k = g.degrees[0]
                ok = np.array_equal(M @ M.T, A + k * np.eye(g.n, dtype=np.int64))
                self._record("graph.incidence_regular_identity", ok, ctx)

    # -- B_alpha family --------------------------------------------------------
    def check_family(self, ctx: GraphContext) -> None:
        g = ctx.g
        lam = fam.spectra(g, self.alphas)
        for a, row in zip(self.alphas, lam):
            E = fam.b_alpha_exact(g, a, "AL")
            same = all(np.array_equal(E, fam.b_alpha_exact(g, a, f)) for f in ("AD", "LD"))
            self._record("family.forms_agree", same, ctx, a)
            B = fam.b_alpha(g, a)
            scale = max(1.0, np.abs(B).sum(axis=1).max())
            self._record("linalg.trace", abs(row.sum() - np.trace(B)) <= g.n * EIG_TOL * scale, ctx, a)
            det = linalg.determinant(B)
            prod = float(np.prod(row))
            self._record("linalg.det_product", abs(prod - det) <= 1e-8 * max(1.0, abs(det)) + 1e-12 * scale ** g.n,
                         ctx, a, f"prod={prod!r} det={det!r}")
            if a != fam.HALF and g.n > 1:
                self._record("linalg.irreducible_iff_connected", linalg.is_irreducible(B) == ctx.connected, ctx, a)
            if ctx.connected and a != fam.HALF:
                self._record("family.perron", abs(np.abs(row).max() - row[0]) <= EIG_TOL * scale, ctx, a,
                             f"spectrum={row}")
            if g.n >= 2 and g.m == g.n * (g.n - 1) // 2:
                ref = fam.spectrum_complete(g.n, a)
                self._record("family.closed_form_complete", np.allclose(row, ref, rtol=0, atol=1e-9), ctx, a)
            elif ctx.is_complete_bipartite() and g.n >= 2:
                ref = fam.spectrum_complete_bipartite(len(ctx.parts[0]), len(ctx.parts[1]), a)
                self._record("family.closed_form_complete_bipartite", np.allclose(row, ref, rtol=0, atol=1e-9),
                             ctx, a)
        self._check_specialisations(ctx)
        self._check_lipschitz(ctx)
        if not g.has_isolated_vertex() and g.m >= 1:
            self._check_psd(ctx)

    def _check_specialisations(self, ctx: GraphContext) -> None:
        g = ctx.g
        s0, s_half, s23, s1 = fam.spectra(g, [0, fam.HALF, fam.TWO_THIRDS, 1])
        desc = lambda M: linalg.sym_eigenvalues(M)
        checks = [
            np.allclose(s0, desc(gr.laplacian(g)), atol=1e-9),
            np.allclose(2 * s_half, sorted(g.degrees, reverse=True), atol=1e-9),
            np.allclose(3 * s23, desc(gr.signless_laplacian(g)), atol=1e-9),
            np.allclose(s1, desc(gr.adjacency_matrix(g)), atol=1e-9),
        ]
        self._record("family.specialisations", all(checks), ctx, None, f"{checks}")

    def _check_lipschitz(self, ctx: GraphContext) -> None:
        g = ctx.g
        L = fam.lipschitz_constant(g)
        pairs = self.rng.random((self.lipschitz_pairs, 2))
        flat = fam.spectra(g, pairs.ravel().tolist()).reshape(self.lipschitz_pairs, 2, g.n)
        for (a, b), (la, lb) in zip(pairs, flat):
            gap = np.abs(la - lb).max()
            limit = abs(a - b) * L + 2 * EIG_TOL
            self._record("family.lipschitz", gap <= limit, ctx, a, f"beta={b} gap={gap} limit={limit}")

    def _check_psd(self, ctx: GraphContext) -> None:
        g = ctx.g
        beta = ctx.beta
        self._record("family.beta_at_least_two_thirds", 2 / 3 - 1e-12 <= beta < 1, ctx, None, f"beta={beta}")
        lam_n = fam.spectra(g, self.psd_alphas)[:, -1]
        step = float(self.psd_alphas[1] - self.psd_alphas[0])
        for a, ln in zip(self.psd_alphas, lam_n):
            a = float(a)
            if a <= beta:
                ok = ln >= -1e-9
            elif a > beta + step:
                ok = ln < -1e-9
            else:
                continue
            self._record("family.psd_iff_below_beta", ok, ctx, a, f"lambda_n={ln} beta={beta}")
            if 0.01 < a < 0.66:
                self._record("family.pd_below_two_thirds", ln > 1e-9, ctx, a, f"lambda_n={ln}")
        if g.is_regular():
            reg = fam.beta_o_regular(g)
            self._record("family.beta_regular_formula", abs(reg - beta) <= 1e-8, ctx, None,
                         f"bisection={beta} formula={reg}")

    # -- bounds ----------------------------------------------------------------
    def check_bounds(self, ctx: GraphContext) -> None:
        g = ctx.g
        lam = fam.spectra(g, self.alphas)
        for a, row in zip(self.alphas, lam):
            l1, ln = row[0], row[-1]
            for name, (fn, target, direction) in self.bound_functions.items():
                if name in ("lower_lambda1_alpha_delta", "upper_lambda1_piecewise") and not ctx.connected:
                    continue
                if name == "lower_lambda1_yz" and a == fam.HALF:
                    continue
                try:
                    value = fn(g, a, ctx)
                except BudgetExceededError:
                    continue
                true = l1 if target == "lambda1" else ln
                ok = true >= value - BOUND_TOL if direction == ">=" else true <= value + BOUND_TOL
                self._record(f"bounds.{name}", ok, ctx, a, f"{target}={true} bound={value}")
            if ctx.parts is not None and ctx.connected:
                self._check_bipartite(ctx, a, l1, ln)
            if ctx.chi >= 3 and a not in (fam.HALF, Fraction(ctx.chi, ctx.chi + 1)):
                value = bd.upper_lambda_n_chromatic(g, a, ctx.chi)
                if abs(ln - value) < EQ_TOL:
                    self._record("bounds.equality_implies_lambda_class", bd.is_in_lambda_class(g), ctx, a)
            if a != fam.HALF and g.is_regular() and ctx.chi >= 3 and bd.is_in_lambda_class(g):
                value = bd.upper_lambda_n_chromatic(g, a, ctx.chi)
                mult = int(np.sum(np.abs(row - value) <= EQ_TOL))
                self._record("bounds.lambda_class_multiplicity", mult >= ctx.chi - 1, ctx, a,
                             f"value={value} multiplicity={mult}")
        self._check_classical(ctx)
        if not g.has_isolated_vertex():
            self._check_derived(ctx)

    def _check_bipartite(self, ctx: GraphContext, a: Fraction, l1: float, ln: float) -> None:
        g = ctx.g
        p, q = len(ctx.parts[0]), len(ctx.parts[1])
        f = bd.f_alpha(p, q, a)
        self._record("bounds.f_alpha_upper", l1 <= f + BOUND_TOL, ctx, a, f"lambda1={l1} f={f}")
        if a != fam.HALF:
            equal = abs(l1 - f) < EQ_TOL
            self._record("bounds.f_alpha_equality_iff_complete_bipartite", equal == ctx.is_complete_bipartite(),
                         ctx, a, f"lambda1={l1} f={f}")
        bound = bd.upper_lambda_n_chromatic(g, a, 2)
        self._record("bounds.bipartite_lambda_n", ln <= bound + BOUND_TOL, ctx, a, f"lambda_n={ln} bound={bound}")
        try:
            bd.bipartite_lambda_n_equality_case(g, a)
            ok, detail = True, ""
        except RuntimeError as exc:
            ok, detail = False, str(exc)
        self._record("bounds.bipartite_equality_branches", ok, ctx, a, detail)

    def _check_classical(self, ctx: GraphContext) -> None:
        g = ctx.g
        sb = bd.specialized_lower_bounds(g)
        rho1 = linalg.sym_eigenvalues(gr.adjacency_matrix(g))[0]
        mu1 = linalg.sym_eigenvalues(gr.laplacian(g))[0]
        q1 = linalg.sym_eigenvalues(gr.signless_laplacian(g))[0]
        reg = g.is_regular()
        self._record("bounds.adjacency_2m_over_n", rho1 >= sb.adjacency - BOUND_TOL, ctx)
        self._record("bounds.adjacency_equality_iff_regular", (abs(rho1 - sb.adjacency) < EQ_TOL) == reg, ctx)
        self._record("bounds.laplacian_delta_plus_one", mu1 >= sb.laplacian - BOUND_TOL, ctx, None,
                     f"mu1={mu1} bound={sb.laplacian}")
        if ctx.connected:
            eq = abs(mu1 - (g.max_degree + 1)) < EQ_TOL
            self._record("bounds.laplacian_equality_iff_dominating", eq == (g.max_degree == g.n - 1), ctx)
        self._record("bounds.signless_4m_over_n", q1 >= sb.signless - BOUND_TOL, ctx)
        self._record("bounds.signless_equality_iff_regular", (abs(q1 - sb.signless) < EQ_TOL) == reg, ctx)

    def _check_derived(self, ctx: GraphContext) -> None:
        g = ctx.g
        beta = ctx.beta
        self._record("bounds.chi_lower_from_beta", ctx.chi >= beta / (1 - beta) - BOUND_TOL, ctx, None,
                     f"chi={ctx.chi} beta={beta}")
        if g.is_regular():
            ind = bd.independence_number(g).alpha_g
            upper = g.n * (1 - beta) / beta
            self._record("bounds.independence_upper_regular", ind <= upper + BOUND_TOL, ctx, None,
                         f"alpha(G)={ind} bound={upper}")

    # -- Sachs -----------------------------------------------------------------
    def check_sachs(self, ctx: GraphContext) -> None:
        g = ctx.g
        exp = sachs.SachsExpansion(g)
        for a in self.alphas:
            if a == 0:
                continue
            det_s = float(exp.determinant(a))
            det_l = linalg.determinant(fam.b_alpha(g, a))
            self._record("sachs.determinant", abs(det_s - det_l) <= 1e-8 * (1 + abs(det_l)), ctx, a,
                         f"sachs={det_s} lu={det_l}")
            cs = exp.coefficients(a)
            cl = linalg.char_poly(fam.b_alpha_exact(g, a)).coeffs
            ok = all(abs(x - y) <= Fraction(1, 10 ** 7) * (1 + abs(y)) for x, y in zip(cs, cl))
            self._record("sachs.char_poly", ok, ctx, a)
        harary = sachs.det_adjacency_harary(g)
        exact = (-1) ** g.n * linalg.char_poly(gr.adjacency_matrix(g)).coeffs[-1]
        self._record("sachs.harary", harary == exact == exp.determinant(1), ctx, 1, f"harary={harary} det={exact}")


def run(graphs: Iterable[Graph], alphas: Sequence[Fraction] | None = None, seed: int = 42,
        **kw) -> VerifyReport:
    return Verifier(alpha_grid() if alphas is None else alphas, seed=seed, **kw).run(graphs)
