"""det B_alpha and its characteristic polynomial from modified elementary subgraphs.

Each coefficient a_k of det(xI - B_alpha) is a sum over subgraphs on k vertices
made of isolated vertices, edges and cycles; collecting them by the number c2
of isolated vertices turns a_k into a polynomial in alpha with integer weights.

Run:  python demos/sachs_expansion.py
"""

# %%
from fractions import Fraction

from balpha import family, linalg, sachs
from balpha import graph as gr

# %% the subgraphs of P3 on all three vertices
p3 = gr.path(3)
for sig in sachs.enumerate_modified_elementary(p3, 3):
    print(sig.components, "weight at alpha=1/3:", sachs.term_weight(sig, Fraction(1, 3)))

# %% the integer table C[k][c2] of the Petersen graph, then a_k at a few alphas
g = gr.petersen()
table = sachs.sachs_table(g)
print("C[k][c2] for k = 0..4:")
for k in range(5):
    print(k, list(table[k, : k + 1]))
exp = sachs.SachsExpansion(g)
for a in [Fraction(3, 10), Fraction(2, 3), Fraction(1)]:
    same = exp.coefficients(a) == linalg.char_poly(family.b_alpha_exact(g, a)).coeffs
    print(f"alpha={a}: det={exp.determinant(a)}  matches Leverrier: {same}")

# %% the power of (2alpha - 1) must be k - c2: with n - c2 the lower coefficients of P3 go wrong
a = Fraction(1, 3)
t = sachs.sachs_table(p3)
right = sachs.SachsExpansion(p3).coefficients(a)
wrong = [sum(t[k, c] * (1 - a) ** c * (2 * a - 1) ** (3 - c) for c in range(k + 1)) for k in range(4)]
print("k - c2:", [str(x) for x in right])
print("n - c2:", [str(x) for x in wrong])

# %% at alpha = 1 only edges and cycles survive: the classical adjacency determinant
print("det A(Petersen) =", sachs.det_adjacency_harary(g))
