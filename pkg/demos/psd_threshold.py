"""Where B_alpha stops being positive semidefinite.

B_alpha is positive definite for 0 < alpha < 2/3 on graphs without isolated
vertices, and the threshold beta_0 sits in [2/3, 1).  For an r-regular graph
it has the closed form (r - rho_n) / (r - 2 rho_n).

Run:  python demos/psd_threshold.py
"""

# %%
import numpy as np

from balpha import corpus, family
from balpha import graph as gr

for spec in ["K4", "K6", "C5", "C6", "petersen", "K2,3", "K1,24", "T3,3,3", "P5"]:
    g = corpus.from_spec(spec)
    b = family.beta_o(g).value
    reg = f"{family.beta_o_regular(g):.10f}" if g.is_regular() else "-"
    print(f"{spec:>9}  beta0={b:.10f}  regular formula={reg}")

# %% bipartite graphs all sit exactly at 2/3: B_2/3 = Q/3 and the signless
# Laplacian of a bipartite graph is singular
print("bipartite:", [round(family.beta_o(corpus.from_spec(s)).value, 12) for s in ["C8", "P6", "K3,5"]])

# %% lambda_n along alpha for the Petersen graph: zero at alpha = 0 (Laplacian),
# positive up to 5/7, negative after
g = gr.petersen()
alphas = np.linspace(0, 1, 11)
for a, ln in zip(alphas, family.spectra(g, alphas)[:, -1]):
    print(f"alpha={a:.1f}  lambda_n={ln:+.4f}  {family.classify_definiteness(g, a).value}")

# %% every eigenvalue moves at most (2 mu_1 + Delta) per unit of alpha
L = family.lipschitz_constant(g)
a, b = 0.31, 0.37
gap = np.abs(family.spectrum(g, a) - family.spectrum(g, b)).max()
print(f"max eigenvalue shift {gap:.4f} <= {abs(a - b) * L:.4f}")
