"""Largest eigenvalue of B_alpha(K_{1,24}) against the Y/Z lower bound.

Run:  python demos/star_sweep.py
"""

# %%
import numpy as np

from balpha import bounds, corpus, family

star = corpus.from_spec("K1,24")  # hub 0 joined to 24 leaves
grid = ["0", "0.1", "0.2", "0.3", "0.4", "0.6", "0.7", "0.8", "0.9", "1"]

# %% the bound is built from a three-level test vector, so it is exact at alpha = 0
# (L(K_{1,24}) has lambda_1 = n = 25) and loosens as alpha grows
lam1 = family.spectra(star, grid)[:, 0]
print(f"{'alpha':>6} {'lambda1':>8} {'Y/Z':>8} {'ratio':>6}")
for a, l1 in zip(grid, lam1):
    yz = bounds.lower_lambda1_yz(star, a)
    print(f"{float(a):6.1f} {l1:8.3f} {yz:8.3f} {yz / l1:6.3f}")

# %% alpha = 1/2 is excluded: B_1/2 = D/2 and the test vector degenerates
try:
    bounds.lower_lambda1_yz(star, "1/2")
except ValueError as exc:
    print("alpha=1/2:", exc)

# %% past 2/3 the bound dips and comes back up near alpha = 1; a finer grid shows the minimum
fine = np.linspace(0.7, 1.0, 31)
yz_fine = [bounds.lower_lambda1_yz(star, a) for a in fine]
k = int(np.argmin(yz_fine))
print(f"smallest Y/Z on [0.7, 1]: {yz_fine[k]:.4f} at alpha={fine[k]:.2f}")

# %% the closed form for complete bipartite graphs gives lambda_1 directly
closed = [family.spectrum_complete_bipartite(1, 24, a)[0] for a in grid]
print("closed form agrees:", np.allclose(closed, lam1, atol=1e-12))
