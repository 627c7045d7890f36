"""Eigenvalue bounds on a handful of graphs, and what beta_0 says about colourings.

Run:  python demos/bounds_tour.py
"""

# %%
from fractions import Fraction

from balpha import bounds, corpus, family
from balpha.cli import bound_report

# %% one alpha, every applicable bound; `gap` is the distance to the eigenvalue
report = bound_report(corpus.from_spec("petersen"), Fraction(3, 10), "petersen")
for e in report["bounds"]:
    print(f"{e['name']:>30} {e['direction']} {e['value']:8.4f}  holds={e['holds']}  gap={e['gap']:.2e}")

# %% lambda_n <= (2m/n)(chi(1-alpha) - alpha)/(chi - 1); complete graphs meet it for alpha >= 1/2
g = corpus.from_spec("K5")
for a in ["0.3", "0.6", "0.9"]:
    print(f"K5 alpha={a}: lambda_n={family.spectrum(g, a)[-1]:+.4f} bound={bounds.upper_lambda_n_chromatic(g, a, 5):+.4f}")

# %% bipartite graphs: equality at alpha = 2/3 always, and for regular ones whenever alpha >= 1/2
for spec, a in [("C6", "2/3"), ("P4", "2/3"), ("C6", "0.8"), ("P4", "0.8")]:
    print(spec, a, bounds.bipartite_lambda_n_equality_case(corpus.from_spec(spec), a).value)

# %% the Lambda class (balanced, equitable colour classes) carries the bound chi-1 times
g = corpus.from_spec("T3,3,3")
chi = bounds.chromatic_number(g).chi
value = bounds.upper_lambda_n_chromatic(g, "0.8", chi)
print("K_{3,3,3} spectrum at 0.8:", family.spectrum(g, "0.8").round(4), "bound", value)

# %% chi(G) >= beta_0/(1 - beta_0), and alpha(G) <= n(1 - beta_0)/beta_0 for regular graphs
for spec in ["K5", "petersen", "C7", "T2,2,2,2"]:
    g = corpus.from_spec(spec)
    d = bounds.beta_derived_bounds(g)
    print(f"{spec:>9}: chi={bounds.chromatic_number(g).chi} >= {d.chi_lower:.3f}; "
          f"alpha(G)={bounds.independence_number(g).alpha_g} <= {d.independence_upper:.3f}")
