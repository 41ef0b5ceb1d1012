"""Why the complete graph has the smallest variance.

The size X of a random independent set can be written as a mixture of
binomials truncated at different levels t.  Truncation at t = 1 gives the
law of X on K_n, and truncating higher never lowers the variance, so every
graph has at least the variance of K_n.  We walk through the pieces for the
path on three vertices and then check the final inequality on all graphs.
"""

# %%
from fractions import Fraction

from hardcore.binomial import coupling_check, truncated_binomial
from hardcore.families import closed_form_V
from hardcore.graph import Graph, enumerate_graphs, path
from hardcore.model import mixture_decomposition, phi_statistics, size_distribution, variance_fraction

lam = Fraction(1)
g = path(3)
mix = mixture_decomposition(g, lam)
print("binomial ratios q_k :", [str(x) for x in mix.q])
print("differences c_t     :", [str(x) for x in mix.c])
print("mixture weights w_t :", [str(x) for x in mix.w])
print("size law            :", [str(x) for x in size_distribution(g, lam).probs])
print("rebuilt from mixture:", [str(x) for x in mix.reconstruct()])

# %%
# Variance of the truncated binomial grows with the truncation level.  The
# coupling adds a Bernoulli step to W_{t-1} to produce W_t exactly.
p = lam / (1 + lam)
for t in range(0, 4):
    print(f"Var(Y | Y <= {t}) = {truncated_binomial(3, p, t).variance()}")
w = coupling_check(3, p, 2)
print("gamma:", [str(x) for x in w.gamma], "laws equal:", w.laws_equal)

# %%
# The bound itself, on every graph with six vertices.
worst = None
for h in enumerate_graphs(6):
    gap = variance_fraction(h, lam) - closed_form_V("Kn", 6, lam)
    if worst is None or gap < worst[0]:
        worst = (gap, h)
print("smallest gap over n = 6:", worst[0], "attained by", worst[1])
print("K_6 itself:", worst[1] == Graph.complete(6))

# %%
# The addable-vertex count phi gives a second route, via degrees.
st = phi_statistics(g, lam)
print("E phi =", st.mean_phi, " E X / lambda =", st.mean_x / lam)
print("Cov(X, phi) =", st.cov_x_phi, " (Var X - E X)/lambda =", (st.var_x - st.mean_x) / lam)
