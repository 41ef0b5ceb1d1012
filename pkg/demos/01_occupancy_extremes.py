"""Which graphs occupy the most and the least?

Fix the order n and the independence number α.  Among all such graphs the
expected fraction of occupied vertices is largest for the disjoint union of
near-equal cliques Z(n, α), and (for small fugacity) smallest for a clique
joined to α isolated vertices.  This script scans every 6-vertex graph and
prints the spread per α next to both closed forms.
"""

# %%
from fractions import Fraction

from hardcore.families import build, closed_form_E_G1, closed_form_E_Z
from hardcore.graph import emit_graph6, enumerate_graphs, independence_number
from hardcore.model import occupancy_fraction

n = 6
lam = Fraction(1, 3)  # below 2/(n-2) = 1/2, so both bounds apply

by_alpha = {}
for g in enumerate_graphs(n):
    by_alpha.setdefault(independence_number(g), []).append(g)

# %%
print(f"n = {n}, lambda = {lam}")
print(f"{'alpha':>5} {'graphs':>6} {'min E':>12} {'lower form':>12} {'max E':>12} {'upper form':>12}")
for alpha, members in sorted(by_alpha.items()):
    values = [occupancy_fraction(g, lam) for g in members]
    print(f"{alpha:>5} {len(members):>6} {str(min(values)):>12} "
          f"{str(closed_form_E_G1(n, alpha, lam)):>12} {str(max(values)):>12} "
          f"{str(closed_form_E_Z(n, alpha, lam)):>12}")

# %%
# The maximiser for alpha = 2 is two triangles; printing its graph6 string
# makes it easy to pipe into other tools.
best = max(by_alpha[2], key=lambda g: occupancy_fraction(g, lam))
print("alpha = 2 maximiser:", emit_graph6(best), "edges:", best.edges())
print("Z(6,2) built directly:", build("Z:6,2").edges())

# %%
# Above 2/(n-2) the lower construction can stop being the minimiser.  Look
# at which graphs attain the minimum at a large fugacity.
lam_big = Fraction(5)
for alpha, members in sorted(by_alpha.items()):
    values = {emit_graph6(g): occupancy_fraction(g, lam_big) for g in members}
    low = min(values.values())
    holders = [k for k, v in values.items() if v == low]
    print(f"alpha={alpha}: min {low} at {holders}; "
          f"join construction gives {closed_form_E_G1(n, alpha, lam_big)}")
