"""Clique-side symmetrisation.

Working in the complement H, copy one vertex's neighbourhood onto a
non-adjacent vertex.  One of the two copies never lowers the expected clique
size, and repeating the move ends at a complete multipartite graph.  Among
those, balanced parts win, which is the Turán graph.
"""

# %%
from fractions import Fraction

from hardcore.graph import clique_number, emit_graph6, enumerate_graphs, path
from hardcore.symmetrization import (clique_occupancy, convex_identity_check,
                                     symmetrize_to_multipartite, turan_beta)

lam = Fraction(1)
step = convex_identity_check(path(4), 0, 2, lam)
print("P_4 before:", step.beta_before)
print("copy 2's neighbourhood onto 0:", step.beta_h1)
print("copy 0's neighbourhood onto 2:", step.beta_h2)
print("weights:", [str(x) for x in step.weights])

# %%
# A longer walk, starting from a 6-vertex graph that needs several moves.
start = max(enumerate_graphs(6), key=lambda g: len(symmetrize_to_multipartite(g, lam).steps))
trace = symmetrize_to_multipartite(start, lam)
print("start", emit_graph6(start), "clique number", clique_number(start))
for s in trace.steps:
    print(f"  {s.pair} -> {s.chosen}: {s.beta_before} -> {s.beta_after}  ({emit_graph6(s.after)})")
print("end parts:", trace.final_parts)

# %%
# No 6-vertex graph beats the Turán graph with the same clique number.
slack = min(turan_beta(6, clique_number(g), lam) - clique_occupancy(g, lam)
            for g in enumerate_graphs(6))
print("minimum slack to the Turán value over n = 6:", slack)
