"""Glauber dynamics against the exact answer.

The heat-bath chain is only a statistical cross-check; the exact values come
from the independence polynomial.  Estimates should sit within a few batch
standard errors of the truth.
"""

# %%
from fractions import Fraction

from hardcore.families import build
from hardcore.model import size_distribution
from hardcore.sampler import ChainConfig, glauber_chains

for spec in ("kdd:3", "Z:6,2", "path:5"):
    g = build(spec)
    lam = Fraction(1)
    exact = size_distribution(g, lam)
    runs = glauber_chains(g, ChainConfig(lam, samples=200_000, seed=11), chains=2)
    for i, r in enumerate(runs):
        print(f"{spec:7s} chain {i}: mean {r.mean:.4f} ± {r.se_mean:.4f} "
              f"(exact {float(exact.mean()):.4f}), var {r.var:.4f} ± {r.se_var:.4f} "
              f"(exact {float(exact.variance()):.4f})")
