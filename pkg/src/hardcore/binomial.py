"""Exact truncated binomial laws and the one-step coupling between them.

``Y ~ Bin(n, p)`` throughout, with ``b_r = Pr[Y = r]``, ``F_t = Pr[Y <= t]``
and ``h_r = b_r / F_r``.  ``W_t`` denotes ``Y`` conditioned on ``Y <= t``.
All arithmetic is in :class:`fractions.Fraction`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, Sequence

from .report import VerificationReport, fmt


# -- generic finite distributions --------------------------------------------

def mean(probs: Sequence[Fraction]) -> Fraction:
    return sum((k * p for k, p in enumerate(probs)), Fraction(0))


def variance(probs: Sequence[Fraction]) -> Fraction:
    m = mean(probs)
    return sum((k * k * p for k, p in enumerate(probs)), Fraction(0)) - m * m


def covariance(probs: Sequence[Fraction], g: Callable[[int], Fraction] | Sequence) -> Fraction:
    """Cov(X, g(X)) for X with ``Pr[X=k] = probs[k]``, by definition."""
    gv = g if callable(g) else g.__getitem__
    exg = sum((k * gv(k) * p for k, p in enumerate(probs)), Fraction(0))
    eg = sum((gv(k) * p for k, p in enumerate(probs)), Fraction(0))
    return exg - mean(probs) * eg


def covariance_double_sum(probs: Sequence[Fraction] | Mapping[int, Fraction],
                          g: Callable[[int], Fraction] | Sequence) -> Fraction:
    """sum_{i,j} (i - j)(g(i) - g(j)) p_i p_j, which equals 2 Cov(X, g(X))."""
    gv = g if callable(g) else g.__getitem__
    items = list(probs.items()) if isinstance(probs, Mapping) else list(enumerate(probs))
    total = Fraction(0)
    for i, pi in items:
        for j, pj in items:
            total += (i - j) * (gv(i) - gv(j)) * pi * pj
    return total


# -- binomial pieces ---------------------------------------------------------

def binomial_pmf(n: int, p: Fraction) -> list[Fraction]:
    p = Fraction(p)
    return [comb(n, r) * p ** r * (1 - p) ** (n - r) for r in range(n + 1)]


def binomial_cdf(n: int, p: Fraction) -> list[Fraction]:
    out, acc = [], Fraction(0)
    for b in binomial_pmf(n, p):
        acc += b
        out.append(acc)
    return out


def hazard_ratios(n: int, p: Fraction) -> list[Fraction]:
    """h_r = b_r / F_r for r = 0..n."""
    return [b / f for b, f in zip(binomial_pmf(n, p), binomial_cdf(n, p))]


@dataclass(frozen=True)
class TruncatedBinomial:
    n: int
    p: Fraction
    t: int
    probs: tuple[Fraction, ...]

    def mean(self) -> Fraction:
        return mean(self.probs)

    def variance(self) -> Fraction:
        return variance(self.probs)


def truncated_binomial(n: int, p, t: int) -> TruncatedBinomial:
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie strictly between 0 and 1, got {p}")
    if not 0 <= t <= n:
        raise ValueError(f"truncation level t={t} outside 0..{n}")
    head = binomial_pmf(n, p)[: t + 1]
    total = sum(head)
    return TruncatedBinomial(n, p, t, tuple(b / total for b in head))


def truncated_variance(d: TruncatedBinomial) -> Fraction:
    return d.variance()


@dataclass(frozen=True)
class CouplingWitness:
    """Law of ``W_{t-1} + B`` with ``B | W_{t-1}=j ~ Bernoulli(gamma_j)``.

    The ``ltv_*`` fields are the four terms of the total-variance expansion of
    ``Var(W_{t-1} + B)``; ``covariance`` is ``Cov(W_{t-1}, gamma_{W_{t-1}})``.
    """
    n: int
    p: Fraction
    t: int
    gamma: tuple[Fraction, ...]
    lifted: tuple[Fraction, ...]
    target: tuple[Fraction, ...]
    ltv_var_prev: Fraction
    ltv_mean_cond_var: Fraction
    ltv_var_cond_mean: Fraction
    ltv_two_cov: Fraction
    covariance: Fraction

    @property
    def laws_equal(self) -> bool:
        return self.lifted == self.target

    @property
    def gamma_monotone(self) -> bool:
        g = self.gamma
        return g[0] >= 0 and g[-1] == 1 and all(a <= b for a, b in zip(g, g[1:]))

    @property
    def ltv_total(self) -> Fraction:
        return (self.ltv_var_prev + self.ltv_mean_cond_var
                + self.ltv_var_cond_mean + self.ltv_two_cov)


def coupling_check(n: int, p, t: int) -> CouplingWitness:
    if not 1 <= t <= n:
        raise ValueError(f"coupling needs 1 <= t <= n, got t={t}, n={n}")
    p = Fraction(p)
    h = hazard_ratios(n, p)
    gamma = tuple(h[t] / h[j] for j in range(t + 1))
    prev = truncated_binomial(n, p, t - 1).probs
    target = truncated_binomial(n, p, t).probs
    lifted = [Fraction(0)] * (t + 1)
    for j, pj in enumerate(prev):
        lifted[j] += pj * (1 - gamma[j])
        lifted[j + 1] += pj * gamma[j]
    g_prev = gamma[:t]
    mean_g = sum((pj * g for pj, g in zip(prev, g_prev)), Fraction(0))
    cond_var = sum((pj * g * (1 - g) for pj, g in zip(prev, g_prev)), Fraction(0))
    var_g = sum((pj * g * g for pj, g in zip(prev, g_prev)), Fraction(0)) - mean_g ** 2
    cov = covariance(prev, g_prev)
    return CouplingWitness(n, p, t, gamma, tuple(lifted), target, variance(prev),
                           cond_var, var_g, 2 * cov, cov)


def variance_monotonicity_sweep(n_max: int, p_grid: Sequence, coupling: bool = True,
                                ) -> VerificationReport:
    """Var(Y|Y<=t) >= Var(Y|Y<=t-1) for every n <= n_max, p in grid, t = 1..n.

    Alongside: h_{r+1} <= h_r, and (if ``coupling``) the coupling law equality,
    gamma monotonicity, the total-variance expansion and Cov >= 0.
    """
    if n_max > 64:
        raise ValueError("n_max must be at most 64")
    start = time.perf_counter()
    report = VerificationReport("lemma_var_de",
                                {"n_max": n_max, "p_grid": [fmt(Fraction(p)) for p in p_grid]})
    for n in range(1, n_max + 1):
        for p in p_grid:
            p = Fraction(p)
            h = hazard_ratios(n, p)
            for r in range(n):
                if h[r + 1] > h[r]:
                    report.fail(f"n={n}", p, f"h_{r + 1}", h[r + 1], f"h_{r}", h[r], "h monotone")
            variances = [truncated_binomial(n, p, t).variance() for t in range(n + 1)]
            for t in range(1, n + 1):
                if variances[t] < variances[t - 1]:
                    report.fail(f"n={n},t={t}", p, "Var(Y|Y<=t)", variances[t],
                                "Var(Y|Y<=t-1)", variances[t - 1], "variance monotone")
                if not coupling:
                    continue
                w = coupling_check(n, p, t)
                tag = f"n={n},t={t}"
                if not w.laws_equal:
                    report.fail(tag, p, "law(W_{t-1}+B)", list(w.lifted), "law(W_t)",
                                list(w.target), "coupling")
                if not w.gamma_monotone:
                    report.fail(tag, p, "gamma", list(w.gamma), "", "", "gamma monotone")
                if w.ltv_total != variances[t]:
                    report.fail(tag, p, "LTV expansion", w.ltv_total, "Var(W_t)",
                                variances[t], "total variance")
                if w.covariance < 0:
                    report.fail(tag, p, "Cov(W,gamma_W)", w.covariance, "0", 0, "covariance sign")
    report.checked = sum(len(p_grid) * n for n in range(1, n_max + 1))
    report.finish(start)
    return report
