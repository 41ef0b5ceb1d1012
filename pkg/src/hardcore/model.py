"""Exact statistics of the hard-core measure ``Pr[I] ∝ λ^|I|``.

``X = |I|`` is the size of the random independent set.  Functions taking a
graph compute its independence profile first; the ``profile_*`` variants work
on bare coefficient vectors, realisable or not.

Two different sequences share one letter in the literature; here
``binomial ratio`` q_k = i_k / C(n, k) and ``extension ratio``
r_k = (k+1) i_{k+1} / i_k = E[φ(I) | |I| = k].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import binomial
from .graph import Graph, bits, independent_sets
from .poly import IndependenceProfile, evaluate, evaluate_derivative, independence_profile


def _positive(lam) -> Fraction:
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"fugacity must be positive, got {lam}")
    return lam


@dataclass(frozen=True)
class SizeDistribution:
    probs: tuple[Fraction, ...]

    def mean(self) -> Fraction:
        return binomial.mean(self.probs)

    def variance(self) -> Fraction:
        return binomial.variance(self.probs)

    def factorial_moment2(self) -> Fraction:
        """E[X(X-1)]."""
        return sum((k * (k - 1) * p for k, p in enumerate(self.probs)), Fraction(0))


def profile_size_distribution(p: IndependenceProfile, lam) -> SizeDistribution:
    lam = _positive(lam)
    weights = [c * lam ** k for k, c in enumerate(p.coeffs)]
    total = sum(weights)
    return SizeDistribution(tuple(w / total for w in weights))


def profile_occupancy(p: IndependenceProfile, lam) -> Fraction:
    lam = _positive(lam)
    return lam * evaluate_derivative(p, lam) / (p.n * evaluate(p, lam))


def profile_variance(p: IndependenceProfile, lam) -> Fraction:
    return profile_size_distribution(p, lam).variance() / p.n


def size_distribution(g: Graph, lam) -> SizeDistribution:
    return profile_size_distribution(independence_profile(g), lam)


def occupancy_fraction(g: Graph, lam) -> Fraction:
    return profile_occupancy(independence_profile(g), lam)


def variance_fraction(g: Graph, lam) -> Fraction:
    return profile_variance(independence_profile(g), lam)


def log_rational(x: Fraction) -> float:
    # math.log accepts arbitrarily large ints, so split num/den to avoid overflow
    x = Fraction(x)
    return math.log(x.numerator) - math.log(x.denominator)


def free_energy(g: Graph, lam) -> float:
    """(1/n) ln P_G(λ) in double precision."""
    lam = _positive(lam)
    return log_rational(evaluate(independence_profile(g), lam)) / g.n


# -- mixture over truncated binomials ---------------------------------------

@dataclass(frozen=True)
class MixtureDecomposition:
    n: int
    p: Fraction
    q: tuple[Fraction, ...]   # q_0..q_{n+1}, last entry 0
    c: tuple[Fraction, ...]   # c_1..c_n stored at index t-1
    w: tuple[Fraction, ...]   # ω_1..ω_n stored at index t-1

    def weight(self, t: int) -> Fraction:
        return self.w[t - 1]

    def reconstruct(self) -> tuple[Fraction, ...]:
        """sum_t ω_t Pr[Y = k | Y <= t] for k = 0..n."""
        out = [Fraction(0)] * (self.n + 1)
        for t in range(1, self.n + 1):
            if not self.w[t - 1]:
                continue
            law = binomial.truncated_binomial(self.n, self.p, t).probs
            for k, pk in enumerate(law):
                out[k] += self.w[t - 1] * pk
        return tuple(out)

    def mixed_variance(self) -> Fraction:
        """sum_t ω_t Var(Y | Y <= t)."""
        return sum((self.w[t - 1] * binomial.truncated_binomial(self.n, self.p, t).variance()
                    for t in range(1, self.n + 1) if self.w[t - 1]), Fraction(0))


def profile_mixture(prof: IndependenceProfile, lam) -> MixtureDecomposition:
    lam = _positive(lam)
    n = prof.n
    p = lam / (1 + lam)
    q = tuple(Fraction(prof[k], comb(n, k)) for k in range(n + 1)) + (Fraction(0),)
    c = tuple(q[t] - q[t + 1] for t in range(1, n + 1))
    cdf = binomial.binomial_cdf(n, p)
    mass = [c[t - 1] * cdf[t] for t in range(1, n + 1)]
    total = sum(mass)
    return MixtureDecomposition(n, p, q, c, tuple(m / total for m in mass))


def mixture_decomposition(g: Graph, lam) -> MixtureDecomposition:
    return profile_mixture(independence_profile(g), lam)


# -- extension statistics ---------------------------------------------------

@dataclass(frozen=True)
class PhiStatistics:
    """Moments involving φ(I), the number of vertices addable to I.

    ``mean_phi``, ``mean_x_phi`` and ``direct_ratio`` come from enumerating
    every independent set; ``extension_ratio`` comes from the profile alone.
    """
    mean_phi: Fraction
    mean_x_phi: Fraction
    cov_x_phi: Fraction
    extension_ratio: tuple[Fraction, ...]
    direct_ratio: tuple[Fraction, ...]
    mean_x: Fraction
    var_x: Fraction
    factorial_moment2: Fraction


def extension_ratios(prof: IndependenceProfile) -> tuple[Fraction, ...]:
    """r_k = (k+1) i_{k+1} / i_k for k = 0..alpha (r_alpha = 0)."""
    return tuple(Fraction((k + 1) * prof[k + 1], prof[k]) for k in range(prof.alpha + 1))


def phi_statistics(g: Graph, lam, max_n: int = 20) -> PhiStatistics:
    lam = _positive(lam)
    if g.n > max_n:
        raise ValueError(f"direct φ enumeration limited to n <= {max_n}")
    prof = independence_profile(g)
    full = g.full_mask
    alpha = prof.alpha
    phi_sum = [0] * (alpha + 1)
    weights = {}
    sum_phi = sum_xphi = Fraction(0)
    for I in independent_sets(g):
        k = I.bit_count()
        blocked = I
        for v in bits(I):
            blocked |= g.adj[v]
        phi = (full & ~blocked).bit_count()
        phi_sum[k] += phi
        w = weights.setdefault(k, lam ** k)
        sum_phi += phi * w
        sum_xphi += k * phi * w
    P = evaluate(prof, lam)
    dist = profile_size_distribution(prof, lam)
    mean_phi = sum_phi / P
    mean_x_phi = sum_xphi / P
    mean_x = dist.mean()
    return PhiStatistics(
        mean_phi=mean_phi,
        mean_x_phi=mean_x_phi,
        cov_x_phi=mean_x_phi - mean_x * mean_phi,
        extension_ratio=extension_ratios(prof),
        direct_ratio=tuple(Fraction(phi_sum[k], prof[k]) for k in range(alpha + 1)),
        mean_x=mean_x,
        var_x=dist.variance(),
        factorial_moment2=dist.factorial_moment2(),
    )


def uncovered_probability_check(g: Graph, v: int, lam, max_n: int = 20,
                                ) -> tuple[Fraction, Fraction]:
    """(Pr[v in I | N(v) ∩ I = ∅], Pr[v in I]) by exact enumeration."""
    lam = _positive(lam)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    if g.n > max_n:
        raise ValueError(f"enumeration limited to n <= {max_n}")
    total = uncovered = occupied = Fraction(0)
    for I in independent_sets(g):
        w = lam ** I.bit_count()
        total += w
        if not g.adj[v] & I:
            uncovered += w
            if I >> v & 1:
                occupied += w
    return occupied / uncovered, occupied / total
