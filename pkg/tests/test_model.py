import math
from fractions import Fraction

import pytest
from hypothesis import given

import oracle
from conftest import GRID, graphs, lambdas
from hardcore.families import build, closed_form_E_G1
from hardcore.graph import Graph, enumerate_graphs, path
from hardcore.model import (extension_ratios, free_energy, mixture_decomposition,
                            occupancy_fraction, phi_statistics, profile_occupancy,
                            profile_size_distribution, size_distribution,
                            uncovered_probability_check, variance_fraction)
from hardcore.poly import IndependenceProfile, evaluate, independence_profile

F = Fraction


def test_occupancy_examples():
    assert occupancy_fraction(Graph.complete(3), 1) == F(1, 4)
    assert occupancy_fraction(build("Z:5,2"), 1) == F(17, 60)
    assert occupancy_fraction(build("G1:4,2"), 1) == F(1, 4)


@given(graphs(max_n=7), lambdas)
def test_occupancy_matches_oracle(g, lam):
    mean, var = oracle.moments(g.n, g.edges(), lam)
    assert occupancy_fraction(g, lam) == mean / g.n
    assert variance_fraction(g, lam) == var / g.n


def test_variance_examples():
    assert variance_fraction(Graph.complete(2), 1) == F(1, 9)
    lam = F(2, 3)
    assert variance_fraction(Graph.empty(5), lam) == lam / (1 + lam) ** 2
    # P_3 at λ=1: law (1/5, 3/5, 1/5), mean 1, variance 2/5
    assert variance_fraction(path(3), 1) == F(2, 15)


def _second_derivative(p, lam):
    return sum(k * (k - 1) * c * lam ** (k - 2) for k, c in enumerate(p.coeffs) if k >= 2)


@given(graphs(max_n=7), lambdas)
def test_variance_is_lambda_times_occupancy_derivative(g, lam):
    p = independence_profile(g)
    P = evaluate(p, lam)
    P1 = sum(k * c * lam ** (k - 1) for k, c in enumerate(p.coeffs) if k)
    P2 = _second_derivative(p, lam)
    # d/dλ (λP'/(nP)) = (P' + λP'' - λP'^2/P) / (nP)
    dE = (P1 + lam * P2 - lam * P1 * P1 / P) / (g.n * P)
    assert variance_fraction(g, lam) == lam * dE


def test_free_energy_examples():
    assert free_energy(Graph.empty(1), 1) == pytest.approx(math.log(2), abs=1e-15)
    assert free_energy(build("kdd:2"), 1) == pytest.approx(math.log(7) / 4, abs=1e-15)


@given(graphs(max_n=8), lambdas)
def test_free_energy_positive(g, lam):
    assert free_energy(g, lam) > 0


def test_size_distribution_examples():
    lam = F(3, 2)
    assert size_distribution(Graph.complete(4), lam).probs == (1 / (1 + 4 * lam),
                                                                 4 * lam / (1 + 4 * lam))
    assert size_distribution(path(3), 1).probs == (F(1, 5), F(3, 5), F(1, 5))


def test_size_distribution_normalised():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            for lam in (F(1, 3), F(1), F(3)):
                d = size_distribution(g, lam)
                assert sum(d.probs) == 1 and min(d.probs) >= 0
                assert d.mean() == n * occupancy_fraction(g, lam)
                assert d.variance() == n * variance_fraction(g, lam)


def test_mixture_examples():
    m = mixture_decomposition(Graph.complete(4), F(1, 2))
    assert m.w == (1, 0, 0, 0)
    e = mixture_decomposition(Graph.empty(4), 2)
    assert e.w == (0, 0, 0, 1)
    assert list(e.reconstruct()) == oracle.binomial_law(4, F(2, 3))
    p3 = mixture_decomposition(path(3), 1)
    assert p3.q == (1, 1, F(1, 3), 0, 0)
    assert p3.c == (F(2, 3), F(1, 3), 0)
    # ω_t ∝ c_t F_t with F_1 = 1/2, F_2 = 7/8 for Bin(3, 1/2)
    assert p3.w == (F(8, 15), F(7, 15), 0)
    assert p3.reconstruct() == (F(1, 5), F(3, 5), F(1, 5), 0)


@given(graphs(max_n=7), lambdas)
def test_mixture_reconstructs_size_law(g, lam):
    m = mixture_decomposition(g, lam)
    assert m.q[0] == m.q[1] == 1
    assert all(a >= b for a, b in zip(m.q, m.q[1:]))
    assert min(m.c) >= 0 and min(m.w) >= 0 and sum(m.w) == 1
    assert list(m.reconstruct()) == oracle.size_law(g.n, g.edges(), lam)


def test_phi_examples():
    lam = F(2, 5)
    st = phi_statistics(Graph.complete(4), lam)
    assert st.mean_phi == 4 / (1 + 4 * lam)
    p3 = phi_statistics(path(3), 1)
    # φ: ∅→3, {0}→1, {1}→0, {2}→1, {0,2}→0; P = 5
    assert p3.mean_phi == F(5, 5) and p3.mean_x == 1
    assert p3.extension_ratio == (3, F(2, 3), 0)
    assert p3.extension_ratio[1] >= p3.extension_ratio[0] - 3


@given(graphs(max_n=7), lambdas)
def test_phi_identities(g, lam):
    st = phi_statistics(g, lam)
    assert st.mean_phi == st.mean_x / lam
    assert st.mean_x_phi == st.factorial_moment2 / lam
    assert st.cov_x_phi == (st.var_x - st.mean_x) / lam
    assert st.direct_ratio == st.extension_ratio


def test_extension_ratio_recurrence_n7():
    for g in enumerate_graphs(7):
        r = extension_ratios(independence_profile(g))
        d1 = g.max_degree() + 1
        eta = [r[k] + d1 * k for k in range(len(r))]
        assert all(a <= b for a, b in zip(eta, eta[1:]))


@pytest.mark.parametrize("lam", GRID)
def test_mean_lower_bound_n7(lam):
    for g in enumerate_graphs(7):
        mean = size_distribution(g, lam).mean()
        assert mean >= 7 * lam / (1 + (g.max_degree() + 1) * lam)


def test_uncovered_examples():
    lam = F(3, 4)
    t = lam / (1 + lam)
    assert uncovered_probability_check(Graph.empty(1), 0, lam) == (t, t)
    assert uncovered_probability_check(path(3), 1, 1) == (F(1, 2), F(1, 5))
    with pytest.raises(ValueError):
        uncovered_probability_check(path(3), 3, 1)


@given(graphs(max_n=6), lambdas)
def test_uncovered_probability(g, lam):
    t = lam / (1 + lam)
    for v in range(g.n):
        cond, marg = uncovered_probability_check(g, v, lam)
        assert cond == t and marg <= t


def test_profile_occupancy_examples():
    a = profile_occupancy(IndependenceProfile((1, 4, 2, 1), 4), 1)
    b = profile_occupancy(IndependenceProfile((1, 4, 2, 2), 4), 1)
    assert b > a
    lam = F(1, 7)
    assert profile_occupancy(IndependenceProfile((1, 5), 5), lam) == lam / (1 + 5 * lam)
    g1 = independence_profile(build("G1:6,3"))
    assert profile_occupancy(g1, lam) == closed_form_E_G1(6, 3, lam)


def test_nonpositive_lambda_rejected():
    with pytest.raises(ValueError):
        occupancy_fraction(path(3), 0)
    with pytest.raises(ValueError):
        profile_size_distribution(IndependenceProfile((1, 2), 2), -1)
