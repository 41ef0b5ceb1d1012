from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracle
from hardcore.binomial import (binomial_cdf, binomial_pmf, coupling_check, covariance,
                               covariance_double_sum, hazard_ratios, truncated_binomial,
                               truncated_variance, variance_monotonicity_sweep)

F = Fraction
probs_p = st.fractions(min_value=F(1, 19), max_value=F(18, 19), max_denominator=19)


def test_truncated_examples():
    assert truncated_binomial(2, F(1, 2), 1).probs == (F(1, 3), F(2, 3))
    assert list(truncated_binomial(5, F(1, 3), 5).probs) == oracle.binomial_law(5, F(1, 3))
    lam = F(5, 2)
    assert truncated_binomial(1, lam / (1 + lam), 1).probs == (1 / (1 + lam), lam / (1 + lam))


def test_truncated_variance_examples():
    assert truncated_variance(truncated_binomial(2, F(1, 2), 0)) == 0
    assert truncated_variance(truncated_binomial(2, F(1, 2), 1)) == F(2, 9)
    assert truncated_variance(truncated_binomial(2, F(1, 2), 2)) == F(1, 2)


@pytest.mark.parametrize("n, p, t", [(3, F(1, 2), 4), (3, F(1, 2), -1), (3, F(0), 1),
                                     (3, F(1), 1)])
def test_truncated_errors(n, p, t):
    with pytest.raises(ValueError):
        truncated_binomial(n, p, t)


def test_pmf_and_cdf():
    pmf = binomial_pmf(4, F(1, 4))
    assert pmf == oracle.binomial_law(4, F(1, 4))
    assert binomial_cdf(4, F(1, 4))[-1] == 1


@given(st.integers(1, 14), probs_p)
def test_hazard_ratio_monotone(n, p):
    h = hazard_ratios(n, p)
    assert h[0] == 1
    assert all(a >= b for a, b in zip(h, h[1:]))


def test_coupling_example():
    w = coupling_check(2, F(1, 2), 1)
    assert w.gamma == (F(2, 3), 1)
    assert w.lifted == w.target == (F(1, 3), F(2, 3))


def test_coupling_at_full_truncation():
    w = coupling_check(4, F(2, 7), 4)
    assert list(w.lifted) == oracle.binomial_law(4, F(2, 7))


def test_coupling_grid():
    ps = [F(1, 4)] + [lam / (1 + lam) for lam in (F(1, 2), F(1), F(2))]
    for n in range(2, 11):
        for p in ps:
            for t in range(1, n + 1):
                w = coupling_check(n, p, t)
                assert w.laws_equal and w.gamma_monotone
                assert w.ltv_total == truncated_binomial(n, p, t).variance()
                assert w.covariance >= 0


def test_coupling_rejects_t0():
    with pytest.raises(ValueError):
        coupling_check(3, F(1, 2), 0)


@given(st.integers(1, 12), probs_p)
def test_truncated_variance_monotone(n, p):
    v = [truncated_binomial(n, p, t).variance() for t in range(n + 1)]
    assert all(a <= b for a, b in zip(v, v[1:]))


@given(st.lists(st.integers(0, 9), min_size=1, max_size=8),
       st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                min_size=8, max_size=8))
def test_covariance_double_sum(weights, gvals):
    total = sum(weights)
    if total == 0:
        return
    probs = [F(w, total) for w in weights]
    assert covariance_double_sum(probs, gvals) == 2 * covariance(probs, gvals)
    sparse = {k: p for k, p in enumerate(probs) if p}
    assert covariance_double_sum(sparse, gvals) == 2 * covariance(probs, gvals)


def test_sweep_passes():
    rep = variance_monotonicity_sweep(10, [F(1, 4), F(1, 2), F(3, 4)])
    assert rep.passed and rep.check_id == "lemma_var_de"
    assert variance_monotonicity_sweep(1, [F(1, 2)]).passed
    with pytest.raises(ValueError):
        variance_monotonicity_sweep(65, [F(1, 2)])
