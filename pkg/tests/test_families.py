from fractions import Fraction

import pytest

from conftest import GRID
from hardcore.families import (FamilyError, FamilySpec, balanced_parts, build, closed_form_E_G1,
                               closed_form_E_Z, closed_form_P_bounds, closed_form_V,
                               parse_family, zykov_k)
from hardcore.graph import (Graph, complement, disjoint_union, independence_number,
                            is_isomorphic)
from hardcore.model import occupancy_fraction, variance_fraction
from hardcore.poly import evaluate, independence_profile
from hardcore.symmetrization import is_complete_multipartite

F = Fraction


def test_parse_family():
    assert parse_family("Z:7,3") == FamilySpec("Z", (7, 3))
    assert str(parse_family("turan:7,3")) == "turan:7,3"
    assert parse_family("multipartite:3,2,2").params == (3, 2, 2)


@pytest.mark.parametrize("text", ["Z:7", "X:3", "Z:3,4", "K:0", "kdd:a", "K5", "cycle:2",
                                  "kdd:33", "multipartite:2,0"])
def test_parse_family_errors(text):
    with pytest.raises(FamilyError):
        parse_family(text)


def test_build_examples():
    assert is_isomorphic(build("Z:5,2"), disjoint_union(Graph.complete(2), Graph.complete(3)))
    assert is_complete_multipartite(build("turan:7,3")) == (3, 2, 2)
    assert build("G1:4,4") == Graph.empty(4)
    assert build("kdd:3").num_edges() == 9


def test_balanced_parts():
    assert balanced_parts(7, 3) == (3, 2, 2)
    assert balanced_parts(6, 3) == (2, 2, 2)
    for n in range(1, 15):
        for k in range(1, n + 1):
            parts = balanced_parts(n, k)
            assert sum(parts) == n and parts[0] - parts[-1] <= 1


def test_zykov_k():
    assert zykov_k(5, 2) == 1
    assert zykov_k(6, 3) == 3
    for n in range(1, 13):
        for a in range(1, n + 1):
            k = zykov_k(n, a)
            assert 0 < k <= a
            assert balanced_parts(n, a).count(n // a) == k or n % a == 0


def test_zykov_complement_is_turan():
    for n in range(1, 13):
        for a in range(1, n + 1):
            z = build(FamilySpec("Z", (n, a)))
            assert independence_number(z) == a
            assert is_isomorphic(complement(z), build(FamilySpec("turan", (n, a))))


def test_closed_form_examples():
    assert closed_form_E_Z(5, 2, 1) == F(17, 60)
    lam = F(2, 7)
    assert closed_form_E_Z(6, 6, lam) == lam / (1 + lam)
    assert closed_form_E_Z(6, 1, lam) == lam / (1 + 6 * lam)
    assert closed_form_E_G1(4, 2, 1) == F(1, 4)
    assert closed_form_E_G1(6, 6, lam) == lam / (1 + lam)
    assert closed_form_E_G1(6, 1, lam) == lam / (1 + 6 * lam)
    assert closed_form_P_bounds(5, 2, 1) == (12, 7)
    assert closed_form_P_bounds(6, 6, 1) == (64, 64)
    assert closed_form_V("Kn", 2, 1) == F(1, 9)
    assert closed_form_V("Kn", 1, 1) == F(1, 4)
    assert closed_form_V("Kdelta", 3, F(1, 2)) == F(1, 18)


def test_closed_forms_match_graphs():
    for n in range(1, 11):
        for a in range(1, n + 1):
            z = build(FamilySpec("Z", (n, a)))
            g1 = build(FamilySpec("G1", (n, a)))
            pz, pg1 = independence_profile(z), independence_profile(g1)
            for lam in GRID:
                assert closed_form_E_Z(n, a, lam) == occupancy_fraction(z, lam)
                assert closed_form_E_G1(n, a, lam) == occupancy_fraction(g1, lam)
                assert closed_form_P_bounds(n, a, lam) == (evaluate(pz, lam), evaluate(pg1, lam))
        for lam in GRID:
            assert closed_form_V("Kn", n, lam) == variance_fraction(Graph.complete(n), lam)
            assert closed_form_V("Kdelta", n - 1, lam) == closed_form_V("Kn", n, lam)


def test_closed_form_errors():
    with pytest.raises(FamilyError):
        closed_form_E_Z(3, 4, 1)
    with pytest.raises(FamilyError):
        closed_form_E_G1(3, 2, 0)
    with pytest.raises(FamilyError):
        closed_form_V("K", 3, 1)
    with pytest.raises(FamilyError):
        closed_form_V("Kn", 0, 1)


def test_vertex_numbering_is_fixed():
    assert build("Z:5,2").edges() == [(0, 1), (0, 2), (1, 2), (3, 4)]
