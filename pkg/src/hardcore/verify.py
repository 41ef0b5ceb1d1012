"""Exhaustive exact verification of the occupancy and variance bounds.

Every check scans complete isomorphism classes of small graphs over a grid
of rational fugacities and compares exact rationals.  Only the free-energy
checks involve floats, and those are also compared exactly via integer
powers of the partition functions.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from . import binomial
from .families import (balanced_parts, build, closed_form_E_G1, closed_form_E_Z,
                       closed_form_P_bounds, closed_form_V, FamilySpec)
from .graph import (Graph, all_labeled_graphs, canonical_label, clique_number, dedup,
                    emit_graph6, enumerate_graphs, independence_number, read_graph6_file,
                    regular_graphs, MAX_ENUMERATION_ORDER)
from .model import (extension_ratios, log_rational, phi_statistics, profile_mixture,
                    profile_occupancy, profile_size_distribution, profile_variance,
                    uncovered_probability_check)
from .poly import IndependenceProfile, brute_force_profile, evaluate, independence_profile
from .report import VerificationReport, fmt, parse_rational
from .symmetrization import (IdentityViolation, SymmetrizationError, clique_occupancy,
                             convex_identity_check, is_complete_multipartite, karamata_gap,
                             majorizes, multipartite_beta, subadditivity_gap,
                             symmetrize_pair, symmetrize_to_multipartite, turan_beta)

DEFAULT_GRID = tuple(Fraction(x) for x in ("1/3", "1/2", "1", "2", "5"))
SYMMETRIZATION_GRID = tuple(Fraction(x) for x in ("1/2", "1", "2"))
FREE_ENERGY_SLACK = 1e-9


class ConfigError(ValueError):
    pass


def lambda_bound(n: int) -> Fraction | None:
    """Upper end of the admissible range 0 < λ < 2/(n-2); None means no constraint."""
    return Fraction(2, n - 2) if n > 2 else None


def constrained_grid(lambdas: Sequence[Fraction], n: int) -> list[Fraction]:
    bound = lambda_bound(n)
    return [lam for lam in lambdas if bound is None or lam < bound]


@dataclass
class GraphSource:
    """Where the isomorphism classes for each order come from.

    Graphs read from graph6 files take precedence for their order; other
    orders up to the enumeration cap are generated internally.
    ``profile_fn`` lets tests substitute a (deliberately broken) counter.
    """
    files: Sequence[str] = ()
    profile_fn: Callable[[Graph], IndependenceProfile] = independence_profile
    _ingested: dict = field(default_factory=dict, init=False, repr=False)
    _profiles: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        loaded: dict[int, list[Graph]] = {}
        for path in self.files:
            for g in read_graph6_file(path):
                loaded.setdefault(g.n, []).append(g)
        self._ingested = {n: dedup(gs) for n, gs in loaded.items()}

    def graphs(self, n: int) -> list[Graph]:
        if n in self._ingested:
            return self._ingested[n]
        if n > MAX_ENUMERATION_ORDER:
            raise ConfigError(f"no graph6 input for n={n} and internal enumeration "
                              f"stops at n={MAX_ENUMERATION_ORDER}")
        return list(enumerate_graphs(n))

    def profile(self, g: Graph) -> IndependenceProfile:
        key = (g.n, g.adj)
        if key not in self._profiles:
            self._profiles[key] = self.profile_fn(g)
        return self._profiles[key]

    def by_alpha(self, n: int) -> dict[int, list[Graph]]:
        groups: dict[int, list[Graph]] = {}
        for g in self.graphs(n):
            groups.setdefault(self.profile(g).alpha, []).append(g)
        return groups


def _source(source: GraphSource | None) -> GraphSource:
    return source if source is not None else GraphSource()


def _g6(g: Graph) -> str:
    return emit_graph6(g)


# -- profile oracle ---------------------------------------------------------

def check_profile_oracle(n_max: int = 6, source: GraphSource | None = None,
                         labeled_dedup_max: int = 6) -> VerificationReport:
    """Recursive profile vs subset enumeration on every class and, up to
    ``labeled_dedup_max``, on every labelled graph, whose deduplication must
    also reproduce the enumerated classes."""
    src = _source(source)
    start = time.perf_counter()
    rep = VerificationReport("profile_oracle", {"n_max": n_max})
    counts = {}
    for n in range(1, n_max + 1):
        classes = src.graphs(n)
        counts[n] = len(classes)
        for g in classes:
            rep.checked += 1
            got, want = src.profile(g), brute_force_profile(g)
            if got.coeffs != want.coeffs:
                rep.fail(_g6(g), None, "profile", list(got.coeffs), "brute force",
                         list(want.coeffs), "independence profile")
            if got.alpha != independence_number(g):
                rep.fail(_g6(g), None, "deg P", got.alpha, "alpha", independence_number(g),
                         "degree equals independence number")
        if n <= labeled_dedup_max and n <= MAX_ENUMERATION_ORDER:
            labels = set()
            for g in all_labeled_graphs(n):
                labels.add(canonical_label(g))
                rep.checked += 1
                got = src.profile_fn(g).coeffs
                if got != brute_force_profile(g).coeffs:
                    rep.fail(_g6(g), None, "profile", list(got), "brute force",
                             list(brute_force_profile(g).coeffs), "labelled profile")
            mine = {canonical_label(g) for g in classes}
            if labels != mine:
                rep.fail(f"n={n}", None, "classes", len(mine), "labelled dedup", len(labels),
                         "enumeration completeness")
    rep.notes.append(f"class counts: {counts}")
    rep.finish(start)
    return rep


# -- occupancy bounds -------------------------------------------------------

def check_theorem1(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                   source: GraphSource | None = None) -> VerificationReport:
    """E_G ≤ E_{Z(n,α)} on every class, with equality only at Z(n,α)."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("theorem1", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        for alpha, members in sorted(src.by_alpha(n).items()):
            z = build(FamilySpec("Z", (n, alpha)))
            z_label = canonical_label(z)
            for lam in lambdas:
                bound = closed_form_E_Z(n, alpha, lam)
                z_value = profile_occupancy(src.profile(z), lam)
                if z_value != bound:
                    rep.fail(_g6(z), lam, "E_Z(graph)", z_value, "closed form", bound,
                             "closed form matches Z(n,alpha)")
                best, holders = None, []
                for g in members:
                    rep.checked += 1
                    e = profile_occupancy(src.profile(g), lam)
                    if e > bound:
                        rep.fail(_g6(g), lam, "E_G", e, "E_Z", bound, "upper bound")
                    if e == bound:
                        holders.append(g)
                    if best is None or e > best[0]:
                        best = (e, g)
                if [canonical_label(g) for g in holders] != [z_label]:
                    rep.fail(f"n={n},alpha={alpha}", lam, "equality holders",
                             [_g6(g) for g in holders], "Z(n,alpha)", _g6(z),
                             "equality characterisation")
                rep.witness(_g6(best[1]), best[0], n=n, alpha=alpha, **{"lambda": lam})
    rep.finish(start)
    return rep


def check_theorem2(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                   source: GraphSource | None = None, strict: bool = False,
                   ) -> VerificationReport:
    """E_G ≥ E_{K_{n-α} ∨ αK_1} for λ below 2/(n-2); minimiser uniqueness is reported only.

    By default each order n uses the part of the grid below 2/(n-2).  With
    ``strict=True`` a grid value outside that range is a configuration error.
    """
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    for lam in lambdas:
        if lam <= 0:
            raise ConfigError(f"non-positive fugacity {lam}")
    if strict:
        bound = lambda_bound(n_max)
        bad = [lam for lam in lambdas if bound is not None and lam >= bound]
        if bad:
            raise ConfigError(f"lambda values {[fmt(x) for x in bad]} violate "
                              f"lambda < {fmt(bound)} at n={n_max}")
    start = time.perf_counter()
    rep = VerificationReport("theorem2", {"n_max": n_max, "lambdas": lambdas,
                                          "constraint": "lambda < 2/(n-2)"})
    rep.notes.append("n <= 2: lambda range treated as unconstrained")
    for n in range(1, n_max + 1):
        grid = constrained_grid(lambdas, n)
        for alpha, members in sorted(src.by_alpha(n).items()):
            g1 = build(FamilySpec("G1", (n, alpha)))
            g1_label = canonical_label(g1)
            for lam in grid:
                bound = closed_form_E_G1(n, alpha, lam)
                g1_value = profile_occupancy(src.profile(g1), lam)
                if g1_value != bound:
                    rep.fail(_g6(g1), lam, "E_G1(graph)", g1_value, "closed form", bound,
                             "closed form matches G1")
                holders = []
                for g in members:
                    rep.checked += 1
                    e = profile_occupancy(src.profile(g), lam)
                    if e < bound:
                        rep.fail(_g6(g), lam, "E_G", e, "E_G1", bound, "lower bound")
                    if e == bound:
                        holders.append(g)
                unique = [canonical_label(g) for g in holders] == [g1_label]
                rep.witness(_g6(g1), bound, n=n, alpha=alpha, unique_minimiser=unique,
                            **{"lambda": lam})
                if not unique:
                    rep.notes.append(f"n={n} alpha={alpha} lambda={fmt(lam)}: minimisers "
                                     f"{[_g6(g) for g in holders]}")
    rep.finish(start)
    return rep


def check_corollary3(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                     source: GraphSource | None = None) -> VerificationReport:
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("corollary3", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        constrained = set(constrained_grid(lambdas, n))
        for alpha, members in sorted(src.by_alpha(n).items()):
            z = build(FamilySpec("Z", (n, alpha)))
            g1 = build(FamilySpec("G1", (n, alpha)))
            for lam in lambdas:
                upper, lower = closed_form_P_bounds(n, alpha, lam)
                if evaluate(src.profile(z), lam) != upper:
                    rep.fail(_g6(z), lam, "P_Z", evaluate(src.profile(z), lam), "closed form",
                             upper, "upper closed form")
                if evaluate(src.profile(g1), lam) != lower:
                    rep.fail(_g6(g1), lam, "P_G1", evaluate(src.profile(g1), lam),
                             "closed form", lower, "lower closed form")
                top = None
                for g in members:
                    rep.checked += 1
                    val = evaluate(src.profile(g), lam)
                    top = val if top is None else max(top, val)
                    if val > upper:
                        rep.fail(_g6(g), lam, "P_G", val, "P_Z", upper, "upper bound")
                    if lam in constrained and val < lower:
                        rep.fail(_g6(g), lam, "P_G", val, "P_G1", lower, "lower bound")
                if lam == 1:
                    m, k = n // alpha, alpha - n % alpha
                    count_bound = (1 + m) ** k * (2 + m) ** (alpha - k)
                    if upper != count_bound or top != count_bound:
                        rep.fail(f"n={n},alpha={alpha}", lam, "max i(G)", top,
                                 "count bound", count_bound, "independent-set count bound")
                    rep.witness(_g6(z), count_bound, n=n, alpha=alpha, **{"lambda": lam})
    rep.finish(start)
    return rep


# -- variance bounds --------------------------------------------------------

def check_theorem4(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                   source: GraphSource | None = None) -> VerificationReport:
    """V_G ≥ V_{K_n}, equality only at K_n."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("theorem4", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        kn_label = canonical_label(Graph.complete(n))
        for lam in lambdas:
            bound = closed_form_V("Kn", n, lam)
            holders = []
            for g in src.graphs(n):
                rep.checked += 1
                v = profile_variance(src.profile(g), lam)
                if v < bound:
                    rep.fail(_g6(g), lam, "V_G", v, "V_Kn", bound, "variance lower bound")
                if v == bound:
                    holders.append(g)
            if [canonical_label(g) for g in holders] != [kn_label]:
                rep.fail(f"n={n}", lam, "equality holders", [_g6(g) for g in holders],
                         "K_n", _g6(Graph.complete(n)), "equality characterisation")
            rep.witness(_g6(Graph.complete(n)), bound, n=n, **{"lambda": lam})
    rep.finish(start)
    return rep


def check_theorem5(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                   source: GraphSource | None = None) -> VerificationReport:
    """V_G ≥ V_{K_{Δ+1}}, grouped by maximum degree."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("theorem5", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        by_delta: dict[int, list[Graph]] = {}
        for g in src.graphs(n):
            by_delta.setdefault(g.max_degree(), []).append(g)
        for delta, members in sorted(by_delta.items()):
            for lam in lambdas:
                bound = closed_form_V("Kdelta", delta, lam)
                low = None
                for g in members:
                    rep.checked += 1
                    v = profile_variance(src.profile(g), lam)
                    if v < bound:
                        rep.fail(_g6(g), lam, "V_G", v, "V_K(Delta+1)", bound,
                                 "variance lower bound")
                    if low is None or v < low[0]:
                        low = (v, g)
                rep.witness(_g6(low[1]), low[0], n=n, delta=delta, bound=bound,
                            **{"lambda": lam})
    rep.finish(start)
    return rep


# -- proof ingredients ------------------------------------------------------

def check_section22(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                    source: GraphSource | None = None) -> VerificationReport:
    """Uncovered-vertex probability, Pr[v ∈ I] ≤ λ/(1+λ), and the sign of
    ∂E/∂i_k used to pin down the minimiser."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("section22", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        for g in src.graphs(n):
            prof = src.profile(g)
            for lam in lambdas:
                target = lam / (1 + lam)
                for v in range(n):
                    rep.checked += 1
                    cond, marginal = uncovered_probability_check(g, v, lam)
                    if cond != target:
                        rep.fail(_g6(g), lam, f"Pr[v{v} in I | uncovered]", cond,
                                 "lambda/(1+lambda)", target, "uncovered probability")
                    if marginal > target:
                        rep.fail(_g6(g), lam, f"Pr[v{v} in I]", marginal,
                                 "lambda/(1+lambda)", target, "occupation bound")
                base = profile_occupancy(prof, lam)
                top = list(prof.coeffs)
                top[-1] += 1
                if prof.alpha >= 1 and not profile_occupancy(
                        IndependenceProfile(tuple(top), n), lam) > base:
                    rep.fail(_g6(g), lam, "E(i_alpha+1)", "not larger", "E", base,
                             "monotone in i_alpha")
                bound = lambda_bound(n)
                if bound is None or lam < bound:
                    for k in range(2, prof.alpha):
                        bumped = list(prof.coeffs)
                        bumped[k] += 1
                        if not profile_occupancy(IndependenceProfile(tuple(bumped), n),
                                                 lam) > base:
                            rep.fail(_g6(g), lam, f"E(i_{k}+1)", "not larger", "E", base,
                                     "monotone in i_k below 2/(n-2)")
    rep.finish(start)
    return rep


def _test_functions(n: int) -> list[tuple[str, Callable[[int], Fraction]]]:
    return [
        ("k^2", lambda k: Fraction(k * k)),
        ("1/(k+1)", lambda k: Fraction(1, k + 1)),
        ("alternating", lambda k: Fraction((-1) ** k * (k + 2), 3)),
        ("hash", lambda k: Fraction((7 * k * k + 3 * k + 1) % 11, 1 + k % 3)),
    ]


def check_section31(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                    source: GraphSource | None = None) -> VerificationReport:
    """Binomial-ratio monotonicity, truncated-binomial mixture of the size law,
    the mixed-variance chain down to K_n, and the double-sum covariance formula."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("section31", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        for lam in lambdas:
            p = lam / (1 + lam)
            floor_var = binomial.truncated_binomial(n, p, min(1, n)).variance()
            kn_var = profile_size_distribution(src.profile(Graph.complete(n)), lam).variance()
            if kn_var != floor_var:
                rep.fail(f"K_{n}", lam, "Var(X_Kn)", kn_var, "Var(Y|Y<=1)", floor_var,
                         "complete graph law")
        for g in src.graphs(n):
            prof = src.profile(g)
            tag = _g6(g)
            for k in range(1, prof.alpha + 1):
                if k * prof[k] > (n - k + 1) * prof[k - 1]:
                    rep.fail(tag, None, f"{k}*i_{k}", k * prof[k], f"(n-k+1)*i_{k - 1}",
                             (n - k + 1) * prof[k - 1], "extension count")
            for lam in lambdas:
                rep.checked += 1
                dist = profile_size_distribution(prof, lam)
                mix = profile_mixture(prof, lam)
                q = mix.q
                if q[0] != 1 or q[1] != 1 or any(a < b for a, b in zip(q, q[1:])):
                    rep.fail(tag, lam, "q", list(q), "", "", "binomial ratio monotone")
                if any(c < 0 for c in mix.c) or any(w < 0 for w in mix.w) or sum(mix.w) != 1:
                    rep.fail(tag, lam, "weights", list(mix.w), "", "", "mixture weights")
                recon = mix.reconstruct()
                padded = tuple(dist.probs) + (Fraction(0),) * (n + 1 - len(dist.probs))
                if recon != padded:
                    rep.fail(tag, lam, "mixture", list(recon), "size law", list(padded),
                             "mixture reconstruction")
                var = dist.variance()
                mixed = mix.mixed_variance()
                floor = binomial.truncated_binomial(n, mix.p, 1).variance()
                if not var >= mixed >= floor:
                    rep.fail(tag, lam, "Var(X) >= mixed >= Var(Y|Y<=1)",
                             [var, mixed], "floor", floor, "variance chain")
                for name, fn in _test_functions(n):
                    lhs = 2 * binomial.covariance(dist.probs, fn)
                    rhs = binomial.covariance_double_sum(dist.probs, fn)
                    if lhs != rhs:
                        rep.fail(tag, lam, f"2Cov(X,{name})", lhs, "double sum", rhs,
                                 "covariance double sum")
    rep.finish(start)
    return rep


def check_section32(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                    source: GraphSource | None = None) -> VerificationReport:
    """Identities and inequalities for φ(I), the count of addable vertices."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    if n_max > 20:
        raise ConfigError("direct φ enumeration needs n_max <= 20")
    start = time.perf_counter()
    rep = VerificationReport("section32", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        for g in src.graphs(n):
            tag = _g6(g)
            prof = src.profile(g)
            d1 = g.max_degree() + 1
            r = extension_ratios(prof)
            for k in range(len(r) - 1):
                if r[k + 1] < r[k] - d1:
                    rep.fail(tag, None, f"r_{k + 1}", r[k + 1], f"r_{k}-(Delta+1)", r[k] - d1,
                             "extension ratio recurrence")
            eta = [r[k] + d1 * k for k in range(len(r))]
            if any(a > b for a, b in zip(eta, eta[1:])):
                rep.fail(tag, None, "eta", eta, "", "", "eta non-decreasing")
            for lam in lambdas:
                rep.checked += 1
                st = phi_statistics(g, lam)
                if st.direct_ratio != r:
                    rep.fail(tag, lam, "E[phi | |I|=k]", list(st.direct_ratio),
                             "(k+1)i_{k+1}/i_k", list(r), "extension ratio")
                if st.mean_phi != st.mean_x / lam:
                    rep.fail(tag, lam, "E phi", st.mean_phi, "E X / lambda", st.mean_x / lam,
                             "mean of phi")
                if st.mean_x_phi != st.factorial_moment2 / lam:
                    rep.fail(tag, lam, "E X phi", st.mean_x_phi, "E X(X-1) / lambda",
                             st.factorial_moment2 / lam, "mixed moment")
                if st.cov_x_phi != (st.var_x - st.mean_x) / lam:
                    rep.fail(tag, lam, "Cov(X,phi)", st.cov_x_phi, "(Var-EX)/lambda",
                             (st.var_x - st.mean_x) / lam, "covariance identity")
                dist = profile_size_distribution(prof, lam)
                cov_r = binomial.covariance(dist.probs, r)
                if st.cov_x_phi != cov_r:
                    rep.fail(tag, lam, "Cov(X,phi)", st.cov_x_phi, "Cov(X,r_X)", cov_r,
                             "conditioning on size")
                if st.cov_x_phi < -d1 * st.var_x:
                    rep.fail(tag, lam, "Cov(X,phi)", st.cov_x_phi, "-(Delta+1)Var",
                             -d1 * st.var_x, "covariance lower bound")
                ex_lb = n * lam / (1 + d1 * lam)
                if st.mean_x < ex_lb:
                    rep.fail(tag, lam, "E X", st.mean_x, "n lambda/(1+(Delta+1)lambda)",
                             ex_lb, "mean lower bound")
                if st.var_x < st.mean_x / (1 + d1 * lam):
                    rep.fail(tag, lam, "Var X", st.var_x, "E X/(1+(Delta+1)lambda)",
                             st.mean_x / (1 + d1 * lam), "variance via mean")
    rep.finish(start)
    return rep


check_section31_identities = check_section31
check_section32_identities = check_section32


def check_lemma_var_de(n_max: int = 12, p_grid: Sequence = None) -> VerificationReport:
    if p_grid is None:
        p_grid = [Fraction(x) for x in ("1/4", "1/3", "1/2", "2/3", "3/4")]
    return binomial.variance_monotonicity_sweep(n_max, p_grid)


# -- symmetrisation ---------------------------------------------------------

def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def check_symmetrization(n_max: int = 6, lambdas: Sequence = SYMMETRIZATION_GRID,
                         source: GraphSource | None = None) -> VerificationReport:
    """Weighted-average identity on all non-adjacent pairs, greedy iteration to a
    complete multipartite endpoint, and the Turán-side optimality statements."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("symmetrization", {"n_max": n_max, "lambdas": lambdas})
    steps_total = 0
    for n in range(1, n_max + 1):
        for h in src.graphs(n):
            tag = _g6(h)
            omega = clique_number(h)
            for u, v in combinations(range(n), 2):
                if h.has_edge(u, v):
                    continue
                h1, h2 = symmetrize_pair(h, u, v)
                if clique_number(h1) > omega or clique_number(h2) > omega:
                    rep.fail(tag, None, f"omega(H1/H2) at {(u, v)}",
                             [clique_number(h1), clique_number(h2)], "omega(H)", omega,
                             "clique number monotone")
                for lam in lambdas:
                    rep.checked += 1
                    try:
                        st = convex_identity_check(h, u, v, lam)
                    except IdentityViolation as exc:
                        rep.fail(tag, lam, f"identity at {(u, v)}", exc.components, "", "",
                                 str(exc))
                        continue
                    lo, hi = sorted((st.beta_h1, st.beta_h2))
                    if not lo <= st.beta_before <= hi:
                        rep.fail(tag, lam, "beta_H", st.beta_before, "[min,max]", [lo, hi],
                                 "sandwich")
            for lam in lambdas:
                beta = clique_occupancy(h, lam)
                t_beta = turan_beta(n, omega, lam)
                if beta > t_beta:
                    rep.fail(tag, lam, "beta_H", beta, "beta_Turan", t_beta, "Turan optimality")
                try:
                    tr = symmetrize_to_multipartite(h, lam)
                except SymmetrizationError as exc:
                    rep.fail(tag, lam, "symmetrisation", str(exc), "", "", "termination")
                    continue
                steps_total += len(tr.steps)
                betas = tr.betas
                if any(a > b for a, b in zip(betas, betas[1:])):
                    rep.fail(tag, lam, "beta trajectory", betas, "", "", "monotone trajectory")
                if is_complete_multipartite(tr.final) is None:
                    rep.fail(tag, lam, "endpoint", _g6(tr.final), "", "", "multipartite endpoint")
                if clique_number(tr.final) > omega:
                    rep.fail(tag, lam, "omega(final)", clique_number(tr.final), "omega", omega,
                             "endpoint clique number")
    # concavity facts on part-size vectors
    for n in range(1, n_max + 1):
        for lam in lambdas:
            for k in range(1, n + 1):
                balanced = balanced_parts(n, k)
                best = multipartite_beta(balanced, lam)
                for parts in _partitions(n):
                    if len(parts) != k:
                        continue
                    gap = karamata_gap(lam, parts, balanced)
                    if gap < 0 or (gap == 0) != (parts == balanced):
                        rep.fail(f"parts={parts}", lam, "Karamata gap", gap, "0", 0, "Karamata")
                    if multipartite_beta(parts, lam) > best:
                        rep.fail(f"parts={parts}", lam, "beta", multipartite_beta(parts, lam),
                                 "balanced", best, "balanced optimum")
                    for i, size in enumerate(parts):
                        for a in range(1, size):
                            split = parts[:i] + (a, size - a) + parts[i + 1:]
                            if multipartite_beta(split, lam) < multipartite_beta(parts, lam):
                                rep.fail(f"parts={parts}", lam, "beta(split)",
                                         multipartite_beta(split, lam), "beta",
                                         multipartite_beta(parts, lam), "splitting")
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    direct, closed = subadditivity_gap(lam, a, b)
                    if direct != closed or not direct > 0:
                        rep.fail(f"a={a},b={b}", lam, "f(a)+f(b)-f(a+b)", direct, "closed form",
                                 closed, "subadditivity")
    rep.notes.append(f"total greedy steps: {steps_total}")
    rep.finish(start)
    return rep


# -- free energy ------------------------------------------------------------

def _f_le(pa: Fraction, na: int, pb: Fraction, nb: int) -> bool:
    """ln(pa)/na <= ln(pb)/nb, exactly."""
    return pa ** nb <= pb ** na


def check_free_energy_bounds(d: int, n: int, lambdas: Sequence = DEFAULT_GRID,
                             source: GraphSource | None = None) -> VerificationReport:
    """F_{K_{d+1}} ≤ F_G ≤ F_{K_{d,d}} over the d-regular graphs on n vertices."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport(f"free_energy_d{d}_n{n}",
                             {"d": d, "n": n, "lambdas": lambdas, "slack": FREE_ENERGY_SLACK})
    if n in src._ingested:
        graphs = [g for g in src.graphs(n) if set(g.degrees()) == {d}]
    else:
        graphs = regular_graphs(n, d)
    if not graphs:
        rep.notes.append(f"no {d}-regular graphs on {n} vertices; empty scope")
        rep.finish(start)
        return rep
    kdd = build(FamilySpec("kdd", (d,))) if d >= 1 else None
    kd1 = Graph.complete(d + 1)
    for lam in lambdas:
        p_lo = evaluate(src.profile(kd1), lam)
        f_lo = log_rational(p_lo) / (d + 1)
        p_hi = evaluate(src.profile(kdd), lam) if kdd is not None else None
        f_hi = log_rational(p_hi) / (2 * d) if kdd is not None else None
        for g in graphs:
            rep.checked += 1
            pg = evaluate(src.profile(g), lam)
            fg = log_rational(pg) / n
            if kdd is not None and (not _f_le(pg, n, p_hi, 2 * d)
                                    or fg > f_hi + FREE_ENERGY_SLACK):
                rep.fail(_g6(g), lam, "F_G", fg, "F_Kdd", f_hi, "free energy upper bound")
            if not _f_le(p_lo, d + 1, pg, n) or fg < f_lo - FREE_ENERGY_SLACK:
                rep.fail(_g6(g), lam, "F_G", fg, "F_K(d+1)", f_lo, "free energy lower bound")
            if pg ** (d + 1) == p_lo ** n:
                rep.witness(_g6(g), fg, bound="lower", **{"lambda": lam})
            if kdd is not None and pg ** (2 * d) == p_hi ** n:
                rep.witness(_g6(g), fg, bound="upper", **{"lambda": lam})
    rep.finish(start)
    return rep


def check_free_energy_degrees(n_max: int = 6, lambdas: Sequence = DEFAULT_GRID,
                              source: GraphSource | None = None) -> VerificationReport:
    """F_G ≥ (1/n) Σ_u F_{K_{d_u+1}} on every class."""
    src = _source(source)
    lambdas = [Fraction(x) for x in lambdas]
    start = time.perf_counter()
    rep = VerificationReport("free_energy_degrees", {"n_max": n_max, "lambdas": lambdas})
    for n in range(1, n_max + 1):
        for g in src.graphs(n):
            degs = g.degrees()
            L = math.lcm(*(x + 1 for x in degs))
            for lam in lambdas:
                rep.checked += 1
                pg = evaluate(src.profile(g), lam)
                rhs = Fraction(1)
                for x in degs:
                    rhs *= (1 + (x + 1) * lam) ** (L // (x + 1))
                if pg ** L < rhs:
                    rep.fail(_g6(g), lam, "F_G", log_rational(pg) / n, "degree bound",
                             log_rational(rhs) / (n * L), "free energy degree bound")
    rep.finish(start)
    return rep


# -- orchestration ----------------------------------------------------------

CHECKS = {
    "profile_oracle": check_profile_oracle,
    "theorem1": check_theorem1,
    "theorem2": check_theorem2,
    "corollary3": check_corollary3,
    "theorem4": check_theorem4,
    "theorem5": check_theorem5,
    "section22": check_section22,
    "section31": check_section31,
    "section32": check_section32,
    "lemma_var_de": check_lemma_var_de,
    "symmetrization": check_symmetrization,
    "free_energy_degrees": check_free_energy_degrees,
}

_NO_LAMBDA = {"profile_oracle"}
_NO_SOURCE = {"lemma_var_de"}
_DEFAULT_N = {"lemma_var_de": 12}


@dataclass
class VerifyConfig:
    n_max: int = 6
    lambdas: tuple[Fraction, ...] = DEFAULT_GRID
    checks: dict = field(default_factory=lambda: {k: {} for k in CHECKS})
    free_energy: list = field(default_factory=lambda: [(2, 6), (3, 8)])
    graph6: list = field(default_factory=list)
    threads: int = 1

    @classmethod
    def from_dict(cls, data: dict) -> VerifyConfig:
        known = {"n_max", "lambdas", "checks", "free_energy", "graph6", "threads"}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        cfg = cls()
        if "n_max" in data:
            cfg.n_max = int(data["n_max"])
        if "lambdas" in data:
            cfg.lambdas = tuple(parse_rational(x) for x in data["lambdas"])
        if "checks" in data:
            checks = data["checks"]
            if isinstance(checks, list):
                checks = {k: {} for k in checks}
            unknown = set(checks) - set(CHECKS)
            if unknown:
                raise ConfigError(f"unknown checks: {sorted(unknown)}")
            cfg.checks = {k: dict(v or {}) for k, v in checks.items()}
        if "free_energy" in data:
            cfg.free_energy = [tuple(int(x) for x in pair) for pair in data["free_energy"]]
        cfg.graph6 = list(data.get("graph6", []))
        cfg.threads = int(data.get("threads", 1))
        if any(lam <= 0 for lam in cfg.lambdas):
            raise ConfigError("every lambda must be positive")
        return cfg

    @classmethod
    def load(cls, path) -> VerifyConfig:
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}: {exc}") from None
        return cls.from_dict(data)

    def tasks(self) -> list[tuple[str, dict]]:
        out = []
        for name, over in sorted(self.checks.items()):
            kwargs = {}
            if name == "lemma_var_de":
                kwargs["n_max"] = int(over.get("n_max", _DEFAULT_N[name]))
                if "p_grid" in over:
                    kwargs["p_grid"] = [parse_rational(x) for x in over["p_grid"]]
            else:
                kwargs["n_max"] = int(over.get("n_max", self.n_max))
                if name not in _NO_LAMBDA:
                    if "lambdas" in over:
                        kwargs["lambdas"] = [parse_rational(x) for x in over["lambdas"]]
                    elif name == "symmetrization":
                        kwargs["lambdas"] = [x for x in self.lambdas if x in SYMMETRIZATION_GRID] \
                            or list(self.lambdas)
                    else:
                        kwargs["lambdas"] = list(self.lambdas)
            out.append((name, kwargs))
        for d, n in self.free_energy:
            out.append((f"free_energy:{d}:{n}", {"d": d, "n": n, "lambdas": list(self.lambdas)}))
        return out


def _run_task(name: str, kwargs: dict, source: GraphSource) -> VerificationReport:
    if name.startswith("free_energy:"):
        return check_free_energy_bounds(source=source, **kwargs)
    fn = CHECKS[name]
    if name in _NO_SOURCE:
        return fn(**kwargs)
    return fn(source=source, **kwargs)


def _run_task_remote(name: str, kwargs: dict, files: list) -> VerificationReport:
    return _run_task(name, kwargs, GraphSource(files))


def run_all(config: VerifyConfig | dict | None = None,
            profile_fn: Callable[[Graph], IndependenceProfile] | None = None,
            ) -> list[VerificationReport]:
    """Run every configured check; reports come back sorted by check id.

    ``profile_fn`` replaces the profile counter (test hook; forces one thread).
    """
    if config is None:
        config = VerifyConfig()
    elif isinstance(config, dict):
        config = VerifyConfig.from_dict(config)
    tasks = config.tasks()
    if config.threads > 1 and profile_fn is None:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            futures = [pool.submit(_run_task_remote, name, kw, config.graph6)
                       for name, kw in tasks]
            reports = [f.result() for f in futures]
    else:
        source = GraphSource(config.graph6) if profile_fn is None else \
            GraphSource(config.graph6, profile_fn=profile_fn)
        reports = [_run_task(name, kw, source) for name, kw in tasks]
    return sorted(reports, key=lambda r: r.check_id)
