"""Clique-side symmetrisation toward complete multipartite graphs.

For a graph H, ``beta(H) = λ Q_H'(λ) / Q_H(λ)`` with Q_H the clique
polynomial; it equals the expected independent-set size in the complement.
For non-adjacent u, v the two symmetrised graphs are

    H1: u's edges replaced by edges to N(v)
    H2: v's edges replaced by edges to N(u)

and beta(H) is a weighted average of beta(H1) and beta(H2), so one of the two
never decreases beta.  Repeating moves ends at a complete multipartite graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .families import balanced_parts
from .graph import Graph, bits, canonical_label, complement, emit_graph6
from .poly import clique_profile, evaluate, evaluate_derivative
from .report import fmt


class SymmetrizationError(RuntimeError):
    def __init__(self, message: str, trace: SymmetrizationTrace | None = None):
        super().__init__(message)
        self.trace = trace


class IdentityViolation(AssertionError):
    def __init__(self, message: str, components: dict):
        super().__init__(f"{message}: {fmt(components)}")
        self.components = components


def _q_and_dq(h: Graph, lam: Fraction) -> tuple[Fraction, Fraction]:
    prof = clique_profile(h)
    return evaluate(prof, lam), lam * evaluate_derivative(prof, lam)


def clique_occupancy(h: Graph, lam) -> Fraction:
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("fugacity must be positive")
    q, dq = _q_and_dq(h, lam)
    return dq / q


def _check_pair(h: Graph, u: int, v: int):
    if not (0 <= u < h.n and 0 <= v < h.n):
        raise ValueError(f"vertices ({u}, {v}) out of range for n={h.n}")
    if u == v:
        raise ValueError("symmetrisation needs two distinct vertices")
    if h.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent")


def _rewire(h: Graph, w: int, nbrs: int) -> Graph:
    adj = list(h.adj)
    for x in bits(adj[w]):
        adj[x] &= ~(1 << w)
    adj[w] = nbrs
    for x in bits(nbrs):
        adj[x] |= 1 << w
    return Graph(h.n, tuple(adj))


def symmetrize_pair(h: Graph, u: int, v: int) -> tuple[Graph, Graph]:
    """(H1, H2): u copies v's neighbourhood, respectively v copies u's."""
    _check_pair(h, u, v)
    return _rewire(h, u, h.adj[v]), _rewire(h, v, h.adj[u])


@dataclass(frozen=True)
class SymmetrizationStep:
    before: Graph
    pair: tuple[int, int]
    chosen: str
    after: Graph
    beta_before: Fraction
    beta_after: Fraction
    weights: tuple[Fraction, Fraction]
    beta_h1: Fraction
    beta_h2: Fraction
    components: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "before": emit_graph6(self.before), "pair": list(self.pair),
            "chosen": self.chosen, "after": emit_graph6(self.after),
            "beta_before": fmt(self.beta_before), "beta_after": fmt(self.beta_after),
            "weights": fmt(list(self.weights)),
        }


def _induced_mask(h: Graph, mask: int) -> Graph:
    return h.induced(bits(mask))


def convex_identity_check(h: Graph, u: int, v: int, lam) -> SymmetrizationStep:
    """Verify the clique-polynomial split and the weighted-average identity exactly.

    Raises :class:`IdentityViolation` carrying every component on mismatch.
    """
    _check_pair(h, u, v)
    lam = Fraction(lam)
    rest = h.full_mask & ~(1 << u | 1 << v)
    qj, dqj = _q_and_dq(_induced_mask(h, rest), lam)
    qnu, dqnu = _q_and_dq(_induced_mask(h, h.adj[u]), lam)
    qnv, dqnv = _q_and_dq(_induced_mask(h, h.adj[v]), lam)
    xu, xv = lam * qnu, lam * qnv
    yu, yv = lam * (qnu + dqnu), lam * (qnv + dqnv)
    qh, dqh = _q_and_dq(h, lam)
    h1, h2 = symmetrize_pair(h, u, v)
    b1 = clique_occupancy(h1, lam)
    b2 = clique_occupancy(h2, lam)
    beta = dqh / qh
    wu, wv = qj + 2 * xu, qj + 2 * xv
    comp = {"Q_J": qj, "X_u": xu, "X_v": xv, "Y_u": yu, "Y_v": yv,
            "beta_H": beta, "beta_H1": b1, "beta_H2": b2}
    if qh != qj + xu + xv:
        raise IdentityViolation("clique polynomial split failed", comp)
    if dqh != dqj + yu + yv:
        raise IdentityViolation("derivative split failed", comp)
    if b1 != (dqj + 2 * yv) / wv or b2 != (dqj + 2 * yu) / wu:
        raise IdentityViolation("symmetrised graph ratio failed", comp)
    if beta != (wu * b2 + wv * b1) / (wu + wv):
        raise IdentityViolation("convex combination identity failed", comp)
    if b1 >= b2:
        chosen, after, best = "H1", h1, b1
    else:
        chosen, after, best = "H2", h2, b2
    return SymmetrizationStep(h, (u, v), chosen, after, beta, best, (wu, wv), b1, b2, comp)


def is_complete_multipartite(g: Graph) -> tuple[int, ...] | None:
    """Part sizes (non-increasing) if g is complete multipartite, else None."""
    co = complement(g).adj
    seen = 0
    parts = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        cls = co[v] | 1 << v
        for u in bits(cls):
            if co[u] | 1 << u != cls:
                return None
        seen |= cls
        parts.append(cls.bit_count())
    return tuple(sorted(parts, reverse=True))


@dataclass
class SymmetrizationTrace:
    start: Graph
    lam: Fraction
    steps: list[SymmetrizationStep] = field(default_factory=list)
    final: Graph | None = None
    final_parts: tuple[int, ...] | None = None

    @property
    def betas(self) -> list[Fraction]:
        if not self.steps:
            return [clique_occupancy(self.start, self.lam)]
        return [self.steps[0].beta_before] + [s.beta_after for s in self.steps]

    def to_json(self) -> str:
        return json.dumps({
            "start": emit_graph6(self.start), "lambda": fmt(self.lam),
            "steps": [s.to_dict() for s in self.steps],
            "final": emit_graph6(self.final) if self.final is not None else None,
            "final_parts": list(self.final_parts) if self.final_parts else None,
        })


def symmetrize_to_multipartite(h: Graph, lam) -> SymmetrizationTrace:
    """Greedy symmetrisation: each step takes the best non-decreasing move.

    Moves are ranked by (larger beta, fewer edges, smaller canonical label).
    When the best move is a tie that returns to an already visited class, the
    smallest unvisited non-decreasing successor is taken instead.  More than
    4 n^2 steps raises :class:`SymmetrizationError` with the partial trace.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("fugacity must be positive")
    trace = SymmetrizationTrace(h, lam)
    cur = h
    beta = clique_occupancy(cur, lam)
    visited = {canonical_label(cur)}
    cap = 4 * h.n * h.n
    while True:
        parts = is_complete_multipartite(cur)
        if parts is not None:
            trace.final, trace.final_parts = cur, parts
            return trace
        if len(trace.steps) >= cap:
            raise SymmetrizationError(f"no multipartite endpoint after {cap} steps", trace)
        moves = []
        for u, v in combinations(range(cur.n), 2):
            if cur.has_edge(u, v) or cur.adj[u] == cur.adj[v]:
                continue
            h1, h2 = symmetrize_pair(cur, u, v)
            for name, g in (("H1", h1), ("H2", h2)):
                b = clique_occupancy(g, lam)
                if b >= beta:
                    moves.append((-b, g.num_edges(), canonical_label(g), (u, v), name, g))
        if not moves:
            raise SymmetrizationError("no non-decreasing symmetrisation exists", trace)
        moves.sort(key=lambda m: m[:4] + (m[4],))
        pick = moves[0]
        if -pick[0] == beta and pick[2] in visited:
            fresh = sorted((m for m in moves if m[2] not in visited),
                           key=lambda m: (m[2], m[3], m[4]))
            if fresh:
                pick = fresh[0]
        neg_b, _, label, (u, v), name, g = pick
        step = convex_identity_check(cur, u, v, lam)
        trace.steps.append(SymmetrizationStep(cur, (u, v), name, g, beta, -neg_b,
                                              step.weights, step.beta_h1, step.beta_h2))
        visited.add(label)
        cur, beta = g, -neg_b


# -- majorization and concavity ---------------------------------------------

def _pad(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    size = max(len(a), len(b))
    a = sorted(a, reverse=True) + [0] * (size - len(a))
    b = sorted(b, reverse=True) + [0] * (size - len(b))
    return a, b


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    a, b = _pad(a, b)
    if sum(a) != sum(b):
        raise ValueError(f"majorization needs equal sums, got {sum(a)} and {sum(b)}")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def occupancy_term(x, lam) -> Fraction:
    """f(x) = xλ / (1 + xλ), the per-part contribution to beta."""
    lam = Fraction(lam)
    return x * lam / (1 + x * lam)


def karamata_gap(lam, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """sum f(b_i) - sum f(a_i) for a majorizing b; non-negative by concavity of f."""
    if not majorizes(a, b):
        raise ValueError(f"{list(a)} does not majorize {list(b)}")
    a, b = _pad(a, b)
    return sum(occupancy_term(x, lam) for x in b) - sum(occupancy_term(x, lam) for x in a)


def subadditivity_gap(lam, a: int, b: int) -> tuple[Fraction, Fraction]:
    """(f(a) + f(b) - f(a+b), λ²ab(2+λc) / ((1+λa)(1+λb)(1+λc))) with c = a+b."""
    lam = Fraction(lam)
    c = a + b
    direct = occupancy_term(a, lam) + occupancy_term(b, lam) - occupancy_term(c, lam)
    closed = lam ** 2 * a * b * (2 + lam * c) / ((1 + lam * a) * (1 + lam * b) * (1 + lam * c))
    return direct, closed


def multipartite_beta(parts: Sequence[int], lam) -> Fraction:
    return sum((occupancy_term(x, lam) for x in parts), Fraction(0))


def turan_beta(n: int, omega: int, lam) -> Fraction:
    return multipartite_beta(balanced_parts(n, omega), lam)
