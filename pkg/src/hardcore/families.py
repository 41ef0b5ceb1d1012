"""Extremal graph families and closed-form values of their statistics.

Family strings use a ``kind:args`` syntax shared with the CLI:

    Z:7,3            disjoint union of 3 near-equal cliques on 7 vertices
    G1:7,3           K_{n-α} joined to α isolated vertices
    turan:7,3        balanced complete 3-partite graph on 7 vertices
    multipartite:3,2,2
    kdd:4            K_{4,4}
    K:5              complete graph
    empty:5          5 isolated vertices
    path:4, cycle:5
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, complement, cycle, disjoint_union, join, path


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


_ARITY = {"Z": 2, "G1": 2, "turan": 2, "kdd": 1, "K": 1, "empty": 1,
          "path": 1, "cycle": 1, "multipartite": None}


def parse_family(text: str) -> FamilySpec:
    kind, sep, args = text.partition(":")
    kind = kind.strip()
    if not sep or kind not in _ARITY:
        raise FamilyError(f"unknown family spec {text!r}; kinds: {', '.join(_ARITY)}")
    try:
        params = tuple(int(a) for a in args.split(","))
    except ValueError:
        raise FamilyError(f"family arguments must be integers: {text!r}") from None
    arity = _ARITY[kind]
    if arity is not None and len(params) != arity:
        raise FamilyError(f"{kind} takes {arity} argument(s), got {len(params)}")
    spec = FamilySpec(kind, params)
    _check(spec)
    return spec


def _check(spec: FamilySpec):
    p = spec.params
    if spec.kind in ("Z", "G1", "turan"):
        n, a = p
        if not 1 <= a <= n:
            raise FamilyError(f"{spec}: need 1 <= {a} <= {n}")
    elif spec.kind == "multipartite":
        if not p or min(p) < 1:
            raise FamilyError(f"{spec}: part sizes must be positive")
    elif spec.kind == "cycle":
        if p[0] < 3:
            raise FamilyError(f"{spec}: cycles need at least 3 vertices")
    elif p[0] < 1:
        raise FamilyError(f"{spec}: size must be positive")
    order = 2 * p[0] if spec.kind == "kdd" else sum(p) if spec.kind == "multipartite" else p[0]
    if order > 64:
        raise FamilyError(f"{spec}: {order} vertices exceeds the 64-vertex cap")


def balanced_parts(n: int, parts: int) -> tuple[int, ...]:
    """n split into ``parts`` sizes differing by at most one, non-increasing."""
    if not 1 <= parts <= n:
        raise FamilyError(f"cannot split {n} into {parts} non-empty parts")
    m, s = divmod(n, parts)
    return (m + 1,) * s + (m,) * (parts - s)


def clique_union(sizes) -> Graph:
    g = Graph.empty(0)
    for s in sorted(sizes, reverse=True):
        g = disjoint_union(g, Graph.complete(s))
    return g


def complete_multipartite(sizes) -> Graph:
    return complement(clique_union(sizes))


def build(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    _check(spec)
    p = spec.params
    if spec.kind == "Z":
        return clique_union(balanced_parts(*p))
    if spec.kind == "turan":
        return complete_multipartite(balanced_parts(*p))
    if spec.kind == "multipartite":
        return complete_multipartite(p)
    if spec.kind == "G1":
        n, a = p
        return join(Graph.complete(n - a), Graph.empty(a))
    if spec.kind == "kdd":
        return complete_multipartite((p[0], p[0]))
    if spec.kind == "K":
        return Graph.complete(p[0])
    if spec.kind == "empty":
        return Graph.empty(p[0])
    if spec.kind == "path":
        return path(p[0])
    if spec.kind == "cycle":
        return cycle(p[0])
    raise FamilyError(f"unknown family {spec.kind}")


def zykov_k(n: int, alpha: int) -> int:
    """Number of parts of size floor(n/α) in Z(n,α); equals α when α divides n."""
    return alpha - n % alpha


def _admissible(n: int, alpha: int, lam) -> Fraction:
    if not 1 <= alpha <= n:
        raise FamilyError(f"need 1 <= alpha <= n, got n={n}, alpha={alpha}")
    lam = Fraction(lam)
    if lam <= 0:
        raise FamilyError("fugacity must be positive")
    return lam


def closed_form_E_Z(n: int, alpha: int, lam) -> Fraction:
    lam = _admissible(n, alpha, lam)
    m, k = n // alpha, zykov_k(n, alpha)
    small = m * lam / (1 + m * lam)
    big = (m + 1) * lam / (1 + (m + 1) * lam)
    return (k * small + (alpha - k) * big) / n


def closed_form_E_G1(n: int, alpha: int, lam) -> Fraction:
    lam = _admissible(n, alpha, lam)
    num = alpha * lam * (1 + lam) ** (alpha - 1) + (n - alpha) * lam
    den = (1 + lam) ** alpha + (n - alpha) * lam
    return num / (n * den)


def closed_form_P_bounds(n: int, alpha: int, lam) -> tuple[Fraction, Fraction]:
    """(upper, lower) = (P_{Z(n,α)}(λ), P_{K_{n-α} ∨ αK_1}(λ))."""
    lam = _admissible(n, alpha, lam)
    m, k = n // alpha, zykov_k(n, alpha)
    upper = (1 + m * lam) ** k * (1 + (m + 1) * lam) ** (alpha - k)
    lower = (1 + lam) ** alpha + (n - alpha) * lam
    return upper, lower


def closed_form_V(kind: str, size: int, lam) -> Fraction:
    """Variance fraction of K_size (``kind="Kn"``) or K_{size+1} (``kind="Kdelta"``, size=Δ)."""
    lam = Fraction(lam)
    if lam <= 0:
        raise FamilyError("fugacity must be positive")
    if kind == "Kn":
        order = size
    elif kind == "Kdelta":
        order = size + 1
    else:
        raise FamilyError(f"unknown kind {kind!r}; expected 'Kn' or 'Kdelta'")
    if order < 1:
        raise FamilyError("complete graph needs at least one vertex")
    return lam / (1 + order * lam) ** 2
