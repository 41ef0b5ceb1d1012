"""Independence and clique polynomials with exact integer coefficients.

A profile is a tuple ``(i_0, i_1, ..., i_alpha)`` where ``i_k`` counts the
independent ``k``-sets.  Counting uses the vertex recursion

    P_G = P_{G - v} + x * P_{G - N[v]}

branching on a maximum-degree vertex, memoised per call on vertex subsets and
(optionally, across calls) on canonical labels of induced subgraphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from threading import Lock
from typing import Sequence

from .graph import Graph, bits, canonical_label, complement


@dataclass(frozen=True)
class IndependenceProfile:
    coeffs: tuple[int, ...]
    n: int

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("profile must start with i_0 = 1")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("profile coefficients must be non-negative")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("profile must not carry trailing zeros")

    @property
    def alpha(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str], n: int) -> IndependenceProfile:
        return cls(tuple(int(c) for c in data), n)


class ProfileCache:
    """Grow-only map from canonical label to coefficient tuple.

    Safe to share between threads: inserts are insert-if-absent under a lock,
    and any two writers for one key compute the same value.
    """

    def __init__(self):
        self._data: dict[bytes, tuple[int, ...]] = {}
        self._lock = Lock()
        self.hits = 0

    def get(self, key: bytes):
        value = self._data.get(key)
        if value is not None:
            self.hits += 1
        return value

    def put(self, key: bytes, value: tuple[int, ...]) -> tuple[int, ...]:
        with self._lock:
            return self._data.setdefault(key, value)

    def __len__(self):
        return len(self._data)


SHARED_CACHE = ProfileCache()


def _add(a: tuple[int, ...], b: tuple[int, ...], shift: int) -> tuple[int, ...]:
    size = max(len(a), len(b) + shift)
    out = list(a) + [0] * (size - len(a))
    for k, c in enumerate(b):
        out[k + shift] += c
    return tuple(out)


def _count(adj: Sequence[int], mask: int, local: dict, shared: ProfileCache | None,
           canon_min: int) -> tuple[int, ...]:
    if mask in local:
        return local[mask]
    size = mask.bit_count()
    if size == 0:
        return (1,)
    verts = bits(mask)
    best_v, best_d = -1, -1
    for v in verts:
        d = (adj[v] & mask).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    if best_d == 0:
        result = tuple(comb(size, k) for k in range(size + 1))
        local[mask] = result
        return result
    key = None
    if shared is not None and size >= canon_min:
        index = {v: i for i, v in enumerate(verts)}
        sub = Graph(size, tuple(sum(1 << index[u] for u in bits(adj[v] & mask))
                                for v in verts))
        key = canonical_label(sub)
        cached = shared.get(key)
        if cached is not None:
            local[mask] = cached
            return cached
    v = best_v
    without = _count(adj, mask & ~(1 << v), local, shared, canon_min)
    taken = _count(adj, mask & ~(adj[v] | 1 << v), local, shared, canon_min)
    result = _add(without, taken, 1)
    if key is not None:
        result = shared.put(key, result)
    local[mask] = result
    return result


def independence_profile(g: Graph, cache: ProfileCache | None | str = "shared",
                         memo: bool = True, canon_min: int = 5) -> IndependenceProfile:
    """Count independent sets of every size.

    ``cache`` is ``"shared"`` (module-wide :data:`SHARED_CACHE`), a
    :class:`ProfileCache`, or ``None`` for a per-call scope only.  Induced
    subgraphs with fewer than ``canon_min`` vertices are not canonicalised;
    recomputing them is cheaper than labelling them.  ``memo=False`` runs the
    plain recursion with no memoisation at all.
    """
    if cache == "shared":
        cache = SHARED_CACHE
    if not memo:
        return IndependenceProfile(_plain(g.adj, g.full_mask), g.n)
    return IndependenceProfile(_count(g.adj, g.full_mask, {}, cache, canon_min), g.n)


def _plain(adj: Sequence[int], mask: int) -> tuple[int, ...]:
    if not mask:
        return (1,)
    v = max(bits(mask), key=lambda x: (adj[x] & mask).bit_count())
    return _add(_plain(adj, mask & ~(1 << v)), _plain(adj, mask & ~(adj[v] | 1 << v)), 1)


def brute_force_profile(g: Graph) -> IndependenceProfile:
    """Reference count over all 2^n vertex subsets."""
    counts = [0] * (g.n + 1)
    for mask in range(1 << g.n):
        if g.is_independent(mask):
            counts[mask.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return IndependenceProfile(tuple(counts), g.n)


def clique_profile(g: Graph, **kwargs) -> IndependenceProfile:
    return independence_profile(complement(g), **kwargs)


def evaluate(p: IndependenceProfile | Sequence[int], lam) -> Fraction:
    coeffs = p.coeffs if isinstance(p, IndependenceProfile) else p
    lam = Fraction(lam)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * lam + c
    return acc


def evaluate_derivative(p: IndependenceProfile | Sequence[int], lam) -> Fraction:
    coeffs = p.coeffs if isinstance(p, IndependenceProfile) else p
    lam = Fraction(lam)
    acc = Fraction(0)
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * lam + k * coeffs[k]
    return acc


def profile_to_json(p: IndependenceProfile) -> str:
    return json.dumps({"n": p.n, "profile": p.to_json()})
