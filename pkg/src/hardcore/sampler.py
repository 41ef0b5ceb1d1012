"""Single-site Glauber dynamics for the hard-core measure.

Each step picks a uniform vertex v.  If no neighbour of v is occupied, v is
set occupied with probability λ/(1+λ) and empty otherwise; if v is blocked it
stays empty.  This is a heat-bath update, so the hard-core measure is
stationary and every visited state is an independent set.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph

CHUNK = 1 << 16


@dataclass(frozen=True)
class ChainConfig:
    lam: Fraction
    samples: int = 100_000
    burn_in: int = 1_000
    thinning: int = 1
    seed: int = 0
    batches: int = 50

    def __post_init__(self):
        if Fraction(self.lam) <= 0:
            raise ValueError("fugacity must be positive")
        if min(self.samples, self.burn_in, self.thinning, self.batches) < 0:
            raise ValueError("chain counts must be non-negative")
        if self.thinning < 1:
            raise ValueError("thinning must be at least 1")


@dataclass(frozen=True)
class GlauberEstimate:
    mean: float
    var: float
    n_samples: int
    se_mean: float
    se_var: float

    def to_json(self) -> str:
        return json.dumps({k: (float(f"{v:.12g}") if isinstance(v, float) else v)
                           for k, v in self.__dict__.items()})


def _steps(g: Graph, cfg: ChainConfig, rng: np.random.Generator):
    """Yield the chain state after every step, forever."""
    p_occ = float(Fraction(cfg.lam) / (1 + Fraction(cfg.lam)))
    adj = g.adj
    state = 0
    while True:
        vs = rng.integers(0, g.n, size=CHUNK).tolist()
        us = rng.random(CHUNK).tolist()
        for v, u in zip(vs, us):
            if adj[v] & state:
                pass
            elif u < p_occ:
                state |= 1 << v
            else:
                state &= ~(1 << v)
            yield state


def _sizes(g: Graph, cfg: ChainConfig, rng: np.random.Generator,
           states: Counter | None = None) -> np.ndarray:
    out = np.empty(cfg.samples, dtype=np.int64)
    chain = _steps(g, cfg, rng)
    for _ in range(cfg.burn_in):
        next(chain)
    thin = cfg.thinning
    for i in range(cfg.samples):
        for _ in range(thin):
            s = next(chain)
        out[i] = s.bit_count()
        if states is not None:
            states[s] += 1
    return out


def _estimate(sizes: np.ndarray, batches: int) -> GlauberEstimate:
    n = len(sizes)
    x = sizes.astype(float)
    mean = float(x.mean()) if n else float("nan")
    var = float(x.var(ddof=1)) if n > 1 else float("nan")
    b = min(batches, n // 2) if n >= 4 else 0
    if b >= 2:
        usable = n - n % b
        groups = x[:usable].reshape(b, -1)
        se_mean = float(groups.mean(axis=1).std(ddof=1) / np.sqrt(b))
        se_var = float(groups.var(axis=1, ddof=1).std(ddof=1) / np.sqrt(b))
    else:
        se_mean = se_var = float("nan")
    return GlauberEstimate(mean, var, n, se_mean, se_var)


def glauber_run(g: Graph, cfg: ChainConfig) -> GlauberEstimate:
    """Estimate E|I| and Var|I| from one seeded chain (batch-means errors)."""
    rng = np.random.default_rng(np.random.SeedSequence(cfg.seed))
    return _estimate(_sizes(g, cfg, rng), cfg.batches)


def glauber_chains(g: Graph, cfg: ChainConfig, chains: int) -> list[GlauberEstimate]:
    """Independent chains on spawned seed streams, returned in stream order."""
    streams = np.random.SeedSequence(cfg.seed).spawn(chains)
    return [_estimate(_sizes(g, cfg, np.random.default_rng(s)), cfg.batches)
            for s in streams]


def state_histogram(g: Graph, cfg: ChainConfig) -> Counter:
    """Visit counts of each sampled state (bitmask)."""
    rng = np.random.default_rng(np.random.SeedSequence(cfg.seed))
    states: Counter = Counter()
    _sizes(g, cfg, rng, states)
    return states


def trajectory(g: Graph, cfg: ChainConfig, steps: int) -> list[int]:
    rng = np.random.default_rng(np.random.SeedSequence(cfg.seed))
    chain = _steps(g, cfg, rng)
    return [next(chain) for _ in range(steps)]


def chain_invariant_check(g: Graph, cfg: ChainConfig, steps: int | None = None) -> bool:
    """True iff every state visited in ``steps`` steps is an independent set."""
    if steps is None:
        steps = cfg.burn_in + cfg.samples * cfg.thinning
    return all(g.is_independent(s) for s in trajectory(g, cfg, steps))
