"""Monte Carlo checks of the p-biased containment bound.

For a t-intersecting family and p < 1/(t+1), a p-biased random subset of
[n] contains some member of the family with probability at most p**t.

Sampling uses one uniform draw per element and includes element i iff
``u_i < p``, so for a fixed seed the sampled sets are nested in p. Samples
are drawn in chunks; chunk j of a run with seed s uses
``default_rng([s, j])``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constructions import ImplicitCompleteUniform
from .core import Hypergraph, is_t_intersecting

_CHUNK = 1 << 14


def _check_p(p: float) -> None:
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")


def p_biased_sample(n: int, p: float, seed) -> frozenset[int]:
    """Each element of ``[1..n]`` kept independently with probability p."""
    _check_p(p)
    u = np.random.default_rng(seed).random(n)
    return frozenset((np.flatnonzero(u < p) + 1).tolist())


def p_biased_matrix(n: int, p: float, samples: int, seed: int) -> np.ndarray:
    """``samples x n`` boolean membership matrix of independent p-biased subsets."""
    _check_p(p)
    rows = []
    for j, start in enumerate(range(0, samples, _CHUNK)):
        size = min(_CHUNK, samples - start)
        rows.append(np.random.default_rng([seed, j]).random((size, n)) < p)
    if not rows:
        return np.zeros((0, n), dtype=bool)
    return np.concatenate(rows)


@dataclass(frozen=True)
class ContainmentEstimate:
    estimate: float
    std_error: float
    samples: int


def _contains_some_edge(family, members: np.ndarray) -> np.ndarray:
    if isinstance(family, ImplicitCompleteUniform):
        return members.sum(axis=1) >= family.k
    hit = np.zeros(len(members), dtype=bool)
    for e in family.edges:
        hit |= members[:, [v - 1 for v in e]].all(axis=1)
    return hit


def estimate_containment(family, p: float, samples: int, seed: int = 0) -> ContainmentEstimate:
    """Fraction of p-biased subsets that contain at least one edge of ``family``.

    ``family`` is a Hypergraph or an ImplicitCompleteUniform; the latter is
    handled by subset size alone.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    members = p_biased_matrix(family.n, p, samples, seed)
    q = float(_contains_some_edge(family, members).mean())
    return ContainmentEstimate(q, math.sqrt(q * (1 - q) / samples), samples)


def exact_containment_probability(family: Hypergraph, p: float) -> float:
    """Probability that a p-biased subset contains an edge, summed over all 2**n subsets.

    This is the p-biased measure of the up-closure of the edge set. Only
    for n <= 20 or so.
    """
    _check_p(p)
    n = family.n
    if n > 22:
        raise ValueError(f"exact summation over 2^{n} subsets is too large")
    subsets = np.arange(1 << n, dtype=np.int64)
    up = np.zeros(len(subsets), dtype=bool)
    for mask in family.masks:
        up |= (subsets & mask) == mask
    sizes = np.zeros(len(subsets), dtype=np.int64)
    for b in range(n):
        sizes += (subsets >> b) & 1
    weights = p**sizes * (1 - p) ** (n - sizes)
    return float(weights[up].sum())


@dataclass(frozen=True)
class CorollaryCheck:
    holds_within_3sigma: bool
    estimate: float
    std_error: float
    bound: float


def _intersection_ok(family, t: int) -> bool:
    if isinstance(family, ImplicitCompleteUniform):
        return family.is_t_intersecting(t)
    return is_t_intersecting(family, t)


def check_corollary(family, t: int, p: float, samples: int, seed: int = 0) -> CorollaryCheck:
    """Compare the containment estimate with p**t, allowing three standard errors.

    Raises ValueError if the bound does not apply: t < 1, the family is not
    t-intersecting, or p >= 1/(t+1).
    """
    if t < 1:
        raise ValueError("the containment bound needs t >= 1")
    if not p < 1 / (t + 1):
        raise ValueError(f"p={p} is not below 1/(t+1) = {1 / (t + 1):.6g}")
    if not _intersection_ok(family, t):
        raise ValueError(f"family is not {t}-intersecting")
    est = estimate_containment(family, p, samples, seed)
    bound = p**t
    return CorollaryCheck(est.estimate <= bound + 3 * est.std_error, est.estimate, est.std_error, bound)
