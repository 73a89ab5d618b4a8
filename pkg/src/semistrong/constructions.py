"""Builders for the hypergraphs used by the lower bounds and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .core import UNBOUNDED, Hypergraph

DEFAULT_EDGE_BUDGET = 10**6


class BudgetExceeded(Exception):
    """An operation would exceed its configured size budget."""


@dataclass(frozen=True)
class ImplicitCompleteUniform:
    """K(n, k): ground set ``[1..n]`` with every k-subset as an edge, never enumerated."""

    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def edge_count(self) -> int:
        return comb(self.n, self.k)

    @property
    def intersection_level(self) -> int | float:
        # two distinct k-subsets of [n] share at least max(0, 2k - n) elements
        if self.edge_count < 2:
            return UNBOUNDED
        return max(0, 2 * self.k - self.n)

    def is_t_intersecting(self, t: int) -> bool:
        return self.intersection_level >= t

    def explicit(self, edge_budget: int = DEFAULT_EDGE_BUDGET) -> Hypergraph:
        return complete_uniform_explicit(self.n, self.k, edge_budget)

    def header(self) -> str:
        return f"complete-uniform n={self.n} k={self.k}"


def triangle() -> Hypergraph:
    return Hypergraph(3, [(1, 2), (1, 3), (2, 3)])


def complete_uniform_explicit(n: int, k: int, edge_budget: int = DEFAULT_EDGE_BUDGET) -> Hypergraph:
    """All k-subsets of ``[1..n]`` in lexicographic order.

    Raises BudgetExceeded when C(n, k) > edge_budget; use
    ImplicitCompleteUniform for those.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    count = comb(n, k)
    if count > edge_budget:
        raise BudgetExceeded(f"C({n},{k}) = {count} edges exceeds budget {edge_budget}")
    return Hypergraph(n, combinations(range(1, n + 1), k))


def cone(G: Hypergraph) -> Hypergraph:
    """Add an apex vertex ``n + 1`` to every edge."""
    apex = G.n + 1
    return Hypergraph(apex, (sorted(e) + [apex] for e in G.edges))


def gadget_c_minus_1(c: int) -> ImplicitCompleteUniform:
    """K(3c-3, 2c-2): (c-1)-intersecting, needs 2c-1 colors to be c-strong."""
    if c < 2:
        raise ValueError("c must be at least 2")
    return ImplicitCompleteUniform(3 * c - 3, 2 * c - 2)


def gadget_t_ge_c(t: int, c: int) -> ImplicitCompleteUniform:
    """K((6c-1)t, 3ct): t-intersecting, needs 2(c-1) colors to be c-strong."""
    if not t >= c >= 2:
        raise ValueError(f"need t >= c >= 2, got t={t}, c={c}")
    return ImplicitCompleteUniform((6 * c - 1) * t, 3 * c * t)


def random_sunflower(
    t: int,
    m: int,
    extra_range: tuple[int, int],
    n: int,
    seed: int,
) -> Hypergraph:
    """Random family of m edges sharing a common random t-subset core.

    Each edge is the core plus a random subset of the remaining vertices
    whose size is drawn uniformly from the inclusive ``extra_range``. Petals
    may overlap each other, so the result is t-intersecting but not a
    sunflower in the strict sense. Edges that come out identical are
    merged, so the edge count may be below m.
    """
    lo, hi = extra_range
    if t < 0 or m < 1 or lo < 0 or hi < lo:
        raise ValueError(f"bad sunflower parameters t={t}, m={m}, extra_range={extra_range}")
    if t + lo == 0:
        raise ValueError("edges would be empty: need t + min extra >= 1")
    if n < t + hi:
        raise ValueError(f"n={n} too small for core {t} plus {hi} extra vertices")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n) + 1
    core, rest = perm[:t].tolist(), perm[t:]
    edges = []
    for _ in range(m):
        size = int(rng.integers(lo, hi + 1))
        petal = rng.choice(rest, size=size, replace=False).tolist()
        edges.append(core + petal)
    return Hypergraph(n, edges)
