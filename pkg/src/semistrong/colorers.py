"""Constructive colorers: the greedy weak 2-coloring, the three-color star
coloring of 1-intersecting hypergraphs, and the Las Vegas random colorer.

Randomness uses numpy's PCG64 via ``np.random.default_rng``. Attempt ``i``
of a Las Vegas run with seed ``s`` draws from ``default_rng([s, i])``, so
each attempt is reproducible on its own and the outcome does not depend on
how attempts are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Coloring, Hypergraph, is_c_strong, is_t_intersecting

BLUE, RED = 1, 2


class PreconditionError(ValueError):
    """The input hypergraph lacks the intersection property an algorithm needs."""


class Exhausted(Exception):
    """No valid coloring found within the attempt budget."""

    def __init__(self, attempts: int, ell: int, c: int):
        super().__init__(f"no {c}-strong coloring with {ell} colors after {attempts} attempts")
        self.attempts = attempts


def _check_order(G: Hypergraph, order: Sequence[int] | None) -> list[int]:
    if order is None:
        return list(range(1, G.n + 1))
    order = [int(v) for v in order]
    if sorted(order) != list(range(1, G.n + 1)):
        raise ValueError(f"order must be a permutation of 1..{G.n}")
    return order


def greedy_weak(G: Hypergraph, order: Sequence[int] | None = None, check: bool = True) -> Coloring:
    """Two-color a 2-intersecting hypergraph so that no edge is monochromatic.

    Vertices are colored in ``order`` (identity by default). A vertex is blue
    unless it is the last uncolored vertex of an edge (of size >= 2) whose
    other vertices are all blue; then it is red.

    With ``check=False`` the 2-intersection precondition is not verified and
    the result is only guaranteed valid if it holds.
    """
    if check and not is_t_intersecting(G, 2):
        raise PreconditionError("greedy_weak requires a 2-intersecting hypergraph")
    order = _check_order(G, order)
    inc = G.incidence()
    uncolored = [len(e) for e in G.edges]
    reds = [0] * G.m
    colors = [0] * (G.n + 1)
    for v in order:
        color = BLUE
        for i in inc[v]:
            if uncolored[i] == 1 and reds[i] == 0 and len(G.edges[i]) >= 2:
                color = RED
                break
        colors[v] = color
        for i in inc[v]:
            uncolored[i] -= 1
            if color == RED:
                reds[i] += 1
    return Coloring(colors[1:])


def star_three_color(G: Hypergraph, check: bool = True) -> Coloring:
    """Weak-color a 1-intersecting hypergraph with at most three colors.

    An inclusion-minimal edge e (smallest size first, then input order) gets
    color 1 on its smallest vertex and 2 on the rest; everything outside e
    gets 3. If some edge is a singleton {v}, v gets 1 and everything else
    gets 2 instead, which is valid because every other edge contains v.
    """
    if check and not is_t_intersecting(G, 1):
        raise PreconditionError("star_three_color requires a 1-intersecting hypergraph")
    if G.m == 0:
        return Coloring([1] * G.n)
    singles = [e for e in G.edges if len(e) == 1]
    if singles:
        (v,) = singles[0]
        return Coloring(1 if u == v else 2 for u in range(1, G.n + 1))

    by_size = sorted(range(G.m), key=lambda i: len(G.edges[i]))
    chosen = None
    for i in by_size:
        e = G.edges[i]
        if not any(f < e for f in G.edges):
            chosen = e
            break
    first = min(chosen)
    return Coloring(
        (1 if u == first else 2) if u in chosen else 3 for u in range(1, G.n + 1)
    )


def random_coloring(n: int, ell: int, seed) -> Coloring:
    """Each vertex independently uniform on ``[1..ell]``."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    rng = np.random.default_rng(seed)
    return Coloring(rng.integers(1, ell + 1, size=n).tolist())


@dataclass(frozen=True)
class LasVegasResult:
    coloring: Coloring
    attempts: int


def las_vegas_c_strong(
    G: Hypergraph, c: int, ell: int, max_attempts: int = 1000, seed: int = 0
) -> LasVegasResult:
    """Draw random ell-colorings until one is c-strong.

    Raises Exhausted after ``max_attempts`` failures.
    """
    if ell < c:
        raise ValueError(f"ell={ell} must be at least c={c}")
    for attempt in range(max_attempts):
        col = random_coloring(G.n, ell, [seed, attempt])
        if is_c_strong(G, col, c):
            return LasVegasResult(col, attempt + 1)
    raise Exhausted(max_attempts, ell, c)


def attempt_failures(G: Hypergraph, c: int, ell: int, attempts: int, seed: int = 0) -> np.ndarray:
    """Boolean array: ``out[i]`` is True iff Las Vegas attempt i would fail.

    Uses the same attempt-indexed streams as ``las_vegas_c_strong``, so the
    first False here is exactly the attempt that function returns.
    """
    draws = np.stack(
        [np.random.default_rng([seed, i]).integers(1, ell + 1, size=G.n) for i in range(attempts)]
    ) if attempts else np.zeros((0, G.n), dtype=np.int64)
    failed = np.zeros(attempts, dtype=bool)
    for e in G.edges:
        need = min(c, len(e))
        sub = np.sort(draws[:, [v - 1 for v in e]], axis=1)
        distinct = 1 + np.count_nonzero(np.diff(sub, axis=1), axis=1)
        failed |= distinct < need
    return failed
