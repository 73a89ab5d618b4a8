"""Exact c-strong chromatic numbers.

Three independent routes:

* ``brute_force_chromatic`` enumerates every ell-coloring (vectorized with
  numpy) and is only meant for tiny instances;
* ``exact_chromatic`` is a backtracking search with canonical color
  introduction and a counting prune;
* ``chromatic_complete_uniform`` handles K(n, k) from the color-class
  histogram alone, without touching edges.
"""

from __future__ import annotations

import numpy as np

from .constructions import BudgetExceeded
from .core import Coloring, ColorHistogram, Hypergraph

DEFAULT_ENUM_BUDGET = 10**8
_CHUNK = 1 << 16


def _lower_start(G: Hypergraph, c: int) -> int:
    return max([min(c, len(e)) for e in G.edges], default=1)


def brute_force_chromatic(
    G: Hypergraph, c: int, ell_max: int, budget: int = DEFAULT_ENUM_BUDGET
) -> int | None:
    """Smallest ell <= ell_max admitting a c-strong coloring, by full enumeration.

    Returns None when no ell up to ell_max works. Raises BudgetExceeded
    before enumerating ell**n colorings if that exceeds ``budget``.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    n = G.n
    edges = [np.array(sorted(e)) - 1 for e in G.edges]
    needs = [min(c, len(e)) for e in G.edges]
    spent = 0
    for ell in range(1, ell_max + 1):
        total = ell**n
        spent += total
        if spent > budget:
            raise BudgetExceeded(f"enumerating {ell}^{n} colorings exceeds budget {budget}")
        powers = ell ** np.arange(n, dtype=np.int64)
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            cols = (idx[:, None] // powers) % ell
            ok = np.ones(len(idx), dtype=bool)
            for e, need in zip(edges, needs):
                sub = np.sort(cols[:, e], axis=1)
                distinct = 1 + np.count_nonzero(np.diff(sub, axis=1), axis=1)
                ok &= distinct >= need
                if not ok.any():
                    break
            if ok.any():
                return ell
    return None


def find_coloring(G: Hypergraph, c: int, ell: int) -> Coloring | None:
    """A c-strong coloring of G with at most ``ell`` colors, or None.

    Depth-first over vertices (highest degree first). A vertex may take any
    color already in use or the next unused one, which removes color
    permutation symmetry. A branch is cut as soon as some edge cannot reach
    min(c, |e|) colors even if all its uncolored vertices got fresh colors.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    if ell < 1:
        return None
    inc = G.incidence()
    need = [min(c, len(e)) for e in G.edges]
    if any(nd > ell for nd in need):
        return None
    uncolored = [len(e) for e in G.edges]
    distinct = [0] * G.m
    counts = [[0] * (ell + 1) for _ in range(G.m)]
    colors = [0] * (G.n + 1)
    order = sorted(range(1, G.n + 1), key=lambda v: -len(inc[v]))

    def assign(v, x):
        colors[v] = x
        ok = True
        for i in inc[v]:
            uncolored[i] -= 1
            if counts[i][x] == 0:
                distinct[i] += 1
            counts[i][x] += 1
            if distinct[i] + uncolored[i] < need[i]:
                ok = False
        return ok

    def unassign(v, x):
        colors[v] = 0
        for i in inc[v]:
            uncolored[i] += 1
            counts[i][x] -= 1
            if counts[i][x] == 0:
                distinct[i] -= 1

    def search(pos, used):
        if pos == len(order):
            return True
        v = order[pos]
        for x in range(1, min(used + 1, ell) + 1):
            ok = assign(v, x)
            if ok and search(pos + 1, max(used, x)):
                return True
            unassign(v, x)
        return False

    if search(0, 0):
        return Coloring(colors[1:])
    return None


def exact_chromatic(G: Hypergraph, c: int, ell_max: int | None = None) -> int | None:
    """chi(G, c) by backtracking, or None if it exceeds ``ell_max``.

    With the default ``ell_max`` (n) the answer is always found, since a
    rainbow coloring is c-strong for every c.
    """
    if ell_max is None:
        ell_max = G.n
    for ell in range(_lower_start(G, c), ell_max + 1):
        if find_coloring(G, c, ell) is not None:
            return ell
    return None


def complete_uniform_valid(h: ColorHistogram, k: int, c: int) -> bool:
    """Is a coloring of K(n, k) with class sizes ``h`` c-strong? (n = h.total)

    For k >= c, some k-subset sees at most c-1 colors exactly when the c-1
    largest classes hold at least k vertices between them. For k < c every
    k-subset must be rainbow, which forces singleton classes unless k = 1.
    """
    n = h.total
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if c < 2:
        raise ValueError("c must be at least 2")
    if k >= c:
        return h.top(c - 1) < k
    return k == 1 or all(s == 1 for s in h.class_sizes)


def balanced_histogram(n: int, ell: int) -> ColorHistogram:
    """Split n vertices into ell classes as evenly as possible."""
    q, r = divmod(n, ell)
    return ColorHistogram((q + 1,) * r + (q,) * (ell - r))


def _partitions(n: int, parts: int, cap: int | None = None):
    """Partitions of n into exactly ``parts`` positive parts, non-increasing."""
    if cap is None:
        cap = n
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(cap, n - parts + 1), 0, -1):
        if first * parts < n:
            break
        for rest in _partitions(n - first, parts - 1, first):
            yield (first,) + rest


def chromatic_complete_uniform(n: int, k: int, c: int, exhaustive: bool = False) -> int:
    """chi(K(n, k), c) from histograms alone.

    For k >= c the scan tests the balanced histogram for each ell, which
    minimises the mass of the c-1 largest classes. ``exhaustive=True`` tests
    every histogram with ell classes instead (tiny n only); it exists to
    cross-check the balanced shortcut. For 2 <= k < c every edge must be
    rainbow and the answer is n.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if c < 2:
        raise ValueError("c must be at least 2")
    if k == 1:
        return 1
    if k < c:
        return n
    for ell in range(1, n + 1):
        if exhaustive:
            if any(complete_uniform_valid(ColorHistogram(p), k, c) for p in _partitions(n, ell)):
                return ell
        elif complete_uniform_valid(balanced_histogram(n, ell), k, c):
            return ell
    raise AssertionError("unreachable: the rainbow coloring is always valid")


def is_rainbow_regime(n: int, k: int, c: int) -> bool:
    """True for 2 <= k < c, where chi(K(n, k), c) = n by forced rainbow edges."""
    return 2 <= k < c
