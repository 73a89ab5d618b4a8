"""Hypergraphs, colorings and the verifiers everything else builds on.

Vertices are 1-based ints everywhere in the public API. Each edge is kept
both as a frozenset and as an int bitmask (bit ``v - 1`` set for vertex v),
so pairwise intersections cost one AND plus a popcount.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

# Intersection level of a hypergraph with fewer than two edges: every t
# holds vacuously, and inf compares greater than any int.
UNBOUNDED = math.inf


class Hypergraph:
    """Vertex set ``[1..n]`` plus an ordered, deduplicated list of edges.

    Duplicate edges are dropped (first occurrence wins). A vertex repeated
    inside one edge is an error, as is an empty edge or an id outside
    ``[1..n]``.
    """

    __slots__ = ("n", "edges", "masks")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        seen = set()
        kept = []
        for raw in edges:
            ids = [int(v) for v in raw]
            edge = frozenset(ids)
            if not edge:
                raise ValueError("edges must be nonempty")
            if len(edge) != len(ids):
                raise ValueError(f"edge {sorted(ids)} repeats a vertex")
            bad = [v for v in edge if not 1 <= v <= n]
            if bad:
                raise ValueError(f"vertex {bad[0]} outside [1..{n}]")
            if edge not in seen:
                seen.add(edge)
                kept.append(edge)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(kept))
        object.__setattr__(
            self, "masks", tuple(sum(1 << (v - 1) for v in e) for e in kept)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_sizes(self) -> list[int]:
        return [len(e) for e in self.edges]

    def incidence(self) -> list[list[int]]:
        """``incidence()[v]`` lists the indices of edges containing vertex v (index 0 unused)."""
        inc: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        shown = ", ".join("{" + ",".join(map(str, sorted(e))) + "}" for e in self.edges[:6])
        more = ", ..." if self.m > 6 else ""
        return f"Hypergraph(n={self.n}, edges=[{shown}{more}])"


class Coloring:
    """Positive color ids; ``colors[i]`` is the color of vertex ``i + 1``."""

    __slots__ = ("colors",)

    def __init__(self, colors: Iterable[int]):
        cols = tuple(int(x) for x in colors)
        if any(x < 1 for x in cols):
            raise ValueError("color ids must be positive integers")
        object.__setattr__(self, "colors", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Coloring is immutable")

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, vertex: int) -> int:
        """Color of a 1-based vertex."""
        if not 1 <= vertex <= len(self.colors):
            raise IndexError(vertex)
        return self.colors[vertex - 1]

    def __eq__(self, other):
        if isinstance(other, Coloring):
            return self.colors == other.colors
        if isinstance(other, tuple):
            return self.colors == other
        return NotImplemented

    def __hash__(self):
        return hash(self.colors)

    def __repr__(self):
        return f"Coloring({self.colors})"


@dataclass(frozen=True)
class ColorHistogram:
    class_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.class_sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("class sizes must be positive")
        object.__setattr__(self, "class_sizes", tuple(sorted(sizes, reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.class_sizes)

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    def top(self, k: int) -> int:
        """Number of vertices covered by the k largest classes."""
        return sum(self.class_sizes[:k])


@dataclass(frozen=True)
class Verdict:
    """Outcome of a c-strong check. Truthy iff valid."""

    valid: bool
    witness: int | None = None

    def __bool__(self):
        return self.valid


def intersection_level(G: Hypergraph) -> int | float:
    """Smallest pairwise edge intersection, or ``UNBOUNDED`` below two edges."""
    if G.m < 2:
        return UNBOUNDED
    best = min(len(e) for e in G.edges)
    for a, b in combinations(G.masks, 2):
        k = (a & b).bit_count()
        if k < best:
            best = k
            if best == 0:
                break
    return best


def is_t_intersecting(G: Hypergraph, t: int) -> bool:
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0 or G.m < 2:
        return True
    masks = G.masks
    for a, b in combinations(masks, 2):
        if (a & b).bit_count() < t:
            return False
    return True


def _check_length(G: Hypergraph, col: Coloring | Sequence[int]) -> tuple[int, ...]:
    cols = col.colors if isinstance(col, Coloring) else tuple(col)
    if len(cols) != G.n:
        raise ValueError(f"coloring has length {len(cols)}, hypergraph has n={G.n}")
    return cols


def distinct_colors_on_edge(G: Hypergraph, col: Coloring | Sequence[int], index: int) -> int:
    cols = _check_length(G, col)
    if not 0 <= index < G.m:
        raise IndexError(f"edge index {index} out of range for {G.m} edges")
    return len({cols[v - 1] for v in G.edges[index]})


def is_c_strong(G: Hypergraph, col: Coloring | Sequence[int], c: int) -> Verdict:
    """Check that every edge e sees at least ``min(c, |e|)`` distinct colors.

    On failure the verdict carries the index of the first violating edge.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    cols = _check_length(G, col)
    for i, e in enumerate(G.edges):
        need = min(c, len(e))
        if len({cols[v - 1] for v in e}) < need:
            return Verdict(False, i)
    return Verdict(True)


def histogram(col: Coloring | Sequence[int]) -> ColorHistogram:
    cols = col.colors if isinstance(col, Coloring) else tuple(col)
    return ColorHistogram(tuple(Counter(cols).values()))
