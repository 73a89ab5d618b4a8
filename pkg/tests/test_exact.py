from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import chromatic_by_enumeration, coloring_ok
from conftest import hypergraphs
from semistrong import (
    BudgetExceeded,
    ColorHistogram,
    Hypergraph,
    brute_force_chromatic,
    chromatic_complete_uniform,
    complete_uniform_explicit,
    complete_uniform_valid,
    cone,
    exact_chromatic,
    is_c_strong,
)
from semistrong.exact import balanced_histogram, find_coloring


def test_brute_force_examples(tri):
    assert brute_force_chromatic(tri, 2, 4) == 3
    assert brute_force_chromatic(Hypergraph(3, [(1, 2, 3)]), 2, 4) == 2
    assert brute_force_chromatic(cone(tri), 3, 5) == 4
    assert brute_force_chromatic(tri, 2, 2) is None


def test_brute_force_budget(tri):
    with pytest.raises(BudgetExceeded):
        brute_force_chromatic(Hypergraph(12, [range(1, 13)]), 6, 6, budget=10**6)


def test_exact_examples(tri):
    assert exact_chromatic(tri, 2) == 3
    assert exact_chromatic(tri, 2, ell_max=2) is None
    K64 = complete_uniform_explicit(6, 4)
    assert exact_chromatic(K64, 3) == 5
    assert find_coloring(K64, 3, 4) is None
    witness = find_coloring(K64, 3, 5)
    assert is_c_strong(K64, witness, 3)
    assert coloring_ok([sorted(e) for e in K64.edges], [1, 1, 2, 3, 4, 5], 3)


def test_exact_no_edges():
    assert exact_chromatic(Hypergraph(4, []), 3) == 1


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=6, max_m=5), st.integers(2, 4))
def test_exact_matches_enumeration_oracle(G, c):
    expected = chromatic_by_enumeration(G.n, [sorted(e) for e in G.edges], c, 4)
    assert exact_chromatic(G, c, 4) == expected
    assert brute_force_chromatic(G, c, 4) == expected


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=7, max_m=6, min_m=1), st.integers(2, 4))
def test_exact_at_least_largest_clamped_edge(G, c):
    chi = exact_chromatic(G, c)
    assert chi >= max(min(c, len(e)) for e in G.edges)
    assert is_c_strong(G, find_coloring(G, c, chi), c)


@settings(max_examples=40, deadline=None)
@given(hypergraphs(max_n=6, max_m=5), st.sets(st.integers(1, 6), min_size=1), st.integers(2, 3))
def test_adding_edges_never_decreases_chi(G, extra, c):
    extra = [v for v in extra if v <= G.n]
    if not extra:
        return
    bigger = Hypergraph(G.n, list(G.edges) + [extra])
    assert exact_chromatic(bigger, c) >= exact_chromatic(G, c)


@settings(max_examples=40, deadline=None)
@given(hypergraphs(max_n=6, max_m=5, min_m=1), st.integers(2, 3))
def test_cone_law(G, c):
    assert exact_chromatic(cone(G), c + 1) >= exact_chromatic(G, c) + 1


def test_complete_uniform_valid_examples():
    assert complete_uniform_valid(ColorHistogram((1, 1, 1)), 2, 2)
    assert not complete_uniform_valid(ColorHistogram((2, 1)), 2, 2)
    assert complete_uniform_valid(ColorHistogram((2, 1, 1, 1, 1)), 4, 3)
    assert not complete_uniform_valid(ColorHistogram((2, 2, 1, 1)), 4, 3)
    # k < c: rainbow forced
    assert complete_uniform_valid(ColorHistogram((1, 1, 1, 1)), 2, 3)
    assert not complete_uniform_valid(ColorHistogram((2, 1, 1)), 2, 3)
    assert complete_uniform_valid(ColorHistogram((4,)), 1, 3)
    with pytest.raises(ValueError):
        complete_uniform_valid(ColorHistogram((1, 1)), 3, 2)


def _coloring_from_histogram(sizes):
    cols = []
    for color, size in enumerate(sizes, 1):
        cols += [color] * size
    return cols


@st.composite
def small_complete_uniform_cases(draw):
    n = draw(st.integers(1, 8))
    k = draw(st.integers(1, n))
    c = draw(st.integers(2, 5))
    sizes = []
    left = n
    while left:
        s = draw(st.integers(1, left))
        sizes.append(s)
        left -= s
    return n, k, c, sizes


@settings(max_examples=150)
@given(small_complete_uniform_cases())
def test_complete_uniform_valid_matches_edge_enumeration(case):
    n, k, c, sizes = case
    edges = [list(e) for e in combinations(range(1, n + 1), k)]
    expected = coloring_ok(edges, _coloring_from_histogram(sizes), c)
    assert complete_uniform_valid(ColorHistogram(tuple(sizes)), k, c) == expected


@given(small_complete_uniform_cases(), st.data())
def test_splitting_a_class_keeps_validity(case, data):
    n, k, c, sizes = case
    if k < c or not complete_uniform_valid(ColorHistogram(tuple(sizes)), k, c):
        return
    i = data.draw(st.integers(0, len(sizes) - 1))
    if sizes[i] < 2:
        return
    cut = data.draw(st.integers(1, sizes[i] - 1))
    split = sizes[:i] + [sizes[i] - cut, cut] + sizes[i + 1:]
    assert complete_uniform_valid(ColorHistogram(tuple(split)), k, c)


def test_balanced_histogram():
    assert balanced_histogram(51, 4).class_sizes == (13, 13, 13, 12)
    assert balanced_histogram(7, 3).class_sizes == (3, 2, 2)


def test_closed_form_examples():
    assert chromatic_complete_uniform(3, 2, 2) == 3
    assert chromatic_complete_uniform(51, 27, 3) == 4
    for c in range(2, 60):
        assert chromatic_complete_uniform(3 * c - 3, 2 * c - 2, c) == 2 * c - 1
        witness = ColorHistogram((2,) * (c - 2) + (1,) * (c + 1))
        assert witness.total == 3 * c - 3 and witness.num_classes == 2 * c - 1
        assert complete_uniform_valid(witness, 2 * c - 2, c)
    assert chromatic_complete_uniform(6, 2, 3) == 6
    assert chromatic_complete_uniform(6, 1, 3) == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_balanced_matches_exhaustive_histograms(n):
    for k in range(1, n + 1):
        for c in range(2, 6):
            assert chromatic_complete_uniform(n, k, c) == chromatic_complete_uniform(n, k, c, exhaustive=True)


def _small_uniform_cases():
    from math import comb

    for n in range(1, 10):
        for k in range(1, n + 1):
            if comb(n, k) <= 10**4:
                for c in (2, 3, 4):
                    yield n, k, c


@pytest.mark.parametrize("n,k,c", list(_small_uniform_cases()))
def test_closed_form_matches_exact_search(n, k, c):
    K = complete_uniform_explicit(n, k)
    assert chromatic_complete_uniform(n, k, c) == exact_chromatic(K, c)
