import math

import numpy as np
import pytest

from oracles import containment_probability
from semistrong import Hypergraph, ImplicitCompleteUniform, random_sunflower
from semistrong.biased_measure import (
    check_corollary,
    estimate_containment,
    exact_containment_probability,
    p_biased_matrix,
    p_biased_sample,
)


def test_sample_determinism_and_range():
    s = p_biased_sample(30, 0.3, 5)
    assert s == p_biased_sample(30, 0.3, 5)
    assert s <= set(range(1, 31))
    with pytest.raises(ValueError):
        p_biased_sample(5, 1.0, 0)


def test_sample_mean_size():
    n, p, samples = 20, 0.15, 10**5
    sizes = p_biased_matrix(n, p, samples, seed=4).sum(axis=1)
    sigma = math.sqrt(n * p * (1 - p) / samples)
    assert abs(sizes.mean() - n * p) <= 3 * sigma


def test_single_element_half():
    hits = sum(1 in p_biased_sample(1, 0.5, s) for s in range(2000))
    assert abs(hits / 2000 - 0.5) <= 3 * math.sqrt(0.25 / 2000)


def test_coupling_is_monotone_in_p():
    lo = p_biased_matrix(12, 0.2, 5000, seed=8)
    hi = p_biased_matrix(12, 0.35, 5000, seed=8)
    assert np.all(lo <= hi)
    G = random_sunflower(2, 6, (0, 3), 12, seed=1)
    assert estimate_containment(G, 0.2, 5000, 8).estimate <= estimate_containment(G, 0.35, 5000, 8).estimate


def _within(est, exact, samples):
    return abs(est - exact) <= 3 * math.sqrt(exact * (1 - exact) / samples)


def test_estimate_examples():
    samples = 10**5
    est = estimate_containment(Hypergraph(3, [(1,)]), 0.3, samples, 1)
    assert _within(est.estimate, 0.3, samples)
    est = estimate_containment(Hypergraph(2, [(1, 2)]), 0.4, samples, 2)
    assert _within(est.estimate, 0.16, samples)
    assert est.std_error == pytest.approx(math.sqrt(est.estimate * (1 - est.estimate) / samples))
    tri = Hypergraph(3, [(1, 2), (1, 3), (2, 3)])
    est = estimate_containment(tri, 0.2, samples, 3)
    assert est.estimate <= 0.2 + 3 * est.std_error


def test_exact_summation_matches_oracle():
    for seed in range(6):
        G = random_sunflower(1 + seed % 3, 5, (0, 3), 9, seed)
        edges = [sorted(e) for e in G.edges]
        assert exact_containment_probability(G, 0.2) == pytest.approx(containment_probability(9, edges, 0.2))


@pytest.mark.parametrize("seed", range(8))
def test_monte_carlo_matches_exact(seed):
    G = random_sunflower(1 + seed % 3, 4 + seed, (0, 3), 11 + seed % 4, 100 + seed)
    p = 0.8 / (2 + seed % 3)
    samples = 10**5
    exact = exact_containment_probability(G, p)
    est = estimate_containment(G, p, samples, seed)
    assert _within(est.estimate, exact, samples)


def test_implicit_family_uses_sample_size():
    fam = ImplicitCompleteUniform(6, 4)
    exact = exact_containment_probability(fam.explicit(), 0.3)
    samples = 10**5
    assert _within(estimate_containment(fam, 0.3, samples, 0).estimate, exact, samples)
    assert estimate_containment(fam, 0.3, 1000, 7) == estimate_containment(fam.explicit(), 0.3, 1000, 7)


def test_check_corollary_examples():
    tri = Hypergraph(3, [(1, 2), (1, 3), (2, 3)])
    res = check_corollary(tri, 1, 0.3, 10**5, seed=0)
    assert res.holds_within_3sigma and res.bound == pytest.approx(0.3)
    G = random_sunflower(2, 8, (1, 3), 15, seed=2)
    res = check_corollary(G, 2, 0.25, 10**5, seed=1)
    assert res.holds_within_3sigma and res.bound == pytest.approx(0.0625)
    assert res.estimate <= 0.0625


@pytest.mark.parametrize(
    "family, t, p",
    [
        (Hypergraph(3, [(1, 2), (1, 3), (2, 3)]), 1, 0.6),
        (Hypergraph(3, [(1, 2), (1, 3), (2, 3)]), 2, 0.2),
        (Hypergraph(3, [(1, 2)]), 0, 0.2),
        (ImplicitCompleteUniform(6, 3), 1, 0.2),
    ],
)
def test_check_corollary_rejects_inapplicable(family, t, p):
    with pytest.raises(ValueError):
        check_corollary(family, t, p, 100)


def test_corollary_on_random_corpus():
    held = total = 0
    for seed in range(40):
        t = 1 + seed % 3
        G = random_sunflower(t, 3 + seed % 7, (0, 3), 14, 500 + seed)
        p = (0.3 + 0.6 * (seed % 5) / 5) / (t + 1)
        total += 1
        held += check_corollary(G, t, p, 20000, seed).holds_within_3sigma
    assert held / total >= 0.99
