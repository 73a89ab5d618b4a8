"""Desk-scale experiments, one per acceptance criterion.

``run_all()`` runs every experiment; ``semistrong repro`` prints the table.
Each experiment is deterministic (fixed seeds) and returns a Result.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from importlib import resources
from math import comb

import numpy as np

from . import bounds
from .biased_measure import check_corollary, estimate_containment, exact_containment_probability
from .colorers import attempt_failures, greedy_weak, star_three_color
from .constructions import (
    complete_uniform_explicit,
    cone,
    gadget_c_minus_1,
    gadget_t_ge_c,
    random_sunflower,
    triangle,
)
from .core import Hypergraph, is_c_strong
from .exact import brute_force_chromatic, chromatic_complete_uniform, exact_chromatic

GOLDEN_TMAX, GOLDEN_CMAX = 8, 6


@dataclass(frozen=True)
class Result:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:>2} {self.name}: {self.detail}"


def random_hypergraph(n: int, m: int, seed) -> Hypergraph:
    """m random edges over [1..n], sizes uniform on 1..n (duplicates merged)."""
    rng = np.random.default_rng(seed)
    edges = []
    for _ in range(m):
        size = int(rng.integers(1, n + 1))
        edges.append((rng.choice(n, size=size, replace=False) + 1).tolist())
    return Hypergraph(n, edges)


def sunflower_corpus(count: int, t: int, n_max: int, m_max: int, seed: int = 0):
    """Seeded random sunflowers with core size t."""
    rng = np.random.default_rng([seed, t])
    for _ in range(count):
        hi = int(rng.integers(1, 7))
        n = int(rng.integers(t + hi, n_max + 1))
        m = int(rng.integers(1, m_max + 1))
        lo = int(rng.integers(1, hi + 1))
        yield random_sunflower(t, m, (lo, hi), n, int(rng.integers(2**31)))


def triangle_exactness() -> Result:
    start = time.perf_counter()
    tri = triangle()
    chi = exact_chromatic(tri, 2)
    star = star_three_color(tri)
    ok_star = bool(is_c_strong(tri, star, 2)) and star.palette_size <= 3
    elapsed = time.perf_counter() - start
    passed = chi == 3 and ok_star and elapsed < 1.0
    return Result(1, "triangle exactness", passed,
                  f"chi={chi}, star coloring {star.colors} valid={ok_star}, {elapsed:.3f}s")


def weak_coloring_algorithm() -> Result:
    failures = runs = 0
    for i, G in enumerate(sunflower_corpus(1000, 2, 40, 60, seed=2)):
        rng = np.random.default_rng([2, i])
        orders = [None, list(range(G.n, 0, -1))]
        orders += [(rng.permutation(G.n) + 1).tolist() for _ in range(3)]
        for order in orders:
            col = greedy_weak(G, order)
            runs += 1
            if not is_c_strong(G, col, 2) or col.palette_size > 2:
                failures += 1
    return Result(2, "greedy weak coloring", failures == 0, f"{failures} failures in {runs} runs")


def oracle_equivalence() -> Result:
    mismatches = 0
    rng = np.random.default_rng(3)
    for _ in range(200):
        n = int(rng.integers(2, 9))
        m = int(rng.integers(1, 7))
        c = int(rng.integers(2, 5))
        G = random_hypergraph(n, m, int(rng.integers(2**31)))
        if exact_chromatic(G, c, 4) != brute_force_chromatic(G, c, 4):
            mismatches += 1
    return Result(3, "exact vs brute force", mismatches == 0, f"{mismatches} mismatches in 200 instances")


def gadget_values() -> Result:
    start = time.perf_counter()
    bad = [c for c in range(2, 201)
           if chromatic_complete_uniform(3 * c - 3, 2 * c - 2, c) != 2 * c - 1]
    elapsed = time.perf_counter() - start
    explicit = {c: exact_chromatic(gadget_c_minus_1(c).explicit(), c) for c in (2, 3)}
    ok_explicit = all(explicit[c] == 2 * c - 1 for c in (2, 3))
    passed = not bad and elapsed < 1.0 and ok_explicit
    return Result(4, "K(3c-3,2c-2) chromatic number", passed,
                  f"closed form = 2c-1 for c in 2..200 ({len(bad)} bad, {elapsed:.3f}s); "
                  f"explicit search {explicit}")


def second_gadget() -> Result:
    bad = []
    for c in range(2, 11):
        for t in range(c, 2 * c + 1):
            g = gadget_t_ge_c(t, c)
            if chromatic_complete_uniform(g.n, g.k, c) < 2 * (c - 1):
                bad.append((t, c))
    chi = chromatic_complete_uniform(51, 27, 3)
    return Result(5, "K((6c-1)t,3ct) lower bound", not bad and chi == 4,
                  f"{len(bad)} violations; chi(K(51,27),3)={chi}")


def cone_monotonicity() -> Result:
    violations = 0
    rng = np.random.default_rng(6)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(1, 6))
        c = int(rng.integers(2, 4))
        G = random_hypergraph(n, m, int(rng.integers(2**31)))
        if exact_chromatic(cone(G), c + 1) < exact_chromatic(G, c) + 1:
            violations += 1
    tri_cone = exact_chromatic(cone(triangle()), 3)
    return Result(6, "cone monotonicity", violations == 0 and tri_cone == 4,
                  f"{violations} violations in 100 instances; chi(cone(triangle),3)={tri_cone}")


def union_bound_calculator() -> Result:
    start = time.perf_counter()
    values = (bounds.smallest_ell(2, 2), bounds.smallest_ell(3, 3), bounds.smallest_ell(6, 3))
    ok_values = values == (4, 9, 15)
    ok_tt = all(bounds.union_bound_holds(t**t, t, c) for t in range(2, 7) for c in range(2, t + 1))
    ok_cc = all(bounds.smallest_ell(c, c) < math.sqrt(c) * math.exp(c) for c in range(2, 31))
    ok_2c = all(bounds.smallest_ell(2 * c, c) < 2 * c * c for c in range(2, 51))
    elapsed = time.perf_counter() - start
    passed = ok_values and ok_tt and ok_cc and ok_2c and elapsed < 10.0
    return Result(7, "random-coloring bound calculator", passed,
                  f"smallest_ell(2,2),(3,3),(6,3)={values}; t^t ok={ok_tt}; "
                  f"<sqrt(c)e^c ok={ok_cc}; <2c^2 ok={ok_2c}; {elapsed:.3f}s")


def las_vegas_bound() -> Result:
    parts, passed = [], True
    attempts = 10**4
    for t, c in ((2, 2), (4, 2)):
        ell = bounds.smallest_ell(t, c)
        bound = comb(ell, c - 1) * ((c - 1) / ell) ** t
        sigma = math.sqrt(bound * (1 - bound) / attempts)
        for s in range(3):
            G = random_sunflower(t, 12, (1, 4), 24, seed=800 + s)
            rate = float(attempt_failures(G, c, ell, attempts, seed=s).mean())
            ok = rate <= bound + 3 * sigma
            passed &= ok
            parts.append(f"t={t},c={c},ell={ell}: {rate:.4f}<={bound:.4f}+3sd")
    return Result(8, "Las Vegas failure rate", passed, "; ".join(parts))


def corollary_corpus() -> list[tuple[object, int, float]]:
    """50 (family, t, p) triples with p < 1/(t+1)."""
    rng = np.random.default_rng(9)
    fracs = (0.5, 0.8, 0.95)
    corpus = []
    for i in range(15):
        n = int(rng.integers(4, 15))
        m = int(rng.integers(1, 8))
        edges = [[1] + (rng.choice(np.arange(2, n + 1), size=int(rng.integers(0, 4)), replace=False)).tolist()
                 for _ in range(m)]
        corpus.append((Hypergraph(n, edges), 1, fracs[i % 3] / 2))
    uniform = [(3, 2), (4, 3), (5, 4), (6, 4), (5, 3), (7, 5), (8, 6), (9, 6), (10, 7), (7, 4)]
    for i, (n, k) in enumerate(uniform):
        t = 2 * k - n
        corpus.append((complete_uniform_explicit(n, k), t, fracs[i % 3] / (t + 1)))
    corpus.append((gadget_t_ge_c(2, 2), 2, 0.3))
    corpus.append((gadget_c_minus_1(4), 3, 0.2))
    for i in range(23):
        t = 1 + i % 3
        hi = int(rng.integers(1, 5))
        lo = int(rng.integers(0, hi + 1))
        n = int(rng.integers(t + hi, 16))
        G = random_sunflower(t, int(rng.integers(2, 11)), (lo, hi), n, seed=900 + i)
        corpus.append((G, t, fracs[i % 3] / (t + 1)))
    return corpus


def corollary_statistics() -> Result:
    samples = 10**5
    held = compared = mismatched = 0
    for i, (family, t, p) in enumerate(corollary_corpus()):
        if check_corollary(family, t, p, samples, seed=i).holds_within_3sigma:
            held += 1
        if isinstance(family, Hypergraph) and family.n <= 15:
            exact = exact_containment_probability(family, p)
            est = estimate_containment(family, p, samples, seed=10_000 + i).estimate
            sigma = math.sqrt(exact * (1 - exact) / samples)
            compared += 1
            if abs(est - exact) > 3 * sigma:
                mismatched += 1
    total = len(corollary_corpus())
    return Result(9, "p-biased containment bound", held == total and mismatched == 0,
                  f"bound held on {held}/{total}; Monte Carlo vs exact: {mismatched} outside 3sd of {compared}")


def golden_table_text() -> str:
    return resources.files("semistrong").joinpath("data/bounds_table.csv").read_text()


def case_table() -> Result:
    table = bounds.render_table_csv(bounds.bounds_table(GOLDEN_TMAX, GOLDEN_CMAX))
    byte_exact = table == golden_table_text()
    r = bounds.bounds_report
    checks = [
        r(0, 2).status == bounds.INFINITE_STATUS,
        r(1, 2).status == bounds.EXACT and r(1, 2).lower == 3,
        all(r(t, 2).status == bounds.EXACT and r(t, 2).upper == 2 for t in range(2, 20)),
        all(r(t, c).status == bounds.INFINITE_STATUS for c in range(2, 12) for t in range(0, c - 1)),
        all(r(c - 1, c).status == bounds.OPEN and r(c - 1, c).lower == 2 * c - 1 for c in range(3, 12)),
    ]
    return Result(10, "bounds case table", byte_exact and all(checks),
                  f"golden byte-exact={byte_exact}; classifications {sum(checks)}/{len(checks)}")


CRITERIA = (
    triangle_exactness,
    weak_coloring_algorithm,
    oracle_equivalence,
    gadget_values,
    second_gadget,
    cone_monotonicity,
    union_bound_calculator,
    las_vegas_bound,
    corollary_statistics,
    case_table,
)


def run_all() -> list[Result]:
    return [f() for f in CRITERIA]
