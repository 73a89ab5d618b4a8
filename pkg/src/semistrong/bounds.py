"""Known bounds on chi(t, c), the number of colors that suffices to c-strong
color every t-intersecting hypergraph.

Upper bounds come from the random-coloring argument: ell colors suffice
when ell > (c-1)(t+1) and C(ell, c-1) * ((c-1)/ell)**t < 1. All comparisons
are done on exact integers.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from math import comb

INFINITE = math.inf

EXACT, GAP, INFINITE_STATUS, OPEN = "exact", "gap", "infinite", "open"

OPEN_UPPER = "open (Problem 1)"


def _check_tc(t: int, c: int) -> None:
    if not t >= c >= 2:
        raise ValueError(f"need t >= c >= 2, got t={t}, c={c}")


def union_bound_holds(ell: int, t: int, c: int) -> bool:
    """Do ell colors satisfy both conditions of the random-coloring bound?"""
    _check_tc(t, c)
    if ell <= (c - 1) * (t + 1):
        return False
    # C(ell, c-1) * ((c-1)/ell)^t < 1, cleared of denominators
    return comb(ell, c - 1) * (c - 1) ** t < ell**t


def smallest_ell_linear(t: int, c: int, limit: int = 10**7) -> int:
    """Reference scan upward from (c-1)(t+1)+1. Slow for large c."""
    _check_tc(t, c)
    ell = (c - 1) * (t + 1) + 1
    while not union_bound_holds(ell, t, c):
        ell += 1
        if ell > limit:
            raise OverflowError(f"no ell <= {limit} for t={t}, c={c}")
    return ell


def smallest_ell(t: int, c: int) -> int:
    """Least ell with ``union_bound_holds(ell, t, c)``.

    Above (c-1)(t+1) the ratio of C(ell+1, c-1)/(ell+1)**t to
    C(ell, c-1)/ell**t is (1 + (c-1)/(ell-c+2)) / (1 + 1/ell)**t < 1, so
    the second condition is monotone there and a doubling search followed
    by bisection returns the exact minimum.
    """
    _check_tc(t, c)
    lo = (c - 1) * (t + 1)  # fails
    step = 1
    hi = lo + step
    while not union_bound_holds(hi, t, c):
        lo = hi
        step *= 2
        hi = lo + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if union_bound_holds(mid, t, c):
            hi = mid
        else:
            lo = mid
    return hi


def lower_bound(t: int, c: int) -> int | float:
    if t < 0 or c < 2:
        raise ValueError(f"need t >= 0 and c >= 2, got t={t}, c={c}")
    if t <= c - 2:
        return INFINITE
    if t == c - 1:
        return 2 * c - 1
    return 2 * (c - 1)


@dataclass(frozen=True)
class BoundsReport:
    t: int
    c: int
    lower: int | float
    upper: int | float | None  # None: unknown
    status: str
    provenance: tuple[str, ...]

    def __post_init__(self):
        lo, up = self.lower, self.upper
        if self.status == EXACT and not (lo == up and lo != INFINITE):
            raise ValueError("exact status needs equal finite bounds")
        if self.status == INFINITE_STATUS and not lo == up == INFINITE:
            raise ValueError("infinite status needs infinite bounds")
        if self.status == OPEN and up is not None:
            raise ValueError("open status needs an unknown upper bound")
        if up is not None and up != INFINITE and lo != INFINITE and lo > up:
            raise ValueError(f"lower {lo} exceeds upper {up}")

    def render_lower(self) -> str:
        return "inf" if self.lower == INFINITE else str(self.lower)

    def render_upper(self) -> str:
        if self.upper is None:
            return OPEN_UPPER
        return "inf" if self.upper == INFINITE else str(self.upper)

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "c": self.c,
            "lower": None if self.lower == INFINITE else self.lower,
            "upper": "open" if self.upper is None else (None if self.upper == INFINITE else self.upper),
            "lower_infinite": self.lower == INFINITE,
            "status": self.status,
            "provenance": list(self.provenance),
        }


def bounds_report(t: int, c: int) -> BoundsReport:
    lower = lower_bound(t, c)
    if t <= c - 2:
        why = "every hypergraph is 0-intersecting" if t == 0 else "apex lifting from t=0"
        return BoundsReport(t, c, INFINITE, INFINITE, INFINITE_STATUS, (why,))
    if t == c - 1:
        if c == 2:
            return BoundsReport(
                t, c, 3, 3, EXACT,
                ("triangle needs 3 colors", "three-color star coloring"),
            )
        return BoundsReport(
            t, c, lower, None, OPEN,
            (f"pigeonhole on K({3 * c - 3},{2 * c - 2})", "finiteness unknown"),
        )
    if c == 2:
        return BoundsReport(t, c, 2, 2, EXACT, ("greedy blue/red coloring",))
    upper = smallest_ell(t, c)
    return BoundsReport(
        t, c, lower, upper, GAP,
        (f"pigeonhole on K({(6 * c - 1) * t},{3 * c * t})", "random coloring union bound"),
    )


TABLE_HEADER = ("t", "c", "lower", "upper", "status", "provenance")


def bounds_table(tmax: int, cmax: int) -> list[BoundsReport]:
    return [bounds_report(t, c) for c in range(2, cmax + 1) for t in range(0, tmax + 1)]


def render_table_csv(reports: list[BoundsReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for r in reports:
        w.writerow((r.t, r.c, r.render_lower(), r.render_upper(), r.status, "; ".join(r.provenance)))
    return buf.getvalue()
