"""Command-line interface.

Exit codes: 0 success or valid, 1 checked false (invalid coloring, bound
violated, no coloring found), 2 usage or format error, 3 budget exceeded.
Budgets default to 10**6 edges and 10**8 enumerated colorings and can be
overridden with SEMISTRONG_EDGE_BUDGET / SEMISTRONG_ENUM_BUDGET or flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from . import bounds
from .biased_measure import check_corollary, estimate_containment
from .colorers import Exhausted, PreconditionError, greedy_weak, las_vegas_c_strong, star_three_color
from .constructions import (
    DEFAULT_EDGE_BUDGET,
    BudgetExceeded,
    ImplicitCompleteUniform,
    complete_uniform_explicit,
    cone,
    gadget_c_minus_1,
    gadget_t_ge_c,
    random_sunflower,
    triangle,
)
from .core import UNBOUNDED, Hypergraph, histogram, intersection_level, is_c_strong
from .exact import (
    DEFAULT_ENUM_BUDGET,
    brute_force_chromatic,
    chromatic_complete_uniform,
    complete_uniform_valid,
    exact_chromatic,
    is_rainbow_regime,
)
from .formats import FormatError, format_coloring, format_hypergraph, parse_coloring, parse_instance

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _level_str(level) -> str:
    return "unbounded" if level == UNBOUNDED else str(level)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text)


def _materialize(inst, args) -> Hypergraph:
    if isinstance(inst, Hypergraph):
        return inst
    return inst.explicit(args.edge_budget)


def _as_complete_uniform(inst) -> ImplicitCompleteUniform | None:
    if isinstance(inst, ImplicitCompleteUniform):
        return inst
    sizes = set(inst.edge_sizes())
    if len(sizes) == 1:
        (k,) = sizes
        if inst.m == comb(inst.n, k):
            return ImplicitCompleteUniform(inst.n, k)
    return None


# --- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "triangle":
        out = triangle()
    elif kind == "complete-uniform":
        implicit = ImplicitCompleteUniform(args.n, args.k)
        out = implicit if args.implicit else complete_uniform_explicit(args.n, args.k, args.edge_budget)
    elif kind == "cone":
        out = cone(parse_instance_explicit(args))
    elif kind == "sunflower":
        out = random_sunflower(args.t, args.m, tuple(args.extra), args.n, args.seed)
    elif kind == "gadget-c1":
        out = gadget_c_minus_1(args.c)
        if args.explicit:
            out = out.explicit(args.edge_budget)
    elif kind == "gadget-tc":
        out = gadget_t_ge_c(args.t, args.c)
        if args.explicit:
            out = out.explicit(args.edge_budget)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    text = format_hypergraph(out)
    payload = {"format": text}
    if isinstance(out, ImplicitCompleteUniform):
        payload.update(kind="complete-uniform", n=out.n, k=out.k)
    else:
        payload.update(kind="hypergraph", n=out.n, edges=[sorted(e) for e in out.edges])
    _emit(args, payload, text)
    return EXIT_OK


def parse_instance_explicit(args) -> Hypergraph:
    return _materialize(parse_instance(_read(args.input)), args)


# --- check -------------------------------------------------------------------

def cmd_check(args) -> int:
    inst = parse_instance(_read(args.input))
    level = inst.intersection_level if isinstance(inst, ImplicitCompleteUniform) else intersection_level(inst)
    payload = {"intersection_level": None if level == UNBOUNDED else level}
    lines = [f"intersection_level={_level_str(level)}"]
    code = EXIT_OK
    if args.t is not None:
        ok = level >= args.t
        payload["t"], payload["t_intersecting"] = args.t, ok
        lines.append(f"t_intersecting({args.t})={'yes' if ok else 'no'}")
        if not ok:
            code = EXIT_FALSE
    if args.coloring is not None:
        col = parse_coloring(_read(args.coloring))
        if len(col) != inst.n:
            raise UsageError(f"coloring has length {len(col)}, hypergraph has n={inst.n}")
        payload["c"], payload["palette_size"] = args.c, col.palette_size
        if isinstance(inst, ImplicitCompleteUniform):
            ok = complete_uniform_valid(histogram(col), inst.k, args.c)
            payload["valid"] = ok
            lines.append(f"{'valid' if ok else 'invalid'} c={args.c} colors={col.palette_size}")
        else:
            verdict = is_c_strong(inst, col, args.c)
            payload["valid"] = verdict.valid
            if verdict:
                lines.append(f"valid c={args.c} colors={col.palette_size}")
            else:
                e = sorted(inst.edges[verdict.witness])
                payload["witness_edge"] = verdict.witness
                lines.append(
                    f"invalid c={args.c} witness_edge={verdict.witness} edge={' '.join(map(str, e))}"
                )
        if not payload["valid"]:
            code = EXIT_FALSE
    _emit(args, payload, "\n".join(lines) + "\n")
    return code


# --- color -------------------------------------------------------------------

def cmd_color(args) -> int:
    G = parse_instance_explicit(args)
    attempts = None
    if args.algo in ("greedy", "star") and args.c != 2:
        raise UsageError(f"--algo {args.algo} produces 2-strong colorings; use --c 2")
    try:
        if args.algo == "greedy":
            order = [int(x) for x in args.order.replace(",", " ").split()] if args.order else None
            col = greedy_weak(G, order)
        elif args.algo == "star":
            col = star_three_color(G)
        else:
            if args.ell is None:
                raise UsageError("--algo random needs --ell")
            res = las_vegas_c_strong(G, args.c, args.ell, args.max_attempts, args.seed)
            col, attempts = res.coloring, res.attempts
    except Exhausted as exc:
        _emit(args, {"valid": False, "exhausted": True, "attempts": exc.attempts}, f"# {exc}\n")
        return EXIT_FALSE
    except PreconditionError as exc:
        _emit(args, {"valid": False, "error": str(exc)}, f"# {exc}\n")
        return EXIT_FALSE

    verdict = is_c_strong(G, col, args.c)
    if not verdict:
        _emit(args, {"valid": False, "witness_edge": verdict.witness},
              f"# produced coloring failed validation at edge {verdict.witness}\n")
        return EXIT_FALSE
    report = f"# valid c={args.c} colors={col.palette_size} algo={args.algo}"
    if attempts is not None:
        report += f" attempts={attempts}"
    payload = {"colors": list(col.colors), "valid": True, "c": args.c,
               "palette_size": col.palette_size, "algo": args.algo, "attempts": attempts}
    _emit(args, payload, format_coloring(col) + report + "\n")
    return EXIT_OK


# --- chromatic ---------------------------------------------------------------

def cmd_chromatic(args) -> int:
    inst = parse_instance(_read(args.input))
    mode = args.mode
    if mode is None:
        mode = "closed-form" if isinstance(inst, ImplicitCompleteUniform) else "exact"
    note = None
    if mode == "closed-form":
        cu = _as_complete_uniform(inst)
        if cu is None:
            raise UsageError("closed-form mode needs a complete uniform hypergraph")
        chi = chromatic_complete_uniform(cu.n, cu.k, args.c)
        if is_rainbow_regime(cu.n, cu.k, args.c):
            note = "2 <= k < c: every edge must be rainbow, so chi = n"
        if args.ell_max is not None and chi > args.ell_max:
            chi = None
    else:
        G = _materialize(inst, args)
        if mode == "brute":
            ell_max = args.ell_max if args.ell_max is not None else G.n
            chi = brute_force_chromatic(G, args.c, ell_max, args.enum_budget)
        else:
            chi = exact_chromatic(G, args.c, args.ell_max)
    text = f"chi={chi}\n" if chi is not None else "chi>ell_max\n"
    if note:
        text += f"# note: {note}\n"
    _emit(args, {"chi": chi, "above_max": chi is None, "c": args.c, "mode": mode,
                 "ell_max": args.ell_max, "note": note}, text)
    return EXIT_OK


# --- bounds ------------------------------------------------------------------

def cmd_bounds(args) -> int:
    if args.table:
        tmax, cmax = args.table
        reports = bounds.bounds_table(tmax, cmax)
        _emit(args, {"table": [r.as_dict() for r in reports]}, bounds.render_table_csv(reports))
        return EXIT_OK
    if args.t is None or args.c is None:
        raise UsageError("bounds needs --t and --c, or --table TMAX CMAX")
    r = bounds.bounds_report(args.t, args.c)
    text = (
        f"t={r.t} c={r.c}\nlower={r.render_lower()}\nupper={r.render_upper()}\n"
        f"status={r.status}\nprovenance={'; '.join(r.provenance)}\n"
    )
    _emit(args, r.as_dict(), text)
    return EXIT_OK


# --- measure -----------------------------------------------------------------

def cmd_measure(args) -> int:
    inst = parse_instance(_read(args.input))
    if args.t is None:
        est = estimate_containment(inst, args.p, args.samples, args.seed)
        payload = {"estimate": est.estimate, "std_error": est.std_error, "samples": est.samples}
        text = f"estimate={est.estimate:.6g}\nstd_error={est.std_error:.3g}\n"
        _emit(args, payload, text)
        return EXIT_OK
    res = check_corollary(inst, args.t, args.p, args.samples, args.seed)
    verdict = "holds" if res.holds_within_3sigma else "violated"
    payload = {"estimate": res.estimate, "std_error": res.std_error, "bound": res.bound,
               "holds_within_3sigma": res.holds_within_3sigma, "samples": args.samples}
    text = (f"estimate={res.estimate:.6g}\nstd_error={res.std_error:.3g}\n"
            f"bound={res.bound:.6g}\nverdict={verdict}\n")
    _emit(args, payload, text)
    return EXIT_OK if res.holds_within_3sigma else EXIT_FALSE


# --- repro -------------------------------------------------------------------

def cmd_repro(args) -> int:
    from .repro import run_all

    results = run_all()
    passed = all(r.passed for r in results)
    payload = {"passed": passed, "criteria": [
        {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]}
    text = "\n".join(r.line() for r in results)
    text += f"\n{sum(r.passed for r in results)}/{len(results)} criteria passed\n"
    _emit(args, payload, text)
    return EXIT_OK if passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--edge-budget", type=int, default=None)
    common.add_argument("--enum-budget", type=int, default=None)

    def with_input(p):
        p.add_argument("input", nargs="?", default="-", help="hypergraph file (default: stdin)")

    parser = argparse.ArgumentParser(prog="semistrong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate hypergraphs")
    gsub = gen.add_subparsers(dest="kind", required=True)
    gsub.add_parser("triangle", parents=[common])
    p = gsub.add_parser("complete-uniform", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--implicit", action="store_true", help="emit the one-line implicit header")
    p = gsub.add_parser("cone", parents=[common])
    with_input(p)
    p = gsub.add_parser("sunflower", parents=[common])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--extra", type=int, nargs=2, metavar=("LO", "HI"), default=(1, 3))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = gsub.add_parser("gadget-c1", parents=[common])
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--explicit", action="store_true")
    p = gsub.add_parser("gadget-tc", parents=[common])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--explicit", action="store_true")
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", parents=[common], help="intersection level and coloring validity")
    with_input(p)
    p.add_argument("--t", type=int)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--coloring", help="coloring file to validate")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("color", parents=[common], help="color a hypergraph")
    with_input(p)
    p.add_argument("--algo", choices=("greedy", "star", "random"), default="greedy")
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--ell", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--order", help="vertex order for greedy, e.g. '3 1 2'")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("chromatic", parents=[common], help="c-strong chromatic number")
    with_input(p)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--ell-max", type=int)
    p.add_argument("--mode", choices=("exact", "brute", "closed-form"))
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("bounds", parents=[common], help="known bounds on chi(t, c)")
    p.add_argument("--t", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--table", type=int, nargs=2, metavar=("TMAX", "CMAX"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("measure", parents=[common], help="p-biased containment estimate")
    with_input(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--samples", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("repro", parents=[common], help="run the acceptance experiments")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.edge_budget is None:
            args.edge_budget = _env_int("SEMISTRONG_EDGE_BUDGET", DEFAULT_EDGE_BUDGET)
        if args.enum_budget is None:
            args.enum_budget = _env_int("SEMISTRONG_ENUM_BUDGET", DEFAULT_ENUM_BUDGET)
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"semistrong: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FormatError, ValueError) as exc:
        print(f"semistrong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
