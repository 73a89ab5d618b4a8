"""Plain-text formats.

Hypergraph::

    # comments start with '#'
    n 5
    1 2 3
    2 4

An implicit complete uniform hypergraph is the single line
``complete-uniform n=<n> k=<k>``. A coloring is one line of n positive
color ids, vertex 1 first; ``#`` lines around it are ignored.
"""

from __future__ import annotations

import re

from .constructions import ImplicitCompleteUniform
from .core import Coloring, Hypergraph


class FormatError(ValueError):
    pass


_IMPLICIT = re.compile(r"^complete-uniform\s+n=(\d+)\s+k=(\d+)$")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_instance(text: str) -> Hypergraph | ImplicitCompleteUniform:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty hypergraph file")
    lineno, head = lines[0]
    m = _IMPLICIT.match(head)
    if m:
        if len(lines) > 1:
            raise FormatError(f"line {lines[1][0]}: unexpected content after implicit header")
        try:
            return ImplicitCompleteUniform(int(m.group(1)), int(m.group(2)))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise FormatError(f"line {lineno}: expected 'n <count>', got {head!r}")
    n = int(parts[1])
    edges = []
    for lineno, line in lines[1:]:
        try:
            ids = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if len(set(ids)) != len(ids):
            raise FormatError(f"line {lineno}: repeated vertex in edge {line!r}")
        edges.append(ids)
    try:
        return Hypergraph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_hypergraph(text: str) -> Hypergraph:
    inst = parse_instance(text)
    if not isinstance(inst, Hypergraph):
        raise FormatError("expected an explicit hypergraph, got an implicit complete-uniform header")
    return inst


def format_hypergraph(G: Hypergraph | ImplicitCompleteUniform) -> str:
    if isinstance(G, ImplicitCompleteUniform):
        return G.header() + "\n"
    lines = [f"n {G.n}"]
    lines += [" ".join(map(str, sorted(e))) for e in G.edges]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = list(_content_lines(text))
    if len(lines) != 1:
        raise FormatError(f"expected exactly one coloring line, got {len(lines)}")
    lineno, line = lines[0]
    try:
        return Coloring(int(tok) for tok in line.split())
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None


def format_coloring(col: Coloring) -> str:
    return " ".join(map(str, col.colors)) + "\n"
