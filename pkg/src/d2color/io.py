"""Graph files and JSON encodings.

Edge-list format::

    # comments run to end of line
    n 6          # optional header: vertex count, so isolated vertices survive
    0 1
    1 2

A DIMACS-like ``.col`` reader (``p edge n m`` then ``e u v`` with 1-based ids)
is also provided.  Rationals in JSON are always ``{"num": ..., "den": ...}``.
"""
from __future__ import annotations

import json
from collections.abc import Mapping

from .errors import ParseError
from .graph import Graph


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None
    if any(v < 0 for v in values):
        raise ParseError(f"line {lineno}: vertex ids must be non-negative")
    return values


def _build(n: int, edges: list[tuple[int, int]]) -> Graph:
    try:
        return Graph(n, edges)
    except (ValueError, KeyError) as exc:
        raise ParseError(str(exc)) from None


def parse_edge_list(text: str) -> Graph:
    declared = None
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == "n":
            if len(tokens) != 2 or declared is not None:
                raise ParseError(f"line {lineno}: header must be a single 'n <count>' line")
            (declared,) = _ints(tokens[1:], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        u, v = _ints(tokens, lineno)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
        top = max(top, u, v)
    if declared is not None and top >= declared:
        raise ParseError(f"vertex {top} out of range for declared n={declared}")
    n = declared if declared is not None else top + 1
    return _build(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """DIMACS-like reader: ``c`` comments, one ``p edge n m`` line, ``e u v`` lines (1-based).

    The declared ``m`` is not enforced, since many files list each edge in
    both directions.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None or len(tokens) != 4:
                raise ParseError(f"line {lineno}: expected a single 'p edge n m' line")
            n, _ = _ints(tokens[2:], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before the 'p' line")
            if len(tokens) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            u, v = _ints(tokens[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line type {tokens[0]!r}")
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    return _build(n, edges)


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse ``text`` as ``"edges"``, ``"dimacs"`` or, with ``"auto"``, whichever fits."""
    if fmt == "auto":
        first = next((ln.split()[0] for ln in text.splitlines() if ln.split()), "")
        fmt = "dimacs" if first in ("p", "c", "e") else "edges"
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def coloring_to_json(col: Mapping[int, int]) -> dict:
    return {"coloring": {str(v): col[v] for v in sorted(col)}}


def coloring_from_json(obj) -> dict[int, int]:
    if isinstance(obj, Mapping) and "coloring" in obj:
        obj = obj["coloring"]
    try:
        if isinstance(obj, Mapping):
            return {int(k): int(c) for k, c in obj.items()}
        return {v: int(c) for v, c in enumerate(obj)}
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad coloring: {exc}") from None


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
