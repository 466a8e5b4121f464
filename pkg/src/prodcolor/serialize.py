"""Text and structured-object serialization for graphs, digraphs, and colorings.

Two interchange formats:

* edge-list text: a header line ``<n> <count>`` optionally followed by
  ``loops: v1 v2 ...`` on the same line, then one ``u v`` line per edge
  (``u -> v`` for digraph arcs). Blank lines and ``#`` comments are skipped.
* structured objects: plain dicts mirroring the type fields, suitable for
  JSON. Round trips are stable; serialization output is sorted.

Parsing is always 0-based. ``one_based=True`` shifts displayed indices up by
one for side-by-side reading with 1-based notation; it is display-only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import ParseError
from .graphs import Digraph, Graph


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def _parse_header(line_no: int, line: str) -> tuple[int, int, list[int]]:
    parts = line.split()
    loops: list[int] = []
    if "loops:" in parts:
        at = parts.index("loops:")
        head, tail = parts[:at], parts[at + 1 :]
        try:
            loops = [int(t) for t in tail]
        except ValueError:
            raise ParseError(line_no, f"bad loop list {tail!r}") from None
    else:
        head = parts
    if len(head) != 2:
        raise ParseError(line_no, f"header must be '<n> <count> [loops: ...]', got {line!r}")
    try:
        n, count = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(line_no, f"non-integer header field in {line!r}") from None
    return n, count, loops


def serialize_graph(g: Graph, one_based: bool = False) -> str:
    off = 1 if one_based else 0
    head = f"{g.n} {len(g.edges)}"
    if g.loops:
        head += " loops: " + " ".join(str(v + off) for v in sorted(g.loops))
    lines = [head] + [f"{u + off} {v + off}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise ParseError(1, "empty input")
    n, count, loops = _parse_header(*lines[0])
    if len(lines) - 1 != count:
        raise ParseError(lines[0][0], f"header promises {count} edges, found {len(lines) - 1}")
    edges = []
    for line_no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer endpoint in {line!r}") from None
        if u == v:
            raise ParseError(line_no, f"self-edge {u} {v} is not allowed in the edge list")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"endpoint out of range [0, {n}) in {line!r}")
        edges.append((u, v))
    for v in loops:
        if not (0 <= v < n):
            raise ParseError(lines[0][0], f"loop vertex {v} out of range [0, {n})")
    return Graph.from_edges(n, edges, loops)


def serialize_digraph(d: Digraph, one_based: bool = False) -> str:
    off = 1 if one_based else 0
    lines = [f"{d.n} {len(d.arcs)}"]
    lines += [f"{x + off} -> {y + off}" for x, y in d.sorted_arcs]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    lines = _data_lines(text)
    if not lines:
        raise ParseError(1, "empty input")
    n, count, loops = _parse_header(*lines[0])
    if loops:
        raise ParseError(lines[0][0], "digraphs do not carry loops")
    if len(lines) - 1 != count:
        raise ParseError(lines[0][0], f"header promises {count} arcs, found {len(lines) - 1}")
    arcs = []
    for line_no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "->":
            raise ParseError(line_no, f"expected 'x -> y', got {line!r}")
        try:
            x, y = int(parts[0]), int(parts[2])
        except ValueError:
            raise ParseError(line_no, f"non-integer endpoint in {line!r}") from None
        if x == y:
            raise ParseError(line_no, f"self-arc {x} -> {y} is not allowed")
        if not (0 <= x < n and 0 <= y < n):
            raise ParseError(line_no, f"endpoint out of range [0, {n}) in {line!r}")
        arcs.append((x, y))
    return Digraph.from_arcs(n, arcs)


# ---------------------------------------------------------------------------
# structured-object format


def graph_to_obj(g: Graph) -> dict[str, Any]:
    return {
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges],
        "loops": sorted(g.loops),
    }


def graph_from_obj(obj: dict[str, Any]) -> Graph:
    return Graph.from_edges(
        obj["n"],
        [tuple(e) for e in obj.get("edges", [])],
        obj.get("loops", []),
    )


def digraph_to_obj(d: Digraph) -> dict[str, Any]:
    return {"n": d.n, "arcs": [list(a) for a in d.sorted_arcs]}


def digraph_from_obj(obj: dict[str, Any]) -> Digraph:
    return Digraph.from_arcs(obj["n"], [tuple(a) for a in obj.get("arcs", [])])


def coloring_to_obj(coloring) -> dict[str, Any]:
    return {"k": coloring.k, "colors": list(coloring.colors)}


def coloring_from_obj(obj: dict[str, Any]):
    from .solvers import Coloring

    return Coloring(tuple(obj["colors"]), obj["k"])


def set_coloring_to_obj(sc) -> dict[str, Any]:
    return {
        "k": sc.k,
        "size": sc.size,
        "sets": [sorted(s) for s in sc.sets],
    }


def set_coloring_from_obj(obj: dict[str, Any]):
    from .arcshift import SetColoring

    return SetColoring(
        tuple(frozenset(s) for s in obj["sets"]),
        obj["k"],
        obj.get("size"),
    )


def fractional_coloring_to_obj(fc) -> dict[str, Any]:
    return {
        "sets": [
            [sorted(s), w.numerator, w.denominator]
            for s, w in zip(fc.sets, fc.weights)
        ],
        "value": [fc.value.numerator, fc.value.denominator],
    }


def fractional_coloring_from_obj(obj: dict[str, Any]):
    from .fractional import FractionalColoring

    sets = tuple(frozenset(entry[0]) for entry in obj["sets"])
    weights = tuple(Fraction(entry[1], entry[2]) for entry in obj["sets"])
    return FractionalColoring(sets, weights)


def graph_to_dot(g: Graph, one_based: bool = False) -> str:
    off = 1 if one_based else 0
    lines = ["graph {"]
    lines += [f"  {v + off};" for v in range(g.n)]
    lines += [f"  {u + off} -- {v + off};" for u, v in g.sorted_edges]
    lines += [f"  {v + off} -- {v + off};" for v in sorted(g.loops)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(d: Digraph, one_based: bool = False) -> str:
    off = 1 if one_based else 0
    lines = ["digraph {"]
    lines += [f"  {v + off};" for v in range(d.n)]
    lines += [f"  {x + off} -> {y + off};" for x, y in d.sorted_arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"
