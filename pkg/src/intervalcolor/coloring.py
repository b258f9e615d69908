"""
Edge colorings and the interval (consecutive) property.

A coloring maps every edge to an integer; colors may be zero or negative
while gadget colorings are being composed, and are normalised to start at 1
afterwards.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Literal, Mapping

from .graph import Edge, Graph, Vertex, edge_key, edge_of, id_key


class PartialColoringError(ValueError):
    """A coloring that does not cover every edge of its graph."""


@dataclass(frozen=True)
class IntervalViolation:
    kind: Literal["improper-pair", "non-interval-vertex"]
    location: Vertex | tuple[Edge, Edge]
    detail: tuple[int, ...]


class EdgeColoring(Mapping):
    """Immutable map from the edges of ``graph`` to integer colors."""

    __slots__ = ("graph", "_colors")

    def __init__(self, graph: Graph, colors: Mapping[Edge, int]):
        self.graph = graph
        self._colors = {edge_of(*e): int(c) for e, c in colors.items()}

    def __getitem__(self, e: Edge) -> int:
        return self._colors[edge_of(*e)]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._colors)

    def __len__(self) -> int:
        return len(self._colors)

    def __repr__(self) -> str:
        lo, hi = self.span() if self._colors else (None, None)
        return f"EdgeColoring({len(self._colors)} edges, span=[{lo}, {hi}])"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EdgeColoring):
            return self._colors == other._colors
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._colors.items()))

    def missing_edges(self) -> list[Edge]:
        return [e for e in self.graph.edges if e not in self._colors]

    def palette(self) -> frozenset[int]:
        return frozenset(self._colors.values())

    def span(self) -> tuple[int, int]:
        vals = self._colors.values()
        return min(vals), max(vals)

    def at(self, v: Vertex) -> list[int]:
        """Colors on the edges at ``v``, in neighbour order."""
        return [self._colors[edge_of(v, w)] for w in self.graph.neighbors(v)]

    def shift(self, q: int) -> "EdgeColoring":
        return shift(self, q)

    def mirror(self) -> "EdgeColoring":
        return mirror(self)

    def normalized(self) -> "EdgeColoring":
        return normalize(self)

    def restrict(self, graph: Graph) -> "EdgeColoring":
        return EdgeColoring(graph, {e: self._colors[e] for e in graph.edges})

    def to_dict(self) -> dict:
        return {"colors": {edge_key(e): self._colors[e] for e in self.graph.edges if e in self._colors}}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, graph: Graph, data: Mapping) -> "EdgeColoring":
        by_key = {edge_key(e): e for e in graph.edges}
        colors = {}
        for k, c in data["colors"].items():
            if k not in by_key:
                raise ValueError(f"coloring names unknown edge {k!r}")
            colors[by_key[k]] = c
        return cls(graph, colors)

    @classmethod
    def from_json(cls, graph: Graph, text: str) -> "EdgeColoring":
        return cls.from_dict(graph, json.loads(text))


def _as_coloring(g: Graph, c: Mapping[Edge, int]) -> EdgeColoring:
    if isinstance(c, EdgeColoring) and c.graph is g:
        return c
    return EdgeColoring(g, c)


def verify_interval(g: Graph, c: Mapping[Edge, int]) -> list[IntervalViolation]:
    """Every interval-property violation of ``c`` on ``g``.

    An empty list means ``c`` is an interval coloring.  Violations are
    collected exhaustively: each pair of equally colored edges at a vertex,
    and each vertex whose distinct colors are not consecutive.

    Raises :class:`PartialColoringError` when an edge has no color.
    """
    c = _as_coloring(g, c)
    missing = c.missing_edges()
    if missing:
        raise PartialColoringError(f"{len(missing)} uncolored edge(s), first {missing[0]}")
    colors = c._colors
    at: dict = defaultdict(list)
    for e in g.edges:
        col = colors[e]
        at[e[0]].append(col)
        at[e[1]].append(col)
    out = []
    for v in g.vertices:
        cols = at.get(v)
        if not cols:
            continue
        distinct = set(cols)
        if len(distinct) != len(cols):
            by_col: dict = defaultdict(list)
            for e in g.incident_edges(v):
                by_col[colors[e]].append(e)
            detail = tuple(sorted(cols))
            for col in sorted(by_col):
                es = by_col[col]
                for i in range(len(es)):
                    for j in range(i + 1, len(es)):
                        out.append(IntervalViolation("improper-pair", (es[i], es[j]), detail))
        if max(distinct) - min(distinct) + 1 != len(distinct):
            out.append(IntervalViolation("non-interval-vertex", v, tuple(sorted(cols))))
    return out


def is_interval_coloring(g: Graph, c: Mapping[Edge, int]) -> bool:
    return not verify_interval(g, c)


def palette(g: Graph, c: Mapping[Edge, int]) -> tuple[frozenset[int], tuple[int, int]]:
    """The set of colors used and its span ``(min, max)``."""
    c = _as_coloring(g, c)
    return c.palette(), c.span()


def shift(c: EdgeColoring, q: int) -> EdgeColoring:
    return EdgeColoring(c.graph, {e: col + q for e, col in c._colors.items()})


def mirror(c: EdgeColoring) -> EdgeColoring:
    """Reflect colors inside their span: ``col -> min + max - col``."""
    lo, hi = c.span()
    return EdgeColoring(c.graph, {e: lo + hi - col for e, col in c._colors.items()})


def normalize(c: EdgeColoring) -> EdgeColoring:
    """Shift so the smallest color is 1."""
    return shift(c, 1 - c.span()[0])


def residues_mod(c: EdgeColoring, m: int) -> EdgeColoring:
    """Colors reduced modulo ``m``.

    For an interval coloring and ``m`` the maximum degree the result is a
    proper coloring with at most ``m`` classes.
    """
    return EdgeColoring(c.graph, {e: col % m for e, col in c._colors.items()})


def is_proper(g: Graph, c: Mapping[Edge, int]) -> bool:
    c = _as_coloring(g, c)
    for v in g.vertices:
        cols = c.at(v)
        if len(set(cols)) != len(cols):
            return False
    return True


def disjoint_union_coloring(parts: list[EdgeColoring], graph: Graph | None = None) -> EdgeColoring:
    """Join colorings of vertex-disjoint graphs, normalising each to start at 1.

    The union of vertex-disjoint interval colorable graphs is interval
    colorable, and this is the coloring that shows it.
    """
    colors: dict = {}
    owner: dict = {}
    for i, part in enumerate(parts):
        for v in part.graph.vertices:
            if v in owner and owner[v] != i:
                raise ValueError(f"parts share vertex {v!r}")
            owner[v] = i
        if len(part):
            colors.update(normalize(part)._colors)
    if graph is None:
        from .graph import build_graph

        graph = build_graph(
            sorted(owner, key=id_key),
            list(colors),
        )
    return EdgeColoring(graph, colors)


def load_coloring(graph: Graph, path: str) -> EdgeColoring:
    with open(path) as fh:
        return EdgeColoring.from_json(graph, fh.read())
