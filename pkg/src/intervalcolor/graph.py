"""
Simple undirected graphs with stable identifiers, role labels and edge tags.

Graphs are immutable once built.  Every iteration order (vertices, edges,
neighbours) is sorted by identifier so that downstream algorithms behave
deterministically.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Literal, Mapping, Sequence, Union

Vertex = Union[int, str]
Edge = tuple  # (u, v) with id_key(u) < id_key(v)


class GraphError(ValueError):
    """Invalid graph construction or query."""


def id_key(x: Hashable) -> tuple:
    # ints sort before strings; never compares an int with a str
    if isinstance(x, int):
        return (0, x, "")
    return (1, 0, str(x))


def edge_of(a: Vertex, b: Vertex) -> Edge:
    ta, tb = type(a), type(b)
    if ta is tb and (ta is int or ta is str):  # fast path, same order as id_key
        return (a, b) if a < b else (b, a)
    return (a, b) if id_key(a) < id_key(b) else (b, a)


def edge_key(e: Edge) -> str:
    """JSON key of an edge: sorted endpoints joined by ``--``."""
    a, b = edge_of(*e)
    return f"{a}--{b}"


def _tags(value: Any) -> tuple[str, ...]:
    if value is None:
        return ()
    if isinstance(value, str):
        return (value,)
    return tuple(value)


class Graph:
    """An immutable simple graph.

    Use :func:`build_graph` to construct one; the constructor trusts its
    input and skips validation.
    """

    __slots__ = ("vertices", "edges", "roles", "edge_tags", "_adj", "_edge_set")

    def __init__(
        self,
        vertices: tuple,
        edges: tuple,
        roles: Mapping[Vertex, tuple[str, ...]],
        edge_tags: Mapping[Edge, tuple[str, ...]],
        adj: dict,
    ):
        self.vertices = vertices
        self.edges = edges
        self.roles = dict(roles)
        self.edge_tags = dict(edge_tags)
        self._adj = adj
        self._edge_set = frozenset(edges)

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.roles == other.roles
            and self.edge_tags == other.edge_tags
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._adj

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return edge_of(a, b) in self._edge_set

    def neighbors(self, v: Vertex) -> tuple:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def incident_edges(self, v: Vertex) -> list[Edge]:
        return [edge_of(v, w) for w in self._adj[v]]

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def components(self) -> list[tuple]:
        """Vertex sets of the connected components, each sorted, in order of
        their smallest vertex."""
        seen: set = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            out.append(tuple(sorted(comp, key=id_key)))
        return out

    def is_connected(self) -> bool:
        return len(self.vertices) <= 1 or len(self.components()) == 1

    def bipartition(self) -> tuple[tuple, tuple] | None:
        """Two colour classes, or None when the graph has an odd cycle."""
        side, _ = _two_color(self)
        if side is None:
            return None
        left = tuple(v for v in self.vertices if side[v] == 0)
        right = tuple(v for v in self.vertices if side[v] == 1)
        return left, right

    def is_bipartite(self) -> bool:
        return _two_color(self)[0] is not None

    def odd_cycle(self) -> list | None:
        return _two_color(self)[1]

    def subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Edge-induced subgraph; keeps roles and tags of what survives."""
        es = [edge_of(*e) for e in edges]
        missing = [e for e in es if e not in self._edge_set]
        if missing:
            raise GraphError(f"edge {missing[0]} not in graph")
        vs = {x for e in es for x in e}
        return build_graph(
            vs,
            es,
            roles={v: r for v, r in self.roles.items() if v in vs},
            edge_tags={e: t for e, t in self.edge_tags.items() if e in set(es)},
        )

    def component_subgraphs(self) -> list["Graph"]:
        out = []
        for comp in self.components():
            cs = set(comp)
            es = [e for e in self.edges if e[0] in cs]
            out.append(
                build_graph(
                    comp,
                    es,
                    roles={v: r for v, r in self.roles.items() if v in cs},
                    edge_tags={e: t for e, t in self.edge_tags.items() if e[0] in cs},
                )
            )
        return out

    # -- serialisation -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "roles": {str(v): list(r) for v, r in sorted(self.roles.items(), key=lambda kv: id_key(kv[0]))},
            "edge_tags": {edge_key(e): list(t) for e, t in sorted(self.edge_tags.items(), key=lambda kv: (id_key(kv[0][0]), id_key(kv[0][1])))},
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        vertices = data["vertices"]
        by_name = {str(v): v for v in vertices}
        edges = [tuple(e) for e in data["edges"]]
        roles = {}
        for name, r in (data.get("roles") or {}).items():
            if name not in by_name:
                raise GraphError(f"role for unknown vertex {name!r}")
            roles[by_name[name]] = _tags(r)
        by_key = {edge_key(edge_of(*e)): edge_of(*e) for e in edges}
        tags = {}
        for k, t in (data.get("edge_tags") or {}).items():
            if k not in by_key:
                raise GraphError(f"tag for unknown edge {k!r}")
            tags[by_key[k]] = _tags(t)
        return build_graph(vertices, edges, roles=roles, edge_tags=tags)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, colors: Mapping[Edge, int] | None = None, name: str = "G") -> str:
        """Graphviz source. Named gadget vertices are boxes, set members are
        circles, degree-one vertices are points; pendant edges are dashed."""
        lines = [f"graph {name} {{", "  node [shape=circle, label=\"\"];"]
        for v in self.vertices:
            roles = self.roles.get(v, ())
            # named gadget vertices carry lower-case roles (v, u_r, w_l, ...)
            if any(r.rsplit(":", 1)[-1][:1].islower() for r in roles):
                shape = "box"
            elif self.degree(v) == 1:
                shape = "point"
            else:
                shape = "circle"
            label = ",".join(roles)
            lines.append(f'  "{v}" [shape={shape}, xlabel="{label}"];')
        for e in self.edges:
            attrs = []
            if any("pendant" in t for t in self.edge_tags.get(e, ())):
                attrs.append("style=dashed")
            if colors is not None and e in colors:
                attrs.append(f'label="{colors[e]}"')
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f'  "{e[0]}" -- "{e[1]}"{suffix};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _two_color(g: Graph) -> tuple[dict | None, list | None]:
    side: dict = {}
    parent: dict = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        parent[s] = None
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    return None, _odd_cycle(parent, x, y)
    return side, None


def _odd_cycle(parent: dict, a: Vertex, b: Vertex) -> list:
    pa = [a]
    while parent[pa[-1]] is not None:
        pa.append(parent[pa[-1]])
    pb = [b]
    while parent[pb[-1]] is not None:
        pb.append(parent[pb[-1]])
    on_a = {v: i for i, v in enumerate(pa)}
    j = 0
    while pb[j] not in on_a:
        j += 1
    i = on_a[pb[j]]
    return pa[: i + 1] + pb[:j][::-1]


def build_graph(
    vertices: Iterable[Vertex],
    edges: Iterable[Sequence[Vertex]],
    roles: Mapping[Vertex, Any] | None = None,
    edge_tags: Mapping[Sequence[Vertex], Any] | None = None,
) -> Graph:
    """Validate and build a :class:`Graph`.

    Raises :class:`GraphError` naming the offending element on a self-loop,
    duplicate edge (in either endpoint order), dangling endpoint, or a role
    or tag attached to something that is not in the graph.
    """
    vlist = list(vertices)
    adj: dict = {}
    for v in vlist:
        if v in adj:
            raise GraphError(f"duplicate vertex {v!r}")
        adj[v] = []
    seen: set = set()
    elist = []
    for raw in edges:
        a, b = raw
        if a == b:
            raise GraphError(f"self-loop at {a!r}")
        if a not in adj:
            raise GraphError(f"dangling endpoint {a!r} in edge ({a!r}, {b!r})")
        if b not in adj:
            raise GraphError(f"dangling endpoint {b!r} in edge ({a!r}, {b!r})")
        e = edge_of(a, b)
        if e in seen:
            raise GraphError(f"duplicate edge ({a!r}, {b!r})")
        seen.add(e)
        elist.append(e)
        adj[a].append(b)
        adj[b].append(a)
    kinds = {type(v) for v in vlist}
    key = None if kinds in ({int}, {str}) else id_key  # plain sort agrees with id_key then
    for v in adj:
        adj[v] = tuple(sorted(adj[v], key=key))
    elist.sort(key=None if key is None else (lambda e: (id_key(e[0]), id_key(e[1]))))
    vlist.sort(key=key)

    role_map = {}
    for v, r in (roles or {}).items():
        if v not in adj:
            raise GraphError(f"role for unknown vertex {v!r}")
        role_map[v] = _tags(r)
    tag_map = {}
    for e, t in (edge_tags or {}).items():
        ne = edge_of(*e)
        if ne not in seen:
            raise GraphError(f"tag for unknown edge {tuple(e)!r}")
        tag_map[ne] = _tags(t)
    return Graph(tuple(vlist), tuple(elist), role_map, tag_map, adj)


@dataclass(frozen=True)
class StructureReport:
    vertex_count: int
    edge_count: int
    max_degree: int
    degrees: dict = field(repr=False)
    is_connected: bool
    is_bipartite: bool
    bipartition: tuple | None = field(repr=False)
    odd_cycle: list | None

    def degree(self, v: Vertex) -> int:
        return self.degrees[v]


def structural_queries(g: Graph) -> StructureReport:
    """Degree, connectivity and bipartiteness summary of ``g``.

    When ``g`` is not bipartite an odd cycle is reported as a vertex list
    (consecutive entries adjacent, last adjacent to first).
    """
    side, cycle = _two_color(g)
    bip = None
    if side is not None:
        bip = (
            tuple(v for v in g.vertices if side[v] == 0),
            tuple(v for v in g.vertices if side[v] == 1),
        )
    return StructureReport(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        max_degree=g.max_degree,
        degrees={v: g.degree(v) for v in g.vertices},
        is_connected=g.is_connected(),
        is_bipartite=side is not None,
        bipartition=bip,
        odd_cycle=cycle,
    )


def glue_with_map(
    g1: Graph,
    e1: Sequence[Vertex],
    g2: Graph,
    e2: Sequence[Vertex],
    orientation: Literal["parallel", "crossed"] = "parallel",
) -> tuple[Graph, dict]:
    """Like :func:`glue_edges` but also return the map from ``g2``'s vertex
    ids to ids in the result (``g1``'s ids are kept unchanged)."""
    a1, b1 = e1
    a2, b2 = e2
    if not g1.has_edge(a1, b1):
        raise GraphError(f"edge ({a1!r}, {b1!r}) not in first graph")
    if not g2.has_edge(a2, b2):
        raise GraphError(f"edge ({a2!r}, {b2!r}) not in second graph")
    shared = set(g1.vertices) & set(g2.vertices)
    if shared:
        raise GraphError(f"graphs share vertex ids, e.g. {sorted(shared, key=id_key)[0]!r}")
    if orientation == "parallel":
        ident = {a2: a1, b2: b1}
    elif orientation == "crossed":
        ident = {a2: b1, b2: a1}
    else:
        raise GraphError(f"unknown orientation {orientation!r}")
    vmap = {v: ident.get(v, v) for v in g2.vertices}

    glued = edge_of(a1, b1)
    edges = list(g1.edges)
    for x, y in g2.edges:
        e = edge_of(vmap[x], vmap[y])
        if e != glued:
            edges.append(e)
    vertices = list(g1.vertices) + [v for v in g2.vertices if v not in ident]

    roles = dict(g1.roles)
    for v, r in g2.roles.items():
        w = vmap[v]
        roles[w] = roles.get(w, ()) + r
    tags = dict(g1.edge_tags)
    for e, t in g2.edge_tags.items():
        w = edge_of(vmap[e[0]], vmap[e[1]])
        tags[w] = tags.get(w, ()) + t
    return build_graph(vertices, edges, roles=roles, edge_tags=tags), vmap


def glue_edges(
    g1: Graph,
    e1: Sequence[Vertex],
    g2: Graph,
    e2: Sequence[Vertex],
    orientation: Literal["parallel", "crossed"] = "parallel",
) -> Graph:
    """Identify edge ``e1`` of ``g1`` with edge ``e2`` of ``g2``.

    With ``orientation="parallel"`` the vertex ``e1[0]`` absorbs ``e2[0]`` and
    ``e1[1]`` absorbs ``e2[1]``; ``"crossed"`` swaps the pairing.  The two
    edges become one edge carrying both sets of tags.
    """
    return glue_with_map(g1, e1, g2, e2, orientation)[0]


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        return Graph.from_json(fh.read())
