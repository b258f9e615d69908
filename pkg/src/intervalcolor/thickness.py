"""
Upper bounds on interval thickness: split a graph's edges into parts that
each carry a certified interval coloring.

Trees and regular bipartite graphs are colored directly.  Anything else
falls back on a degeneracy ordering: orienting every edge towards the later
endpoint gives each vertex at most ``degeneracy`` out-edges, and putting the
i-th out-edge of every vertex into class i yields that many forests.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field

from .coloring import EdgeColoring, disjoint_union_coloring, verify_interval
from .graph import Edge, Graph, edge_key, edge_of, id_key
from .spectrum import SearchBudgetExceeded, interval_coloring_any


class NotAForestError(ValueError):
    pass


class NotRegularBipartiteError(ValueError):
    pass


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - len(g.components())


def color_forest(g: Graph) -> EdgeColoring:
    """Interval coloring of a forest.

    Each tree is rooted at its smallest vertex, whose edges get ``1..deg``;
    a vertex reached by an edge of color ``c`` gives its child edges
    ``c+1, ..., c+deg-1``.
    """
    colors: dict = {}
    seen: set = set()
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([(root, 0)])
        while queue:
            x, c = queue.popleft()
            nxt = c + 1
            for y in g.neighbors(x):
                if y in seen:
                    continue
                seen.add(y)
                colors[edge_of(x, y)] = nxt
                queue.append((y, nxt))
                nxt += 1
    if len(colors) != g.edge_count:  # BFS trees miss exactly the cycle edges
        raise NotAForestError("graph has a cycle")
    return EdgeColoring(g, colors)


def max_bipartite_matching(left: list, adj: dict) -> dict:
    """Maximum matching by augmenting paths (Kuhn); returns left -> right."""
    match_r: dict = {}
    match_l: dict = {}
    for s in left:
        # iterative DFS for an augmenting path from s
        parent: dict = {}
        stack = [(s, iter(adj[s]))]
        visited = set()
        found = None
        while stack and found is None:
            x, it = stack[-1]
            for y in it:
                if y in visited:
                    continue
                visited.add(y)
                parent[y] = x
                if y not in match_r:
                    found = y
                    break
                stack.append((match_r[y], iter(adj[match_r[y]])))
                break
            else:
                stack.pop()
        if found is None:
            continue
        y = found
        while True:
            x = parent[y]
            prev = match_l.get(x)
            match_l[x] = y
            match_r[y] = x
            if x == s:
                break
            y = prev
    return match_l


def color_regular_bipartite(g: Graph) -> EdgeColoring:
    """Color a Δ-regular bipartite graph with ``1..Δ`` by peeling off Δ
    perfect matchings; every vertex sees all of ``1..Δ``."""
    sides = g.bipartition()
    if sides is None:
        raise NotRegularBipartiteError("graph is not bipartite")
    degs = {g.degree(v) for v in g.vertices}
    if len(degs) > 1:
        raise NotRegularBipartiteError(f"graph is not regular (degrees {sorted(degs)})")
    delta = degs.pop() if degs else 0
    left = list(sides[0])
    adj = {x: list(g.neighbors(x)) for x in left}
    colors: dict = {}
    for c in range(1, delta + 1):
        m = max_bipartite_matching(left, adj)
        if len(m) != len(left):
            raise AssertionError("regular bipartite graph without a perfect matching")
        for x, y in m.items():
            colors[edge_of(x, y)] = c
            adj[x].remove(y)
    return EdgeColoring(g, colors)


def is_regular_bipartite(g: Graph) -> bool:
    return g.edge_count > 0 and len({g.degree(v) for v in g.vertices}) == 1 and g.is_bipartite()


def degeneracy_ordering(g: Graph) -> tuple[int, list]:
    """Smallest-last ordering and the degeneracy it certifies.

    Repeatedly removes a vertex of minimum remaining degree (ties by id);
    every vertex has at most ``degeneracy`` neighbours later in the order.
    """
    deg = {v: g.degree(v) for v in g.vertices}
    buckets: dict = {}
    for v in g.vertices:
        buckets.setdefault(deg[v], set()).add(v)
    removed: set = set()
    order = []
    k = 0
    low = 0
    for _ in range(g.vertex_count):
        while not buckets.get(low):
            low += 1
        v = min(buckets[low], key=id_key)
        buckets[low].remove(v)
        k = max(k, low)
        order.append(v)
        removed.add(v)
        for w in g.neighbors(v):
            if w not in removed:
                buckets[deg[w]].remove(w)
                deg[w] -= 1
                buckets.setdefault(deg[w], set()).add(w)
                if deg[w] < low:
                    low = deg[w]
    return k, order


def degeneracy(g: Graph) -> int:
    return degeneracy_ordering(g)[0]


def forest_classes(g: Graph) -> list[list[Edge]]:
    """Split the edges into at most ``degeneracy(g)`` forests.

    A cycle inside one class would need its earliest vertex to have two
    out-edges there, so every class is acyclic; a union-find pass checks it.
    """
    k, order = degeneracy_ordering(g)
    pos = {v: i for i, v in enumerate(order)}
    classes: list[list[Edge]] = [[] for _ in range(k)]
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        later.sort(key=pos.__getitem__)
        for i, w in enumerate(later):
            classes[i].append(edge_of(v, w))
    for cls in classes:
        parent: dict = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        for a, b in cls:
            ra, rb = find(a), find(b)
            if ra == rb:
                raise AssertionError(f"out-edge class contains a cycle through {a!r}-{b!r}")
            parent[ra] = rb
    return [c for c in classes if c]


@dataclass
class Decomposition:
    source: Graph
    parts: list[tuple[tuple[Edge, ...], EdgeColoring]] = field(default_factory=list)
    method: str = ""

    def __len__(self) -> int:
        return len(self.parts)

    def problems(self) -> list[str]:
        """Why this is not a valid decomposition; empty when it is."""
        out = []
        seen: dict = {}
        for i, (edges, c) in enumerate(self.parts):
            for e in edges:
                if e in seen:
                    out.append(f"edge {e} in parts {seen[e]} and {i}")
                seen[e] = i
            sub = self.source.subgraph(edges)
            bad = verify_interval(sub, c.restrict(sub))
            if bad:
                out.append(f"part {i}: {len(bad)} interval violations")
        missing = [e for e in self.source.edges if e not in seen]
        if missing:
            out.append(f"{len(missing)} edges uncovered, first {missing[0]}")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "parts": [
                {"edges": [list(e) for e in edges], "colors": {edge_key(e): c[e] for e in edges}}
                for edges, c in self.parts
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, g: Graph, data: dict) -> "Decomposition":
        parts = []
        for p in data["parts"]:
            edges = tuple(edge_of(*e) for e in p["edges"])
            sub = g.subgraph(edges)
            parts.append((edges, EdgeColoring.from_dict(sub, p)))
        return cls(g, parts, data.get("method", ""))


def decompose(g: Graph, node_limit: int | None = 200, budget_ms: float | None = None) -> Decomposition:
    """Edge-decompose ``g`` into interval colorable parts.

    One part when ``g`` is a forest, a regular bipartite graph, or the
    exact solver finds an interval coloring within its budget (node-based
    by default, so the result is reproducible).  Otherwise the forest
    classes of a degeneracy ordering, at most ``degeneracy(g)`` parts, which
    is at most ``ceil(sqrt(2 * edges))``.
    """
    if g.edge_count == 0:
        return Decomposition(g, [], "empty")
    if is_forest(g):
        return Decomposition(g, [(g.edges, color_forest(g))], "forest")
    comps = g.component_subgraphs()
    if all(h.edge_count == 0 or is_regular_bipartite(h) or is_forest(h) for h in comps):
        parts = [color_forest(h) if is_forest(h) else color_regular_bipartite(h) for h in comps if h.edge_count]
        return Decomposition(g, [(g.edges, disjoint_union_coloring(parts, g))], "regular-bipartite")
    try:
        c = interval_coloring_any(g, budget_ms, node_limit)
    except SearchBudgetExceeded:
        c = None
    if c is not None:
        return Decomposition(g, [(g.edges, c)], "solver")
    parts = []
    for cls in forest_classes(g):
        sub = g.subgraph(cls)
        parts.append((sub.edges, color_forest(sub)))
    return Decomposition(g, parts, "degeneracy-forests")


def _restricted_growth(m: int, k: int):
    # labelings of m items with labels 0..k-1, first occurrences in order
    a = [0] * m

    def rec(i: int, used: int):
        if i == m:
            yield a
            return
        for lab in range(min(used + 1, k)):
            a[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    if m:
        yield from rec(1, 1)


def exact_decomposition(g: Graph, k_max: int = 3, node_limit: int | None = 20000) -> Decomposition | None:
    """A decomposition into the fewest interval colorable parts, trying
    every partition of the edges into at most ``k_max`` parts.

    Returns None when no partition into ``k_max`` parts works.  Raises
    :class:`SearchBudgetExceeded` if a part could not be decided within
    ``node_limit`` solver nodes.  Meant for graphs with about ten edges.
    """
    edges = list(g.edges)
    memo: dict = {}

    def colorable(part: tuple) -> EdgeColoring | None:
        if part not in memo:
            memo[part] = interval_coloring_any(g.subgraph(part), node_limit=node_limit)
        return memo[part]

    if not edges:
        return Decomposition(g, [], "exact")
    for k in range(1, k_max + 1):
        for labels in _restricted_growth(len(edges), k):
            if max(labels) != k - 1:
                continue
            groups = [tuple(e for e, lab in zip(edges, labels) if lab == i) for i in range(k)]
            cols = []
            for grp in groups:
                c = colorable(grp)
                if c is None:
                    break
                cols.append(c)
            else:
                return Decomposition(g, list(zip(groups, cols)), "exact")
    return None


def exact_theta_small(g: Graph, k_max: int = 3, node_limit: int | None = 20000) -> int | None:
    """Interval thickness of a small graph, or None when undecided (budget
    exhausted, or more than ``k_max`` parts needed)."""
    try:
        dec = exact_decomposition(g, k_max, node_limit)
    except SearchBudgetExceeded:
        return None
    return None if dec is None else len(dec)


def overfull(g: Graph) -> bool:
    """True when ``g`` has an odd number of vertices and more than
    ``Δ (n-1) / 2`` edges.

    Such a graph needs more than Δ colors in any proper edge coloring,
    and an interval coloring reduced modulo Δ would be a proper Δ-coloring,
    so ``g`` is not interval colorable and its thickness is at least 2.
    """
    n = g.vertex_count
    return n % 2 == 1 and 2 * g.edge_count > g.max_degree * (n - 1)


def sqrt_edge_bound(g: Graph) -> int:
    """``ceil(sqrt(2 m))``, an upper bound on the degeneracy."""
    return math.isqrt(2 * g.edge_count - 1) + 1 if g.edge_count else 0


__all__ = [
    "Decomposition",
    "NotAForestError",
    "NotRegularBipartiteError",
    "color_forest",
    "color_regular_bipartite",
    "decompose",
    "degeneracy",
    "degeneracy_ordering",
    "exact_decomposition",
    "exact_theta_small",
    "forest_classes",
    "is_forest",
    "is_regular_bipartite",
    "max_bipartite_matching",
    "overfull",
    "sqrt_edge_bound",
]
