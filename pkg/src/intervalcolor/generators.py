"""
Graph families used by the tests, the demo scripts and corpus generation:
all small connected graphs up to isomorphism, plus seeded random trees,
forests, regular bipartite graphs and general graphs.
"""

from __future__ import annotations

import random

import networkx as nx

from .graph import Graph, build_graph


def _to_graph(h: nx.Graph) -> Graph:
    return build_graph(sorted(h.nodes), [tuple(sorted(e)) for e in h.edges])


def connected_graphs(max_edges: int, max_vertices: int | None = None) -> list[Graph]:
    """Every connected graph with 1..``max_edges`` edges, one per isomorphism
    class, on vertices ``0..n-1``; ordered by edge count.

    Each connected graph with m edges arises from one with m-1 edges by
    adding an edge (drop a cycle edge, or a leaf edge of a tree), so
    growing level by level reaches all of them.
    """
    level = [nx.Graph([(0, 1)])]
    out = list(level)
    for _ in range(2, max_edges + 1):
        buckets: dict = {}
        nxt = []
        for h in level:
            n = h.number_of_nodes()
            cands = [(a, b) for a in range(n) for b in range(a + 1, n) if not h.has_edge(a, b)]
            if max_vertices is None or n < max_vertices:
                cands += [(a, n) for a in range(n)]
            for a, b in cands:
                h2 = h.copy()
                h2.add_edge(a, b)
                key = (h2.number_of_nodes(), tuple(sorted(d for _, d in h2.degree())), nx.weisfeiler_lehman_graph_hash(h2))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h2, other) for other in bucket):
                    continue
                bucket.append(h2)
                nxt.append(h2)
        level = nxt
        out.extend(level)
    return [_to_graph(h) for h in out]


def connected_graphs_on(max_vertices: int) -> list[Graph]:
    """Every connected graph on 2..``max_vertices`` vertices up to isomorphism."""
    m = max_vertices * (max_vertices - 1) // 2
    return connected_graphs(m, max_vertices)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform-attachment random tree on ``n`` vertices (each new vertex picks
    a random earlier parent)."""
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return build_graph(range(n), edges)


def random_forest(n_edges: int, rng: random.Random, trees: int | None = None) -> Graph:
    """Forest with exactly ``n_edges`` edges spread over ``trees`` trees."""
    trees = trees or rng.randint(1, max(1, n_edges // 50 + 1))
    n = n_edges + trees
    order = list(range(n))
    rng.shuffle(order)
    # the first `trees` positions are roots; later ones attach to an earlier vertex
    edges = [(order[rng.randrange(i)], order[i]) for i in range(trees, n)]
    return build_graph(range(n), edges)


def random_regular_bipartite(n: int, delta: int, rng: random.Random, swaps: int | None = None) -> Graph:
    """A ``delta``-regular bipartite graph with sides of size ``n``.

    Starts from the circulant graph ``a_i -- b_{i+j mod n}`` (``j < delta``)
    and randomises it with degree-preserving double-edge swaps.
    Vertices are the strings ``a<i>`` and ``b<i>``, zero-padded.
    """
    if not 1 <= delta <= n:
        raise ValueError("need 1 <= delta <= n")
    adj = {i: {(i + j) % n for j in range(delta)} for i in range(n)}
    edges = [(i, b) for i in range(n) for b in adj[i]]
    swaps = 10 * len(edges) if swaps is None else swaps
    for _ in range(swaps):
        i, j = rng.sample(range(len(edges)), 2)
        (a1, b1), (a2, b2) = edges[i], edges[j]
        if a1 == a2 or b1 == b2 or b2 in adj[a1] or b1 in adj[a2]:
            continue
        adj[a1].remove(b1)
        adj[a2].remove(b2)
        adj[a1].add(b2)
        adj[a2].add(b1)
        edges[i], edges[j] = (a1, b2), (a2, b1)
    w = len(str(n - 1))
    return build_graph(
        [f"a{i:0{w}d}" for i in range(n)] + [f"b{i:0{w}d}" for i in range(n)],
        [(f"a{i:0{w}d}", f"b{b:0{w}d}") for i, b in edges],
    )


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi G(n, p) on vertices ``0..n-1``."""
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return build_graph(range(n), edges)


def random_bipartite(n_left: int, n_right: int, p: float, rng: random.Random) -> Graph:
    left = [f"p{i}" for i in range(n_left)]
    right = [f"t{i}" for i in range(n_right)]
    edges = [(a, b) for a in left for b in right if rng.random() < p]
    return build_graph(left + right, edges)


# networkx named graphs that tests and demos keep asking for
def petersen() -> Graph:
    return _to_graph(nx.petersen_graph())


def complete(n: int) -> Graph:
    return _to_graph(nx.complete_graph(n))


def complete_bipartite(a: int, b: int) -> Graph:
    return _to_graph(nx.complete_bipartite_graph(a, b))


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return _to_graph(nx.path_graph(n))


def cycle(n: int) -> Graph:
    return _to_graph(nx.cycle_graph(n))


def star(leaves: int) -> Graph:
    return _to_graph(nx.star_graph(leaves))
