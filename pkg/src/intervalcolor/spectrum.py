"""
Exact search for interval colorings with a prescribed number of colors.

The solver is a depth-first search over edge colors with bitmask domains.
Every vertex ``v`` of degree ``k`` carries a set of feasible window starts
``lo``: its incident edges must use exactly the colors ``lo .. lo+k-1``.
Propagation alternates between the two views:

* a window start survives only if every incident edge can still take some
  color inside it and every color inside it is still available to some
  incident edge;
* edge domains are cut to the union of surviving windows at both ends;
* colors fixed on one edge leave the domains of the other edges at ``v``,
  and a color forced into every surviving window that only one edge can
  take is assigned to that edge.

Colors run over ``1 .. t`` and both 1 and ``t`` must be used, which for a
connected graph means exactly ``t`` colors.
"""

from __future__ import annotations

import heapq
import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator

from .coloring import EdgeColoring, verify_interval
from .graph import Graph, edge_of, id_key


class SearchBudgetExceeded(RuntimeError):
    """The search ran out of time or nodes before reaching a verdict."""


class DisconnectedGraphError(ValueError):
    pass


def _smear_down(x: int, k: int) -> int:
    # bit i set iff x has a bit in [i, i+k-1]
    r, w = x, 1
    while w < k:
        s = w if w + w <= k else k - w
        r |= r >> s
        w += s
    return r


def _smear_up(x: int, k: int) -> int:
    # bit i set iff x has a bit in [i-k+1, i]
    r, w = x, 1
    while w < k:
        s = w if w + w <= k else k - w
        r |= r << s
        w += s
    return r


def _cover(x: int, k: int) -> int:
    # bit i set iff x has every bit in [i, i+k-1]
    r, w = x, 1
    while w < k:
        s = w if w + w <= k else k - w
        r &= r >> s
        w += s
    return r


def twin_classes(g: Graph) -> list[tuple]:
    """Classes of two or more vertices with identical neighbourhoods, each
    paired with a hub (its smallest common neighbour).

    Swapping two twins is an automorphism.  Classes are kept greedily so
    that no kept class contains the hub of another kept class; the
    symmetric group on each kept class then leaves every hub fixed, and the
    kept classes can be canonicalised independently.
    """
    by_nbrs: dict = {}
    for v in g.vertices:
        nb = g.neighbors(v)
        if nb:
            by_nbrs.setdefault(nb, []).append(v)
    out = []
    hubs: set = set()
    members: set = set()
    for nb, cls in sorted(by_nbrs.items(), key=lambda kv: id_key(kv[1][0])):
        if len(cls) < 2:
            continue
        hub = nb[0]
        if hub in members or hubs.intersection(cls):
            continue
        out.append((hub, tuple(cls)))
        hubs.add(hub)
        members.update(cls)
    return out


class Budget:
    """Shared allowance of wall time and search nodes.

    Node limits make a search reproducible; wall-clock limits only bound
    its running time.
    """

    def __init__(self, budget_ms: float | None = None, node_limit: int | None = None):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.node_limit = node_limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SearchBudgetExceeded(f"node limit {self.node_limit} reached")
        if self.deadline is not None and (self.nodes & 63) == 0 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exhausted")

    def check_time(self) -> None:
        """Deadline check without charging a node, for long propagations."""
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exhausted")


def max_colors_bound(g: Graph) -> int:
    """An upper bound on the number of colors of any interval coloring of the
    connected graph ``g``.

    Two edges meeting at ``z`` differ by at most ``deg(z) - 1``, so along a
    walk the colors drift by at most the sum of ``deg - 1`` over the vertices
    passed.  The bound is one more than the largest such vertex-weighted
    distance, capped by the edge count.
    """
    idx = {v: i for i, v in enumerate(g.vertices)}
    w = [g.degree(v) - 1 for v in g.vertices]
    nbrs = [[idx[x] for x in g.neighbors(v)] for v in g.vertices]
    worst = 0
    for s in range(len(w)):
        dist = [None] * len(w)
        dist[s] = w[s]
        heap = [(w[s], s)]
        while heap:
            d, x = heapq.heappop(heap)
            if d > dist[x]:
                continue
            for y in nbrs[x]:
                nd = d + w[y]
                if dist[y] is None or nd < dist[y]:
                    dist[y] = nd
                    heapq.heappush(heap, (nd, y))
        worst = max(worst, max(x for x in dist if x is not None))
    return min(g.edge_count, worst + 1)


class _Search:
    def __init__(
        self,
        g: Graph,
        t: int,
        budget: Budget,
        break_twins: bool = True,
    ):
        self.g = g
        self.t = t
        self.budget = budget
        self.nodes = 0

        vindex = {v: i for i, v in enumerate(g.vertices)}
        self.deg = [g.degree(v) for v in g.vertices]
        # static edge rank: vertices by decreasing degree, then each star by
        # decreasing neighbour degree
        order = sorted(g.vertices, key=lambda v: (-g.degree(v), id_key(v)))
        eindex = {e: i for i, e in enumerate(g.edges)}
        rank = [0] * len(g.edges)
        seen = set()
        r = 0
        for v in order:
            for w in sorted(g.neighbors(v), key=lambda w: (-g.degree(w), id_key(w))):
                e = eindex[edge_of(v, w)]
                if e not in seen:
                    seen.add(e)
                    rank[e] = r
                    r += 1
        self.rank = rank
        self.ends = [(vindex[a], vindex[b]) for a, b in g.edges]
        self.inc = [[] for _ in g.vertices]
        for i, (a, b) in enumerate(self.ends):
            self.inc[a].append(i)
            self.inc[b].append(i)
        self.full = ((1 << t) - 1) << 1
        self.weight = [1] * len(self.deg)
        self.twin_classes = twin_classes(g) if break_twins else []
        self.chains = [[eindex[edge_of(h, z)] for z in cls] for h, cls in self.twin_classes]
        self.lo_full = [((1 << max(t - k + 1, 0)) - 1) << 1 for k in self.deg]

    def _tick(self) -> None:
        self.nodes += 1
        self.budget.tick()

    def _propagate(self, D: list, L: list, queue: list) -> bool:
        while True:
            v = self._propagate_inner(D, L, queue)
            if v is not None:
                self.weight[v] += 1
                return False
            queue = self._order_twins(D)
            if queue is None:
                return False
            if not queue:
                return True

    def _order_twins(self, D: list):
        # colors at each hub strictly increase along a twin class
        touched = []
        ends = self.ends
        for chain in self.chains:
            for i in range(len(chain) - 1):
                e, f = chain[i], chain[i + 1]
                de, df = D[e], D[f]
                nf = df & ~(((de & -de) << 1) - 1)
                ne = de & ((1 << (df.bit_length() - 1)) - 1)
                if not nf or not ne:
                    return None
                if nf != df:
                    D[f] = nf
                    touched.extend(ends[f])
                if ne != de:
                    D[e] = ne
                    touched.extend(ends[e])
            for i in range(len(chain) - 1, 0, -1):
                e, f = chain[i - 1], chain[i]
                de, df = D[e], D[f]
                ne = de & ((1 << (df.bit_length() - 1)) - 1)
                if not ne:
                    return None
                if ne != de:
                    D[e] = ne
                    touched.extend(ends[e])
        return touched

    def _propagate_inner(self, D: list, L: list, queue: list):
        inc, deg, ends = self.inc, self.deg, self.ends
        pending = set(queue)
        stack = list(queue)
        pops = 0
        while stack:
            pops += 1
            if pops & 255 == 0:
                self.budget.check_time()
            v = stack.pop()
            pending.discard(v)
            es = inc[v]
            k = deg[v]
            while True:
                Lv = L[v]
                union = 0
                for e in es:
                    d = D[e]
                    union |= d
                    Lv &= _smear_down(d, k)
                Lv &= _cover(union, k)
                if not Lv:
                    return v
                L[v] = Lv
                allowed = _smear_up(Lv, k)
                lo_min = Lv & -Lv
                lo_max = 1 << (Lv.bit_length() - 1)
                mandatory = (((lo_min << k) - 1) & ~(lo_max - 1)) if lo_max <= lo_min << (k - 1) else 0

                fixed = 0
                once = twice = 0
                changed = False
                for e in es:
                    d = D[e] & allowed
                    if not d:
                        return v
                    if d != D[e]:
                        D[e] = d
                        changed = True
                        a, b = ends[e]
                        w = b if a == v else a
                        if w not in pending:
                            pending.add(w)
                            stack.append(w)
                    if d & (d - 1) == 0:
                        if fixed & d:
                            return v
                        fixed |= d
                    twice |= once & d
                    once |= d
                if fixed:
                    for e in es:
                        d = D[e]
                        if d & (d - 1) and d & fixed:
                            d &= ~fixed
                            if not d:
                                return v
                            D[e] = d
                            changed = True
                            a, b = ends[e]
                            w = b if a == v else a
                            if w not in pending:
                                pending.add(w)
                                stack.append(w)
                hidden = mandatory & once & ~twice & ~fixed
                if hidden:
                    for e in es:
                        d = D[e]
                        h = d & hidden
                        if h and d & (d - 1):
                            if h & (h - 1):
                                return v
                            D[e] = h
                            changed = True
                            a, b = ends[e]
                            w = b if a == v else a
                            if w not in pending:
                                pending.add(w)
                                stack.append(w)
                if mandatory & ~once:
                    return v
                if not changed:
                    break
        return None

    def _global_ok(self, D: list) -> bool:
        union = 0
        for d in D:
            union |= d
        return bool(union & 2) and bool(union >> self.t & 1)

    def _pick(self, D: list) -> int:
        best = -1
        best_key = None
        rank, ends, w = self.rank, self.ends, self.weight
        for e, d in enumerate(D):
            if d & (d - 1):
                a, b = ends[e]
                key = (d.bit_count() / (w[a] + w[b]), rank[e])
                if best_key is None or key < best_key:
                    best_key = key
                    best = e
        return best

    def solutions(self) -> Iterator[list[int]]:
        m = len(self.ends)
        if m == 0 or self.t < max(self.deg) or self.t > m:
            return
        D = [self.full] * m
        L = list(self.lo_full)
        if not self._propagate(D, L, list(range(len(self.deg)))) or not self._global_ok(D):
            return
        e = self._pick(D)
        if e < 0:
            yield D
            return
        stack = [(D, L, e, D[e])]
        while stack:
            D, L, e, remaining = stack[-1]
            if not remaining:
                stack.pop()
                continue
            bit = remaining & -remaining
            stack[-1] = (D, L, e, remaining ^ bit)
            self._tick()
            D2 = list(D)
            L2 = list(L)
            D2[e] = bit
            a, b = self.ends[e]
            if not self._propagate(D2, L2, [a, b]) or not self._global_ok(D2):
                continue
            e2 = self._pick(D2)
            if e2 < 0:
                yield D2
                continue
            stack.append((D2, L2, e2, D2[e2]))

    def to_coloring(self, D: list[int]) -> EdgeColoring:
        return EdgeColoring(self.g, {e: D[i].bit_length() - 1 for i, e in enumerate(self.g.edges)})


def _check_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected; color each component separately")


def find_coloring(
    g: Graph,
    t: int,
    budget_ms: float | None = None,
    node_limit: int | None = None,
    *,
    budget: Budget | None = None,
) -> EdgeColoring | None:
    """An interval coloring of ``g`` using exactly the colors ``1 .. t``.

    Returns None when no such coloring exists.  Raises
    :class:`SearchBudgetExceeded` if the budget runs out first, and
    :class:`DisconnectedGraphError` for disconnected input.  A shared
    ``budget`` overrides ``budget_ms`` and ``node_limit``.
    """
    _check_connected(g)
    if t < 1:
        raise ValueError("t must be positive")
    search = _Search(g, t, budget or Budget(budget_ms, node_limit))
    for D in search.solutions():
        return search.to_coloring(D)
    return None


@dataclass
class ColoringEnumeration:
    colorings: list[EdgeColoring]
    complete: bool  # False when the budget stopped the enumeration early
    nodes: int = 0


def _lazy_product(sizes: list[int], i: int = 0) -> Iterator[tuple]:
    # itertools.product would materialise every permutation list up front
    if i == len(sizes):
        yield ()
        return
    for p in itertools.permutations(range(sizes[i])):
        for rest in _lazy_product(sizes, i + 1):
            yield (p,) + rest


def twin_orbit(c: EdgeColoring, classes: list[tuple]) -> Iterator[EdgeColoring]:
    """All colorings obtained from ``c`` by permuting the members of each
    twin class, starting with ``c`` itself.  They are pairwise distinct
    because a hub sees every member on a different color."""
    g = c.graph
    base = dict(c)
    for choice in _lazy_product([len(cls) for _, cls in classes]):
        if all(p == tuple(range(len(p))) for p in choice):
            yield c
            continue
        move = {}
        for (_, cls), p in zip(classes, choice):
            for i, j in enumerate(p):
                if i != j:
                    move[cls[i]] = cls[j]
        out = {}
        for e, col in base.items():
            out[edge_of(move.get(e[0], e[0]), move.get(e[1], e[1]))] = col
        yield EdgeColoring(g, out)


def enumerate_colorings(
    g: Graph,
    t: int,
    limit: int,
    budget_ms: float | None = None,
    node_limit: int | None = None,
    canonical: bool = False,
) -> ColoringEnumeration:
    """Up to ``limit`` distinct interval colorings of ``g`` with colors ``1 .. t``.

    The search finds one canonical coloring per class of colorings that
    differ only by permuting twin vertices; each is expanded into its whole
    class before the search moves on.  With ``canonical=True`` only the
    representatives are returned.  Mirror images are listed separately.
    ``complete`` is False when the budget stopped the enumeration before
    ``limit`` colorings were found or the search space was exhausted.
    """
    _check_connected(g)
    search = _Search(g, t, Budget(budget_ms, node_limit))
    out: list[EdgeColoring] = []
    complete = True
    if limit <= 0:
        return ColoringEnumeration(out, True, 0)
    try:
        for D in search.solutions():
            rep = search.to_coloring(D)
            orbit = [rep] if canonical else twin_orbit(rep, search.twin_classes)
            for c in orbit:
                out.append(c)
                if len(out) >= limit:
                    break
            if len(out) >= limit:
                break
    except SearchBudgetExceeded:
        complete = False
    return ColoringEnumeration(out, complete, search.nodes)


@dataclass(frozen=True)
class Gap:
    start: int
    stop: int  # inclusive

    @property
    def size(self) -> int:
        return self.stop - self.start + 1

    @property
    def members(self) -> range:
        return range(self.start, self.stop + 1)


def gaps_of(values) -> list[Gap]:
    """Maximal runs of integers missing from ``values`` strictly between its
    smallest and largest element."""
    s = sorted(set(values))
    return [Gap(a + 1, b - 1) for a, b in zip(s, s[1:]) if b - a > 1]


@dataclass
class SpectrumReport:
    achievable: list[int]
    searched_range: tuple[int, int]
    witnesses: dict[int, EdgeColoring] = field(default_factory=dict, repr=False)
    undecided: list[int] = field(default_factory=list)

    @property
    def gaps(self) -> list[Gap]:
        return gaps_of(self.achievable)

    @property
    def partial(self) -> bool:
        return bool(self.undecided)

    def to_dict(self) -> dict:
        return {
            "achievable": list(self.achievable),
            "searched_range": list(self.searched_range),
            "gaps": [[gp.start, gp.stop] for gp in self.gaps],
            "undecided": list(self.undecided),
            "witnesses": {str(t): c.to_dict()["colors"] for t, c in sorted(self.witnesses.items())},
        }


def compute_spectrum(
    g: Graph,
    t_hi: int | None = None,
    budget_ms: float | None = None,
    node_limit: int | None = None,
    *,
    budget: Budget | None = None,
) -> SpectrumReport:
    """The interval spectrum of a connected graph over ``[max degree, t_hi]``.

    ``t_hi`` defaults to the edge count, which no interval coloring of a
    connected graph can exceed.  Values above :func:`max_colors_bound` are
    ruled out without search.  The budget applies to each ``t``
    separately, unless one shared ``budget`` is given for the whole call;
    values whose search ran out are listed in ``undecided``.
    """
    _check_connected(g)
    lo = max(g.max_degree, 1)
    hi = g.edge_count if t_hi is None else min(t_hi, g.edge_count)
    cap = max_colors_bound(g)
    report = SpectrumReport([], (lo, hi))
    todo = list(range(lo, min(hi, cap) + 1))
    for i, t in enumerate(todo):
        try:
            c = find_coloring(g, t, budget_ms, node_limit, budget=budget)
        except SearchBudgetExceeded:
            if budget is not None:
                report.undecided.extend(todo[i:])
                break
            report.undecided.append(t)
            continue
        if c is not None:
            assert not verify_interval(g, c) and len(c.palette()) == t
            report.achievable.append(t)
            report.witnesses[t] = c
    return report


def interval_coloring_any(
    g: Graph,
    budget_ms: float | None = None,
    node_limit: int | None = None,
) -> EdgeColoring | None:
    """Some interval coloring of ``g`` (any number of colors), component by
    component, each normalised to start at 1; None if a component has none.

    Each component tries ``t`` upward from its maximum degree.  The budget
    is shared by all attempts, each attempt costing at least one node.
    Raises :class:`SearchBudgetExceeded` when the budget runs out first.
    """
    budget = Budget(budget_ms, node_limit)
    colors: dict = {}
    for comp in g.component_subgraphs():
        if comp.edge_count == 0:
            continue
        found = None
        for t in range(comp.max_degree, max_colors_bound(comp) + 1):
            budget.tick()
            found = find_coloring(comp, t, budget=budget)
            if found is not None:
                break
        if found is None:
            return None
        colors.update(found)
    return EdgeColoring(g, colors)
