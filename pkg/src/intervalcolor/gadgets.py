"""
Gadget graphs F(b, T) and their compositions boldF(k, d), whose interval
spectra contain k wide gaps.

``F(b, T)`` with ``D = T - 25`` is the union of complete bipartite graphs
``({v, v'}, V0)``, ``({v, v_l}, Vl)``, ``({v, v_r}, Vr)``, ``({u, u_r}, Ur)``,
``({u}, Ud)`` plus the path edges ``w_l v'``, ``w_r v'``, ``w_l v_l``,
``w_r v_r``, ``w_l x``, ``w_r y`` and ``x u`` where ``y`` is the first member
of ``Ur``.  Its interval colorings with ``T + 1`` colors put the ``b``
pendant edges (those at ``Ud``) on a fixed block of colors next to one end
of the palette.

The composite ``boldF(k, d)`` hangs ``F(1, 2jdk + 1)`` for ``j = 1..k`` off
the ``k`` pendant edges of ``F(k, 3k^2 d + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .coloring import EdgeColoring, mirror, normalize, shift, verify_interval
from .graph import Edge, Graph, build_graph, edge_of, glue_with_map
from .spectrum import Gap, SpectrumReport, gaps_of

NAMED = ("v", "v'", "v_l", "v_r", "u", "u_r", "w_l", "w_r", "x")


class GadgetError(ValueError):
    pass


@dataclass
class GadgetBlueprint:
    kind: Literal["F", "boldF"]
    params: dict
    roles: dict = field(default_factory=dict)  # name -> vertex id, or set name -> tuple of ids
    pendant_edges: list[Edge] = field(default_factory=list)
    # boldF only
    components: list["GadgetBlueprint"] = field(default_factory=list)
    vertex_maps: list[dict] = field(default_factory=list)
    component_graphs: list[Graph] = field(default_factory=list, repr=False)
    glued_edges: list[Edge] = field(default_factory=list)
    membership: dict = field(default_factory=dict)

    @property
    def b(self) -> int:
        return self.params["b"]

    @property
    def T(self) -> int:
        return self.params["T"]

    @property
    def D(self) -> int:
        return self.params["D"]

    def vertex(self, name: str):
        return self.roles[name]

    def edge(self, a: str, b: str) -> Edge:
        return edge_of(self.roles[a], self.roles[b])


def _check_F(b: int, T: int) -> int:
    D = T - 25
    if D < 1:
        raise GadgetError(f"T={T} gives D=T-25={D}; need D >= 1")
    if D % 2:
        raise GadgetError(f"T={T} gives odd D={D}; need D even (T odd)")
    if not 1 <= b <= D:
        raise GadgetError(f"need 1 <= b <= D, got b={b}, D={D}")
    return D


def _members(prefix: str, name: str, n: int) -> tuple[str, ...]:
    width = len(str(n))
    return tuple(f"{prefix}{name}.{i:0{width}d}" for i in range(1, n + 1))


def build_F(b: int, T: int, prefix: str = "") -> tuple[Graph, GadgetBlueprint]:
    """The gadget ``F(b, T)``; vertex ids are ``prefix`` + role name."""
    D = _check_F(b, T)
    r = {name: prefix + name for name in NAMED}
    sets = {
        "V_0": _members(prefix, "V0", D + 12),
        "V_l": _members(prefix, "Vl", 7),
        "V_r": _members(prefix, "Vr", 7),
        "U_r": _members(prefix, "Ur", D - b + 2),
        "U_d": _members(prefix, "Ud", b),
    }
    r["y"] = sets["U_r"][0]
    tag = prefix.rstrip(".") + ":" if prefix else ""

    edges = []
    for hub, part in (
        (("v", "v'"), "V_0"),
        (("v", "v_r"), "V_r"),
        (("v", "v_l"), "V_l"),
        (("u", "u_r"), "U_r"),
        (("u",), "U_d"),
    ):
        for h in hub:
            for z in sets[part]:
                edges.append((r[h], z))
    for a, c in (("w_l", "v'"), ("w_r", "v'"), ("w_l", "v_l"), ("w_r", "v_r"), ("w_l", "x"), ("w_r", "y"), ("x", "u")):
        edges.append((r[a], r[c]))

    roles = {r[name]: tag + name for name in NAMED}
    for name, members in sets.items():
        for z in members:
            roles[z] = tag + name
    roles[r["y"]] = (tag + "U_r", tag + "y")
    pendant = [edge_of(r["u"], z) for z in sets["U_d"]]
    vertices = [r[name] for name in NAMED] + [z for m in sets.values() for z in m]
    g = build_graph(vertices, edges, roles=roles, edge_tags={e: tag + "pendant" for e in pendant})

    bp_roles = dict(r)
    bp_roles.update(sets)
    bp = GadgetBlueprint("F", {"b": b, "T": T, "D": D, "prefix": prefix}, bp_roles, pendant)
    return g, bp


def v0_staircase(D: int) -> list[tuple[int, int]]:
    """Colors ``(c(v z), c(v' z))`` for the members ``z`` of V0, in order."""
    pairs = [(8, 7), (9, 8), (10, 9)]
    for a in range(11, D + 16, 2):
        pairs += [(a, a + 1), (a + 1, a)]
    pairs += [(D + 17, D + 18), (D + 18, D + 19), (D + 19, D + 20)]
    return pairs


def explicit_coloring_F(g: Graph, bp: GadgetBlueprint) -> EdgeColoring:
    """The hand-built interval coloring of ``F(b, T)`` on colors ``1 .. T+1``,
    with the pendant edges on ``13 .. 12+b``."""
    if bp.kind != "F":
        raise GadgetError("explicit coloring needs an F blueprint")
    b, D = bp.b, bp.D
    r = bp.roles
    c: dict = {}

    def put(a, z, col):
        c[edge_of(a, z)] = col

    for a, z, col in (
        ("v_l", "w_l", 9),
        ("w_l", "v'", 10),
        ("w_l", "x", 11),
        ("x", "u", 12),
        ("u", "y", D + 14),
        ("y", "u_r", D + 15),
        ("y", "w_r", D + 16),
        ("v'", "w_r", D + 17),
        ("v_r", "w_r", D + 18),
    ):
        put(r[a], r[z], col)
    for i, z in enumerate(r["U_d"]):
        put(r["u"], z, 13 + i)
    for i, z in enumerate(r["V_l"]):
        put(r["v"], z, 1 + i)
        put(r["v_l"], z, 2 + i)
    for i, z in enumerate(r["V_r"]):
        put(r["v"], z, D + 26 - i)
        put(r["v_r"], z, D + 25 - i)
    # y carries the top pair (D+14, D+15); the rest descend from there
    put(r["u"], r["y"], D + 14)
    for i, z in enumerate(r["U_r"][1:]):
        put(r["u"], z, D + 13 - i)
        put(r["u_r"], z, D + 14 - i)
    for z, (cv, cv1) in zip(r["V_0"], v0_staircase(D)):
        put(r["v"], z, cv)
        put(r["v'"], z, cv1)
    return EdgeColoring(g, c)


@dataclass(frozen=True)
class PendantLaw:
    side: Literal["low", "high"]
    colors: tuple[int, ...]
    w_l_v_l: int
    min_color: int


class PendantLawViolation(AssertionError):
    pass


def pendant_color_law(bp: GadgetBlueprint, c: EdgeColoring) -> PendantLaw:
    """Classify an interval coloring of ``F(b, T)`` by where its pendant
    colors sit.

    With ``c1`` the smallest color, the pendant edges take ``c1+12 .. c1+11+b``
    and ``w_l v_l`` takes ``c1+8`` (low side), or the pendant edges take
    ``c1+T-11-b .. c1+T-12`` and ``w_l v_l`` takes ``c1+T-8`` (high side).
    Anything else raises :class:`PendantLawViolation`.
    """
    b, T = bp.b, bp.T
    c1 = c.span()[0]
    cols = tuple(sorted(c[e] for e in bp.pendant_edges))
    wl = c[bp.edge("w_l", "v_l")]
    low = tuple(range(c1 + 12, c1 + 12 + b))
    high = tuple(range(c1 + T - 11 - b, c1 + T - 11))
    if cols == low and wl == c1 + 8:
        return PendantLaw("low", cols, wl, c1)
    if cols == high and wl == c1 + T - 8:
        return PendantLaw("high", cols, wl, c1)
    raise PendantLawViolation(f"pendant colors {cols}, c(w_l v_l)={wl}, min color {c1}")


def _check_boldF(k: int, d: int) -> None:
    if k < 1:
        raise GadgetError(f"need k >= 1, got {k}")
    if d % 2:
        raise GadgetError(f"need d even, got {d}")
    if d < 24:
        raise GadgetError(f"need d >= 24, got {d}")


def component_T(k: int, d: int) -> list[int]:
    """``[T_0, T_1, ..., T_k]`` for ``boldF(k, d)``."""
    return [3 * k * k * d + 1] + [2 * j * d * k + 1 for j in range(1, k + 1)]


def build_boldF(k: int, d: int) -> tuple[Graph, GadgetBlueprint]:
    """Glue ``F_j = F(1, T_j)`` onto the j-th pendant edge of ``F_0 = F(k, T_0)``.

    The degree-one end of F_0's pendant edge becomes F_j's ``u``; F_0's
    ``u`` absorbs the degree-one end of F_j's pendant edge.  F_0's vertex
    ids are kept for merged vertices.
    """
    _check_boldF(k, d)
    Ts = component_T(k, d)
    g, bp0 = build_F(k, Ts[0], prefix="F0.")
    comps = [bp0]
    comp_graphs = [g]
    vmaps = [{v: v for v in g.vertices}]
    glued = []
    membership: dict = {v: (0,) for v in g.vertices}
    for j in range(1, k + 1):
        gj, bpj = build_F(1, Ts[j], prefix=f"F{j}.")
        (pu0, pz0) = bp0.roles["u"], bp0.roles["U_d"][j - 1]
        (puj, pzj) = bpj.roles["u"], bpj.roles["U_d"][0]
        g, vmap = glue_with_map(g, (pz0, pu0), gj, (puj, pzj), "parallel")
        comps.append(bpj)
        comp_graphs.append(gj)
        vmaps.append(vmap)
        glued.append(edge_of(pz0, pu0))
        for v, w in vmap.items():
            membership[w] = membership.get(w, ()) + (j,)
    bp = GadgetBlueprint(
        "boldF",
        {"k": k, "d": d, "T": Ts},
        roles={},
        pendant_edges=glued,
        components=comps,
        vertex_maps=vmaps,
        glued_edges=glued,
        membership=membership,
        component_graphs=comp_graphs,
    )
    return g, bp


def predicted_spectrum(k: int, d: int) -> SpectrumReport:
    """The interval spectrum of ``boldF(k, d)``:
    ``{T_0+1}`` together with ``[T_0+T_j-22-k, T_0+T_j-23]`` for each j."""
    _check_boldF(k, d)
    Ts = component_T(k, d)
    T0 = Ts[0]
    values = {T0 + 1}
    for Tj in Ts[1:]:
        values.update(range(T0 + Tj - 22 - k, T0 + Tj - 22))
    achievable = sorted(values)
    gaps = gaps_of(achievable)
    assert len(gaps) == k
    assert all(gp.size >= 2 * d * k - k - 23 >= d for gp in gaps)
    return SpectrumReport(achievable, (achievable[0], achievable[-1]))


def spectrum_pieces(k: int, d: int) -> list[tuple[int, int]]:
    """Maximal runs of the predicted spectrum as inclusive ``(lo, hi)`` pairs."""
    vals = predicted_spectrum(k, d).achievable
    pieces = []
    lo = prev = vals[0]
    for t in vals[1:]:
        if t != prev + 1:
            pieces.append((lo, prev))
            lo = t
        prev = t
    pieces.append((lo, prev))
    return pieces


@dataclass
class Realization:
    coloring: EdgeColoring
    types: list[int]  # types[j-1] is 1 or 2 for component F_j
    pendant_colors: list[int]  # color routed to pendant j of F_0 (before normalisation)


def realize(k: int, d: int, t: int, graph: Graph | None = None, bp: GadgetBlueprint | None = None) -> Realization:
    """Build an interval coloring of ``boldF(k, d)`` with exactly ``t`` colors."""
    if t not in set(predicted_spectrum(k, d).achievable):
        raise GadgetError(f"t={t} is not in the spectrum of boldF({k}, {d})")
    if graph is None or bp is None:
        graph, bp = build_boldF(k, d)
    Ts = bp.params["T"]
    T0 = Ts[0]

    # which component (if any) is type 2, and which F_0 pendant color feeds it
    two, p = 0, None
    if t != T0 + 1:
        for j in range(1, k + 1):
            q = T0 + Ts[j] - 10 - t
            if 13 <= q <= 12 + k:
                two, p = j, q
                break
    perm = list(range(13, 13 + k))
    if two:
        perm.remove(p)
        perm.insert(two - 1, p)

    colors: dict = {}
    bp0 = bp.components[0]
    c0 = explicit_coloring_F(bp.component_graphs[0], bp0)
    # route the pendant colors through the permutation; every Ud member of F_0
    # is a leaf, so any bijection onto 13..12+k stays interval
    c0d = dict(c0)
    for j, e in enumerate(bp0.pendant_edges):
        c0d[e] = perm[j]
    colors.update(c0d)

    types = []
    for j in range(1, k + 1):
        bpj = bp.components[j]
        cj = explicit_coloring_F(bp.component_graphs[j], bpj)
        pend = bpj.pendant_edges[0]
        target = perm[j - 1]
        if j == two:
            cj = mirror(cj)
            types.append(2)
        else:
            types.append(1)
        cj = shift(cj, target - cj[pend])
        vmap = bp.vertex_maps[j]
        for e, col in cj.items():
            w = edge_of(vmap[e[0]], vmap[e[1]])
            if w in colors and colors[w] != col:
                raise AssertionError(f"glued edge {w} colored {colors[w]} and {col}")
            colors[w] = col
    c = normalize(EdgeColoring(graph, colors))
    return Realization(c, types, perm)


def realize_t(k: int, d: int, t: int, graph: Graph | None = None, bp: GadgetBlueprint | None = None) -> EdgeColoring:
    """Interval coloring of ``boldF(k, d)`` with exactly ``t`` colors, for
    ``t`` in the predicted spectrum; checked before it is returned."""
    if graph is None or bp is None:
        graph, bp = build_boldF(k, d)
    c = realize(k, d, t, graph, bp).coloring
    bad = verify_interval(graph, c)
    if bad or len(c.palette()) != t:
        raise AssertionError(f"composed coloring for t={t} failed: {bad[:3]}")
    return c


def component_palettes(bp: GadgetBlueprint, c: EdgeColoring) -> list[frozenset[int]]:
    """Colors used on each component ``F_0 .. F_k`` of a boldF coloring."""
    out = []
    for g, vmap in zip(bp.component_graphs, bp.vertex_maps):
        out.append(frozenset(c[edge_of(vmap[a], vmap[b])] for a, b in g.edges))
    return out


__all__ = [
    "GadgetBlueprint",
    "GadgetError",
    "PendantLaw",
    "PendantLawViolation",
    "Realization",
    "build_F",
    "build_boldF",
    "component_T",
    "component_palettes",
    "explicit_coloring_F",
    "pendant_color_law",
    "predicted_spectrum",
    "realize",
    "realize_t",
    "spectrum_pieces",
    "v0_staircase",
    "Gap",
]
