"""
No-wait conference timetables.

Parents and teachers form the two sides of a bipartite graph with one edge
per requested meeting; all meetings last one slot.  A timetable is
no-wait when nobody is double-booked and everybody's meetings occupy
consecutive slots, which is exactly an interval edge coloring with colors
as slots.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Iterable

from .coloring import EdgeColoring, normalize, verify_interval
from .gadgets import build_boldF, predicted_spectrum, realize_t, spectrum_pieces
from .graph import Edge, Graph, build_graph, edge_of
from .spectrum import Budget, SearchBudgetExceeded, find_coloring, max_colors_bound
from .thickness import decompose

log = logging.getLogger(__name__)


class InstanceError(ValueError):
    pass


@dataclass
class ConferenceInstance:
    parents: tuple[str, ...]
    teachers: tuple[str, ...]
    meetings: tuple[tuple[str, str], ...]  # (parent, teacher), sorted
    slot_duration: str = "1 slot"

    def __post_init__(self):
        both = set(self.parents) & set(self.teachers)
        if both:
            raise InstanceError(f"{sorted(both)[0]!r} is both a parent and a teacher")
        ps, ts = set(self.parents), set(self.teachers)
        for p, t in self.meetings:
            if p not in ps or t not in ts:
                raise InstanceError(f"meeting ({p!r}, {t!r}) names an unknown participant")
        if len(set(self.meetings)) != len(self.meetings):
            raise InstanceError("repeated meeting")

    def graph(self) -> Graph:
        return build_graph(
            list(self.parents) + list(self.teachers),
            self.meetings,
            roles={**{p: "parent" for p in self.parents}, **{t: "teacher" for t in self.teachers}},
        )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]], slot_duration: str = "1 slot") -> "ConferenceInstance":
        seen: dict = {}
        for p, t in pairs:
            if (p, t) in seen:
                log.warning("duplicate meeting (%s, %s) dropped", p, t)
                continue
            seen[(p, t)] = None
        meetings = tuple(sorted(seen))
        parents = tuple(sorted({p for p, _ in meetings}))
        teachers = tuple(sorted({t for _, t in meetings}))
        return cls(parents, teachers, meetings, slot_duration)

    @classmethod
    def from_graph(cls, g: Graph) -> "ConferenceInstance":
        """Read a bipartite graph as an instance; the side holding the
        smallest vertex id plays the parents."""
        sides = g.bipartition()
        if sides is None:
            raise InstanceError("meeting graph must be bipartite")
        left = set(sides[0])
        pairs = [(str(a), str(b)) if a in left else (str(b), str(a)) for a, b in g.edges]
        return cls.from_pairs(pairs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["parent", "teacher"])
        w.writerows(self.meetings)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"meetings": [list(m) for m in self.meetings], "slot_duration": self.slot_duration})


def _parse_csv(text: str) -> list[tuple[str, str]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip().lower() for c in rows[0]] != ["parent", "teacher"]:
        raise InstanceError("line 1: expected header 'parent,teacher'")
    pairs = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2 or not row[0].strip() or not row[1].strip():
            raise InstanceError(f"line {lineno}: expected two non-empty fields, got {row!r}")
        p, t = row[0].strip(), row[1].strip()
        if p == t:
            raise InstanceError(f"line {lineno}: {p!r} appears as both parent and teacher")
        pairs.append((p, t))
    return pairs


def load_instance(path_or_text: str, fmt: str | None = None) -> ConferenceInstance:
    """Read an instance from a CSV (header ``parent,teacher``) or JSON file
    (``{"meetings": [[parent, teacher], ...]}``), or from the text itself.

    Duplicate rows are dropped with a warning; a name on both sides and
    malformed rows raise :class:`InstanceError` with the line number.
    """
    if os.path.exists(path_or_text):
        with open(path_or_text) as fh:
            text = fh.read()
        fmt = fmt or ("json" if path_or_text.endswith(".json") else "csv")
    else:
        text = path_or_text
        fmt = fmt or ("json" if text.lstrip().startswith("{") else "csv")
    if fmt == "json":
        data = json.loads(text)
        pairs = []
        for i, m in enumerate(data["meetings"]):
            if len(m) != 2:
                raise InstanceError(f"meeting {i}: expected [parent, teacher], got {m!r}")
            if m[0] == m[1]:
                raise InstanceError(f"meeting {i}: {m[0]!r} appears as both parent and teacher")
            pairs.append((str(m[0]), str(m[1])))
        return ConferenceInstance.from_pairs(pairs, data.get("slot_duration", "1 slot"))
    return ConferenceInstance.from_pairs(_parse_csv(text))


@dataclass
class Timetable:
    instance: ConferenceInstance
    slots: dict  # (parent, teacher) -> slot, 1-based
    sessions: dict = field(default_factory=dict)  # (parent, teacher) -> session, 1-based

    @property
    def horizon(self) -> int:
        return max(self.slots.values(), default=0)

    @property
    def session_count(self) -> int:
        return max(self.sessions.values(), default=1) if self.slots else 0

    def session(self, m) -> int:
        return self.sessions.get(m, 1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["meeting", "parent", "teacher", "session", "slot"])
        for i, m in enumerate(self.instance.meetings, start=1):
            w.writerow([i, m[0], m[1], self.session(m), self.slots[m]])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, instance: ConferenceInstance, text: str) -> "Timetable":
        slots, sessions = {}, {}
        for row in csv.DictReader(io.StringIO(text)):
            m = (row["parent"], row["teacher"])
            slots[m] = int(row["slot"])
            sessions[m] = int(row["session"])
        return cls(instance, slots, sessions)


def no_wait_problems(tt: Timetable) -> list[str]:
    """Check a timetable without reference to graph colorings.

    Within every session each participant must have distinct slots forming
    one unbroken run.  Returns human-readable problems; empty when valid.
    """
    out = []
    missing = [m for m in tt.instance.meetings if m not in tt.slots]
    if missing:
        out.append(f"{len(missing)} meetings unscheduled, first {missing[0]}")
    busy: dict = {}
    for (p, t), s in tt.slots.items():
        if s < 1:
            out.append(f"meeting ({p}, {t}) in slot {s} < 1")
        ses = tt.session((p, t))
        busy.setdefault((ses, "parent", p), []).append(s)
        busy.setdefault((ses, "teacher", t), []).append(s)
    for (ses, side, who), ss in sorted(busy.items()):
        ss = sorted(ss)
        for a, b in zip(ss, ss[1:]):
            if a == b:
                out.append(f"session {ses}: {side} {who} double-booked in slot {a}")
            elif b != a + 1:
                out.append(f"session {ses}: {side} {who} waits between slots {a} and {b}")
    return out


def timetable_from_coloring(instance: ConferenceInstance, c: EdgeColoring, session: int = 1) -> Timetable:
    """Slots from an edge coloring of the instance graph, shifted to start at 1."""
    c = normalize(c)
    slots = {m: c[edge_of(*m)] for m in instance.meetings}
    return Timetable(instance, slots, {m: session for m in instance.meetings})


def coloring_from_timetable(tt: Timetable, g: Graph | None = None) -> EdgeColoring:
    g = g or tt.instance.graph()
    return EdgeColoring(g, {edge_of(*m): s for m, s in tt.slots.items()})


class NoSchedule(Exception):
    """No no-wait timetable exists with the requested horizon."""


def schedule_no_wait(
    instance: ConferenceInstance,
    horizon: int | None = None,
    budget_ms: float | None = None,
    node_limit: int | None = None,
) -> Timetable:
    """A single-session no-wait timetable.

    Each connected group of participants is scheduled on its own, from
    slot 1.  With ``horizon`` the timetable must last exactly that many
    slots; otherwise every group gets the fewest slots.  The budget is
    shared by the whole call.  Raises :class:`NoSchedule` when no
    timetable exists and
    :class:`~intervalcolor.spectrum.SearchBudgetExceeded` when the budget
    runs out before that is decided.
    """
    g = instance.graph()
    budget = Budget(budget_ms, node_limit)
    comps = [h for h in g.component_subgraphs() if h.edge_count]
    colors: dict = {}
    reached = horizon is None
    for comp in comps:
        top = max_colors_bound(comp)
        if horizon is None:
            tries = list(range(comp.max_degree, top + 1))
        else:
            # exactly `horizon` if possible; other groups may finish earlier
            tries = [horizon] if comp.max_degree <= horizon <= top else []
            if len(comps) > 1:
                tries += list(range(comp.max_degree, min(top, horizon - 1) + 1))
        found = None
        for t in tries:
            found = find_coloring(comp, t, budget=budget)
            if found is not None:
                reached = reached or t == horizon
                break
        if found is None:
            what = "" if horizon is None else f" within {horizon} slots"
            raise NoSchedule(f"no no-wait timetable{what} for a group of {comp.vertex_count} participants")
        colors.update(normalize(found))
    if not reached:
        raise NoSchedule(f"no group can be scheduled in exactly {horizon} slots")
    tt = Timetable(instance, {m: colors[edge_of(*m)] for m in instance.meetings}, {m: 1 for m in instance.meetings})
    problems = no_wait_problems(tt)
    assert not problems, problems
    return tt


def schedule_multi_session(instance: ConferenceInstance, node_limit: int | None = 200) -> Timetable:
    """Spread the meetings over sessions (days), each no-wait on its own.

    The sessions come from an interval thickness decomposition of the
    meeting graph, so their number is the thickness upper bound achieved.
    """
    g = instance.graph()
    dec = decompose(g, node_limit=node_limit)
    slots, sessions = {}, {}
    for i, (edges, c) in enumerate(dec.parts, start=1):
        sub = g.subgraph(edges)
        cc = c.restrict(sub)
        for comp in sub.component_subgraphs():
            part = normalize(cc.restrict(comp))
            for e in comp.edges:
                slots[e] = part[e]
                sessions[e] = i
    tt = Timetable(
        instance,
        {m: slots[edge_of(*m)] for m in instance.meetings},
        {m: sessions[edge_of(*m)] for m in instance.meetings},
    )
    problems = no_wait_problems(tt)
    assert not problems, problems
    return tt


@dataclass
class InstabilityReport:
    k: int
    d: int
    spectrum: list[int]
    pieces: list[tuple[int, int]]
    gaps: list[tuple[int, int]]
    probes: dict  # horizon inside a gap -> "none" | "timeout"
    files: list[str]
    text: str


def demo_instability(
    k: int,
    d: int,
    out_dir: str,
    probe_budget_ms: float = 2000,
) -> InstabilityReport:
    """Write a conference whose no-wait timetables can be short or long but
    never in between.

    The instance is the bipartite graph ``boldF(k, d)``.  For every gap of
    its spectrum a timetable is written for the horizon just below the gap
    and the one just above it; both are built from composed gadget
    colorings and re-checked.  One horizon inside each gap is handed to the
    solver with a small budget and its verdict recorded; at these sizes the
    solver is not expected to finish, and the gaps rest on the gadget
    construction rather than on search.
    """
    os.makedirs(out_dir, exist_ok=True)
    g, bp = build_boldF(k, d)
    instance = ConferenceInstance.from_graph(g)
    spec = predicted_spectrum(k, d)
    pieces = spectrum_pieces(k, d)
    gaps = [(gp.start, gp.stop) for gp in spec.gaps]
    files = []

    path = os.path.join(out_dir, f"conference_k{k}_d{d}.csv")
    with open(path, "w") as fh:
        fh.write(instance.to_csv())
    files.append(path)

    horizons = sorted({h for a, b in gaps for h in (a - 1, b + 1)})
    for h in horizons:
        c = realize_t(k, d, h, g, bp)
        tt = timetable_from_coloring(instance, c)
        problems = no_wait_problems(tt)
        assert not problems and tt.horizon == h, problems[:3]
        path = os.path.join(out_dir, f"timetable_{h}_slots.csv")
        with open(path, "w") as fh:
            fh.write(tt.to_csv())
        files.append(path)

    probes = {}
    for a, b in gaps:
        h = (a + b) // 2
        try:
            schedule_no_wait(instance, horizon=h, budget_ms=probe_budget_ms)
            probes[h] = "found"  # would contradict the construction
        except NoSchedule:
            probes[h] = "none"
        except SearchBudgetExceeded:
            probes[h] = "timeout"

    lines = [
        f"# No-wait instability for boldF(k={k}, d={d})",
        "",
        f"{len(instance.parents)} parents, {len(instance.teachers)} teachers, {len(instance.meetings)} meetings.",
        "",
        "Achievable timetable lengths (slots):",
        "",
    ]
    lines += [f"- {a}" if a == b else f"- {a} .. {b}" for a, b in pieces]
    lines += ["", "Impossible lengths between them:", ""]
    lines += [f"- {a} .. {b} ({b - a + 1} slots, at least d = {d})" for a, b in gaps]
    lines += [
        "",
        "Infeasibility inside the gaps follows from the rigidity of the gadget "
        "construction; it is not machine-verified at this size.",
        "",
        "Solver probes inside the gaps:",
        "",
    ]
    lines += [f"- {h} slots: {status} (budget {probe_budget_ms:g} ms)" for h, status in probes.items()]
    lines += ["", "Timetables written:", ""]
    lines += [f"- {os.path.basename(p)}" for p in files[1:]]
    text = "\n".join(lines) + "\n"
    path = os.path.join(out_dir, "report.md")
    with open(path, "w") as fh:
        fh.write(text)
    files.append(path)
    return InstabilityReport(k, d, spec.achievable, pieces, gaps, probes, files, text)


def coloring_is_interval(instance: ConferenceInstance, tt: Timetable) -> bool:
    """The coloring side of the timetable/coloring correspondence."""
    g = instance.graph()
    return not verify_interval(g, coloring_from_timetable(tt, g))


__all__ = [
    "ConferenceInstance",
    "InstabilityReport",
    "InstanceError",
    "NoSchedule",
    "Timetable",
    "coloring_from_timetable",
    "coloring_is_interval",
    "demo_instability",
    "load_instance",
    "no_wait_problems",
    "schedule_multi_session",
    "schedule_no_wait",
    "timetable_from_coloring",
]
