"""
Command line entry point: ``intervalcolor <subcommand> ...``.

Every subcommand returns a :class:`CommandResult`; :func:`main` prints its
summary and turns the status into an exit code.  Artifacts are written
under ``--out-dir`` (default: the current directory).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .coloring import EdgeColoring, load_coloring, mirror, verify_interval
from .gadgets import build_boldF, build_F, explicit_coloring_F, predicted_spectrum, realize_t
from .graph import Graph, GraphError, load_graph
from .scheduler import (
    InstanceError,
    NoSchedule,
    demo_instability,
    load_instance,
    no_wait_problems,
    schedule_multi_session,
    schedule_no_wait,
)
from .spectrum import Budget, DisconnectedGraphError, SearchBudgetExceeded, compute_spectrum
from .thickness import decompose, exact_decomposition, overfull

STATUSES = ("ok", "none", "timeout", "error")


@dataclass
class CommandResult:
    status: str
    artifacts: list[str] = field(default_factory=list)
    summary: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        # "none" is a definite answer to the question asked; main() makes
        # an invalid coloring under `verify` exit 1
        return {"ok": 0, "none": 0, "timeout": 2, "error": 1}[self.status]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt_set(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def _write(out_dir: str, name: str, text: str, artifacts: list) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w") as fh:
        fh.write(text)
    artifacts.append(path)
    return path


def _stem(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _verify(a) -> CommandResult:
    g = load_graph(a.graph)
    c = load_coloring(g, a.coloring)
    bad = verify_interval(g, c)
    if bad:
        lines = ["interval: no"] + [f"  {v.kind} at {v.location}: {v.detail}" for v in bad[:20]]
        if len(bad) > 20:
            lines.append(f"  ... {len(bad) - 20} more")
        return CommandResult("none", [], lines)
    return CommandResult("ok", [], [f"interval: yes, colors: {len(c.palette())}"])


def _spectrum(a) -> CommandResult:
    g = load_graph(a.graph)
    budget = Budget(a.budget) if a.budget is not None else None
    rep = compute_spectrum(g, a.t_max, budget=budget)
    arts: list = []
    _write(a.out_dir, f"{_stem(a.graph)}.spectrum.json", json.dumps(rep.to_dict(), indent=1), arts)
    lo, hi = rep.searched_range
    if not rep.achievable and not rep.undecided:
        head = "spectrum: {} (not interval colorable)"
    else:
        head = f"spectrum: {_fmt_set(rep.achievable)}"
    lines = [head, f"searched t in [{lo}, {hi}]"]
    if rep.gaps:
        lines.append("gaps: " + ", ".join(f"{gp.start}..{gp.stop}" for gp in rep.gaps))
    if rep.undecided:
        lines.append(f"undecided (budget exhausted): {_fmt_set(rep.undecided)}")
        return CommandResult("timeout", arts, lines)
    return CommandResult("ok", arts, lines)


def _gadget(a) -> CommandResult:
    arts: list = []
    c: EdgeColoring | None = None
    if a.kind == "F":
        if a.b is None or a.T is None:
            raise UsageError("gadget F needs --b and --T")
        g, bp = build_F(a.b, a.T)
        name = f"F_b{a.b}_T{a.T}"
        lines = [f"F({a.b},{a.T}): {g.vertex_count} vertices, {g.edge_count} edges"]
        if a.color or a.mirror:
            c = explicit_coloring_F(g, bp)
            if a.mirror:
                c = mirror(c)
            lines.append(f"coloring: {len(c.palette())} colors, span {c.span()}")
    else:
        if a.k is None or a.d is None:
            raise UsageError("gadget boldF needs --k and --d")
        g, bp = build_boldF(a.k, a.d)
        name = f"boldF_k{a.k}_d{a.d}"
        spec = predicted_spectrum(a.k, a.d)
        lines = [
            f"boldF({a.k},{a.d}): {g.vertex_count} vertices, {g.edge_count} edges",
            f"predicted spectrum: {_fmt_set(spec.achievable)}",
            "gaps: " + ", ".join(f"{gp.start}..{gp.stop}" for gp in spec.gaps),
        ]
        if a.realize is not None:
            if a.realize not in spec.achievable:
                return CommandResult("none", [], lines + [f"t={a.realize} is not in the predicted spectrum"])
            c = realize_t(a.k, a.d, a.realize, g, bp)
            lines.append(f"coloring: {len(c.palette())} colors, verified")
    fmt = a.format or "json"
    if fmt == "json":
        _write(a.out_dir, f"{name}.graph.json", g.to_json(indent=1), arts)
        if c is not None:
            _write(a.out_dir, f"{name}.coloring.json", c.to_json(indent=1), arts)
    _write(a.out_dir, f"{name}.dot", g.to_dot(c), arts)
    return CommandResult("ok", arts, lines)


def _thickness(a) -> CommandResult:
    g = load_graph(a.graph)
    arts: list = []
    lines = []
    if a.exact:
        try:
            dec = exact_decomposition(g, k_max=a.k_max, node_limit=a.nodes)
        except SearchBudgetExceeded:
            return CommandResult("timeout", [], ["exact thickness undecided within the node limit"])
        if dec is None:
            return CommandResult("none", [], [f"thickness > {a.k_max}"])
        lines.append(f"thickness: {len(dec)} (exact)")
    else:
        dec = decompose(g, node_limit=a.nodes, budget_ms=a.budget)
        lower = 2 if overfull(g) else 1
        lines.append(f"thickness: {lower} <= theta <= {len(dec)} ({dec.method})")
    assert dec.is_valid(), dec.problems()
    _write(a.out_dir, f"{_stem(a.graph)}.decomposition.json", dec.to_json(indent=1), arts)
    return CommandResult("ok", arts, lines)


def _schedule(a) -> CommandResult:
    inst = load_instance(a.instance)
    arts: list = []
    head = f"{len(inst.parents)} parents, {len(inst.teachers)} teachers, {len(inst.meetings)} meetings"
    if a.sessions:
        tt = schedule_multi_session(inst)
        lines = [head, f"sessions: {tt.session_count}, longest session: {tt.horizon} slots"]
    else:
        try:
            tt = schedule_no_wait(inst, a.horizon, budget_ms=a.budget)
        except NoSchedule as e:
            return CommandResult("none", [], [head, f"no no-wait timetable: {e}"])
        except SearchBudgetExceeded:
            return CommandResult("timeout", [], [head, "budget exhausted before a timetable was found or ruled out"])
        lines = [head, f"horizon: {tt.horizon} slots"]
    assert not no_wait_problems(tt)
    if (a.format or "csv") == "json":
        data = [
            {"parent": p, "teacher": t, "session": tt.session((p, t)), "slot": tt.slots[(p, t)]}
            for p, t in inst.meetings
        ]
        _write(a.out_dir, f"{_stem(a.instance)}.timetable.json", json.dumps({"timetable": data}, indent=1), arts)
    else:
        _write(a.out_dir, f"{_stem(a.instance)}.timetable.csv", tt.to_csv(), arts)
    return CommandResult("ok", arts, lines)


def _demo_gaps(a) -> CommandResult:
    out = os.path.join(a.out_dir, f"demo_k{a.k}_d{a.d}")
    rep = demo_instability(a.k, a.d, out, probe_budget_ms=a.budget if a.budget is not None else 2000)
    lines = [
        f"spectrum pieces: " + ", ".join(f"{x}" if x == y else f"{x}..{y}" for x, y in rep.pieces),
        "gaps: " + ", ".join(f"{x}..{y} ({y - x + 1})" for x, y in rep.gaps),
        "probes: " + ", ".join(f"{h}: {s}" for h, s in rep.probes.items()),
    ]
    return CommandResult("ok", list(rep.files), lines)


def _export_dot(a) -> CommandResult:
    g = load_graph(a.graph)
    c = load_coloring(g, a.coloring) if a.coloring else None
    arts: list = []
    _write(a.out_dir, f"{_stem(a.graph)}.dot", g.to_dot(c), arts)
    return CommandResult("ok", arts, [f"{g.vertex_count} vertices, {g.edge_count} edges"])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="intervalcolor", description="Interval edge colorings: verify, solve, build gadgets, schedule.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, budget=False):
        sp.add_argument("--out-dir", default=".", help="directory for written artifacts")
        if budget:
            sp.add_argument("--budget", type=float, metavar="MS", help="wall-time budget in milliseconds")

    sp = sub.add_parser("verify", help="check an interval coloring")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--coloring", required=True)
    sp.set_defaults(func=_verify)

    sp = sub.add_parser("spectrum", help="interval spectrum of a connected graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--t-max", type=int)
    common(sp, budget=True)
    sp.set_defaults(func=_spectrum)

    sp = sub.add_parser("gadget", help="build F(b,T) or boldF(k,d)")
    sp.add_argument("kind", choices=["F", "boldF"])
    sp.add_argument("--b", type=int)
    sp.add_argument("--T", type=int)
    sp.add_argument("--color", action="store_true", help="add the explicit coloring")
    sp.add_argument("--mirror", action="store_true", help="mirror the explicit coloring")
    sp.add_argument("--k", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--realize", type=int, metavar="T", help="realize a spectrum value of boldF")
    sp.add_argument("--format", choices=["json", "dot"], help="json writes JSON and DOT; dot writes only DOT")
    common(sp)
    sp.set_defaults(func=_gadget)

    sp = sub.add_parser("thickness", help="decompose into interval colorable parts")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--exact", action="store_true", help="exhaustive search, for graphs with about ten edges")
    sp.add_argument("--k-max", type=int, default=3)
    sp.add_argument("--nodes", type=int, default=None, help="solver node limit")
    common(sp, budget=True)
    sp.set_defaults(func=_thickness)

    sp = sub.add_parser("schedule", help="no-wait timetable for a conference")
    sp.add_argument("--instance", required=True, help="CSV (parent,teacher) or JSON")
    sp.add_argument("--horizon", type=int, help="demand exactly this many slots")
    sp.add_argument("--sessions", action="store_true", help="allow several sessions (days)")
    sp.add_argument("--format", choices=["csv", "json"])
    common(sp, budget=True)
    sp.set_defaults(func=_schedule)

    sp = sub.add_parser("demo-gaps", help="instability demo on boldF(k,d)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    common(sp, budget=True)
    sp.set_defaults(func=_demo_gaps)

    sp = sub.add_parser("export-dot", help="Graphviz rendering, colored if a coloring is given")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--coloring")
    sp.add_argument("--format", choices=["dot"])
    common(sp)
    sp.set_defaults(func=_export_dot)
    return p


def run(argv: list[str]) -> CommandResult:
    """Run one command; never raises for user errors."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "thickness" and args.nodes is None:
            args.nodes = 20000 if args.exact else 200
        return args.func(args)
    except UsageError as e:
        return CommandResult("error", [], [str(e)])
    except (OSError, json.JSONDecodeError) as e:
        return CommandResult("error", [], [f"cannot read input: {e}"])
    except DisconnectedGraphError as e:
        return CommandResult("error", [], [f"{e} (spectra are defined for connected graphs)"])
    except SearchBudgetExceeded as e:
        return CommandResult("timeout", [], [str(e)])
    except (GraphError, InstanceError, ValueError, KeyError) as e:
        return CommandResult("error", [], [f"invalid input: {e}"])


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    res = run(argv)
    for line in res.summary:
        print(line)
    for path in res.artifacts:
        print(f"wrote {path}")
    if res.status != "ok":
        print(f"status: {res.status}", file=sys.stderr)
    if argv and argv[0] == "verify" and res.status == "none":
        return 1
    return res.exit_code


__all__ = ["CommandResult", "build_parser", "main", "run"]
