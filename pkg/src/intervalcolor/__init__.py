"""Interval edge colorings: verification, exact spectra, the F(b,T) and
boldF(k,d) gadgets, interval thickness bounds and no-wait scheduling."""

from .coloring import (
    EdgeColoring,
    IntervalViolation,
    PartialColoringError,
    is_interval_coloring,
    mirror,
    normalize,
    palette,
    shift,
    verify_interval,
)
from .gadgets import (
    GadgetBlueprint,
    build_boldF,
    build_F,
    explicit_coloring_F,
    pendant_color_law,
    predicted_spectrum,
    realize_t,
)
from .graph import Graph, GraphError, build_graph, edge_key, glue_edges, load_graph, structural_queries
from .scheduler import (
    ConferenceInstance,
    NoSchedule,
    Timetable,
    demo_instability,
    load_instance,
    no_wait_problems,
    schedule_multi_session,
    schedule_no_wait,
)
from .spectrum import (
    SearchBudgetExceeded,
    SpectrumReport,
    compute_spectrum,
    enumerate_colorings,
    find_coloring,
)
from .thickness import (
    Decomposition,
    color_forest,
    color_regular_bipartite,
    decompose,
    degeneracy,
    exact_theta_small,
)

__version__ = "0.1.0"
