"""
Reference implementations that share no code with the package: a
brute-force interval spectrum over every map E -> {1..m}, vectorised with
numpy, and a plain no-wait checker for slot lists.
"""

from __future__ import annotations

import itertools

import numpy as np


def brute_force_spectrum(vertices, edges) -> set[int]:
    """All t for which the connected graph has an interval coloring with
    colors exactly 1..t.  Colors never exceed the edge count m, so trying
    every map E -> {1..m} is exhaustive; feasible up to m = 7 (823543 maps)."""
    m = len(edges)
    if m == 0:
        return set()
    grid = np.array(list(itertools.product(range(1, m + 1), repeat=m)), dtype=np.int8)
    ok = np.ones(len(grid), dtype=bool)
    for v in vertices:
        cols = [i for i, (a, b) in enumerate(edges) if v in (a, b)]
        if len(cols) < 2:
            continue
        sub = np.sort(grid[:, cols], axis=1)
        distinct = np.all(np.diff(sub, axis=1) > 0, axis=1)
        consecutive = (sub[:, -1] - sub[:, 0]) == len(cols) - 1
        ok &= distinct & consecutive
    good = grid[ok]
    out = set()
    for row in np.unique(good, axis=0):
        used = set(row.tolist())
        if min(used) == 1 and used == set(range(1, max(used) + 1)):
            out.add(max(used))
    return out


def no_wait_ok(rows) -> bool:
    """rows: (parent, teacher, session, slot).  Everybody's slots within a
    session must be distinct and form one unbroken run."""
    busy: dict = {}
    for p, t, ses, slot in rows:
        busy.setdefault((ses, "p", p), []).append(slot)
        busy.setdefault((ses, "t", t), []).append(slot)
    for slots in busy.values():
        s = sorted(slots)
        if len(set(s)) != len(s) or s[-1] - s[0] != len(s) - 1:
            return False
    return True
