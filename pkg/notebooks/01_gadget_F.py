# %% [markdown]
# # The gadget F(b, T) and its rigid pendant colors
#
# F(b, T) is the building block of the spectral-gap construction.  With
# D = T - 25 it has 2D + 37 vertices, and every interval coloring with
# T + 1 colors is pinned down near its pendant edges: they sit either just
# above the bottom of the palette or just below its top.  This script
# builds F, checks the explicit coloring, shows the two pendant positions
# and then lets the exact solver confirm the two-sided law on F(1, 27).
#
# Run with `python3 notebooks/01_gadget_F.py`.

# %%
import time
from collections import Counter

import numpy as np

from intervalcolor import build_F, explicit_coloring_F, mirror, pendant_color_law, shift, verify_interval
from intervalcolor.spectrum import enumerate_colorings

# %% [markdown]
# ## Sizes and degrees
# The table lists |V|, ||F||, and the degrees of v, u and v' for a few
# parameter pairs; the degrees D+26, D+3 and D+14 do not depend on b.

# %%
rows = []
for b, T in [(1, 27), (2, 29), (2, 37), (5, 35), (10, 35)]:
    g, bp = build_F(b, T)
    D = T - 25
    rows.append((b, T, g.vertex_count, g.edge_count, g.degree(bp.vertex("v")), g.degree(bp.vertex("u")), g.degree(bp.vertex("v'"))))
table = np.array(rows)
print("   b   T   |V|  |E|  deg v  deg u  deg v'")
for r in table:
    print("".join(f"{x:5d}" for x in r))
assert (table[:, 2] == 2 * (table[:, 1] - 25) + 37).all()
assert (table[:, 3] == 4 * (table[:, 1] - 25) - table[:, 0] + 63).all()

# %% [markdown]
# ## The explicit coloring uses exactly T + 1 colors

# %%
counts = []
for D in range(2, 31, 2):
    for b in sorted({1, -(-D // 2), D}):
        g, bp = build_F(b, D + 25)
        c = explicit_coloring_F(g, bp)
        assert not verify_interval(g, c) and len(c.palette()) == D + 26
        counts.append(len(c.palette()))
print(f"{len(counts)} explicit colorings verified; palette sizes {min(counts)}..{max(counts)}")

# %% [markdown]
# ## F(2, 37) with smallest color 3
# Shifting puts the pendant colors at {15, 16}; mirroring moves them to
# {27, 28}.

# %%
g, bp = build_F(2, 37)
c = explicit_coloring_F(g, bp)
c3 = shift(c, 3 - c.span()[0])
print("shifted :", sorted(c3[e] for e in bp.pendant_edges), "span", c3.span())
print("mirrored:", sorted(mirror(c3)[e] for e in bp.pendant_edges))

# %% [markdown]
# ## Rigidity, checked by exhaustive search
# The solver enumerates interval colorings of F(1, 27) with 28 colors.
# Each canonical solution stands for a whole class of colorings that
# differ only by permuting twin vertices.  Every one obeys the pendant
# law, and both the low and the high side occur.

# %%
g, bp = build_F(1, 27)
start = time.monotonic()
res = enumerate_colorings(g, 28, 1000, budget_ms=60_000, canonical=True)
elapsed = time.monotonic() - start
sides = Counter(pendant_color_law(bp, c).side for c in res.colorings)
wl = Counter(pendant_color_law(bp, c).w_l_v_l for c in res.colorings)
print(f"{len(res.colorings)} canonical colorings in {elapsed:.1f}s (complete={res.complete})")
print("sides:", dict(sides), " c(w_l v_l):", dict(wl))
