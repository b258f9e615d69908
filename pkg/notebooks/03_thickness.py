# %% [markdown]
# # Interval thickness: how many no-wait days does a conference need?
#
# theta(G) is the least number of interval colorable parts the edges of G
# split into.  Forests and regular bipartite graphs have theta = 1.  Class 2
# graphs such as the triangle have theta >= 2.  The general upper bound
# used here is the degeneracy: the forest classes of a smallest-last
# ordering.
#
# Run with `python3 notebooks/03_thickness.py`.

# %%
import random
from collections import Counter

import numpy as np

from intervalcolor.generators import complete, connected_graphs_on, random_graph
from intervalcolor.thickness import decompose, degeneracy, exact_theta_small, overfull, sqrt_edge_bound

# %% [markdown]
# ## Exact values on all small connected graphs

# %%
for n in (3, 4, 5):
    graphs = connected_graphs_on(n)
    th = Counter(exact_theta_small(g) for g in graphs)
    print(f"<= {n} vertices: {len(graphs)} graphs, theta distribution {dict(sorted(th.items()))}")
print("theta(K3) =", exact_theta_small(complete(3)), " theta(K5) =", exact_theta_small(complete(5)))
print("K5 overfull (so Class 2):", overfull(complete(5)))

# %% [markdown]
# ## Upper bounds on random graphs
# Parts found, against the degeneracy and ceil(sqrt(2m)).

# %%
rng = random.Random(3)
rows = []
for p in (0.05, 0.1, 0.2, 0.3):
    for _ in range(5):
        g = random_graph(60, p, rng)
        dec = decompose(g)
        assert dec.is_valid()
        rows.append((p, g.edge_count, len(dec), degeneracy(g), sqrt_edge_bound(g)))
a = np.array(rows)
for p in np.unique(a[:, 0]):
    sel = a[a[:, 0] == p]
    print(
        f"p={p:.2f}: edges {sel[:, 1].mean():6.1f}  parts {sel[:, 2].mean():5.1f}  "
        f"degeneracy {sel[:, 3].mean():5.1f}  ceil(sqrt(2m)) {sel[:, 4].mean():5.1f}"
    )
