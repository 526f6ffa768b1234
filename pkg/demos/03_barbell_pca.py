"""Barbell graph: exact roles land on single points in a 2-D PCA view.

Writes ``barbell_pca.csv`` (node, pc1, pc2) for plotting elsewhere.
"""

import numpy as np

from roleembed import build_embedding, make_initial_partition, pca_2d, refine
from roleembed.generators import barbell_graph

k, length = 6, 5
g = barbell_graph(k, length)
p = refine(g, make_initial_partition(g), 0)
print(f"{g.n} nodes reduce to {p.num_blocks} roles")
for b, block in enumerate(p.blocks):
    print(f"  role {b}: {list(block)}")

e = build_embedding(g, p)
pca = pca_2d(e)
print("explained variance:", pca.variances)

points = {}
for v in range(g.n):
    points.setdefault(tuple(pca.coords[v]), []).append(v)
print(f"{len(points)} distinct points")
for (x, y), nodes in sorted(points.items()):
    print(f"  ({x:+.4f}, {y:+.4f})  {nodes}")

np.savetxt("barbell_pca.csv", np.column_stack([np.arange(g.n), pca.coords]),
           delimiter=",", header="node,pc1,pc2", comments="", fmt=["%d", "%.17g", "%.17g"])
