"""Role embeddings of a small rooted tree at three tolerances."""

from roleembed import build_embedding, check_eps_be, make_initial_partition, refine
from roleembed.generators import running_example

g = running_example()
print(g)  # 11 nodes, 10 edges: root 1, children 2-4, leaves 5-11

init = make_initial_partition(g)  # one block holding every node

for eps in (0, 1, 3):
    p = refine(g, init, eps)
    e = build_embedding(g, p)
    print(f"\neps={eps}: {p.num_blocks} blocks {p.labelled_blocks(g)}")
    # one row per node, one column per block: edges from the node into the block
    for v in range(g.n):
        print(f"  node {g.labels[v]:>2}  {e.values[v].tolist()}")
    assert check_eps_be(g, p, eps) == []

# The eps=1 partition is not exact: nodes 2 and 3 differ by one leaf edge.
p1 = refine(g, init, 1)
print("\nviolations of the eps=1 partition at eps=0:", check_eps_be(g, p1, 0))
