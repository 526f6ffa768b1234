"""Two cliques joined by a bridge: one-shot and iterative refinement disagree."""

from roleembed import EpsSchedule, iter_refinements, join_singletons, make_initial_partition, refine
from roleembed.generators import two_cliques

g = two_cliques()
init = make_initial_partition(g)

exact = refine(g, init, 0)
print("eps=0          ", exact.labelled_blocks(g))
print("singletons merged", join_singletons(exact).labelled_blocks(g))

# The iterative scheme starts from the exact partition, lumps the
# singletons back together and refines again at the next tolerance.
for eps, p in iter_refinements(g, init, EpsSchedule(eps0=0, delta=1, max_eps=1)):
    print(f"iterative eps={eps}", p.labelled_blocks(g))

one_shot = refine(g, init, 1)
print("one-shot eps=1 ", one_shot.labelled_blocks(g))
# the bridge nodes 5, 6 join 8, 9 only when refining once from scratch
