"""Slow, literal reference implementations for cross-checking.

Nothing here shares code with the refinement engine beyond the Graph and
Partition containers.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

from .graph import Graph, Partition


def _dense(g: Graph) -> list[list[int]]:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        a[u][v] = 1
        a[v][u] = 1
    return a


def coarsest_equitable_partition_naive(g: Graph, init: Partition | None = None) -> Partition:
    """Signature refinement to a fixpoint.

    Each round keys every node by its current block plus the full vector of
    edge counts into every current block, then regroups on that key.
    """
    a = _dense(g)
    if init is None:
        init = Partition.from_blocks([range(g.n)] if g.n else [], n=g.n)
    current = [list(b) for b in init.blocks]
    while True:
        signatures = []
        for i in range(g.n):
            sig = tuple(sum(a[i][j] for j in block) for block in current)
            signatures.append(sig)
        new_blocks = []
        for block in current:
            groups: dict[tuple, list[int]] = {}
            for i in block:
                groups.setdefault(signatures[i], []).append(i)
            new_blocks.extend(groups.values())
        if len(new_blocks) == len(current):
            return Partition.from_blocks(new_blocks, n=g.n)
        current = new_blocks


def validate_eps_be_naive(g: Graph, p: Partition, eps: int) -> bool:
    """Compare every member pair of every block against every block."""
    a = _dense(g)
    for block in p.blocks:
        for other in p.blocks:
            for i in block:
                for j in block:
                    wi = sum(a[k][i] for k in other)
                    wj = sum(a[k][j] for k in other)
                    if abs(wi - wj) > eps:
                        return False
    return True


def _all_shortest_paths(adj: list[list[int]], s: int, t: int) -> list[list[int]]:
    dist = {s: 0}
    frontier = deque([s])
    while frontier:
        u = frontier.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                frontier.append(v)
    if t not in dist:
        return []
    paths = []

    def extend(path):
        u = path[-1]
        if u == t:
            paths.append(list(path))
            return
        for v in adj[u]:
            if dist.get(v) == dist[u] + 1 and dist[v] <= dist[t]:
                path.append(v)
                extend(path)
                path.pop()

    extend([s])
    return paths


def betweenness_bruteforce(g: Graph) -> list[Fraction]:
    """Raw undirected betweenness by enumerating every shortest path.

    For each unordered pair ``{s, t}`` each interior node gets the fraction
    of shortest ``s``-``t`` paths running through it. Exact rationals.
    """
    adj = [[v for v in nbrs if v != u] for u, nbrs in enumerate(g.adjacency)]
    score = [Fraction(0)] * g.n
    for s, t in itertools.combinations(range(g.n), 2):
        paths = _all_shortest_paths(adj, s, t)
        if not paths:
            continue
        for path in paths:
            for v in path[1:-1]:
                score[v] += Fraction(1, len(paths))
    return score
