"""Small graphs used in tests, demos and docs."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Graph, from_edges

# Labels 1..11: node 1 is the root, 2-4 its children, 5-11 the leaves.
RUNNING_EXAMPLE_EDGES = [
    (1, 2), (1, 3), (1, 4),
    (2, 5), (2, 6), (2, 7),
    (3, 8), (3, 9),
    (4, 10), (4, 11),
]

# Complete clique 1-4 attached through node 3; incomplete clique 7-10
# (edges 7-8 and 8-9 missing) attached through node 7; nodes 5 and 6 each
# join 3 to 7.
TWO_CLIQUES_EDGES = [
    (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
    (3, 5), (3, 6), (5, 7), (6, 7),
    (7, 9), (7, 10), (8, 10), (9, 10),
]


def running_example() -> Graph:
    return from_edges(RUNNING_EXAMPLE_EDGES, nodes=range(1, 12))


def two_cliques() -> Graph:
    return from_edges(TWO_CLIQUES_EDGES, nodes=range(1, 11))


def complete_graph(n: int) -> Graph:
    return from_edges(itertools.combinations(range(n), 2), nodes=range(n))


def cycle_graph(n: int) -> Graph:
    return from_edges([(i, (i + 1) % n) for i in range(n)], nodes=range(n))


def path_graph(n: int) -> Graph:
    return from_edges([(i, i + 1) for i in range(n - 1)], nodes=range(n))


def star_graph(leaves: int) -> Graph:
    """Hub 0 joined to leaves ``1..leaves``."""
    return from_edges([(0, i) for i in range(1, leaves + 1)], nodes=range(leaves + 1))


def barbell_graph(k: int, path_length: int) -> Graph:
    """Two ``k``-cliques joined through a path of ``path_length`` extra nodes.

    Nodes ``0..k-1`` form the left clique with ``k-1`` attached to the
    path, the path runs over ``k..k+path_length-1`` and the right clique is
    ``k+path_length..2k+path_length-1`` with its first node attached.
    """
    left = list(range(k))
    path = list(range(k, k + path_length))
    right = list(range(k + path_length, 2 * k + path_length))
    edges = list(itertools.combinations(left, 2)) + list(itertools.combinations(right, 2))
    chain = [left[-1]] + path + [right[0]]
    edges += list(zip(chain, chain[1:]))
    return from_edges(edges, nodes=range(2 * k + path_length))


def gnp_random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return from_edges(zip(iu[keep].tolist(), ju[keep].tolist()), nodes=range(n))


def random_connected_graph(n: int, p: float, seed: int | None = None) -> Graph:
    """A random spanning tree plus independent extra edges with probability ``p``."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(n).tolist()
    edges = {tuple(sorted((order[i], order[int(rng.integers(i))]))) for i in range(1, n)}
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    edges.update(zip(iu[keep].tolist(), ju[keep].tolist()))
    return from_edges(sorted(edges), nodes=range(n))
