"""Tolerance-aware partition refinement.

Blocks are split against splitter blocks until, for every pair of blocks
``(B, C)``, the number of edges from any two members of ``B`` into ``C``
differs by at most ``eps``. With ``eps == 0`` the result is the coarsest
equitable partition refining the initial one.
"""

from __future__ import annotations

from collections import OrderedDict
from typing import Iterable, Sequence

from .graph import Graph, Partition


class SplitterQueue:
    """FIFO of block ids with O(1) membership test and removal."""

    def __init__(self, block_ids: Iterable[int] = ()):
        self._items: OrderedDict[int, None] = OrderedDict()
        for b in block_ids:
            self.push(b)

    def push(self, block_id: int) -> None:
        self._items.setdefault(block_id, None)

    def pop(self) -> int:
        return self._items.popitem(last=False)[0]

    def discard(self, block_id: int) -> None:
        self._items.pop(block_id, None)

    def __contains__(self, block_id: int) -> bool:
        return block_id in self._items

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(self._items)


class WeightTable:
    """Edge counts from each node into the current splitter.

    ``w[s]`` is nonzero exactly for the nodes listed in ``touched``; call
    :meth:`reset` before reusing the table for another splitter.
    """

    def __init__(self, n: int):
        self.w = [0] * n
        self.touched: list[int] = []

    def __getitem__(self, s: int) -> int:
        return self.w[s]

    def reset(self) -> None:
        w = self.w
        for s in self.touched:
            w[s] = 0
        self.touched = []

    def as_dict(self) -> dict[int, int]:
        return {s: self.w[s] for s in self.touched}


def accumulate_weights(g: Graph, splitter: Iterable[int], table: WeightTable | None = None) -> WeightTable:
    """Count, for every node, its edges into ``splitter``."""
    if table is None:
        table = WeightTable(g.n)
    else:
        table.reset()
    adj = g.adjacency
    w = table.w
    touched = table.touched
    for t in splitter:
        for s in adj[t]:
            if w[s] == 0:
                touched.append(s)
            w[s] += 1
    return table


def possible_majority_candidate(values: Sequence[int]) -> int:
    """Return the majority element of ``values`` if there is one.

    Without a strict majority the result is just some element of the list.
    """
    if not values:
        raise ValueError("possible_majority_candidate of an empty list")
    candidate = values[0]
    count = 0
    for x in values:
        if count == 0:
            candidate = x
            count = 1
        elif x == candidate:
            count += 1
        else:
            count -= 1
    return candidate


def split_block(members: Sequence[int], w, eps: int) -> list[list[int]]:
    """Cut a block into runs whose weight span is at most ``eps``.

    Members are sorted by ``(w[s], s)`` and scanned left to right; a new
    group starts as soon as a weight exceeds the first weight of the current
    group by more than ``eps``.
    """
    order = sorted(members, key=lambda s: (w[s], s))
    groups: list[list[int]] = []
    anchor = None
    for s in order:
        ws = w[s]
        if anchor is None or ws - anchor > eps:
            groups.append([s])
            anchor = ws
        else:
            groups[-1].append(s)
    return groups


def _split_exact(members: Sequence[int], w) -> list[list[int]]:
    # eps == 0 only; members must be sorted by id. Nodes carrying the
    # majority candidate weight are kept out of the sort and slotted back in
    # at their value's position, so the result equals split_block(members, w, 0).
    pmc = possible_majority_candidate([w[s] for s in members])
    same = [s for s in members if w[s] == pmc]
    if len(same) == len(members):
        return [list(members)]
    rest = sorted((s for s in members if w[s] != pmc), key=lambda s: (w[s], s))
    groups: list[list[int]] = []
    placed = False
    prev = None
    for s in rest:
        ws = w[s]
        if not placed and ws > pmc:
            groups.append(same)
            placed = True
        if ws != prev:
            groups.append([s])
            prev = ws
        else:
            groups[-1].append(s)
    if not placed:
        groups.append(same)
    return groups


def refine(g: Graph, init: Partition, eps: int, use_pmc: bool = True) -> Partition:
    """Split the blocks of ``init`` until the partition is ``eps``-tolerant.

    Every block produced by a split goes back on the splitter queue (there
    is no "skip the largest part" shortcut, which is unsound once a
    tolerance is involved). The queue is FIFO and blocks are split after a
    stable sort, so the output is deterministic.

    ``use_pmc`` enables the majority-candidate sorting shortcut; it is only
    used when ``eps == 0``.
    """
    if eps < 0:
        raise ValueError(f"eps must be nonnegative, got {eps}")
    if init.n != g.n:
        raise ValueError(f"partition covers {init.n} nodes, graph has {g.n}")

    block_of = list(init.block_of)
    blocks: dict[int, list[int]] = {b: list(members) for b, members in enumerate(init.blocks)}
    next_id = len(blocks)
    queue = SplitterQueue(blocks)
    table = WeightTable(g.n)
    exact = eps == 0 and use_pmc

    while queue:
        splitter = queue.pop()
        accumulate_weights(g, blocks[splitter], table)
        w = table.w

        hit: dict[int, None] = {}
        for s in table.touched:
            hit.setdefault(block_of[s], None)

        for b in hit:
            members = blocks[b]
            if len(members) == 1:
                continue
            if exact:
                groups = _split_exact(members, w)
            else:
                groups = split_block(members, w, eps)
            if len(groups) == 1:
                continue
            del blocks[b]
            queue.discard(b)
            for group in groups:
                blocks[next_id] = group
                for s in group:
                    block_of[s] = next_id
                queue.push(next_id)
                next_id += 1

        table.reset()

    return Partition.from_blocks(blocks.values(), n=g.n)
