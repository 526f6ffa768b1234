"""Refinement over an increasing tolerance schedule."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, Partition
from .refine import refine


@dataclass(frozen=True)
class EpsSchedule:
    """Tolerances ``eps0, eps0 + delta, ...`` up to and including ``max_eps``."""

    eps0: int
    delta: int
    max_eps: int

    def __post_init__(self):
        if min(self.eps0, self.delta, self.max_eps) < 0:
            raise ValueError(f"schedule values must be nonnegative: {self}")
        if self.delta < 1:
            raise ValueError("delta must be at least 1")
        if self.eps0 > self.max_eps:
            raise ValueError(f"eps0={self.eps0} exceeds max_eps={self.max_eps}")

    def values(self) -> range:
        return range(self.eps0, self.max_eps + 1, self.delta)

    def __len__(self) -> int:
        return len(self.values())


def join_singletons(p: Partition) -> Partition:
    """Merge all size-1 blocks into one block; larger blocks are untouched."""
    singles = [b[0] for b in p.blocks if len(b) == 1]
    if len(singles) < 2:
        return p
    rest = [b for b in p.blocks if len(b) > 1]
    return Partition.from_blocks(rest + [singles], n=p.n)


def iter_refinements(g: Graph, init: Partition, sched: EpsSchedule) -> Iterator[tuple[int, Partition]]:
    """Yield ``(eps, partition)`` for each step of the schedule.

    Each step refines the previous result with its singleton blocks merged
    back together, so nodes that could not be grouped at a small tolerance
    get another chance at the next one.
    """
    current = init
    for eps in sched.values():
        result = refine(g, current, eps)
        yield eps, result
        current = join_singletons(result)


def iterative_refine(g: Graph, init: Partition, sched: EpsSchedule) -> Partition:
    """Partition computed at the last tolerance of ``sched``.

    Singletons of that last step are not merged.
    """
    result = init
    for _, result in iter_refinements(g, init, sched):
        pass
    return result
