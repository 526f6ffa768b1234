"""Undirected binary graphs, node partitions and their text formats."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence, TextIO

import numpy as np


class ParseError(ValueError):
    """Raised when an input file does not follow the expected line format."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected graph stored in compressed sparse row form.

    ``indices[indptr[v]:indptr[v + 1]]`` holds the neighbours of node ``v`` in
    strictly increasing order. A self-loop appears once in its own list.
    ``labels[v]`` is the external label of internal node ``v``.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def num_loops(self) -> int:
        rows = np.repeat(np.arange(self.n), np.diff(self.indptr))
        return int(np.count_nonzero(rows == self.indices))

    @property
    def m(self) -> int:
        return (len(self.indices) + self.num_loops) // 2

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Neighbour lists as plain Python lists (used by the hot loops)."""
        ind = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [ind[ptr[v]:ptr[v + 1]] for v in range(self.n)]

    @cached_property
    def id_of(self) -> dict:
        return {label: v for v, label in enumerate(self.labels)}

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        if not 0 <= v < self.n:
            raise IndexError(f"node {v} out of range for graph with {self.n} nodes")
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def edges(self) -> list[tuple[int, int]]:
        """Each undirected edge once, as ``(u, v)`` with ``u <= v``."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u <= v]

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        rows = np.repeat(np.arange(self.n), np.diff(self.indptr))
        a[rows, self.indices] = 1
        return a

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.labels == other.labels
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(edges: Iterable[tuple[Hashable, Hashable]], nodes: Iterable[Hashable] = ()) -> Graph:
    """Build a graph from label pairs.

    Labels get dense ids in order of first appearance, ``nodes`` first (this
    is how isolated nodes enter the graph). Duplicates and reversed pairs
    collapse to one edge.
    """
    id_of: dict = {}
    for label in nodes:
        id_of.setdefault(label, len(id_of))
    pairs = []
    for a, b in edges:
        u = id_of.setdefault(a, len(id_of))
        v = id_of.setdefault(b, len(id_of))
        pairs.append((u, v))
    return _build(pairs, tuple(id_of))


def _build(pairs: Sequence[tuple[int, int]], labels: tuple) -> Graph:
    n = len(labels)
    if pairs:
        arr = np.asarray(pairs, dtype=np.int64)
        both = np.concatenate([arr, arr[:, ::-1]])
        # one key per ordered pair; np.unique sorts by (row, col)
        keys = np.unique(both[:, 0] * n + both[:, 1])
        rows, cols = np.divmod(keys, n)
    else:
        rows = cols = np.zeros(0, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    return Graph(indptr=indptr, indices=cols.astype(np.int64), labels=labels)


def load_edge_list(stream: TextIO) -> Graph:
    """Read a whitespace separated edge list.

    Blank lines and lines starting with ``#`` are skipped; every other line
    must hold exactly two node labels. Labels are kept as strings.
    """
    edges = []
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 node labels, got {len(tokens)}", lineno)
        edges.append((tokens[0], tokens[1]))
    return from_edges(edges)


def dump_edge_list(g: Graph, stream: TextIO) -> None:
    """Write ``g`` as an edge list, one line per undirected edge.

    Lines are ordered so that reloading assigns the same internal ids. That
    holds for any graph without isolated nodes whose ids follow first
    appearance, which covers everything :func:`load_edge_list` returns.
    Isolated nodes cannot be expressed in this format and are dropped.
    """
    adj = g.adjacency
    order: list[tuple[int, int]] = []
    written: set[tuple[int, int]] = set()
    seen = [False] * g.n

    def emit(u, v):
        key = (min(u, v), max(u, v))
        if key not in written:
            written.add(key)
            order.append((u, v))
        seen[u] = seen[v] = True

    for k in range(g.n):
        if seen[k] or not adj[k]:
            continue
        # introduce k next to an already written node, or together with k + 1
        earlier = [v for v in adj[k] if v < k and seen[v]]
        if earlier:
            emit(earlier[0], k)
        elif k + 1 in adj[k]:
            emit(k, k + 1)
        else:
            emit(k, adj[k][0])
    for u in range(g.n):
        for v in adj[u]:
            if u <= v:
                emit(u, v)
    for u, v in order:
        stream.write(f"{g.labels[u]} {g.labels[v]}\n")


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"node {v} out of range for graph with {g.n} nodes")
    return int(g.indptr[v + 1] - g.indptr[v])


@dataclass(frozen=True)
class Partition:
    """A partition of ``range(n)`` with canonical block numbering.

    Blocks are numbered by their smallest member and each member list is
    sorted, so two partitions with the same blocks compare equal.
    """

    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> Partition:
        members = [sorted(b) for b in blocks]
        members = [b for b in members if b]
        members.sort(key=lambda b: b[0])
        total = sum(len(b) for b in members)
        if n is None:
            n = total
        block_of = [-1] * n
        for k, b in enumerate(members):
            for v in b:
                if not 0 <= v < n:
                    raise ValueError(f"node {v} out of range for {n} nodes")
                if block_of[v] != -1:
                    raise ValueError(f"node {v} appears in more than one block")
                block_of[v] = k
        missing = [v for v, b in enumerate(block_of) if b == -1]
        if missing:
            raise ValueError(f"partition does not cover nodes {missing[:10]}")
        return cls(tuple(block_of), tuple(tuple(b) for b in members))

    @classmethod
    def from_assignment(cls, assignment: Sequence[Hashable]) -> Partition:
        """Group nodes by equal assignment values (any hashable block keys)."""
        groups: dict = {}
        for v, key in enumerate(assignment):
            groups.setdefault(key, []).append(v)
        return cls.from_blocks(groups.values(), n=len(assignment))

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(b) for b in self.blocks}

    def refines(self, other: Partition) -> bool:
        """True if every block of ``self`` lies inside a block of ``other``."""
        return all(len({other.block_of[v] for v in b}) == 1 for b in self.blocks)

    def labelled_blocks(self, g: Graph) -> list[list]:
        return [[g.labels[v] for v in b] for b in self.blocks]


def make_initial_partition(g: Graph, assignment: Mapping | Sequence | None = None) -> Partition:
    """Single block of all nodes, or the blocks induced by ``assignment``.

    ``assignment`` maps internal node ids (a sequence, or a mapping keyed by
    id) to arbitrary hashable block keys.
    """
    if assignment is None:
        return Partition.from_blocks([range(g.n)] if g.n else [], n=g.n)
    if isinstance(assignment, Mapping):
        missing = [v for v in range(g.n) if v not in assignment]
        if missing:
            raise ValueError(f"assignment misses nodes {missing[:10]}")
        keys = [assignment[v] for v in range(g.n)]
    else:
        if len(assignment) != g.n:
            raise ValueError(f"assignment has {len(assignment)} entries, graph has {g.n} nodes")
        keys = list(assignment)
    return Partition.from_assignment(keys)


def write_partition(g: Graph, p: Partition, stream: TextIO) -> None:
    stream.write("node\tblock\n")
    for v, b in enumerate(p.block_of):
        stream.write(f"{g.labels[v]}\t{b}\n")


def read_partition(g: Graph, stream: TextIO) -> Partition:
    """Read a ``node<TAB>block`` file written by :func:`write_partition`."""
    id_of = {str(label): v for v, label in enumerate(g.labels)}
    keys: dict[int, str] = {}
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        if lineno == 1 and line.split("\t")[:2] == ["node", "block"]:
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 2 tab separated fields, got {len(fields)}", lineno)
        label, block = fields
        if label not in id_of:
            raise ParseError(f"unknown node {label!r}", lineno)
        keys[id_of[label]] = block
    return make_initial_partition(g, keys)


def load_labels(stream: TextIO) -> dict[str, str]:
    """Read a node label file with two whitespace separated columns per line.

    A leading ``node label`` header is skipped.
    """
    labels = {}
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected node and label, got {len(tokens)} fields", lineno)
        if lineno == 1 and tokens[0].lower() == "node":
            continue
        labels[tokens[0]] = tokens[1]
    return labels
