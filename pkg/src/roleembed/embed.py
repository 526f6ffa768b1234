"""Block-count embeddings and the tolerance check built on them."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .graph import Graph, ParseError, Partition


@dataclass(frozen=True, eq=False)
class EmbeddingMatrix:
    """``values[i, k]`` is the number of edges from node ``i`` into block ``k``.

    Columns follow canonical block numbering; ``node_order`` holds the
    external label of each row.
    """

    values: np.ndarray
    block_order: tuple[int, ...]
    node_order: tuple

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def write_csv(self, stream: TextIO) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["node"] + [f"b{k}" for k in self.block_order])
        for label, row in zip(self.node_order, self.values.tolist()):
            writer.writerow([label] + row)

    @classmethod
    def read_csv(cls, stream: TextIO) -> EmbeddingMatrix:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty embedding file") from None
        if not header or header[0] != "node":
            raise ParseError("header must start with 'node'", 1)
        try:
            block_order = tuple(int(h.lstrip("b")) for h in header[1:])
        except ValueError:
            raise ParseError(f"bad column names {header[1:]}", 1) from None
        labels, rows = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(f"expected {len(header)} fields, got {len(row)}", lineno)
            labels.append(row[0])
            try:
                rows.append([int(x) for x in row[1:]])
            except ValueError:
                raise ParseError("embedding entries must be integers", lineno) from None
        values = np.array(rows, dtype=np.int64).reshape(len(rows), len(block_order))
        return cls(values, block_order, tuple(labels))


def build_embedding(g: Graph, p: Partition) -> EmbeddingMatrix:
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} nodes, graph has {g.n}")
    block_of = np.asarray(p.block_of, dtype=np.int64)
    values = np.zeros((g.n, p.num_blocks), dtype=np.int64)
    rows = np.repeat(np.arange(g.n), g.degrees)
    np.add.at(values, (rows, block_of[g.indices]), 1)
    return EmbeddingMatrix(values, tuple(range(p.num_blocks)), g.labels)


def check_eps_be(g: Graph, p: Partition, eps: int) -> list[tuple[int, int, int]]:
    """List ``(block, column, span)`` for every column whose spread inside a
    block exceeds ``eps``. An empty list means the partition passes."""
    e = build_embedding(g, p).values
    violations = []
    for b, members in enumerate(p.blocks):
        if len(members) < 2:
            continue
        rows = e[list(members)]
        span = rows.max(axis=0) - rows.min(axis=0)
        for k in np.flatnonzero(span > eps):
            violations.append((b, int(k), int(span[k])))
    return violations
