"""Command line front end.

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import time
from typing import TextIO

import numpy as np

from .embed import EmbeddingMatrix, build_embedding, check_eps_be
from .evaluation import betweenness_centrality, eigenvector_centrality, pca_2d, repeated_regression
from .graph import Graph, ParseError, Partition, load_edge_list, make_initial_partition, read_partition, write_partition
from .iterative import EpsSchedule, iterative_refine
from .oracle import coarsest_equitable_partition_naive
from .refine import refine

# (eps0, delta, max_eps) used for the airport, actor and film networks
PRESETS = {
    "brazil": (0, 1, 3),
    "europe": (0, 1, 4),
    "usa": (0, 1, 2),
    "actor": (2, 2, 8),
    "film": (6, 6, 30),
}


class CheckFailed(Exception):
    pass


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_edge_list(fh)


def _schedule(args) -> EpsSchedule:
    eps0, delta, max_eps = PRESETS[args.preset] if args.preset else (0, 1, None)
    if args.eps0 is not None:
        eps0 = args.eps0
    if args.delta is not None:
        delta = args.delta
    if args.max_eps is not None:
        max_eps = args.max_eps
    if max_eps is None:
        raise ValueError("--max-eps is required unless --preset is given")
    return EpsSchedule(eps0, delta, max_eps)


def _reduce(g: Graph, args) -> tuple[Partition, float]:
    sched = _schedule(args)
    init = make_initial_partition(g)
    start = time.perf_counter()
    if args.one_shot:
        p = refine(g, init, sched.max_eps)
    else:
        p = iterative_refine(g, init, sched)
    return p, time.perf_counter() - start


def _summary(g: Graph, p: Partition, seconds: float, out: TextIO) -> None:
    ratio = 1 - p.num_blocks / g.n if g.n else 0.0
    print(f"n={g.n} m={g.m} blocks={p.num_blocks} reduction={ratio!r} time={seconds:.6f}s", file=out)


def cmd_reduce(args, out: TextIO) -> None:
    g = _read_graph(args.input)
    p, seconds = _reduce(g, args)
    if args.output:
        with _open_out(args.output) as fh:
            write_partition(g, p, fh)
    _summary(g, p, seconds, out)


def cmd_embed(args, out: TextIO) -> None:
    g = _read_graph(args.input)
    p, seconds = _reduce(g, args)
    e = build_embedding(g, p)
    with _open_out(args.output) as fh:
        e.write_csv(fh)
    if args.partition_output:
        with _open_out(args.partition_output) as fh:
            write_partition(g, p, fh)
    _summary(g, p, seconds, out if args.output not in (None, "-") else sys.stderr)


def cmd_check(args, out: TextIO) -> None:
    g = _read_graph(args.input)
    with open(args.partition, encoding="utf-8") as fh:
        p = read_partition(g, fh)
    violations = check_eps_be(g, p, args.eps)
    if not violations:
        print(f"ok: partition with {p.num_blocks} blocks satisfies eps={args.eps}", file=out)
        return
    for block, column, span in violations:
        print(f"violation: block {block} column {column} span {span}", file=out)
    raise CheckFailed(f"{len(violations)} violations at eps={args.eps}")


def write_values(labels, values, name: str, stream: TextIO) -> None:
    stream.write(f"node\t{name}\n")
    for label, x in zip(labels, values):
        stream.write(f"{label}\t{x!r}\n")


def read_values(stream: TextIO) -> dict[str, float]:
    values = {}
    for lineno, line in enumerate(stream, start=1):
        fields = line.rstrip("\n").split("\t")
        if fields == [""]:
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 2 tab separated fields, got {len(fields)}", lineno)
        try:
            values[fields[0]] = float(fields[1])
        except ValueError:
            if lineno == 1:
                continue
            raise ParseError(f"not a number: {fields[1]!r}", lineno) from None
    return values


def cmd_centrality(args, out: TextIO) -> None:
    g = _read_graph(args.input)
    if args.measure == "eigenvector":
        c = eigenvector_centrality(g)
        if not c.converged:
            raise CheckFailed("power iteration did not converge")
        if c.degenerate:
            print("warning: graph is disconnected, eigenvector is not unique", file=sys.stderr)
    else:
        c = betweenness_centrality(g)
    with _open_out(args.output) as fh:
        write_values(g.labels, c.values.tolist(), args.measure, fh)


def cmd_regress(args, out: TextIO) -> None:
    with open(args.embedding, encoding="utf-8") as fh:
        e = EmbeddingMatrix.read_csv(fh)
    with open(args.target, encoding="utf-8") as fh:
        target = read_values(fh)
    missing = [label for label in e.node_order if label not in target]
    if missing:
        raise ValueError(f"no target value for nodes {missing[:10]}")
    y = np.array([target[label] for label in e.node_order])
    results = repeated_regression(e, y, args.repeats, args.test_fraction, args.seed, args.normalize)
    scores = np.array([r.nmse for r in results])
    for r in results:
        print(f"seed={r.seed} nmse={r.nmse!r}", file=out)
    print(f"mean_nmse={float(scores.mean())!r} std={float(scores.std())!r} repeats={len(scores)}", file=out)


def cmd_pca_coords(args, out: TextIO) -> None:
    with open(args.embedding, encoding="utf-8") as fh:
        e = EmbeddingMatrix.read_csv(fh)
    pca = pca_2d(e)
    if pca.degenerate:
        print("warning: fewer than two directions of variance; missing coordinates are 0", file=sys.stderr)
    with _open_out(args.output) as fh:
        fh.write("node,pc1,pc2\n")
        for label, (x, y) in zip(e.node_order, pca.coords.tolist()):
            fh.write(f"{label},{x!r},{y!r}\n")


def cmd_oracle_compare(args, out: TextIO) -> None:
    g = _read_graph(args.input)
    init = make_initial_partition(g)
    fast = refine(g, init, 0)
    slow = coarsest_equitable_partition_naive(g, init)
    agree = fast == slow
    print(f"n={g.n} m={g.m} refine_blocks={fast.num_blocks} oracle_blocks={slow.num_blocks} "
          f"agree={'yes' if agree else 'no'}", file=out)
    if not agree:
        raise CheckFailed("refinement and oracle disagree")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="roleembed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def schedule_flags(p):
        p.add_argument("--input", required=True, help="edge list file")
        p.add_argument("--preset", choices=sorted(PRESETS), help="tolerance schedule preset")
        p.add_argument("--eps0", type=int, help="initial tolerance (default 0)")
        p.add_argument("--delta", type=int, help="tolerance step (default 1)")
        p.add_argument("--max-eps", type=int, help="largest tolerance, inclusive")
        p.add_argument("--one-shot", action="store_true", help="refine once at --max-eps")

    p = sub.add_parser("reduce", help="compute a partition")
    schedule_flags(p)
    p.add_argument("--output", help="partition TSV")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("embed", help="compute the block-count embedding")
    schedule_flags(p)
    p.add_argument("--output", help="embedding CSV (default stdout)")
    p.add_argument("--partition-output", help="also write the partition TSV")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("check", help="verify a partition against a tolerance")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--eps", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("centrality", help="eigenvector or betweenness centrality")
    p.add_argument("--input", required=True)
    p.add_argument("--measure", choices=["eigenvector", "betweenness"], required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("regress", help="linear regression of a node target on an embedding")
    p.add_argument("--embedding", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--normalize", choices=["test", "global"], default="test")
    p.set_defaults(func=cmd_regress)

    p = sub.add_parser("pca-coords", help="2-D PCA coordinates of an embedding")
    p.add_argument("--embedding", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_pca_coords)

    p = sub.add_parser("oracle-compare", help="compare refinement with the naive oracle at eps=0")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv=None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        args.func(args, out)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
