"""Structural node embeddings from approximate equitable partitions."""

from .embed import EmbeddingMatrix, build_embedding, check_eps_be
from .evaluation import (
    CentralityVector,
    PCACoordinates,
    RegressionResult,
    betweenness_centrality,
    eigenvector_centrality,
    fit_regression,
    pca_2d,
    repeated_regression,
)
from .graph import (
    Graph,
    ParseError,
    Partition,
    degree,
    dump_edge_list,
    from_edges,
    load_edge_list,
    load_labels,
    make_initial_partition,
    read_partition,
    write_partition,
)
from .iterative import EpsSchedule, iter_refinements, iterative_refine, join_singletons
from .refine import accumulate_weights, possible_majority_candidate, refine, split_block

__version__ = "0.1.0"
