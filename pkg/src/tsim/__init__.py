"""Gaussian transaction similarity for market-basket data.

Build a :class:`Dataset` from transactions, compute per-item statistics,
pairwise similarity matrices (TSIM and Jaccard/cosine/Euclidean baselines),
and threshold-graph clusterings.
"""

__version__ = "0.1.0"

from .errors import ComputeError, DatasetError, NotFoundError, ParseError, TsimError
from .model import Dataset, ItemCatalog, Mode, TransactionVector, build_dataset, dataset_from_matrix, get_vector
from .sequence import Phi, SequenceVector, delta, phi, sequence_vector
from .similarity import (
    ItemStats,
    Measure,
    SimilarityConfig,
    SimilarityMatrix,
    StdMode,
    alpha,
    beta,
    compute_stats,
    s_alpha_beta,
    similarity_matrix,
    tsim,
)
from .baselines import cosine, euclidean_sim, jaccard
from .clustering import Clustering, threshold_cluster, threshold_sweep
from .io import parse_basket_file, parse_matrix_file, read_matrix, write_clusters, write_matrix

__all__ = [
    "ComputeError", "DatasetError", "NotFoundError", "ParseError", "TsimError",
    "Dataset", "ItemCatalog", "Mode", "TransactionVector", "build_dataset",
    "dataset_from_matrix", "get_vector",
    "Phi", "SequenceVector", "delta", "phi", "sequence_vector",
    "ItemStats", "Measure", "SimilarityConfig", "SimilarityMatrix", "StdMode",
    "alpha", "beta", "compute_stats", "s_alpha_beta", "similarity_matrix", "tsim",
    "cosine", "euclidean_sim", "jaccard",
    "Clustering", "threshold_cluster", "threshold_sweep",
    "parse_basket_file", "parse_matrix_file", "read_matrix", "write_clusters", "write_matrix",
]
