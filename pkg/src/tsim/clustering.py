"""Threshold-graph clustering of a similarity matrix.

Two transactions are linked when their similarity is at least the threshold;
clusters are the connected components of that graph (single-link at a fixed
cut). Members and clusters are ordered by position in the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import ComputeError
from .similarity import SimilarityMatrix

DEFAULT_THRESHOLD = 0.8


@dataclass(frozen=True)
class Clustering:
    threshold: float
    clusters: tuple[tuple[str, ...], ...]
    measure: str

    def __len__(self):
        return len(self.clusters)

    def as_sets(self) -> list[frozenset[str]]:
        return [frozenset(c) for c in self.clusters]


def validate_matrix(matrix: SimilarityMatrix, atol: float = 0.0) -> None:
    v = matrix.values
    if not np.all(np.isfinite(v)):
        raise ComputeError("similarity matrix contains non-finite values")
    if np.any(v < 0) or np.any(v > 1):
        raise ComputeError("similarity matrix entries must lie in [0, 1]")
    if not np.allclose(v, v.T, rtol=0, atol=atol):
        raise ComputeError("similarity matrix is not symmetric")


def threshold_cluster(matrix: SimilarityMatrix, threshold: float = DEFAULT_THRESHOLD) -> Clustering:
    if not 0 <= threshold <= 1:
        raise ComputeError(f"threshold must lie in [0, 1], got {threshold}")
    validate_matrix(matrix)
    adj = matrix.values >= threshold
    np.fill_diagonal(adj, False)
    _, labels = connected_components(csr_matrix(adj), directed=False)
    # Relabel components by the first member in matrix order.
    groups: dict[int, list[str]] = {}
    for pos, label in enumerate(labels):
        groups.setdefault(int(label), []).append(matrix.ids[pos])
    clusters = tuple(tuple(members) for members in groups.values())
    return Clustering(float(threshold), clusters, matrix.measure)


def threshold_sweep(matrix: SimilarityMatrix, steps: int = 10) -> list[tuple[float, Clustering]]:
    """Cluster at thresholds ``k / steps`` for ``k = 0..steps``."""
    if int(steps) != steps or steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps!r}")
    return [(k / steps, threshold_cluster(matrix, k / steps)) for k in range(steps + 1)]
