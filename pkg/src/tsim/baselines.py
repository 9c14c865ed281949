"""Jaccard, cosine and Euclidean-distance similarities over transaction vectors.

All three return 0 when the needed norm or union is empty.
"""

from __future__ import annotations

import math

import numpy as np

from .model import TransactionVector


def jaccard(v_i: TransactionVector, v_j: TransactionVector) -> float:
    inter = sum(1 for a, b in zip(v_i.presence, v_j.presence) if a and b)
    union = sum(1 for a, b in zip(v_i.presence, v_j.presence) if a or b)
    return inter / union if union else 0.0


def cosine(v_i: TransactionVector, v_j: TransactionVector) -> float:
    dot = sum(a * b for a, b in zip(v_i.counts, v_j.counts))
    na = sum(a * a for a in v_i.counts)
    nb = sum(b * b for b in v_j.counts)
    if na == 0 or nb == 0:
        return 0.0
    # sqrt of the integer product keeps identical vectors at exactly 1.
    return dot / math.sqrt(na * nb)


def euclidean_sim(v_i: TransactionVector, v_j: TransactionVector) -> float:
    d2 = sum((a - b) * (a - b) for a, b in zip(v_i.counts, v_j.counts))
    return 1.0 / (1.0 + math.sqrt(d2))


def pairwise(counts: np.ndarray, measure: str) -> np.ndarray:
    """Vectorized all-pairs version of the functions above.

    Integer arithmetic is used wherever it is exact, so every cell equals the
    scalar function's result.
    """
    c = np.asarray(counts, dtype=np.int64)
    if measure == "jaccard":
        p = (c > 0).astype(np.int64)
        inter = p @ p.T
        size = p.sum(axis=1)
        union = size[:, None] + size[None, :] - inter
        out = np.zeros(inter.shape)
        np.divide(inter, union, out=out, where=union > 0)
        return out
    if measure == "cosine":
        dot = c @ c.T
        sq = (c * c).sum(axis=1)
        prod = sq[:, None] * sq[None, :]
        out = np.zeros(dot.shape)
        np.divide(dot, np.sqrt(prod.astype(np.float64)), out=out, where=prod > 0)
        return out
    if measure == "euclidean":
        sq = (c * c).sum(axis=1)
        d2 = sq[:, None] + sq[None, :] - 2 * (c @ c.T)
        return 1.0 / (1.0 + np.sqrt(d2.astype(np.float64)))
    raise ValueError(f"unknown measure: {measure!r}")
