"""Gaussian transaction similarity (TSIM) and pairwise similarity matrices.

For a pair of transactions every catalog item contributes

* ``alpha = 0.5 * (1 + exp(-g**2))`` when the item is in both,
* ``alpha = -exp(-g**2)`` when it is in exactly one,
* ``alpha = 0`` when it is in neither,

with ``g = |count_i - count_j| / sigma_k`` and ``sigma_k`` the standard
deviation of item ``k`` over the dataset. ``beta`` is 1 for items present in
at least one transaction. Then ``S = sum(alpha) / sum(beta)`` (``-1`` when no
item is present in either) and ``TSIM = (S + 1) / (lam + 1)``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import baselines
from .errors import ComputeError
from .model import Dataset, get_vector
from .sequence import Phi, SequenceVector, sequence_vector


class StdMode(str, Enum):
    SAMPLE = "sample"
    POPULATION = "population"


class Measure(str, Enum):
    TSIM = "tsim"
    JACCARD = "jaccard"
    COSINE = "cosine"
    EUCLIDEAN = "euclidean"


@dataclass(frozen=True)
class SimilarityConfig:
    """``lam`` is the bias constant in the denominator of TSIM (1 by default)."""

    lam: float = 1.0
    std_mode: StdMode = StdMode.SAMPLE
    measure: Measure = Measure.TSIM

    def __post_init__(self):
        if not self.lam > 0 or not math.isfinite(self.lam):
            raise ValueError(f"lam must be a positive finite number, got {self.lam!r}")
        object.__setattr__(self, "std_mode", StdMode(self.std_mode))
        object.__setattr__(self, "measure", Measure(self.measure))


@dataclass(frozen=True)
class ItemStats:
    sigma: np.ndarray
    n: int

    def __post_init__(self):
        sigma = np.asarray(self.sigma, dtype=np.float64)
        if np.any(sigma < 0):
            raise ValueError("sigma must be non-negative")
        sigma.setflags(write=False)
        object.__setattr__(self, "sigma", sigma)


@dataclass(frozen=True)
class SimilarityMatrix:
    ids: tuple[str, ...]
    values: np.ndarray
    measure: str

    _pos: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ids = tuple(self.ids)
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != (len(ids), len(ids)):
            raise ComputeError(f"matrix shape {values.shape} does not match {len(ids)} ids")
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "measure", str(getattr(self.measure, "value", self.measure)))
        object.__setattr__(self, "_pos", {tid: k for k, tid in enumerate(ids)})

    def __getitem__(self, pair):
        i, j = pair
        return float(self.values[self._pos[i], self._pos[j]])

    def pairs(self):
        """Yield ``(id_i, id_j, value)`` over the strict upper triangle."""
        n = len(self.ids)
        for a in range(n):
            for b in range(a + 1, n):
                yield self.ids[a], self.ids[b], float(self.values[a, b])


def compute_stats(ds: Dataset, cfg: SimilarityConfig | None = None) -> ItemStats:
    cfg = cfg or SimilarityConfig()
    n = len(ds)
    if n < 2:
        raise ComputeError(f"need at least 2 transactions for item statistics, got {n}")
    ddof = 1 if cfg.std_mode == StdMode.SAMPLE else 0
    sigma = np.std(ds.counts.astype(np.float64), axis=0, ddof=ddof)
    return ItemStats(sigma, n)


def gaussian_weight(d: float, sigma_k: float) -> float:
    """``exp(-(d/sigma_k)**2)``, defined as 1 for ``d == 0`` and 0 for ``sigma_k == 0``."""
    if d == 0:
        return 1.0
    if sigma_k == 0:
        return 0.0
    g = abs(d) / sigma_k
    return math.exp(-g * g)


def alpha(entry: tuple[int, Phi], sigma_k: float) -> float:
    d, p = entry
    if p is Phi.BOTH_ABSENT:
        return 0.0
    w = gaussian_weight(d, sigma_k)
    if p is Phi.MATCH:
        return 0.5 * (1.0 + w)
    return -w


def beta(entry: tuple[int, Phi]) -> float:
    return 0.0 if entry[1] is Phi.BOTH_ABSENT else 1.0


def s_alpha_beta(sv: SequenceVector, stats: ItemStats) -> float:
    if len(sv) != len(stats.sigma):
        raise ComputeError("sequence vector and item statistics have different lengths")
    num = 0.0
    den = 0.0
    for entry, sigma_k in zip(sv.entries, stats.sigma):
        num += alpha(entry, float(sigma_k))
        den += beta(entry)
    if den == 0:
        return -1.0
    return num / den


def tsim(
    ds: Dataset,
    stats: ItemStats,
    cfg: SimilarityConfig | None,
    tid_i: str,
    tid_j: str,
) -> float:
    cfg = cfg or SimilarityConfig()
    s = s_alpha_beta(sequence_vector(ds, tid_i, tid_j), stats)
    return (s + 1.0) / (cfg.lam + 1.0)


def pair_similarity(
    ds: Dataset, cfg: SimilarityConfig, tid_i: str, tid_j: str, stats: ItemStats | None = None
) -> float:
    """Scalar similarity of one pair under any configured measure."""
    if cfg.measure == Measure.TSIM:
        return tsim(ds, stats or compute_stats(ds, cfg), cfg, tid_i, tid_j)
    fn = {
        Measure.JACCARD: baselines.jaccard,
        Measure.COSINE: baselines.cosine,
        Measure.EUCLIDEAN: baselines.euclidean_sim,
    }[cfg.measure]
    return fn(get_vector(ds, tid_i), get_vector(ds, tid_j))


# Max cells of each (block, n) scratch array in the TSIM kernel.
_BLOCK_ELEMENTS = 1 << 20


def _tsim_rows(columns, sigma, lam, rows):
    """TSIM for matrix rows ``rows`` against all columns.

    ``columns`` is the (m, n) transposed count matrix. Items are accumulated
    one at a time in catalog order, exactly as the scalar path does.
    """
    num = None
    den = None
    for col, s in zip(columns, sigma):
        ci = col[rows, None]
        cj = col[None, :]
        diff = np.abs(ci - cj)
        pi = ci > 0
        pj = cj > 0
        either = pi | pj
        if s > 0:
            g = diff / s
            w = np.exp(-(g * g))
            w[diff == 0] = 1.0
        else:
            w = (diff == 0).astype(np.float64)
        a = np.where(pi & pj, 0.5 * (1.0 + w), np.where(either, -w, 0.0))
        if num is None:
            num = 0.0 + a
            den = either.astype(np.float64)
        else:
            num += a
            den += either
    s_val = np.full(num.shape, -1.0)
    np.divide(num, den, out=s_val, where=den > 0)
    return (s_val + 1.0) / (lam + 1.0)


def _tsim_matrix(ds, stats, cfg, workers):
    columns = np.ascontiguousarray(ds.counts.T, dtype=np.float64)
    m, n = columns.shape
    block = max(1, _BLOCK_ELEMENTS // max(1, n))
    starts = range(0, n, block)
    out = np.empty((n, n))

    def run(start):
        rows = slice(start, min(n, start + block))
        out[rows] = _tsim_rows(columns, stats.sigma, cfg.lam, rows)

    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, starts))
    else:
        for start in starts:
            run(start)
    return out


def similarity_matrix(
    ds: Dataset,
    cfg: SimilarityConfig | None = None,
    stats: ItemStats | None = None,
    workers: int = 1,
) -> SimilarityMatrix:
    """All-pairs similarity under ``cfg.measure``.

    Row blocks are independent and may be evaluated by ``workers`` threads;
    each cell is computed by the same arithmetic regardless, so the output
    does not depend on the worker count.
    """
    cfg = cfg or SimilarityConfig()
    if len(ds) < 2:
        raise ComputeError(f"need at least 2 transactions, got {len(ds)}")
    if cfg.measure == Measure.TSIM:
        stats = stats or compute_stats(ds, cfg)
        values = _tsim_matrix(ds, stats, cfg, workers)
    else:
        values = baselines.pairwise(ds.counts, cfg.measure.value)
    # Mirror the upper triangle so symmetry holds exactly.
    upper = np.triu(values)
    values = upper + np.triu(values, 1).T
    return SimilarityMatrix(tuple(ds.ids), values, cfg.measure.value)
