"""The nine-transaction grocery example: data, published results, errata.

``PUBLISHED_MATRIX`` is the upper triangle of the similarity matrix as it
was printed. ``PRINTED_DERIVATIONS`` holds the per-pair worked arithmetic as
printed: sequence vector, alpha sum, beta sum, the intermediate ``S`` where
one was shown, and the final value. Items are in the order
bread, butter, jam, coffee, milk.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

from .model import Dataset
from .sequence import parse_sequence_vector, sequence_vector
from .similarity import SimilarityConfig, SimilarityMatrix, compute_stats, similarity_matrix

ITEMS = ("bread", "butter", "jam", "coffee", "milk")
IDS = tuple(f"T{k}" for k in range(1, 10))

BASKETS = {
    "T1": ("bread", "butter", "jam"),
    "T2": ("jam", "coffee", "milk"),
    "T3": ("butter", "jam", "coffee", "milk"),
    "T4": ("bread", "butter", "jam", "milk"),
    "T5": ("jam", "coffee"),
    "T6": ("bread", "butter", "milk"),
    "T7": ("bread", "butter", "coffee"),
    "T8": ("butter", "coffee"),
    "T9": ("butter", "jam", "milk"),
}

PUBLISHED_ROWS = {
    "T1": (0.59122, 0.6918, 0.8715, 0.6158, 0.7442, 0.7442, 0.6158, 0.7431),
    "T2": (0.8651, 0.6894, 0.6545, 0.5948, 0.5948, 0.6152, 0.7402),
    "T3": (0.7894, 0.7402, 0.6894, 0.6894, 0.7402, 0.8652),
    "T4": (0.5894, 0.8652, 0.6894, 0.5894, 0.8652),
    "T5": (0.4949, 0.6152, 0.6581, 0.6152),
    "T6": (0.7390, 0.6140, 0.7402),
    "T7": (0.8233, 0.5894),
    "T8": (0.6152,),
}

PUBLISHED_CLUSTERS = (
    ("T1", "T2", "T3", "T4", "T6", "T9"),
    ("T7", "T8"),
    ("T5",),
)


class Derivation(NamedTuple):
    sequence: str
    alpha_sum: float
    beta_sum: int
    s_value: float | None
    tsim: float


PRINTED_DERIVATIONS = {
    ("T1", "T2"): Derivation("⟨(1,0),(1,0),(0,1),(1,0),(1,0)⟩", 0.9122, 5, 0.18244, 0.59122),
    ("T1", "T3"): Derivation("⟨(1,0),(0,1),(0,1),(1,0),(1,0)⟩", 1.91804, 5, None, 0.691804),
    ("T1", "T4"): Derivation("⟨(0,1),(0,1),(0,1),(0,U),(1,0)⟩", 2.97268, 4, 0.74317, 0.871585),
    ("T1", "T5"): Derivation("⟨(1,0),(1,0),(0,1),(1,0),(0,U)⟩", 0.92704, 4, 0.23176, 0.61588),
    ("T1", "T6"): Derivation("⟨(0,1),(0,1),(1,0),(0,U),(1,0)⟩", 1.95436, 4, 0.48859, 0.744295),
    ("T1", "T7"): Derivation("⟨(0,1),(0,1),(1,0),(1,0),(0,U)⟩", 1.95436, 4, 0.48859, 0.744295),
    ("T1", "T8"): Derivation("⟨(1,0),(0,1),(1,0),(1,0),(0,U)⟩", 0.92704, 4, 0.23716, 0.61588),
    ("T1", "T9"): Derivation("⟨(1,0),(0,1),(0,1),(0,U),(1,0)⟩", 1.94536, 4, 0.48634, 0.74317),
    ("T2", "T3"): Derivation("⟨(0,U),(1,0),(0,1),(0,1),(0,1)⟩", 2.9213, 4, None, 0.8651625),
    ("T2", "T4"): Derivation("⟨(1,0),(1,0),(0,1),(1,0),(0,1)⟩", 1.8940, 5, None, 0.6894),
    ("T2", "T5"): Derivation("⟨(0,U),(0,U),(1,0),(1,0),(0,1)⟩", 0.9271, 3, None, 0.6545),
    ("T2", "T6"): Derivation("⟨(1,0),(1,0),(1,0),(1,0),(0,1)⟩", 0.9486, 5, None, 0.59486),
    ("T2", "T7"): Derivation("⟨(1,0),(1,0),(1,0),(0,1),(1,0)⟩", 0.9486, 5, None, 0.59486),
    ("T2", "T8"): Derivation("⟨(0,U),(1,0),(1,0),(0,1),(1,0)⟩", 0.9213, 4, None, 0.6152),
    ("T2", "T9"): Derivation("⟨(0,U),(1,0),(0,1),(1,0),(0,1)⟩", 1.9213, 4, None, 0.7402),
    ("T3", "T4"): Derivation("⟨(1,0),(0,1),(0,1),(1,0),(0,1)⟩", 2.8940, 5, None, 0.7894),
    ("T3", "T5"): Derivation("⟨(0,U),(1,0),(0,1),(0,1),(1,0)⟩", 1.9213, 4, None, 0.7402),
    ("T3", "T6"): Derivation("⟨(1,0),(0,1),(1,0),(1,0),(0,1)⟩", 1.8940, 5, None, 0.6894),
    ("T3", "T7"): Derivation("⟨(1,0),(0,1),(1,0),(0,1),(1,0)⟩", 1.8940, 5, None, 0.6894),
    ("T3", "T8"): Derivation("⟨(0,U),(0,1),(1,0),(0,1),(1,0)⟩", 1.9213, 4, None, 0.7402),
    ("T3", "T9"): Derivation("⟨(0,U),(0,1),(0,1),(1,0),(0,1)⟩", 2.9213, 4, None, 0.8652),
    ("T4", "T5"): Derivation("⟨(1,0),(1,0),(0,1),(1,0),(1,0)⟩", 0.8940, 5, None, 0.5894),
    ("T4", "T6"): Derivation("⟨(0,1),(0,1),(1,0),(0,U),(0,1)⟩", 2.9213, 4, None, 0.8652),
    ("T4", "T7"): Derivation("⟨(0,1),(0,1),(1,0),(1,0),(1,0)⟩", 1.8940, 5, None, 0.6894),
    ("T4", "T8"): Derivation("⟨(1,0),(0,1),(1,0),(1,0),(1,0)⟩", 0.8940, 5, None, 0.5894),
    ("T4", "T9"): Derivation("⟨(1,0),(0,1),(0,1),(0,U),(0,1)⟩", 2.9213, 4, None, 0.8652),
    ("T5", "T6"): Derivation("⟨(1,0),(1,0),(1,0),(1,0),(1,0)⟩", -0.0514, 5, None, 0.4949),
    ("T5", "T7"): Derivation("⟨(1,0),(1,0),(1,0),(0,1),(0,U)⟩", 0.9213, 4, None, 0.6152),
    ("T5", "T8"): Derivation("⟨(0,U),(1,0),(1,0),(0,1),(0,U)⟩", 0.9486, 3, None, 0.6581),
    ("T5", "T9"): Derivation("⟨(0,U),(1,0),(0,1),(1,0),(1,0)⟩", 0.9213, 4, None, 0.6152),
    ("T6", "T7"): Derivation("⟨(0,1),(0,1),(0,U),(1,0),(1,0)⟩", 1.9123, 4, None, 0.7390),
    ("T6", "T8"): Derivation("⟨(1,0),(0,1),(0,U),(1,0),(1,0)⟩", 0.9123, 4, None, 0.6140),
    ("T6", "T9"): Derivation("⟨(1,0),(0,1),(1,0),(0,U),(0,1)⟩", 1.9213, 4, None, 0.7402),
    ("T7", "T8"): Derivation("⟨(1,0),(0,1),(0,U),(0,1),(0,U)⟩", 1.9396, 3, None, 0.8233),
    ("T7", "T9"): Derivation("⟨(1,0),(0,1),(1,0),(1,0),(1,0)⟩", 0.8940, 5, None, 0.5894),
    ("T8", "T9"): Derivation("⟨(0,U),(0,1),(1,0),(1,0),(1,0)⟩", 0.9213, 4, None, 0.6152),
}

# Printed values carry 4-6 decimals; anything closer than this is a rounding match.
ARITHMETIC_TOL = 5e-4
ERRATA_TOL = 5e-4


def published_value(tid_i: str, tid_j: str) -> float:
    a, b = sorted((IDS.index(tid_i), IDS.index(tid_j)))
    if a == b:
        raise KeyError("the published matrix has no diagonal")
    return PUBLISHED_ROWS[IDS[a]][b - a - 1]


def published_matrix() -> SimilarityMatrix:
    """The printed upper triangle mirrored to a full matrix, unit diagonal."""
    n = len(IDS)
    values = [[1.0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            values[a][b] = values[b][a] = published_value(IDS[a], IDS[b])
    return SimilarityMatrix(IDS, values, "tsim")


def data_text(name: str) -> str:
    return resources.files("tsim").joinpath("data", name).read_text(encoding="utf-8")


def data_path(name: str):
    return resources.files("tsim").joinpath("data", name)


def load_case_study(form: str = "matrix") -> Dataset:
    """Load the bundled dataset, as the dense matrix (item order as printed)
    or from the long-form basket file (items sorted)."""
    from .io import parse_basket_file, parse_matrix_file

    if form == "matrix":
        return parse_matrix_file(data_text("case_study_matrix.csv"))
    if form == "basket":
        return parse_basket_file(data_text("case_study_baskets.csv"))
    raise ValueError(f"unknown form {form!r}")


def is_case_study(ds: Dataset) -> bool:
    """True when ``ds`` holds exactly the bundled transactions, in any item order."""
    if tuple(ds.ids) != IDS:
        return False
    items = ds.catalog.items
    for vec in ds.transactions:
        present = {items[k]: c for k, c in enumerate(vec.counts) if c}
        if present != {item: 1 for item in BASKETS[vec.tid]}:
            return False
    return True


@dataclass(frozen=True)
class ErrataRow:
    pair: tuple[str, str]
    paper_value: float
    computed_value: float
    abs_diff: float
    verified: bool
    erratum: bool


def _reorder(ds: Dataset) -> Dataset:
    from .model import dataset_from_matrix

    idx = [ds.catalog.index[item] for item in ITEMS]
    return dataset_from_matrix(ITEMS, ds.ids, [[vec.counts[k] for k in idx] for vec in ds.transactions])


def verify_derivation(ds: Dataset, pair: tuple[str, str], stats=None) -> bool:
    """Check one printed worked example against the formulas.

    A derivation is consistent when its sequence vector matches the data,
    its beta sum is right, and its alpha sum, intermediate ``S`` (if shown)
    and final value agree with the formulas to printing precision.
    """
    from .similarity import alpha, beta

    ds = _reorder(ds)
    stats = stats or compute_stats(ds)
    printed = PRINTED_DERIVATIONS[pair]
    sv = sequence_vector(ds, *pair)
    if parse_sequence_vector(printed.sequence) != list(sv.entries):
        return False
    a = 0.0
    b = 0.0
    for entry, sigma_k in zip(sv.entries, stats.sigma):
        a += alpha(entry, float(sigma_k))
        b += beta(entry)
    if b != printed.beta_sum or abs(a - printed.alpha_sum) > ARITHMETIC_TOL:
        return False
    s = a / b
    if printed.s_value is not None and abs(s - printed.s_value) > ARITHMETIC_TOL:
        return False
    return abs((s + 1) / 2 - printed.tsim) <= ARITHMETIC_TOL


def errata_report(ds: Dataset | None = None) -> list[ErrataRow]:
    """Compare the recomputed matrix (sample sigma, lam = 1) with the printed one.

    Every upper-triangle cell is reported; ``erratum`` marks cells that
    differ by more than ``ERRATA_TOL`` and ``verified`` marks cells whose
    printed worked arithmetic is self-consistent.
    """
    ds = ds if ds is not None else load_case_study()
    if not is_case_study(ds):
        raise ValueError("dataset is not the bundled case study")
    cfg = SimilarityConfig()
    stats = compute_stats(ds, cfg)
    computed = similarity_matrix(ds, cfg, stats)
    reordered_stats = compute_stats(_reorder(ds), cfg)
    rows = []
    for a in range(len(IDS)):
        for b in range(a + 1, len(IDS)):
            pair = (IDS[a], IDS[b])
            printed = published_value(*pair)
            value = computed[pair]
            diff = abs(value - printed)
            rows.append(
                ErrataRow(
                    pair,
                    printed,
                    value,
                    diff,
                    verify_derivation(ds, pair, reordered_stats),
                    diff > ERRATA_TOL,
                )
            )
    return rows


def write_errata(rows: list[ErrataRow]) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["pair", "paper_value", "computed_value", "abs_diff", "verified", "erratum"])
    for r in rows:
        w.writerow(
            [
                f"{r.pair[0]}-{r.pair[1]}",
                f"{r.paper_value:.6f}",
                f"{r.computed_value:.6f}",
                f"{r.abs_diff:.6f}",
                str(r.verified).lower(),
                str(r.erratum).lower(),
            ]
        )
    return buf.getvalue().encode("utf-8")
