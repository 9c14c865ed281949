"""Item catalog, transaction vectors and the immutable dataset.

A dataset fixes an ordered item catalog and encodes every transaction as a
vector of per-item counts plus presence flags over that catalog.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import DatasetError, NotFoundError


class Mode(str, Enum):
    BINARY = "binary"
    COUNTED = "counted"


@dataclass(frozen=True)
class ItemCatalog:
    """Ordered, fixed set of item identifiers."""

    items: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        items = tuple(self.items)
        if not items:
            raise DatasetError("catalog must contain at least one item")
        for item in items:
            if not isinstance(item, str) or not item:
                raise DatasetError(f"invalid item identifier: {item!r}")
        if len(set(items)) != len(items):
            raise DatasetError("item identifiers must be unique")
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "index", {item: k for k, item in enumerate(items)})

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


@dataclass(frozen=True)
class TransactionVector:
    """Counts and presence flags of one transaction over a catalog."""

    tid: str
    counts: tuple[int, ...]
    presence: tuple[bool, ...]

    def __post_init__(self):
        if len(self.counts) != len(self.presence):
            raise DatasetError(f"{self.tid}: counts and presence lengths differ")
        for c, e in zip(self.counts, self.presence):
            if c < 0:
                raise DatasetError(f"{self.tid}: negative count {c}")
            if bool(e) != (c >= 1):
                raise DatasetError(f"{self.tid}: presence flag disagrees with count {c}")

    @classmethod
    def from_counts(cls, tid: str, counts: Iterable[int]) -> TransactionVector:
        counts = tuple(int(c) for c in counts)
        return cls(tid, counts, tuple(c >= 1 for c in counts))

    @property
    def is_empty(self) -> bool:
        return not any(self.presence)


@dataclass(frozen=True)
class Dataset:
    """Immutable collection of transactions sharing one catalog."""

    catalog: ItemCatalog
    transactions: tuple[TransactionVector, ...]
    mode: Mode
    _by_tid: dict[str, int] = field(init=False, repr=False, compare=False)
    _counts: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        transactions = tuple(self.transactions)
        m = len(self.catalog)
        by_tid = {}
        for pos, vec in enumerate(transactions):
            if vec.tid in by_tid:
                raise DatasetError(f"duplicate transaction id: {vec.tid!r}")
            if len(vec.counts) != m:
                raise DatasetError(
                    f"{vec.tid}: vector length {len(vec.counts)} != catalog size {m}"
                )
            if self.mode == Mode.BINARY and any(c > 1 for c in vec.counts):
                raise DatasetError(f"{vec.tid}: count > 1 in a binary dataset")
            by_tid[vec.tid] = pos
        counts = np.array([vec.counts for vec in transactions], dtype=np.int64)
        counts = counts.reshape(len(transactions), m)
        counts.setflags(write=False)
        object.__setattr__(self, "transactions", transactions)
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "_by_tid", by_tid)
        object.__setattr__(self, "_counts", counts)

    @property
    def ids(self) -> list[str]:
        return [vec.tid for vec in self.transactions]

    @property
    def counts(self) -> np.ndarray:
        """Read-only (n, m) integer count matrix in dataset and catalog order."""
        return self._counts

    def __len__(self):
        return len(self.transactions)

    def __contains__(self, tid):
        return tid in self._by_tid

    def position(self, tid: str) -> int:
        try:
            return self._by_tid[tid]
        except KeyError:
            raise NotFoundError(f"unknown transaction id: {tid!r}") from None

    def to_records(self) -> list[tuple[str, list[tuple[str, int]]]]:
        """Inverse of :func:`build_dataset` (absent items omitted)."""
        items = self.catalog.items
        return [
            (vec.tid, [(items[k], c) for k, c in enumerate(vec.counts) if c])
            for vec in self.transactions
        ]


def build_dataset(records: Sequence[tuple[str, Iterable[tuple[str, int]]]]) -> Dataset:
    """Materialize a dataset from ``(tid, [(item, count), ...])`` records.

    The catalog is the sorted union of all items seen. Repeated items within a
    record have their counts summed. A record with no items is kept as an
    all-absent transaction. The dataset is binary iff every count is 1.
    """
    if not records:
        raise DatasetError("no transaction records given")
    seen = set()
    merged: list[tuple[str, OrderedDict]] = []
    items = set()
    for tid, pairs in records:
        tid = str(tid)
        if not tid:
            raise DatasetError("empty transaction id")
        if tid in seen:
            raise DatasetError(f"duplicate transaction id: {tid!r}")
        seen.add(tid)
        bag = OrderedDict()
        for item, count in pairs:
            if isinstance(count, bool) or int(count) != count:
                raise DatasetError(f"{tid}: non-integer count {count!r} for {item!r}")
            if count < 1:
                raise DatasetError(f"{tid}: count must be >= 1, got {count} for {item!r}")
            bag[item] = bag.get(item, 0) + int(count)
        items.update(bag)
        merged.append((tid, bag))
    if not items:
        raise DatasetError("no items in any transaction; catalog would be empty")

    catalog = ItemCatalog(tuple(sorted(items)))
    binary = all(c == 1 for _, bag in merged for c in bag.values())
    vectors = []
    for tid, bag in merged:
        counts = [0] * len(catalog)
        for item, c in bag.items():
            counts[catalog.index[item]] = c
        vectors.append(TransactionVector.from_counts(tid, counts))
    return Dataset(catalog, tuple(vectors), Mode.BINARY if binary else Mode.COUNTED)


def dataset_from_matrix(
    items: Sequence[str], tids: Sequence[str], counts: Sequence[Sequence[int]]
) -> Dataset:
    """Build a dataset from a dense count matrix, keeping the given item order."""
    catalog = ItemCatalog(tuple(items))
    vectors = tuple(TransactionVector.from_counts(t, row) for t, row in zip(tids, counts))
    if len(vectors) != len(tids) or len(counts) != len(tids):
        raise DatasetError("number of rows and transaction ids differ")
    if not vectors:
        raise DatasetError("no transactions")
    binary = all(c <= 1 for vec in vectors for c in vec.counts)
    return Dataset(catalog, vectors, Mode.BINARY if binary else Mode.COUNTED)


def get_vector(ds: Dataset, tid: str) -> TransactionVector:
    return ds.transactions[ds.position(tid)]
