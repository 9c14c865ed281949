"""CSV/JSON readers and writers for datasets, matrices and clusterings.

Input formats
-------------
basket
    Long form, header ``transaction_id,item[,count]``, one (transaction,
    item) pair per row. A missing count means 1.
matrix
    Dense form, first row is ``<anything>,item_1,...,item_m``, then one row
    per transaction: ``tid,c_1,...,c_m`` with non-negative integer cells.
"""

from __future__ import annotations

import csv
import io
import json
from collections import OrderedDict

from .clustering import Clustering
from .errors import DatasetError, ParseError
from .model import Dataset, build_dataset, dataset_from_matrix
from .similarity import ItemStats, SimilarityMatrix

BASKET_HEADERS = (["transaction_id", "item"], ["transaction_id", "item", "count"])


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        try:
            return bytes(data).decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}", line=1) from None
    return data


def _rows(text):
    reader = csv.reader(io.StringIO(text))
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        yield reader.line_num, [cell.strip() for cell in row]


def _int_cell(cell, line, what, path):
    try:
        return int(cell)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {cell!r}", line=line, path=path) from None


def parse_basket_file(data, path=None) -> Dataset:
    rows = _rows(_text(data))
    try:
        line, header = next(rows)
    except StopIteration:
        raise ParseError("empty file", line=1, path=path) from None
    header = [h.lower() for h in header]
    if header not in BASKET_HEADERS:
        raise ParseError(
            "header must be 'transaction_id,item' or 'transaction_id,item,count'",
            line=line,
            path=path,
        )
    width = len(header)
    grouped: OrderedDict[str, list] = OrderedDict()
    for line, row in rows:
        if len(row) != width:
            raise ParseError(f"expected {width} fields, got {len(row)}", line=line, path=path)
        tid, item = row[0], row[1]
        if not tid or not item:
            raise ParseError("empty transaction id or item", line=line, path=path)
        count = 1
        if width == 3:
            count = _int_cell(row[2], line, "count", path)
            if count < 1:
                raise ParseError(f"count must be >= 1, got {count}", line=line, path=path)
        grouped.setdefault(tid, []).append((item, count))
    if not grouped:
        raise ParseError("no transactions after header", line=line + 1, path=path)
    try:
        return build_dataset(list(grouped.items()))
    except DatasetError as exc:
        raise ParseError(str(exc), path=path) from None


def parse_matrix_file(data, path=None) -> Dataset:
    rows = _rows(_text(data))
    try:
        line, header = next(rows)
    except StopIteration:
        raise ParseError("empty file", line=1, path=path) from None
    items = header[1:]
    if not items:
        raise ParseError("header names no items", line=line, path=path)
    tids, counts = [], []
    for line, row in rows:
        if len(row) != len(header):
            raise ParseError(
                f"ragged row: expected {len(header)} fields, got {len(row)}", line=line, path=path
            )
        values = [_int_cell(cell, line, "cell", path) for cell in row[1:]]
        if any(v < 0 for v in values):
            raise ParseError("counts must be non-negative", line=line, path=path)
        tids.append(row[0])
        counts.append(values)
    if not tids:
        raise ParseError("no transactions after header", line=line + 1, path=path)
    try:
        return dataset_from_matrix(items, tids, counts)
    except DatasetError as exc:
        raise ParseError(str(exc), path=path) from None


def parse_dataset(data, fmt: str = "basket", path=None) -> Dataset:
    if fmt == "basket":
        return parse_basket_file(data, path)
    if fmt == "matrix":
        return parse_matrix_file(data, path)
    raise ValueError(f"unknown input format: {fmt!r}")


def write_matrix(matrix: SimilarityMatrix) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["", *matrix.ids])
    for tid, row in zip(matrix.ids, matrix.values):
        w.writerow([tid, *(f"{v:.6f}" for v in row)])
    return buf.getvalue().encode("utf-8")


def read_matrix(data, measure: str = "tsim", path=None) -> SimilarityMatrix:
    """Inverse of :func:`write_matrix`."""
    rows = list(_rows(_text(data)))
    if not rows:
        raise ParseError("empty file", line=1, path=path)
    ids = rows[0][1][1:]
    body = rows[1:]
    if [r[1][0] for r in body] != ids:
        raise ParseError("row ids do not match header ids", line=rows[0][0], path=path)
    values = []
    for line, row in body:
        if len(row) != len(ids) + 1:
            raise ParseError("ragged matrix row", line=line, path=path)
        try:
            values.append([float(c) for c in row[1:]])
        except ValueError:
            raise ParseError("non-numeric matrix cell", line=line, path=path) from None
    return SimilarityMatrix(tuple(ids), values, measure)


def write_stats(ds: Dataset, stats: ItemStats) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["item", "sigma", "n"])
    for item, s in zip(ds.catalog.items, stats.sigma):
        w.writerow([item, repr(float(s)), stats.n])
    return buf.getvalue().encode("utf-8")


def clustering_to_dict(clustering: Clustering) -> dict:
    return {
        "measure": clustering.measure,
        "threshold": clustering.threshold,
        "clusters": [list(c) for c in clustering.clusters],
    }


def write_clusters(clustering: Clustering) -> bytes:
    return (json.dumps(clustering_to_dict(clustering), indent=2) + "\n").encode("utf-8")


def read_clusters(data) -> Clustering:
    doc = json.loads(_text(data))
    return Clustering(
        float(doc["threshold"]), tuple(tuple(c) for c in doc["clusters"]), doc["measure"]
    )
