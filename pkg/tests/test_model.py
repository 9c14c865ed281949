import numpy as np
import pytest

from tsim import DatasetError, Mode, NotFoundError, build_dataset, dataset_from_matrix, get_vector
from tsim.casestudy import BASKETS
from tsim.model import ItemCatalog, TransactionVector


def table3_records():
    return [(tid, [(item, 1) for item in items]) for tid, items in BASKETS.items()]


def test_table3_builds_table4(table4):
    ds = build_dataset(table3_records())
    assert ds.mode == Mode.BINARY
    assert ds.catalog.items == ("bread", "butter", "coffee", "jam", "milk")
    order = [ds.catalog.index[i] for i in ("bread", "butter", "jam", "coffee", "milk")]
    assert ds.counts[:, order].tolist() == table4
    t1 = get_vector(ds, "T1")
    assert {i: c for i, c in zip(ds.catalog, t1.counts)} == {
        "bread": 1, "butter": 1, "coffee": 0, "jam": 1, "milk": 0,
    }


def test_singleton():
    ds = build_dataset([("T1", [("a", 1)])])
    assert ds.catalog.items == ("a",)
    assert ds.counts.tolist() == [[1]]
    assert get_vector(ds, "T1").presence == (True,)


def test_counted_mode():
    ds = build_dataset([("T1", [("a", 3)])])
    assert ds.mode == Mode.COUNTED
    v = get_vector(ds, "T1")
    assert v.counts == (3,)
    assert v.presence == (True,)


def test_repeated_items_are_summed():
    ds = build_dataset([("T1", [("a", 1), ("b", 1), ("a", 2)])])
    assert get_vector(ds, "T1").counts == (3, 1)


def test_empty_transaction_is_all_absent():
    ds = build_dataset([("T1", [("a", 1)]), ("T2", [])])
    v = get_vector(ds, "T2")
    assert v.counts == (0,) and v.is_empty


@pytest.mark.parametrize(
    "records",
    [
        [("T1", [("a", 1)]), ("T1", [("b", 1)])],
        [("T1", [("a", 0)])],
        [("T1", [("a", -2)])],
        [("T1", [("a", 1.5)])],
        [],
        [("T1", [])],
    ],
    ids=["duplicate-tid", "zero-count", "negative-count", "fractional", "no-records", "no-items"],
)
def test_build_rejects(records):
    with pytest.raises(DatasetError):
        build_dataset(records)


def test_get_vector(case_ds):
    assert get_vector(case_ds, "T5").presence == (False, False, True, True, False)
    with pytest.raises(NotFoundError):
        get_vector(case_ds, "T10")
    with pytest.raises(KeyError):
        get_vector(case_ds, "nope")


def test_round_trip(case_ds):
    again = build_dataset(case_ds.to_records())
    for tid in case_ds.ids:
        a = dict(zip(case_ds.catalog, get_vector(case_ds, tid).counts))
        b = dict(zip(again.catalog, get_vector(again, tid).counts))
        assert a == b


def test_matrix_keeps_item_order():
    ds = dataset_from_matrix(["z", "a"], ["x", "y"], [[2, 0], [0, 1]])
    assert ds.catalog.items == ("z", "a")
    assert ds.mode == Mode.COUNTED


def test_counts_are_read_only(case_ds):
    with pytest.raises(ValueError):
        case_ds.counts[0, 0] = 5
    assert isinstance(case_ds.counts, np.ndarray)


def test_invariants_enforced():
    with pytest.raises(DatasetError):
        ItemCatalog(("a", "a"))
    with pytest.raises(DatasetError):
        ItemCatalog(())
    with pytest.raises(DatasetError):
        TransactionVector("t", (1, 0), (False, False))
    with pytest.raises(DatasetError):
        dataset_from_matrix(["a"], ["t", "t"], [[1], [0]])
