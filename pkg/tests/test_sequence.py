import itertools

import pytest

from tsim import NotFoundError, Phi, build_dataset, delta, phi, sequence_vector
from tsim.sequence import parse_sequence_vector


@pytest.mark.parametrize(
    "e_i, e_j, expected",
    [
        (True, True, Phi.MATCH),
        (False, False, Phi.BOTH_ABSENT),
        (True, False, Phi.MISMATCH),
        (False, True, Phi.MISMATCH),
    ],
)
def test_phi_table(e_i, e_j, expected):
    assert phi(e_i, e_j) is expected


def test_phi_symmetric_and_exhaustive():
    seen = set()
    for a, b in itertools.product([False, True], repeat=2):
        assert phi(a, b) is phi(b, a)
        seen.add(phi(a, b))
    assert seen == set(Phi)


def test_delta():
    assert delta(0, 4) == -4
    assert delta(7, 7) == 0
    assert delta(1, 0) == 1
    for a, b in itertools.product(range(4), repeat=2):
        assert delta(a, b) == -delta(b, a)


def test_case_study_t1_t2(case_ds):
    sv = sequence_vector(case_ds, "T1", "T2")
    assert str(sv) == "⟨(1,0),(1,0),(0,1),(1,0),(1,0)⟩"
    assert sv.pair == ("T1", "T2")


def test_t2_t5_follows_the_data(case_ds):
    # jam and coffee are in both transactions
    assert str(sequence_vector(case_ds, "T2", "T5")) == "⟨(0,U),(0,U),(0,1),(0,1),(1,0)⟩"


def test_self_pair(case_ds):
    for tid in case_ds.ids:
        for d, p in sequence_vector(case_ds, tid, tid):
            assert d == 0 and p in (Phi.MATCH, Phi.BOTH_ABSENT)


def test_binary_invariants(case_ds):
    for a, b in itertools.combinations(case_ds.ids, 2):
        sv = sequence_vector(case_ds, a, b)
        assert len(sv) == 5
        for d, p in sv:
            assert d == (1 if p is Phi.MISMATCH else 0)
        rev = sequence_vector(case_ds, b, a)
        assert [(abs(d), p) for d, p in sv] == [(abs(d), p) for d, p in rev]


def test_counted_entries():
    ds = build_dataset([("i", [("a", 3), ("b", 4)]), ("j", [("a", 1), ("c", 2)])])
    sv = sequence_vector(ds, "i", "j")
    assert list(sv) == [(2, Phi.MATCH), (4, Phi.MISMATCH), (2, Phi.MISMATCH)]
    assert list(sequence_vector(ds, "j", "i"))[0] == (-2, Phi.MATCH)


def test_unknown_tid(case_ds):
    with pytest.raises(NotFoundError):
        sequence_vector(case_ds, "T1", "T0")


def test_notation_round_trip(case_ds):
    sv = sequence_vector(case_ds, "T1", "T4")
    assert parse_sequence_vector(str(sv)) == list(sv)
