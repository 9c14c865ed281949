import oracle
from tsim.casestudy import (
    IDS,
    PRINTED_DERIVATIONS,
    errata_report,
    is_case_study,
    load_case_study,
    published_matrix,
    published_value,
    write_errata,
)
from tsim import build_dataset

# Frozen from the oracle: cells where the recomputed value is within 5e-4 of the printed one.
AGREEING = {("T1", t) for t in ("T2", "T3", "T4", "T6", "T7", "T8", "T9")}
# Worked examples whose own arithmetic holds up.
CONSISTENT = {("T1", t) for t in ("T2", "T3", "T4", "T6", "T7", "T9")}


def test_published_matrix_shape():
    m = published_matrix()
    assert m.ids == IDS
    assert published_value("T2", "T5") == published_value("T5", "T2") == 0.6545
    assert len(PRINTED_DERIVATIONS) == 36


def test_is_case_study(case_ds):
    assert is_case_study(case_ds)
    assert is_case_study(load_case_study("basket"))
    assert not is_case_study(build_dataset([("T1", [("a", 1)]), ("T2", [("b", 1)])]))


def test_errata_against_oracle(case_ds, table4):
    ref = oracle.tsim_matrix(table4)
    rows = errata_report(case_ds)
    assert len(rows) == 36
    for r in rows:
        i, j = (IDS.index(t) for t in r.pair)
        assert abs(r.computed_value - ref[i][j]) < 1e-12
        assert r.erratum == (abs(ref[i][j] - r.paper_value) > 5e-4)
    assert {r.pair for r in rows if not r.erratum} == AGREEING
    assert {r.pair for r in rows if r.verified} == CONSISTENT


def test_errata_same_from_basket_form():
    a = errata_report(load_case_study("basket"))
    b = errata_report(load_case_study("matrix"))
    assert [(r.pair, r.verified, r.erratum) for r in a] == [(r.pair, r.verified, r.erratum) for r in b]
    assert all(abs(x.computed_value - y.computed_value) < 1e-15 for x, y in zip(a, b))


def test_errata_csv():
    text = write_errata(errata_report()).decode()
    assert "T2-T3,0.865100,0.874270,0.009170,false,true" in text.splitlines()
