import json

import pytest

from nobodies import harness
from nobodies.harness import (
    CHECK_IDS,
    DEFAULT_CASES,
    CaseSpec,
    CheckResult,
    InputError,
    crystal_table,
    parse_report,
    render_report,
    run_case,
    valuation_table,
)

import oracles

SL3_CASE = CaseSpec("A", 2, (1, 2, 1), (1, 1), kmax=1)

SL3_ROWS = {
    "HighLex": {(0, 0, 0), (-1, 0, 0), (0, -1, 0), (-1, -1, 0), (0, -1, -1), (-2, -1, 0), (0, -2, -1), (-1, -2, -1)},
    "LowLex": {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1), (0, 2, 1), (1, 2, 1)},
    "HighTilde": {(0, 0, 0), (-1, 0, 0), (0, -1, 0), (0, -1, -1), (-1, -1, 0), (-1, -1, -1), (-1, -2, 0), (-1, -2, -1)},
    "LowTilde": {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 1, 0), (0, 1, 2), (1, 2, 0), (1, 2, 1)},
}


@pytest.fixture(scope="module")
def sl3_report():
    return run_case(SL3_CASE)


def test_sl3_case(sl3_report):
    assert sl3_report.passed
    assert [c.id for c in sl3_report.checks] == list(CHECK_IDS)
    for kind, row in SL3_ROWS.items():
        assert sl3_report.level_set(kind, 1) == row


def test_markdown_table_layout(sl3_report):
    header, rows = valuation_table(sl3_report, 1)
    assert len(header) == 9 and [r[0] for r in rows] == ["v^high", "v^low", "ṽ^high", "ṽ^low"]
    assert all(len(r) == 9 for r in rows)
    assert "-(1, 2, 1)" in rows[0] and "(0, 1, 2)" in rows[3]
    text = render_report(sl3_report, "md")
    assert "| v^low |" in text and "| C10 | pass |" in text


def test_json_round_trip(sl3_report):
    text = render_report(sl3_report, "json")
    back = parse_report(text)
    assert render_report(back, "json") == text
    data = json.loads(text)
    assert set(data) >= {"case", "checks", "levels", "polytopes"}
    assert data["case"] == {"series": "A", "rank": 2, "word": [1, 2, 1], "lambda": [1, 1], "kmax": 1}
    for poly in data["polytopes"]:
        for v in poly["vertices"]:
            assert all("/" in x for x in v)


def test_csv(sl3_report):
    lines = render_report(sl3_report, "csv").splitlines()
    assert lines[0] == "kind,level,tuple"
    assert "LowTilde,1,0 1 2" in lines
    with pytest.raises(ValueError):
        render_report(sl3_report, "xml")


def test_crystal_table(sl3_report):
    rows = crystal_table(sl3_report)
    assert {t for k, m, t in rows if m == "Phi"} == {tuple(-x for x in t) for t in SL3_ROWS["HighLex"]}


def test_determinism():
    a = render_report(run_case(SL3_CASE), "json")
    b = render_report(run_case(SL3_CASE), "json")
    assert a == b


@pytest.mark.parametrize("series,rank,lam", [("A", 2, (1, 1)), ("B", 2, (2, 0)), ("G", 2, (0, 1)), ("A", 3, (1, 0, 2))])
def test_empty_word(series, rank, lam):
    rep = run_case(CaseSpec(series, rank, (), lam, kmax=2))
    assert rep.passed
    for row in rep.levels:
        assert row["tuples"] == [[]]


def test_b2_level_sizes():
    rep = run_case(CaseSpec("B", 2, (1, 2, 1, 2), (1, 1), kmax=2))
    assert rep.passed
    cart = oracles.cartan_of("B", 2)
    assert len(rep.level_set("LowLex", 1)) == oracles.weyl_dimension(cart, (1, 1)) == 16
    assert len(rep.level_set("LowLex", 2)) == oracles.weyl_dimension(cart, (2, 2))


def test_check_subset_and_witness():
    rep = run_case(CaseSpec("A", 2, (1, 2), (1, 1), kmax=2, checks=("C1", "C6")))
    assert [c.id for c in rep.checks] == ["C1", "C6"]
    assert rep.check("C1").witness["levels"][0] == {"k": 1, "crystal": 5, "demazure": 5, "sections": 5, "module": 8}
    assert rep.check("C6").witness["stabilization"] in ("pass", "inconclusive")


@pytest.mark.parametrize(
    "spec",
    [
        CaseSpec("Q", 2, (1,), (1, 1)),
        CaseSpec("A", 2, (1, 1), (1, 1)),
        CaseSpec("A", 2, (1, 3), (1, 1)),
        CaseSpec("A", 2, (1,), (1, -1)),
        CaseSpec("A", 2, (1,), (1, 1, 0)),
        CaseSpec("A", 2, (1,), (1, 1), kmax=0),
        CaseSpec("A", 2, (1,), (1, 1), checks=("C11",)),
        CaseSpec("A", 2, (1, 2), (1, 1), alt_word=(2, 1)),
    ],
)
def test_input_errors(spec):
    with pytest.raises(InputError):
        run_case(spec)


def test_failed_check_is_recorded(monkeypatch):
    monkeypatch.setitem(harness._CHECKS, "C1", lambda case, K: CheckResult("C1", False, {"why": "forced"}))
    rep = run_case(CaseSpec("A", 2, (1,), (1, 1)))
    assert not rep.passed and rep.check("C1").witness == {"why": "forced"}


def test_default_matrix_shape():
    assert [(c.series, c.rank, c.kmax) for c in DEFAULT_CASES] == [
        ("A", 2, 2), ("A", 2, 2), ("A", 3, 2), ("B", 2, 2), ("C", 2, 2), ("G", 2, 1)
    ]
