import json

import pytest

from knotbounds.harness import (
    FixtureParseError,
    Report,
    SuiteConfig,
    format_pd,
    load_fixtures,
    parse_fixture,
    run_suite,
)


@pytest.fixture(scope="module")
def fixtures():
    return load_fixtures()


@pytest.fixture(scope="module")
def report(fixtures):
    return run_suite(fixtures, SuiteConfig())


def test_bundled_table(fixtures):
    names = [f.name for f in fixtures]
    assert names == sorted(names)
    for want in ("3_1", "4_1", "5_1", "5_2", "10_161", "W_3_1", "unknot", "hopf"):
        assert want in names
    perko = next(f for f in fixtures if f.name == "10_161")
    assert (perko.record.known_c, perko.record.known_g, perko.record.known_b) == (10, 3, 3)
    assert perko.record.provenance("c") == "cited"


def test_duplicate_label_reports_its_line():
    text = "name bad\nX 1 4 2 5\nX 3 6 4 1\n# comment\nX 5 2 6 6\n"
    with pytest.raises(FixtureParseError) as err:
        parse_fixture(text, "bad.pd")
    assert err.value.line == 5
    assert str(err.value).startswith("bad.pd:5:")


@pytest.mark.parametrize(
    "text,line",
    [
        ("X 1 4 2 5\n", 1),
        ("name x\nknown q 3 table\n", 2),
        ("name x\nknown c -1 table\n", 2),
        ("name x\nX 1 2 3\n", 2),
        ("name x\nspiral 3\n", 2),
        ("name x\ndouble 3_1 + 0\n", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(FixtureParseError) as err:
        parse_fixture(text, "t.pd")
    assert err.value.line == line


def test_component_mismatch_is_rejected():
    with pytest.raises(FixtureParseError):
        parse_fixture("name x\ntorus 3 2\npretzel 1 1\n")


def test_torus_recipe():
    fx = parse_fixture("name T\ntorus 5 3\n")
    (D,) = fx.diagrams
    assert (D.c, D.component_count) == (10, 1)
    assert fx.braids[0].strand_count == 3
    assert fx.recipes == ("torus 5 3",)


def test_format_pd_roundtrip(trefoil):
    text = format_pd("t", trefoil, [("c", 3, "knot-table")])
    fx = parse_fixture(text)
    assert fx.diagrams[0].pd() == trefoil.pd()
    assert fx.record.known_c == 3


def test_empty_fixture_list():
    r = run_suite([])
    assert r.rows == [] and not r.violated


def test_default_suite_has_no_violations(report):
    counts = report.summary()
    assert counts["violated"] == 0
    assert not report.violated
    assert len(report.rows) > 400


def test_expected_noted_rows(report):
    noted = {r.proposition for r in report.rows if r.status == "discrepancy-noted"}
    assert {"double-circle-census", "double-twist-invariance", "torus-genus-display"} <= noted


def test_small_cap_marks_rows_skipped(fixtures):
    r = run_suite(fixtures, SuiteConfig(homfly_cap=3, kauffman_cap=3, max_pq=3, twists=1))
    assert r.summary()["skipped"] > 0
    assert not r.violated


def test_report_formats(report):
    text = report.to_text()
    assert [c.strip() for c in text.splitlines()[0].split(" | ")][:2] == ["proposition", "inputs"]
    assert text.splitlines()[-1].startswith(f"rows {len(report.rows)}:")
    lines = report.to_jsonl().splitlines()
    assert len(lines) == len(report.rows)
    assert set(json.loads(lines[0])) == {"proposition", "inputs", "bound", "known", "status"}


def test_unknown_status_rejected():
    with pytest.raises(ValueError):
        Report().add("x", "", 0, None, "fine")


def test_determinism(fixtures, report):
    again = run_suite(fixtures, SuiteConfig())
    assert again.to_text() == report.to_text()
