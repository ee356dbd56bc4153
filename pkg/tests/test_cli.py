import pytest

from knotbounds.cli import main

from conftest import TREFOIL_PD


@pytest.fixture
def trefoil_file(tmp_path):
    p = tmp_path / "t.pd"
    p.write_text("name t\n" + "".join("X " + " ".join(map(str, q)) + "\n" for q in TREFOIL_PD))
    return p


def test_invariants_from_pd(trefoil_file, capsys):
    assert main(["invariants", "--pd", str(trefoil_file)]) == 0
    out = capsys.readouterr().out
    assert "s(D)          2" in out
    assert "c >=          3" in out


def test_invariants_from_braid(capsys):
    assert main(["invariants", "--braid", "1 -2 1 -2"]) == 0
    out = capsys.readouterr().out
    assert "c(D)          4" in out


def test_invariants_over_cap(capsys):
    assert main(["invariants", "--braid", "1 1 1 1 1", "--homfly-cap", "2", "--kauffman-cap", "2"]) == 0
    assert "skipped" in capsys.readouterr().out


def test_torus(capsys):
    assert main(["torus", "5", "3"]) == 0
    out = capsys.readouterr().out
    assert "c = pq-p      10" in out and "IN_F" in out


def test_double(trefoil_file, tmp_path, capsys):
    out_pd = tmp_path / "w.pd"
    assert main(["double", "--pd", str(trefoil_file), "--emit-pd", str(out_pd)]) == 0
    out = capsys.readouterr().out
    assert "crossings         14" in out and "s                 9" in out
    assert out_pd.read_text().count("\nX ") == 14


def test_flype(tmp_path, capsys):
    p = tmp_path / "p.pd"
    from knotbounds.diagram import pretzel
    from knotbounds.harness import format_pd

    p.write_text(format_pd("p", pretzel(3, 3)))
    assert main(["flype", "--pd", str(p), "--site", "1,2:0"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("s(D) 6 -> 6, c 6 -> 6")


def test_flype_needs_a_site(trefoil_file, capsys):
    assert main(["flype", "--pd", str(trefoil_file)]) == 2


def test_bad_input_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.pd"
    p.write_text("name bad\nX 1 2 1 2\n")
    assert main(["invariants", "--pd", str(p)]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_writes_reports(tmp_path, capsys):
    rep, mach = tmp_path / "r.txt", tmp_path / "r.jsonl"
    assert main(["verify", "--report", str(rep), "--machine", str(mach)]) == 0
    assert "violated 0" in capsys.readouterr().out
    assert rep.read_text().splitlines()[-1].startswith("rows ")
    assert mach.read_text().count("\n") > 400
