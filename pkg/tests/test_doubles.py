import pytest

from knotbounds.diagram import DiagramError, is_reduced, pretzel, unknot, validate
from knotbounds.doubles import DoubleSpec, blackboard_double, conjecture_evidence, double_genus_certificate
from knotbounds.poly import LaurentPoly2, degrees
from knotbounds.seifert import seifert_circles
from knotbounds.skein import conway, homfly

from conftest import TREFOIL_PD


def test_trefoil_double_shape(trefoil):
    W = blackboard_double(DoubleSpec(trefoil))
    assert (W.c, W.component_count) == (14, 1)
    assert W.crossings[12].sign == W.crossings[13].sign == 1


def test_clasp_sign_is_honoured(trefoil):
    W = blackboard_double(DoubleSpec(trefoil, clasp_sign=-1))
    assert W.crossings[12].sign == W.crossings[13].sign == -1


def test_trefoil_double_circles(trefoil):
    cert = double_genus_certificate(DoubleSpec(trefoil))
    assert cert["s"] == 9
    assert cert["twice_genus"] == 6 and cert["genus_upper_bound"] == 3
    assert cert["claim_g_equals_c"] and not cert["claim_2c_plus_1"]


def test_trefoil_double_homfly(trefoil):
    W = blackboard_double(DoubleSpec(trefoil))
    assert degrees(homfly(W)).M == 6
    # the blackboard framing carries the base writhe, so this is a twisted double
    assert conway(W) == LaurentPoly2({(0, 0): 1, (0, 2): 3})


def test_twists_after_the_first(trefoil):
    rows = [double_genus_certificate(DoubleSpec(trefoil, 1, n)) for n in range(6)]
    assert [r["crossings"] for r in rows] == [14 + n for n in range(6)]
    for a, b in zip(rows[1:], rows[2:]):
        assert b["s"] == a["s"] + 1
        assert b["twice_genus"] == a["twice_genus"]
    # the first half-twist turns the clasp strands parallel
    assert rows[1]["twice_genus"] == rows[0]["twice_genus"] + 2


def test_unknot_base():
    W = blackboard_double(DoubleSpec(unknot()))
    assert W.c == 2 and homfly(W) == LaurentPoly2.one()
    T = blackboard_double(DoubleSpec(unknot(), 1, 1))
    assert T.c == 3 and degrees(homfly(T)).M == 2


def test_spec_validation(trefoil):
    with pytest.raises(DiagramError):
        DoubleSpec(trefoil, clasp_sign=0)
    with pytest.raises(DiagramError):
        DoubleSpec(trefoil, half_twists=-1)
    with pytest.raises(DiagramError):
        DoubleSpec(pretzel(1, 1))
    with pytest.raises(DiagramError):
        DoubleSpec(trefoil, clasp_arc=7)
    kink = validate([(1, 1, 2, 2)])
    assert not is_reduced(kink)
    with pytest.raises(DiagramError):
        blackboard_double(DoubleSpec(kink))


@pytest.mark.parametrize("arc", range(1, 7))
def test_clasp_position_does_not_matter(trefoil, arc):
    W = blackboard_double(DoubleSpec(trefoil, clasp_arc=arc))
    assert seifert_circles(W).s == 9
    assert degrees(homfly(W)).M == 6


def test_conjecture_evidence(trefoil, figure8):
    row = conjecture_evidence(trefoil, "3_1")
    assert (row["left"], row["right"], row["skipped"]) == (6, 6, None)
    fig = conjecture_evidence(figure8, "4_1")
    assert fig["right"] is None and "cap" in fig["skipped"]
    assert conjecture_evidence(unknot())["skipped"]
