import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotbounds.braid import BraidWord, closure
from knotbounds.diagram import (
    ArcLabelError,
    DiagramError,
    NonPlanarError,
    SplitDiagramError,
    connected_sum,
    is_alternating,
    is_reduced,
    mirror,
    nugatory_crossings,
    pretzel,
    same_diagram,
    unknot,
    validate,
)
from knotbounds.seifert import seifert_circles
from oracles import trace_components

from conftest import FIGURE8_PD, TREFOIL_PD


def test_empty_input_is_the_unknot():
    D = validate([])
    assert (D.c, D.component_count, D.arc_count) == (0, 1, 0)


def test_trefoil_validates_with_one_component(trefoil):
    assert trefoil.c == 3
    assert trefoil.component_count == 1 == trace_components(TREFOIL_PD)
    assert trefoil.signs == (-1, -1, -1)


def test_kink_is_valid_but_not_reduced():
    D = validate([(1, 1, 2, 2)])
    assert D.c == 1 and D.component_count == 1
    assert not is_reduced(D)
    assert nugatory_crossings(D) == [0]


def test_crossed_labels_are_rejected():
    with pytest.raises(NonPlanarError):
        validate([(1, 2, 1, 2)])


@pytest.mark.parametrize(
    "raw",
    [
        [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 6)],  # label 3 missing, 6 three times
        [(1, 4, 2, 5), (3, 6, 4, 1)],  # labels used once
        [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 9)],  # gap in numbering
    ],
)
def test_bad_labels_are_rejected(raw):
    with pytest.raises(DiagramError):
        validate(raw)


def test_label_errors_have_their_own_type():
    with pytest.raises(ArcLabelError):
        validate([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 6)])


def test_split_diagram_is_rejected():
    with pytest.raises(SplitDiagramError):
        validate([(1, 1, 2, 2)], free_loops=1)


def test_mirror_negates_signs(trefoil):
    m = mirror(trefoil)
    assert m.signs == (1, 1, 1)
    assert (m.c, m.component_count) == (trefoil.c, trefoil.component_count)
    assert same_diagram(mirror(m), trefoil)


def test_mirror_of_unknot():
    assert same_diagram(mirror(unknot()), unknot())


def test_connected_sums(trefoil):
    assert same_diagram(connected_sum(unknot(), trefoil), trefoil)
    granny = connected_sum(trefoil, trefoil)
    assert (granny.c, granny.component_count) == (6, 1)
    hopf = pretzel(1, 1)
    s = connected_sum(trefoil, hopf)
    assert (s.c, s.component_count) == (5, 2)


def test_connected_sum_rejects_unknown_arc(trefoil):
    with pytest.raises(DiagramError):
        connected_sum(trefoil, trefoil, arc1=99)


def test_alternation(trefoil):
    assert is_alternating(trefoil) and is_reduced(trefoil)
    assert not is_alternating(closure(BraidWord.from_ints([1, 2])))


@pytest.mark.parametrize("twists,c,k", [((2, 2, 2, 2), 8, 4), ((1, 1), 2, 2), ((3, 3), 6, 2), ((1, 1, 1), 3, 1)])
def test_pretzel_sizes(twists, c, k):
    D = pretzel(*twists)
    assert D.c == c and D.component_count == k
    assert is_alternating(D) and is_reduced(D)


def test_pretzel_needs_two_columns():
    with pytest.raises(DiagramError):
        pretzel(3)


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1, max_size=9)


@settings(max_examples=60, deadline=None)
@given(words)
def test_mirror_involution_and_circle_count(word):
    D = closure(BraidWord.from_ints(word, 4))
    assert same_diagram(mirror(mirror(D)), D)
    assert seifert_circles(mirror(D)).s == seifert_circles(D).s
    assert mirror(D).c == D.c


@settings(max_examples=40, deadline=None)
@given(words, words)
def test_connected_sum_adds_counts(w1, w2):
    D1 = closure(BraidWord.from_ints([1, 2, 3] + w1, 4))
    D2 = closure(BraidWord.from_ints([1, 2, 3] + w2, 4))
    S = connected_sum(D1, D2)
    assert S.c == D1.c + D2.c
    assert S.component_count == D1.component_count + D2.component_count - 1


def test_figure_eight_components():
    assert trace_components(FIGURE8_PD) == validate(FIGURE8_PD).component_count == 1
