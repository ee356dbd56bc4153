import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotbounds.braid import BraidWord, closure
from knotbounds.diagram import pretzel, unknot, validate, same_diagram
from knotbounds.seifert import (
    FlypeSiteError,
    NotReducedAlternatingError,
    bigon_sites,
    flype,
    flype_site,
    pretzel_flype_sites,
    s_a,
    seifert_circles,
)
from oracles import knot_seifert_count

from conftest import FIGURE8_PD, TREFOIL_PD


def test_trefoil_circles(trefoil):
    sd = seifert_circles(trefoil)
    assert sd.s == 2 == knot_seifert_count(TREFOIL_PD)
    assert sd.diagram_genus_twice == 2
    assert set(sd.circle_of_arc.values()) == {1, 2}


def test_figure_eight_circles(figure8):
    assert seifert_circles(figure8).s == 3 == knot_seifert_count(FIGURE8_PD)
    assert s_a(figure8) == 3


def test_unknot_has_one_circle():
    sd = seifert_circles(unknot())
    assert (sd.s, sd.diagram_genus_twice) == (1, 0)


def test_free_loops_add_circles():
    D = validate(TREFOIL_PD, free_loops=0)
    assert seifert_circles(D).s == 2


def test_s_a_rejects_non_alternating():
    with pytest.raises(NotReducedAlternatingError):
        s_a(closure(BraidWord.from_ints([1, -2, 1, 2])))
    with pytest.raises(NotReducedAlternatingError):
        s_a(validate([(1, 1, 2, 2)]))


@pytest.mark.parametrize("twists", [(2, 2, 2, 2), (3, 3), (2, 1, 2, 1), (3, 1, 2), (1, 1, 1)])
def test_pretzel_flypes_keep_circle_count(twists):
    D, sites = pretzel_flype_sites(twists)
    s0 = seifert_circles(D).s
    for site in sites:
        E = flype(D, site)
        assert seifert_circles(E).s == s0
        assert (E.c, E.component_count) == (D.c, D.component_count)


def test_flype_twice_is_identity():
    D, sites = pretzel_flype_sites((2, 1, 2, 1))
    for site in sites:
        E = flype(D, site)
        back = flype(E, flype_site(E, site.tangle_crossings, site.pivot_crossing))
        assert same_diagram(back, D)


def test_some_flypes_change_the_diagram():
    D, sites = pretzel_flype_sites((2, 1, 2, 1))
    assert any(not same_diagram(flype(D, s), D) for s in sites)


def test_bad_sites():
    D = pretzel(2, 2, 2, 2)
    with pytest.raises(FlypeSiteError):
        flype_site(D, [0], 0)
    with pytest.raises(FlypeSiteError):
        flype_site(D, [0], 99)
    with pytest.raises(FlypeSiteError):
        flype_site(D, [0, 2], 5)


def test_bigon_sites_on_twist_region():
    D = closure(BraidWord.from_ints([1, 1, 1, 1, 1]))
    sites = list(bigon_sites(D))
    assert sites
    for site in sites:
        assert seifert_circles(flype(D, site)).s == seifert_circles(D).s


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=2, max_size=4))
def test_flype_invariance_on_random_pretzels(twists):
    D, sites = pretzel_flype_sites(twists)
    s0 = seifert_circles(D).s
    for site in sites[:6]:
        assert seifert_circles(flype(D, site)).s == s0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1, max_size=10))
def test_genus_parity(word):
    D = closure(BraidWord.from_ints(word, 4))
    sd = seifert_circles(D)
    assert (D.c - sd.s - D.component_count + 2) % 2 == 0
    assert sd.s == 4  # braid closures have one circle per strand
