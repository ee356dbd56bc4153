import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotbounds import bounds as B
from knotbounds.bounds import Membership
from knotbounds.poly import DegreeSummary


def test_genus_formula_bound():
    assert B.genus_formula_bound(2, 2, 1) == 3
    with pytest.raises(ValueError):
        B.genus_formula_bound(-2, 2, 1)
    with pytest.raises(ValueError):
        B.genus_formula_bound(2, 0, 1)


@pytest.mark.parametrize(
    "p,q,c,g2,k",
    [(3, 2, 3, 2, 1), (5, 2, 5, 4, 1), (4, 3, 8, 6, 1), (2, 2, 2, 0, 2), (6, 4, 18, 14, 2), (8, 8, 56, 42, 8)],
)
def test_torus_invariants(p, q, c, g2, k):
    ti = B.torus_invariants(p, q)
    assert (ti.c, ti.g2, ti.b, ti.components) == (c, g2, q, k)
    assert B.genus_formula_bound(ti.g2, ti.b, ti.components) == ti.c


def test_torus_display_formula_differs_on_links():
    # the two closed forms agree exactly when |K| = 2
    assert B.torus_display_genus_twice(4, 2) == B.torus_invariants(4, 2).g2
    assert B.torus_display_genus_twice(3, 2) != B.torus_invariants(3, 2).g2


def test_torus_invariants_reject_bad_input():
    with pytest.raises(ValueError):
        B.torus_invariants(2, 3)
    with pytest.raises(ValueError):
        B.torus_invariants(3, 1)


def test_f_check_states():
    v = B.f_check(10, 6, 3, 1)
    assert v.status is Membership.NOT_IN_F
    assert v.certificate[0].value == 8
    assert B.f_check(3, 2, 2, 1).status is Membership.IN_F
    assert B.f_check(10, (4, 6), 3, 1).status is Membership.UNKNOWN
    assert str(B.f_check(3, 2, 2, 1)) == "IN_F"
    with pytest.raises(ValueError):
        B.f_check(10, (6, 4), 3, 1)


def test_records_recompute():
    r = B.record("genus_formula_bound", g2=6, b=3, k=1)
    assert r.value == 8 == r.recompute()
    assert dict(r.inputs) == {"g2": 6, "b": 3, "k": 1}
    assert r.proposition_ref


def test_composites():
    assert B.composite_bound([(2, 2, 1), (2, 2, 1)]) == 6
    assert B.composite_braid_index([2, 2, 3]) == 5
    with pytest.raises(ValueError):
        B.composite_bound([])


def test_degree_bounds():
    d = DegreeSummary(e=-4, E=-2, m=0, M=2)
    assert B.mwf_bound(d) == 2
    assert B.morton_genus_bound(d) == 2
    assert B.homfly_crossing_bound(d) == 3
    with pytest.raises(B.ParityError):
        B.mwf_bound(DegreeSummary(0, 1, 0, 0))
    with pytest.raises(B.ParityError):
        B.homfly_crossing_bound(DegreeSummary(0, 3, 0, 0))


def test_small_calculators():
    assert B.ohyama_bound(3) == 4
    assert B.kidwell_bound(2) == 3
    assert B.arc_index_bound_mod2(3) == 5
    with pytest.raises(ValueError):
        B.arc_index_bound_mod2(-1)


def test_satellite_family():
    assert B.cable_genus(2, 3, 2) == 6
    assert B.cable_crossing_bound(2, 3, 3) == 9
    assert B.satellite_bound(0, w0=2, g2_c=2, b_c=2, g_b=0) == 8
    assert B.satellite_bound(1, w0=2, w1=1, g2_c=2, b_c=2, g_b=0) == 9
    assert B.satellite_bound("other", alpha_c=5) == 8
    assert B.alt_fibered_companion_bound(3) == 8
    assert B.satellite_alt_braid_bound(3, 2, 3) == 9
    with pytest.raises(ValueError):
        B.cable_genus(2, 4, 2)
    with pytest.raises(ValueError, match="w1"):
        B.satellite_bound(1, w0=2, g2_c=2, b_c=2, g_b=0)
    with pytest.raises(ValueError):
        B.satellite_bound(2)


def test_murasugi_sum():
    assert B.murasugi_sum_sa_check(4, [2, 3])
    assert not B.murasugi_sum_sa_check(5, [2, 3])


def test_sab_criterion():
    assert B.sab_criterion(3, 3).status is Membership.IN_F
    assert B.sab_criterion(3, 2).status is Membership.NOT_IN_F
    assert B.sab_criterion(4, (2, 3)).status is Membership.NOT_IN_F
    assert B.sab_criterion(3, (2, 3)).status is Membership.UNKNOWN
    with pytest.raises(ValueError):
        B.sab_criterion(2, 3)


@given(st.integers(0, 40), st.integers(1, 10), st.integers(1, 5))
def test_f_check_agrees_with_formula(g2, b, k):
    c = g2 + b + k - 2
    assert B.f_check(c, g2, b, k).status is Membership.IN_F
    assert B.f_check(c + 1, g2, b, k).status is Membership.NOT_IN_F
