"""Blackboard-framed Whitehead doubles built combinatorially from a base diagram.

Every base crossing becomes a 4-crossing block (the doubled over-strand lies
over the doubled under-strand); every base arc becomes a band of two
antiparallel strands.  On one band a 2-crossing clasp is inserted, followed by
``n`` half-twists of the band.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import DiagramError, PlanarDiagram, assemble, is_reduced
from .seifert import seifert_circles
from .skein import CrossingCapError, homfly, kauffman
from .poly import degrees

__all__ = [
    "DoubleSpec",
    "blackboard_double",
    "double_genus_certificate",
    "conjecture_evidence",
]

# block crossings, each laid out as bottom=0, right=1, top=2, left=3 (vertical strand under)
_LB, _RB, _LT, _RT = range(4)
# ports on each side of a block, counterclockwise around the block
_SIDE_PORTS = {
    0: ((_LB, 0), (_RB, 0)),
    1: ((_RB, 1), (_RT, 1)),
    2: ((_RT, 2), (_LT, 2)),
    3: ((_LT, 3), (_LB, 3)),
}


@dataclass(frozen=True)
class DoubleSpec:
    base: PlanarDiagram
    clasp_sign: int = 1
    half_twists: int = 0
    clasp_arc: int = 1

    def __post_init__(self):
        if self.clasp_sign not in (1, -1):
            raise DiagramError("clasp_sign must be +1 or -1")
        if self.half_twists < 0:
            raise DiagramError("half_twists must be nonnegative")
        if self.base.component_count != 1:
            raise DiagramError("Whitehead doubles are built on knot diagrams")
        if self.base.c and not 1 <= self.clasp_arc <= self.base.arc_count:
            raise DiagramError(f"clasp arc {self.clasp_arc} is not an arc of the base")


def _build(spec: DoubleSpec, clasp_layout: int) -> PlanarDiagram:
    base = spec.base
    c = base.c
    nclasp = 4 * c
    ntw = nclasp + 2
    n = ntw + spec.half_twists
    other = [-1] * (4 * n)
    under = [0] * n

    def link(p, q):
        if other[p] != -1 or other[q] != -1:
            raise AssertionError("slot linked twice")
        other[p], other[q] = q, p

    def port(k, side, which):
        blk, pos = _SIDE_PORTS[side][which]
        return 4 * (4 * k + blk) + pos

    for k in range(c):
        b = 4 * k
        link(4 * (b + _LB) + 2, 4 * (b + _LT) + 0)
        link(4 * (b + _RB) + 2, 4 * (b + _RT) + 0)
        link(4 * (b + _LB) + 1, 4 * (b + _RB) + 3)
        link(4 * (b + _LT) + 1, 4 * (b + _RT) + 3)

    bother, _, bexits = base.slot_graph
    clasp_exit = None
    for k, x in enumerate(base.crossings):
        for pos in range(4):
            if x.arcs[pos] == spec.clasp_arc and (4 * k + pos) in bexits:
                clasp_exit = 4 * k + pos
    for s in range(len(bother)):
        t = bother[s]
        if s > t or s == clasp_exit or t == clasp_exit:
            continue
        link(port(s >> 2, s & 3, 0), port(t >> 2, t & 3, 1))
        link(port(s >> 2, s & 3, 1), port(t >> 2, t & 3, 0))

    # clasp crossings laid out as down=0, right=1, up=2, left=3
    c1, c2 = 4 * nclasp, 4 * (nclasp + 1)
    under[nclasp] = 1 if clasp_layout == 0 else 0
    under[nclasp + 1] = 0 if clasp_layout == 0 else 1
    link(c1 + 0, c2 + 2)
    link(c1 + 3, c2 + 3)
    if c:
        y = bother[clasp_exit]
        lower_l, upper_l = port(clasp_exit >> 2, clasp_exit & 3, 0), port(clasp_exit >> 2, clasp_exit & 3, 1)
        upper_r, lower_r = port(y >> 2, y & 3, 0), port(y >> 2, y & 3, 1)
    else:
        lower_l, upper_l = c2 + 0, c1 + 2
        upper_r, lower_r = c1 + 2, c2 + 0
    if c:
        link(c1 + 2, upper_l)
        link(c2 + 0, lower_l)
    cur_up, cur_low = c1 + 1, c2 + 1
    # twist crossings: upper-left=0, lower-left=1, lower-right=2, upper-right=3
    for i in range(spec.half_twists):
        t = 4 * (ntw + i)
        link(cur_up, t + 0)
        link(cur_low, t + 1)
        cur_up, cur_low = t + 3, t + 2
    link(cur_up, upper_r)
    link(cur_low, lower_r)
    return assemble(other, under)


def blackboard_double(spec: DoubleSpec) -> PlanarDiagram:
    """Diagram of the Whitehead double with ``4 c + 2 + n`` crossings.

    Clasp crossings are indices ``4c`` and ``4c + 1``; the twist crossings
    follow.
    """
    if spec.base.c and not is_reduced(spec.base):
        raise DiagramError("the base diagram must be reduced")
    c = spec.base.c
    for layout in (0, 1):
        D = _build(spec, layout)
        s1, s2 = D.crossings[4 * c].sign, D.crossings[4 * c + 1].sign
        if s1 != s2:
            raise AssertionError("clasp crossings disagree in sign")
        if s1 == spec.clasp_sign:
            return D
    raise AssertionError("neither clasp layout realises the requested sign")


def double_genus_certificate(spec: DoubleSpec) -> dict:
    """Seifert data of the doubled diagram next to the two circle-count claims.

    ``genus_upper_bound`` is ``g(D)``, an upper bound for the canonical genus
    of the double.  ``claim_2c_plus_1`` and ``claim_g_equals_c`` record which of
    the two statements about this construction the computed diagram supports.
    """
    D = blackboard_double(spec)
    sd = seifert_circles(D)
    c = spec.base.c
    twice_g = sd.diagram_genus_twice
    return {
        "crossings": D.c,
        "components": D.component_count,
        "s": sd.circle_count,
        "twice_genus": twice_g,
        "genus_upper_bound": twice_g // 2,
        "base_crossings": c,
        "claim_2c_plus_1": sd.circle_count == 2 * c + 1,
        "claim_g_equals_c": twice_g == 2 * c,
    }


def conjecture_evidence(base: PlanarDiagram, name: str = "", homfly_cap=None, kauffman_cap=None) -> dict:
    """Both sides of ``2 (maxdeg_z F(K) + 1)`` versus ``maxdeg_z P(W_K)``.

    The double is the blackboard one with no extra twists.  A side that
    exceeds its crossing cap is reported as ``None`` with ``skipped`` set.
    """
    row = {"name": name, "left": None, "right": None, "skipped": None}
    if base.c == 0:
        row["skipped"] = "unknot base: the double is unknotted"
        return row
    try:
        row["left"] = 2 * (degrees(kauffman(base, kauffman_cap)).M + 1)
    except CrossingCapError as exc:
        row["skipped"] = str(exc)
        return row
    W = blackboard_double(DoubleSpec(base))
    try:
        row["right"] = degrees(homfly(W, homfly_cap)).M
    except CrossingCapError as exc:
        row["skipped"] = str(exc)
    return row
