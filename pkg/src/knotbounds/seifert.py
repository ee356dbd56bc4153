"""Seifert circles, diagram genus, the alternating invariant ``s_a`` and flypes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .diagram import (
    DiagramError,
    PlanarDiagram,
    _face_cycles,
    assemble,
    is_alternating,
    is_reduced,
    pretzel,
)

__all__ = [
    "SeifertDecomposition",
    "seifert_circles",
    "s_a",
    "NotReducedAlternatingError",
    "FlypeSite",
    "FlypeSiteError",
    "flype_site",
    "flype",
    "bigon_sites",
    "pretzel_flype_sites",
]


@dataclass(frozen=True)
class SeifertDecomposition:
    circle_count: int
    circle_of_arc: dict[int, int]
    diagram_genus_twice: int

    @property
    def s(self) -> int:
        return self.circle_count


def seifert_circles(D: PlanarDiagram) -> SeifertDecomposition:
    """Smooth every crossing along the orientation and count the circles.

    At a crossing the incoming under-arc continues into the outgoing over-arc
    and the incoming over-arc into the outgoing under-arc.  Circles are
    numbered from 1 in order of their smallest arc; crossingless components
    add one circle each.
    """
    nxt = {}
    for x in D.crossings:
        nxt[x.a] = x.over_out
        nxt[x.over_in] = x.c
    circle_of_arc: dict[int, int] = {}
    count = 0
    for arc in sorted(nxt):
        if arc in circle_of_arc:
            continue
        count += 1
        a = arc
        while a not in circle_of_arc:
            circle_of_arc[a] = count
            a = nxt[a]
    count += D.free_loops
    twice_genus = D.c - count - D.component_count + 2
    return SeifertDecomposition(count, circle_of_arc, twice_genus)


class NotReducedAlternatingError(DiagramError):
    pass


def s_a(D: PlanarDiagram) -> int:
    """Seifert circle count of a reduced alternating diagram (a link invariant)."""
    if not is_alternating(D):
        raise NotReducedAlternatingError("s_a needs an alternating diagram")
    if not is_reduced(D):
        raise NotReducedAlternatingError("s_a needs a reduced diagram")
    return seifert_circles(D).circle_count


class FlypeSiteError(DiagramError):
    pass


@dataclass(frozen=True)
class FlypeSite:
    """A tangle together with the crossing that will be flyped across it.

    ``pivot_slots`` are the two counterclockwise-adjacent slot positions of the
    pivot that face the tangle, in counterclockwise order.
    """

    tangle_crossings: frozenset[int]
    boundary_arcs: tuple[int, int, int, int]
    pivot_crossing: int
    pivot_slots: tuple[int, int] = (0, 1)


def _boundary_slots(other, tangle: frozenset[int]) -> list[int]:
    return [
        4 * k + p for k in sorted(tangle) for p in range(4) if (other[4 * k + p] >> 2) not in tangle
    ]


def flype_site(
    D: PlanarDiagram,
    tangle: Iterable[int],
    pivot: int,
    pivot_slots: tuple[int, int] | None = None,
) -> FlypeSite:
    """Check a candidate flype site and fill in its boundary arcs."""
    tangle = frozenset(int(k) for k in tangle)
    n = D.c
    if not 0 <= pivot < n or any(not 0 <= k < n for k in tangle):
        raise FlypeSiteError("crossing index out of range")
    if pivot in tangle:
        raise FlypeSiteError("the pivot crossing lies inside the tangle")
    if not tangle:
        return FlypeSite(tangle, (), pivot, pivot_slots or (0, 1))
    other = D.slot_graph[0]
    bslots = _boundary_slots(other, tangle)
    if len(bslots) != 4:
        raise FlypeSiteError(f"tangle meets the rest of the diagram in {len(bslots)} arcs, not 4")
    complex_ = tangle | {pivot}
    attach = [s for s in _boundary_slots(other, complex_)]
    if len(attach) != 4:
        raise FlypeSiteError(
            f"tangle plus pivot is attached by {len(attach)} arcs, not 4"
        )
    facing = [p for p in range(4) if (other[4 * pivot + p] >> 2) in tangle]
    if pivot_slots is None:
        if len(facing) != 2:
            raise FlypeSiteError("pivot must meet the tangle in exactly two arcs")
        a, b = facing
        if (b - a) % 4 == 1:
            pivot_slots = (a, b)
        elif (a - b) % 4 == 1:
            pivot_slots = (b, a)
        else:
            raise FlypeSiteError("the pivot's arcs into the tangle are not adjacent")
    else:
        j, j1 = pivot_slots
        if (j1 - j) % 4 != 1 or j not in facing or j1 not in facing:
            raise FlypeSiteError("pivot_slots must be adjacent slots facing the tangle")
    labels = tuple(D.crossings[s >> 2].arcs[s & 3] for s in bslots)
    return FlypeSite(tangle, labels, pivot, tuple(pivot_slots))


def flype(D: PlanarDiagram, site: FlypeSite) -> PlanarDiagram:
    """Move the pivot crossing to the far side of the tangle, turning the tangle over.

    The tangle is rotated by a half-turn about the axis through the pivot:
    its cyclic slot orders reverse and over/under swap, which at the slot
    level is the relabelling ``p -> 3 - p`` with the under-parity kept.
    Crossing indices are preserved, so the same site can be applied again.
    """
    other, under, exits = (list(x) for x in D.slot_graph)
    T = site.tangle_crossings
    if not T:
        return assemble(other, under, exits, free_loops=D.free_loops, allow_split=D.split)
    P = site.pivot_crossing
    j = site.pivot_slots[0]
    se, ne = 4 * P + j, 4 * P + ((j + 1) & 3)
    nw, sw = 4 * P + ((j + 2) & 3), 4 * P + ((j + 3) & 3)
    t_nw, t_sw = other[ne], other[se]
    if (t_nw >> 2) not in T or (t_sw >> 2) not in T:
        raise FlypeSiteError("pivot slots do not face the tangle")
    rem = [s for s in _boundary_slots(other, T) if s not in (t_nw, t_sw)]
    if len(rem) != 2:
        raise FlypeSiteError("tangle boundary is not four arcs")

    # walk the face north of the pivot-tangle arcs; the first arc leaving the tangle is NE
    d, t_ne, steps = ne, None, 0
    while t_ne is None:
        y = other[d]
        d = (y & ~3) | ((y - 1) & 3)
        if d in rem:
            t_ne = d
        elif d in (t_sw, se, ne, nw, sw) or steps > len(other):
            raise FlypeSiteError("could not locate the tangle's far boundary")
        steps += 1
    t_se = rem[0] if rem[1] == t_ne else rem[1]

    def m(s: int) -> int:
        return (s & ~3) | (3 - (s & 3)) if (s >> 2) in T else s

    outside = {nw: other[nw], sw: other[sw], t_ne: other[t_ne], t_se: other[t_se]}
    complex_slots = {4 * k + p for k in T | {P} for p in range(4)}
    if any(v in complex_slots for v in outside.values()):
        raise FlypeSiteError("tangle plus pivot is not attached by four distinct arcs")

    new = list(other)
    for k in T:
        for p in range(4):
            s = 4 * k + p
            if (other[s] >> 2) in T:
                new[m(s)] = m(other[s])

    def join(a: int, b: int) -> None:
        new[a], new[b] = b, a

    join(m(t_sw), outside[nw])
    join(m(t_nw), outside[sw])
    join(ne, outside[t_ne])
    join(se, outside[t_se])
    join(m(t_se), nw)
    join(m(t_ne), sw)

    new_exits = {m(s) for s in exits if (s >> 2) != P}
    return assemble(new, under, new_exits, free_loops=D.free_loops, allow_split=D.split)


def bigon_sites(D: PlanarDiagram) -> Iterator[FlypeSite]:
    """One-crossing flype sites: a crossing flyped across a neighbour it shares a bigon with."""
    other = D.slot_graph[0]
    for cyc in _face_cycles(other):
        if len(cyc) != 2:
            continue
        k1, k2 = cyc[0] >> 2, cyc[1] >> 2
        if k1 == k2:
            continue
        for pivot, t in ((k1, k2), (k2, k1)):
            try:
                yield flype_site(D, [t], pivot)
            except FlypeSiteError:
                continue


def pretzel_flype_sites(twists) -> tuple[PlanarDiagram, list[FlypeSite]]:
    """Flype sites on a pretzel diagram.

    Inside each column every crossing can be flyped across a run of the
    crossings below it; a single-crossing column can be flyped across any
    block of neighbouring columns that stops short of wrapping around to it.
    """
    twists = tuple(twists)
    D = pretzel(*twists)
    starts = [0]
    for a in twists:
        starts.append(starts[-1] + a)
    sites = []
    k = len(twists)
    for i, a in enumerate(twists):
        for j in range(a - 1):
            for run in range(1, a - j):
                tangle = range(starts[i] + j + 1, starts[i] + j + 1 + run)
                try:
                    sites.append(flype_site(D, tangle, starts[i] + j))
                except FlypeSiteError:
                    pass
    for i, a in enumerate(twists):
        if a != 1:
            continue
        for width in range(1, k - 1):
            cols = [(i + 1 + t) % k for t in range(width)]
            tangle = [c for col in cols for c in range(starts[col], starts[col + 1])]
            try:
                sites.append(flype_site(D, tangle, starts[i]))
            except FlypeSiteError:
                pass
    return D, sites
