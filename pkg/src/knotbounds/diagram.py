"""Oriented link diagrams as PD codes.

A crossing ``X(a, b, c, d)`` lists its four arc labels counterclockwise,
starting from the incoming under-arc ``a``; ``c`` is the outgoing under-arc
and ``b``/``d`` carry the over-strand.  The crossing is positive when the
over-strand runs ``d -> b`` and negative when it runs ``b -> d``.

Internally most constructions work on a *slot graph*: crossing ``k`` owns the
slots ``4k .. 4k+3`` in counterclockwise order, ``other[s]`` is the slot at the
far end of the arc leaving slot ``s``, and ``under[k]`` is the parity (0 or 1)
of the slot pair carrying the under-strand.  :func:`assemble` turns such a
graph into a canonically labelled :class:`PlanarDiagram`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Crossing",
    "PlanarDiagram",
    "DiagramError",
    "ArcLabelError",
    "OrientationError",
    "AmbiguousOrientationError",
    "SplitDiagramError",
    "NonPlanarError",
    "validate",
    "unknot",
    "unlink",
    "assemble",
    "connected_sum",
    "mirror",
    "is_alternating",
    "is_reduced",
    "nugatory_crossings",
    "faces",
    "pretzel",
    "canonical_form",
    "same_diagram",
]


class DiagramError(ValueError):
    """Base class for malformed diagram input."""


class ArcLabelError(DiagramError):
    """Arc labels are duplicated, missing, or not consecutive along components."""


class OrientationError(DiagramError):
    """The arc-successor relation is inconsistent with the crossing data."""


class AmbiguousOrientationError(OrientationError):
    """The orientation of some over-strand cannot be recovered from the labels."""


class SplitDiagramError(DiagramError):
    """The diagram is split (disconnected projection or a liftable component)."""


class NonPlanarError(DiagramError):
    """The crossing data does not describe a diagram in the plane."""


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def arcs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    def __repr__(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"X({self.a},{self.b},{self.c},{self.d}){s}"


@dataclass(frozen=True)
class PlanarDiagram:
    """A validated oriented link diagram.

    ``free_loops`` counts crossingless components; the zero-crossing unknot is
    ``PlanarDiagram((), free_loops=1)``.  Instances should come from
    :func:`validate` or :func:`assemble`, never be built by hand.
    """

    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    component_count: int = 1
    split: bool = False
    components_arcs: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def c(self) -> int:
        return len(self.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    def pd(self) -> list[tuple[int, int, int, int]]:
        return [x.arcs for x in self.crossings]

    @cached_property
    def successor(self) -> dict[int, int]:
        """Arc -> next arc along the orientation."""
        succ = {}
        for x in self.crossings:
            succ[x.a] = x.c
            succ[x.over_in] = x.over_out
        return succ

    @cached_property
    def slot_graph(self) -> tuple[list[int], list[int], frozenset[int]]:
        """``(other, under, exits)`` for this diagram; see the module docstring."""
        return _slot_graph(self.crossings)

    def __repr__(self) -> str:
        body = ", ".join(repr(x) for x in self.crossings)
        extra = f", free_loops={self.free_loops}" if self.free_loops else ""
        return f"PlanarDiagram([{body}]{extra}, |K|={self.component_count})"


def _opp(s: int) -> int:
    return (s & ~3) | ((s + 2) & 3)


def _slot_graph(crossings: Sequence[Crossing]):
    where: dict[int, list[int]] = {}
    for k, x in enumerate(crossings):
        for pos, label in enumerate(x.arcs):
            where.setdefault(label, []).append(4 * k + pos)
    other = [0] * (4 * len(crossings))
    for label, slots in where.items():
        p, q = slots
        other[p] = q
        other[q] = p
    exits = set()
    for k, x in enumerate(crossings):
        exits.add(4 * k + 2)
        exits.add(4 * k + (1 if x.sign > 0 else 3))
    return other, [0] * len(crossings), frozenset(exits)


def _trace(other: Sequence[int]) -> list[list[int]]:
    """Undirected strand components as lists of *entry* slots (arbitrary direction)."""
    seen = [False] * len(other)
    comps = []
    for start in range(len(other)):
        if seen[start]:
            continue
        entries = []
        s = start
        while True:
            seen[s] = True
            t = _opp(s)
            seen[t] = True
            entries.append(s)
            s = other[t]
            if s == start:
                break
            if seen[s]:
                raise NonPlanarError("strand trace does not close up")
        comps.append(entries)
    return comps


def _face_cycles(other: Sequence[int]) -> list[list[int]]:
    """Faces as cycles of darts (a dart is the slot an arc leaves from)."""
    seen = [False] * len(other)
    out = []
    for start in range(len(other)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            y = other[d]
            d = (y & ~3) | ((y - 1) & 3)
        out.append(cyc)
    return out


def _pieces(other: Sequence[int]) -> list[set[int]]:
    n = len(other) // 4
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s, t in enumerate(other):
        a, b = find(s >> 2), find(t >> 2)
        if a != b:
            parent[a] = b
    groups: dict[int, set[int]] = {}
    for k in range(n):
        groups.setdefault(find(k), set()).add(k)
    return list(groups.values())


def _check_planar(other: Sequence[int]) -> None:
    n = len(other) // 4
    if n == 0:
        return
    pieces = _pieces(other)
    nfaces = len(_face_cycles(other))
    if nfaces != n + 2 * len(pieces):
        raise NonPlanarError(
            f"rotation system has {nfaces} faces, a planar diagram needs {n + 2 * len(pieces)}"
        )


def _build(crossings: list[Crossing], free_loops: int, allow_split: bool) -> PlanarDiagram:
    """Check a fully signed crossing list and wrap it; shared by every constructor."""
    n = len(crossings)
    if n == 0:
        if free_loops < 1:
            raise DiagramError("a diagram needs at least one component")
        d = PlanarDiagram((), free_loops, free_loops, free_loops > 1, ())
        if d.split and not allow_split:
            raise SplitDiagramError(f"{free_loops}-component unlink diagram is split")
        return d

    counts = Counter(label for x in crossings for label in x.arcs)
    expected = set(range(1, 2 * n + 1))
    if set(counts) != expected:
        missing = sorted(expected - set(counts))
        extra = sorted(set(counts) - expected)
        raise ArcLabelError(f"arc labels must be 1..{2 * n}; missing {missing}, unexpected {extra}")
    bad = sorted(label for label, m in counts.items() if m != 2)
    if bad:
        raise ArcLabelError(f"arc labels {bad} do not appear exactly twice")

    other, _, exits = _slot_graph(crossings)
    for s in range(4 * n):
        if (s in exits) == (other[s] in exits):
            raise OrientationError(
                f"arc {crossings[s >> 2].arcs[s & 3]} is not entered exactly once"
            )
    _check_planar(other)

    comps = []
    comp_arcs = []
    for entries in _trace(other):
        if entries[0] in exits:
            entries = [_opp(s) for s in reversed(entries)]
        comps.append(entries)
        arcs = [crossings[s >> 2].arcs[s & 3] for s in entries]
        # arcs[i] is the arc arriving at entries[i]; consecutive means +1 steps mod the range
        lo, hi = min(arcs), max(arcs)
        if hi - lo + 1 != len(arcs):
            raise ArcLabelError(f"component arcs {sorted(arcs)} are not a consecutive range")
        m = len(arcs)
        for i in range(m):
            nxt = arcs[(i + 1) % m]
            want = arcs[i] + 1 if arcs[i] < hi else lo
            if nxt != want:
                raise ArcLabelError(
                    f"arc {arcs[i]} is followed by {nxt}; labels must be consecutive along "
                    "the orientation"
                )
        start = arcs.index(lo)
        comp_arcs.append(tuple(arcs[start:] + arcs[:start]))

    split = len(_pieces(other)) + free_loops > 1
    if len(comps) + free_loops > 1:
        for entries in comps:
            kinds = {(s & 1) == 0 for s in entries}  # True = under pass
            if len(kinds) == 1:
                split = True
    if split and not allow_split:
        raise SplitDiagramError("diagram is split; the library works with non-split links")

    order = sorted(range(len(comp_arcs)), key=lambda i: comp_arcs[i][0])
    d = PlanarDiagram(
        tuple(crossings),
        free_loops,
        len(comps) + free_loops,
        split,
        tuple(comp_arcs[i] for i in order),
    )
    from .seifert import seifert_circles  # local: seifert imports this module

    if seifert_circles(d).diagram_genus_twice % 2:
        raise DiagramError("c(D) - s(D) - |K| + 2 is odd; the diagram is inconsistent")
    return d


def unknot() -> PlanarDiagram:
    return PlanarDiagram((), 1, 1, False, ())


def unlink(k: int) -> PlanarDiagram:
    return _build([], k, allow_split=True)


def validate(
    raw_crossings: Iterable[Sequence[int]], *, free_loops: int = 0, allow_split: bool = False
) -> PlanarDiagram:
    """Validate a PD code and derive crossing signs and components.

    The orientation of each component is read off its under-passes (``a -> c``)
    and, for components that never pass under, from the consecutive arc
    numbering.  The empty code gives the zero-crossing unknot.
    """
    raw = [tuple(int(v) for v in x) for x in raw_crossings]
    for x in raw:
        if len(x) != 4:
            raise DiagramError(f"crossing {x} does not have four arcs")
    if not raw:
        return _build([], free_loops or 1, allow_split)

    n = len(raw)
    counts = Counter(label for x in raw for label in x)
    expected = set(range(1, 2 * n + 1))
    if set(counts) != expected or any(m != 2 for m in counts.values()):
        dup = sorted(label for label, m in counts.items() if m != 2)
        missing = sorted(expected - set(counts))
        raise ArcLabelError(
            f"arc labels must be 1..{2 * n}, each exactly twice (bad: {dup}, missing: {missing})"
        )

    where: dict[int, list[int]] = {}
    for k, x in enumerate(raw):
        for pos, label in enumerate(x):
            where.setdefault(label, []).append(4 * k + pos)
    other = [0] * (4 * n)
    for p, q in where.values():
        other[p], other[q] = q, p
    _check_planar(other)

    entry_of_over: dict[int, int] = {}
    for entries in _trace(other):
        unders = [s for s in entries if (s & 1) == 0]
        forward = {(s & 3) == 0 for s in unders}
        if len(forward) == 2:
            raise OrientationError("under-passes of one component disagree on its direction")
        if forward:
            fwd = forward.pop()
        else:
            arcs = [raw[s >> 2][s & 3] for s in entries]
            m = len(arcs)
            if m < 3:
                if not allow_split:
                    raise AmbiguousOrientationError(
                        f"component with arcs {sorted(arcs)} never passes under and is too "
                        "short to orient from its labels"
                    )
                fwd = True
            else:
                lo, hi = min(arcs), max(arcs)
                step = lambda a: a + 1 if a < hi else lo  # noqa: E731
                fwd = all(step(arcs[i]) == arcs[(i + 1) % m] for i in range(m))
        if not fwd:
            entries = [_opp(s) for s in reversed(entries)]
        for s in entries:
            if s & 1:
                entry_of_over[s >> 2] = s & 3

    crossings = []
    for k, x in enumerate(raw):
        sign = 1 if entry_of_over[k] == 3 else -1
        crossings.append(Crossing(*x, sign=sign))
    return _build(crossings, free_loops, allow_split)


def assemble(
    other: Sequence[int],
    under: Sequence[int] | None = None,
    exits: Iterable[int] = (),
    *,
    free_loops: int = 0,
    allow_split: bool = False,
    reverse: Iterable[int] = (),
) -> PlanarDiagram:
    """Label a slot graph canonically and return the validated diagram.

    ``exits`` are slots through which a strand is known to leave its crossing;
    every component containing one is oriented accordingly, the others follow
    their trace from the lowest slot.  Components listed in ``reverse`` (by
    their order of discovery) are flipped, which lets generators choose link
    orientations.  Arcs are numbered component by component, starting with the
    arc that leaves the crossing entered first.
    """
    nslots = len(other)
    n = nslots // 4
    if under is None:
        under = [0] * n
    for s, t in enumerate(other):
        if other[t] != s or t == s:
            raise DiagramError("slot pairing is not an involution without fixed points")
    exits = set(exits)
    reverse = set(reverse)

    comps = []
    for idx, entries in enumerate(_trace(other)):
        slots = set(entries) | {_opp(s) for s in entries}
        hinted = exits & slots
        flip = False
        if hinted:
            as_exit = {_opp(s) for s in entries}
            agree = {h in as_exit for h in hinted}
            if len(agree) == 2:
                raise OrientationError("orientation hints disagree along a component")
            flip = not agree.pop()
        if idx in reverse:
            flip = not flip
        if flip:
            # reverse traversal: entries become the opposite slots, in reverse order
            entries = [_opp(s) for s in reversed(entries)]
        comps.append(entries)

    label_at = [0] * nslots
    nxt = 1
    for entries in comps:
        m = len(entries)
        for i in range(m):
            ex = _opp(entries[i])
            label_at[ex] = nxt + i
            label_at[other[ex]] = nxt + i
        nxt += m

    entry_set = set()
    for entries in comps:
        entry_set.update(entries)
    crossings = []
    for k in range(n):
        u = next(p for p in ((under[k] & 1), (under[k] & 1) + 2) if 4 * k + p in entry_set)
        o = next(p for p in (1 - (under[k] & 1), 3 - (under[k] & 1)) if 4 * k + p in entry_set)
        labels = [label_at[4 * k + ((u + i) & 3)] for i in range(4)]
        sign = 1 if o == ((u + 3) & 3) else -1
        crossings.append(Crossing(*labels, sign=sign))
    if n == 0:
        return _build([], free_loops, allow_split)
    return _build(crossings, free_loops, allow_split)


def _diagram_slots(D: PlanarDiagram) -> tuple[list[int], list[int], set[int]]:
    other, under, exits = D.slot_graph
    return list(other), list(under), set(exits)


def faces(D: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Faces of the projection, each as a cycle of ``(crossing, slot)`` darts."""
    other, _, _ = D.slot_graph
    return [[(d >> 2, d & 3) for d in cyc] for cyc in _face_cycles(other)]


def mirror(D: PlanarDiagram) -> PlanarDiagram:
    """Mirror image: reflect the plane, i.e. swap ``b`` and ``d`` at every crossing."""
    xs = [Crossing(x.a, x.d, x.c, x.b, -x.sign) for x in D.crossings]
    return _build(xs, D.free_loops, D.split)


def connected_sum(
    D1: PlanarDiagram, D2: PlanarDiagram, arc1: int | None = None, arc2: int | None = None
) -> PlanarDiagram:
    """Band the component carrying ``arc1`` in ``D1`` to the one carrying ``arc2``.

    Both arcs are cut and reconnected head-to-tail so orientations match; the
    result is relabelled canonically.  Zero-crossing unknots act as identity.
    """
    allow = D1.split or D2.split
    if D1.c == 0 or D2.c == 0:
        base, unk = (D2, D1) if D1.c == 0 else (D1, D2)
        if base.c == 0:
            return _build([], base.free_loops + unk.free_loops - 1, allow)
        o, u, e = _diagram_slots(base)
        return assemble(o, u, e, free_loops=base.free_loops + unk.free_loops - 1, allow_split=allow)
    arc1 = 1 if arc1 is None else arc1
    arc2 = 1 if arc2 is None else arc2
    for D, arc in ((D1, arc1), (D2, arc2)):
        if not 1 <= arc <= D.arc_count:
            raise ArcLabelError(f"arc {arc} is not an arc of the diagram")
    o1, u1, e1 = _diagram_slots(D1)
    o2, u2, e2 = _diagram_slots(D2)
    off = len(o1)
    other = o1 + [t + off for t in o2]
    under = u1 + u2
    exits = e1 | {s + off for s in e2}

    def exit_slot(D, arc, shift):
        for k, x in enumerate(D.crossings):
            if x.c == arc:
                return 4 * k + 2 + shift
            if x.over_out == arc:
                return 4 * k + x.arcs.index(arc) + shift
        raise ArcLabelError(f"arc {arc} not found")

    p1 = exit_slot(D1, arc1, 0)
    p2 = exit_slot(D2, arc2, off)
    q1, q2 = other[p1], other[p2]
    other[p1], other[q2] = q2, p1
    other[p2], other[q1] = q1, p2
    return assemble(
        other, under, exits, free_loops=D1.free_loops + D2.free_loops, allow_split=allow
    )


def _passes(D: PlanarDiagram) -> list[list[bool]]:
    """Per component, the sequence of passes along the orientation (True = under)."""
    under_at = {}
    for x in D.crossings:
        under_at[x.a] = True
        under_at[x.over_in] = False
    return [[under_at[a] for a in comp] for comp in D.components_arcs]


def is_alternating(D: PlanarDiagram) -> bool:
    for seq in _passes(D):
        m = len(seq)
        if any(seq[i] == seq[(i + 1) % m] for i in range(m)):
            return False
    return True


def nugatory_crossings(D: PlanarDiagram) -> list[int]:
    """Crossings met twice by one face, i.e. cut vertices of the projection."""
    out = set()
    for face in faces(D):
        seen = Counter(k for k, _ in face)
        out.update(k for k, m in seen.items() if m > 1)
    return sorted(out)


def is_reduced(D: PlanarDiagram) -> bool:
    return not nugatory_crossings(D)


def pretzel(*twists: int, reverse: Iterable[int] = ()) -> PlanarDiagram:
    """Standard diagram of the pretzel link ``P(a_1, ..., a_k)``.

    Column ``i`` is a vertical twist region of ``a_i`` crossings of one
    handedness; columns are joined side by side and closed over the top and
    around the bottom.  Crossing ``sum(a[:i]) + j`` is the ``j``-th crossing
    (from the top) of column ``i``.  ``reverse`` flips the orientation of the
    listed link components.
    """
    if len(twists) == 1 and isinstance(twists[0], (list, tuple)):
        twists = tuple(twists[0])
    if len(twists) < 2:
        raise DiagramError("a pretzel diagram needs at least two columns")
    if any(int(a) < 1 for a in twists):
        raise DiagramError("pretzel twist counts must be positive")
    # slots per crossing: 0 = upper-left, 1 = lower-left, 2 = lower-right, 3 = upper-right
    starts = list(itertools.accumulate((0,) + tuple(twists)))
    n = starts[-1]
    other = [-1] * (4 * n)

    def link(p, q):
        other[p], other[q] = q, p

    k = len(twists)
    for i, a in enumerate(twists):
        for j in range(a - 1):
            top, bot = starts[i] + j, starts[i] + j + 1
            link(4 * top + 1, 4 * bot + 0)
            link(4 * top + 2, 4 * bot + 3)
    for i in range(k):
        first, last = starts[i], starts[i + 1] - 1
        if i + 1 < k:
            nfirst, nlast = starts[i + 1], starts[i + 2] - 1
            link(4 * first + 3, 4 * nfirst + 0)
            link(4 * last + 2, 4 * nlast + 1)
    link(4 * starts[0] + 0, 4 * starts[k - 1] + 3)
    link(4 * (starts[1] - 1) + 1, 4 * (starts[k] - 1) + 2)
    return assemble(other, [0] * n, reverse=reverse)


def _relabel_key(D: PlanarDiagram, comp_order, starts) -> tuple:
    mapping = {}
    nxt = 1
    for ci, st in zip(comp_order, starts):
        arcs = D.components_arcs[ci]
        m = len(arcs)
        for i in range(m):
            mapping[arcs[(st + i) % m]] = nxt + i
        nxt += m
    xs = sorted(
        (mapping[x.a], mapping[x.b], mapping[x.c], mapping[x.d], x.sign) for x in D.crossings
    )
    return tuple(xs)


def canonical_form(D: PlanarDiagram, limit: int = 200_000) -> tuple:
    """A relabelling-invariant key: minimum over component orders and basepoints."""
    comps = [i for i, arcs in enumerate(D.components_arcs)]
    best = None
    tried = 0
    for order in itertools.permutations(comps):
        for starts in itertools.product(*(range(len(D.components_arcs[i])) for i in order)):
            key = _relabel_key(D, order, starts)
            if best is None or key < best:
                best = key
            tried += 1
            if tried >= limit:
                return (D.free_loops, best)
    return (D.free_loops, best if best is not None else ())


def same_diagram(D1: PlanarDiagram, D2: PlanarDiagram) -> bool:
    """Structural equality up to relabelling of arcs and crossings."""
    if (D1.c, D1.component_count, D1.free_loops) != (D2.c, D2.component_count, D2.free_loops):
        return False
    if sorted(D1.signs) != sorted(D2.signs):
        return False
    return canonical_form(D1) == canonical_form(D2)
