"""HOMFLY and Kauffman polynomials by skein recursion toward descending diagrams.

Conventions (fixed, and used for every fixture):

* HOMFLY ``P(v, z)``: ``v**-1 P(L+) - v P(L-) = z P(L0)``, ``P(unknot) = 1``.
* Kauffman ``F(a, z) = a**-w(D) Lambda(D)`` with
  ``Lambda(S+) + Lambda(S-) = z (Lambda(S0) + Lambda(Sinf))``,
  ``Lambda(positive kink) = a Lambda``, ``Lambda(unknot) = 1``.

The engine works on slot graphs (see :mod:`knotbounds.diagram`).  A diagram
is first simplified by Reidemeister I/II removals and split into the
connected pieces of its projection.  For a connected piece, components are
ordered and given basepoints; walking them in order, every crossing first met
from below is switched, and each switch contributes the smoothed diagram(s)
with one crossing fewer.  What is left is descending, hence an unlink.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass

from .diagram import PlanarDiagram
from .poly import DegreeSummary, LaurentPoly2, ZeroPolynomialError, degrees

__all__ = [
    "homfly",
    "kauffman",
    "kauffman_mod2",
    "conway",
    "degrees",
    "DegreeSummary",
    "CrossingCapError",
    "HOMFLY_CAP",
    "KAUFFMAN_CAP",
    "clear_cache",
]

HOMFLY_CAP = int(os.environ.get("KNOTBOUNDS_HOMFLY_CAP", 16))
KAUFFMAN_CAP = int(os.environ.get("KNOTBOUNDS_KAUFFMAN_CAP", 14))
_MEMO_LIMIT = 500_000


class CrossingCapError(RuntimeError):
    """The diagram has more crossings than the engine is configured to expand."""


def _opp(s: int) -> int:
    return (s & ~3) | ((s + 2) & 3)


def _splice(other, data, removed, transit):
    """Delete ``removed`` crossings, routing strands through ``transit``.

    Returns the compacted ``(other, data, loops)``; ``loops`` counts closed
    curves that lived entirely inside the removed crossings.
    """
    keep = [k for k in range(len(data)) if k not in removed]
    idx = {k: i for i, k in enumerate(keep)}
    new_other = [0] * (4 * len(keep))
    visited = set()
    for k in keep:
        base = 4 * k
        for p in range(4):
            t = other[base + p]
            while (t >> 2) in removed:
                visited.add(t)
                t2 = transit[t]
                visited.add(t2)
                t = other[t2]
            new_other[4 * idx[k] + p] = 4 * idx[t >> 2] + (t & 3)
    loops = 0
    for s in transit:
        if s in visited:
            continue
        loops += 1
        t = s
        while True:
            visited.add(t)
            t2 = transit[t]
            visited.add(t2)
            t = other[t2]
            if t == s:
                break
    return new_other, [data[k] for k in keep], loops


def _straight(ks):
    tr = {}
    for k in ks:
        for p in range(4):
            tr[4 * k + p] = 4 * k + ((p + 2) & 3)
    return tr


def _pieces(other, n):
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
    groups: dict[int, list[int]] = {}
    for k in range(n):
        groups.setdefault(find(k), []).append(k)
    return list(groups.values())


def _subgraph(other, data, ks):
    idx = {k: i for i, k in enumerate(ks)}
    new_other = []
    for k in ks:
        for p in range(4):
            t = other[4 * k + p]
            new_other.append(4 * idx[t >> 2] + (t & 3))
    return new_other, [data[k] for k in ks]


class _Engine:
    """Shared skein machinery; subclasses fix the crossing data and relations."""

    one = LaurentPoly2.one()

    def __init__(self):
        self.memo: dict = {}
        self.lock = threading.Lock()
        self._delta_pows = {0: self.one}

    # -- per-theory hooks -------------------------------------------------
    delta: LaurentPoly2

    def under_parity(self, d) -> int:
        raise NotImplementedError

    def entry_slots(self, k, d):
        """Slots (positions) through which strands enter, or ``None`` if unoriented."""
        raise NotImplementedError

    def kink_factor(self, other, data, k) -> LaurentPoly2:
        return self.one

    def expand(self, other, data, k):
        """Return ``(terms, switched_data)``: ``[(coeff, transit), ...]`` and the switch coefficient."""
        raise NotImplementedError

    def descending_value(self, other, data, comps) -> LaurentPoly2:
        raise NotImplementedError

    # -- generic driver -----------------------------------------------------
    def delta_pow(self, k: int) -> LaurentPoly2:
        p = self._delta_pows.get(k)
        if p is None:
            p = self.delta**k
            self._delta_pows[k] = p
        return p

    def simplify(self, other, data, loops):
        factor = self.one
        changed = True
        while changed and data:
            changed = False
            n = len(data)
            for s in range(4 * n):
                t = other[s]
                k = s >> 2
                if (t >> 2) == k and ((t - s) & 3) in (1, 3):
                    factor = factor * self.kink_factor(other, data, k)
                    other, data, lp = _splice(other, data, {k}, _straight([k]))
                    loops += lp
                    changed = True
                    break
            if changed:
                continue
            for s in range(4 * n):
                t = other[s]
                k1, k2 = s >> 2, t >> 2
                if k1 == k2:
                    continue
                s1 = (s & ~3) | ((s + 1) & 3)
                t1 = (t & ~3) | ((t - 1) & 3)
                if other[s1] != t1:
                    continue
                under1 = (s & 1) == self.under_parity(data[k1])
                under2 = (t & 1) == self.under_parity(data[k2])
                if under1 == under2:
                    other, data, lp = _splice(other, data, {k1, k2}, _straight([k1, k2]))
                    loops += lp
                    changed = True
                    break
        return other, data, loops, factor

    def evaluate(self, other, data, loops) -> LaurentPoly2:
        other, data, loops, factor = self.simplify(list(other), list(data), loops)
        n = len(data)
        if n == 0:
            return factor * self.delta_pow(loops - 1) if loops else factor
        pieces = _pieces(other, n)
        result = factor
        for ks in pieces:
            if len(pieces) == 1:
                result = result * self.connected(other, data)
            else:
                o, d = _subgraph(other, data, ks)
                result = result * self.connected(o, d)
        return result * self.delta_pow(loops + len(pieces) - 1)

    def components(self, other, data):
        """Strand components as entry-slot lists (oriented when the theory is)."""
        n = len(data)
        entries_ok = [True] * (4 * n)
        oriented = self.entry_slots(0, data[0]) is not None
        if oriented:
            entries_ok = [False] * (4 * n)
            for k, d in enumerate(data):
                for p in self.entry_slots(k, d):
                    entries_ok[4 * k + p] = True
        seen = [False] * (4 * n)
        comps = []
        for start in range(4 * n):
            if seen[start] or not entries_ok[start]:
                continue
            seq = []
            s = start
            while not seen[s]:
                seen[s] = True
                seen[_opp(s)] = True
                seq.append(s)
                s = other[_opp(s)]
            comps.append(seq)
        return comps

    def connected(self, other, data) -> LaurentPoly2:
        key = (tuple(other), tuple(data))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        comps = self.components(other, data)
        order = self._order(comps, data)
        bad = []
        visited = set()
        for seq in order:
            for s in seq:
                k = s >> 2
                if k in visited:
                    continue
                visited.add(k)
                if (s & 1) == self.under_parity(data[k]):
                    bad.append(k)
        data = list(data)
        total = LaurentPoly2.zero()
        mult = self.one
        for k in bad:
            terms, switch_coeff, new_d = self.expand(other, data, k)
            for coeff, transit in terms:
                o2, d2, lp = _splice(other, data, {k}, transit)
                total = total + mult * coeff * self.evaluate(o2, d2, lp)
            mult = mult * switch_coeff
            data[k] = new_d
        total = total + mult * self.descending_value(other, data, order)
        if len(self.memo) > _MEMO_LIMIT:
            self.memo.clear()
        self.memo[key] = total
        return total

    def _order(self, comps, data):
        """Pick a basepoint per component and an order minimising first-met undercrossings."""
        comp_of = {}
        for ci, seq in enumerate(comps):
            for s in seq:
                comp_of.setdefault(s >> 2, set()).add(ci)
        rotated = []
        for ci, seq in enumerate(comps):
            best, best_bad = seq, None
            m = len(seq)
            for st in range(m):
                seen, nbad = set(), 0
                for i in range(m):
                    s = seq[(st + i) % m]
                    k = s >> 2
                    if len(comp_of[k]) > 1 or k in seen:
                        continue
                    seen.add(k)
                    if (s & 1) == self.under_parity(data[k]):
                        nbad += 1
                if best_bad is None or nbad < best_bad:
                    best, best_bad = seq[st:] + seq[:st], nbad
            rotated.append(best)
        if len(rotated) == 1:
            return rotated
        # greedy: put components that mostly pass over first
        score = [0] * len(rotated)
        for ci, seq in enumerate(rotated):
            for s in seq:
                k = s >> 2
                if len(comp_of[k]) > 1:
                    score[ci] += -1 if (s & 1) == self.under_parity(data[k]) else 1
        order = sorted(range(len(rotated)), key=lambda i: (-score[i], i))
        return [rotated[i] for i in order]


class _Homfly(_Engine):
    """Crossing data ``(u, o)``: positions where the under/over strands enter."""

    v = LaurentPoly2.monomial(1, 0)
    delta = LaurentPoly2({(-1, -1): 1, (1, -1): -1})  # (v^-1 - v) / z
    # positive: P+ = v^2 P- + v z P0 ; negative: P- = v^-2 P+ - v^-1 z P0
    _switch = {1: LaurentPoly2.monomial(2, 0), -1: LaurentPoly2.monomial(-2, 0)}
    _smooth = {1: LaurentPoly2.monomial(1, 1), -1: LaurentPoly2.monomial(-1, 1, -1)}

    def under_parity(self, d):
        return d[0] & 1

    def entry_slots(self, k, d):
        return d

    @staticmethod
    def sign(d):
        u, o = d
        return 1 if o == ((u + 3) & 3) else -1

    def expand(self, other, data, k):
        u, o = data[k]
        eps = self.sign(data[k])
        b = 4 * k
        transit = {
            b + u: b + ((o + 2) & 3),
            b + ((o + 2) & 3): b + u,
            b + o: b + ((u + 2) & 3),
            b + ((u + 2) & 3): b + o,
        }
        return [(self._smooth[eps], transit)], self._switch[eps], (o, u)

    def descending_value(self, other, data, comps):
        return self.delta_pow(len(comps) - 1)


class _Kauffman(_Engine):
    """Unoriented; crossing data is the parity of the under-strand slot pair."""

    z = LaurentPoly2.monomial(0, 1)
    delta = LaurentPoly2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})  # (a + a^-1)/z - 1
    _a = {1: LaurentPoly2.monomial(1, 0), -1: LaurentPoly2.monomial(-1, 0)}

    def under_parity(self, d):
        return d

    def entry_slots(self, k, d):
        return None

    def _self_sign(self, other, data, k, entry):
        """Sign of a self-crossing, orienting its strand so it enters at ``entry``."""
        s = entry
        while True:
            s = other[_opp(s)]
            if (s >> 2) == k:
                break
        u_in, o_in = (entry & 3), (s & 3)
        if (u_in & 1) != self.under_parity(data[k]):
            u_in, o_in = o_in, u_in
        return 1 if o_in == ((u_in + 3) & 3) else -1

    def kink_factor(self, other, data, k):
        return self._a[self._self_sign(other, data, k, 4 * k)]

    def expand(self, other, data, k):
        b = 4 * k
        ta = {b: b + 1, b + 1: b, b + 2: b + 3, b + 3: b + 2}
        tb = {b: b + 3, b + 3: b, b + 1: b + 2, b + 2: b + 1}
        return [(self.z, ta), (self.z, tb)], -self.one, data[k] ^ 1

    def descending_value(self, other, data, comps):
        comp_of = {}
        for ci, seq in enumerate(comps):
            for s in seq:
                comp_of.setdefault(s >> 2, []).append(s)
        w = 0
        for k, ss in comp_of.items():
            if len(ss) == 2 and (ss[0] >> 2) == (ss[1] >> 2):
                same = any(ss[0] in seq and ss[1] in seq for seq in comps)
                if not same:
                    continue
                u_in, o_in = ss[0] & 3, ss[1] & 3
                if (u_in & 1) != data[k]:
                    u_in, o_in = o_in, u_in
                w += 1 if o_in == ((u_in + 3) & 3) else -1
        return LaurentPoly2.monomial(w, 0) * self.delta_pow(len(comps) - 1)


_HOMFLY = _Homfly()
_KAUFFMAN = _Kauffman()


def clear_cache() -> None:
    _HOMFLY.memo.clear()
    _KAUFFMAN.memo.clear()


def homfly(D: PlanarDiagram, cap: int | None = None) -> LaurentPoly2:
    """HOMFLY polynomial in ``(v, z)``."""
    cap = HOMFLY_CAP if cap is None else cap
    if D.c > cap:
        raise CrossingCapError(f"{D.c} crossings exceed the HOMFLY cap of {cap}")
    other, _, _ = D.slot_graph
    data = [(0, 3 if x.sign > 0 else 1) for x in D.crossings]
    if not data:
        return _HOMFLY.delta_pow(D.free_loops - 1)
    return _HOMFLY.evaluate(other, data, D.free_loops)


def kauffman(D: PlanarDiagram, cap: int | None = None) -> LaurentPoly2:
    """Kauffman polynomial in ``(a, z)``, normalised by the writhe."""
    cap = KAUFFMAN_CAP if cap is None else cap
    if D.c > cap:
        raise CrossingCapError(f"{D.c} crossings exceed the Kauffman cap of {cap}")
    other, _, _ = D.slot_graph
    if not D.crossings:
        return _KAUFFMAN.delta_pow(D.free_loops - 1)
    lam = _KAUFFMAN.evaluate(other, [0] * D.c, D.free_loops)
    return lam.shift(-D.writhe)


def kauffman_mod2(D: PlanarDiagram, cap: int | None = None) -> LaurentPoly2:
    """Kauffman polynomial with coefficients reduced mod 2.

    Raises :class:`ZeroPolynomialError` if nothing survives the reduction.
    """
    G = kauffman(D, cap).reduce_mod(2)
    if G.is_zero():
        raise ZeroPolynomialError("Kauffman polynomial vanishes mod 2")
    return G


def conway(D: PlanarDiagram, cap: int | None = None) -> LaurentPoly2:
    """Conway polynomial ``P(1, z)``, as a polynomial with only ``z`` exponents."""
    spec = homfly(D, cap).specialize_x(1)
    return LaurentPoly2({(0, j): c for j, c in spec.items()})
