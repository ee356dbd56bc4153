"""Crossing-number, genus and braid-index bounds as integer calculators.

Nothing here touches a diagram.  Callers feed in computed quantities (circle
counts, polynomial degrees) or tabulated ones (braid index, arc index), and
the functions return plain integers.  ``record`` wraps a calculator call in a
``BoundRecord`` that can be recomputed from its stored inputs.

Genera are passed doubled (``g2 = 2g``) throughout so that link genera stay
integral.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Sequence

from .poly import DegreeSummary

__all__ = [
    "BoundRecord",
    "Membership",
    "FVerdict",
    "ParityError",
    "TorusInvariants",
    "record",
    "genus_formula_bound",
    "torus_invariants",
    "torus_display_genus_twice",
    "f_check",
    "composite_bound",
    "composite_braid_index",
    "mwf_bound",
    "morton_genus_bound",
    "homfly_crossing_bound",
    "ohyama_bound",
    "kidwell_bound",
    "arc_index_bound_mod2",
    "cable_genus",
    "cable_crossing_bound",
    "satellite_bound",
    "satellite_alt_braid_bound",
    "alt_fibered_companion_bound",
    "murasugi_sum_sa_check",
    "sab_criterion",
    "CALCULATORS",
]


class ParityError(ValueError):
    """``E - e`` came out odd, which no HOMFLY polynomial can produce."""


@dataclass(frozen=True)
class BoundRecord:
    name: str
    value: int
    inputs: tuple[tuple[str, int], ...]
    proposition_ref: str

    def recompute(self) -> int:
        return CALCULATORS[self.name][0](**dict(self.inputs))


class Membership(enum.Enum):
    IN_F = "IN_F"
    NOT_IN_F = "NOT_IN_F"
    UNKNOWN = "UNKNOWN"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FVerdict:
    status: Membership
    certificate: tuple[BoundRecord, ...] = field(default=())

    def __str__(self) -> str:
        return str(self.status)


@dataclass(frozen=True)
class TorusInvariants:
    c: int
    g2: int
    b: int
    components: int


def _interval(x) -> tuple[int, int]:
    if isinstance(x, tuple):
        lo, hi = x
        if lo > hi:
            raise ValueError(f"empty bracket {x}")
        return int(lo), int(hi)
    return int(x), int(x)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def genus_formula_bound(g2: int, b: int, k: int) -> int:
    """``2g + b + |K| - 2``.

    Valid with the Seifert, free or canonical genus; the canonical genus gives
    the strongest of the three.
    """
    _need(g2 >= 0 and b >= 1 and k >= 1, "need g2 >= 0, b >= 1, k >= 1")
    return g2 + b + k - 2


def torus_invariants(p: int, q: int) -> TorusInvariants:
    """Crossing number, doubled genus, braid index and component count of T(p, q)."""
    if q < 2 or p < q:
        raise ValueError("torus invariants need p >= q >= 2")
    c = p * q - p
    k = gcd(p, q)
    return TorusInvariants(c=c, g2=c - q - k + 2, b=q, components=k)


def torus_display_genus_twice(p: int, q: int) -> int:
    """The alternative closed form ``pq - p - q + |K| - 2``.

    It differs from ``torus_invariants(p, q).g2`` by ``2|K| - 4`` and is kept
    only so the harness can show the two side by side.
    """
    return p * q - p - q + gcd(p, q) - 2


def f_check(c, g2, b, k) -> FVerdict:
    """Tri-state membership test for ``c = 2g + b + |K| - 2``.

    Each argument is an exact integer or a ``(lo, hi)`` bracket.  Any genuine
    bracket makes the verdict UNKNOWN.
    """
    vals = [_interval(x) for x in (c, g2, b, k)]
    rec = None
    if all(lo == hi for lo, hi in vals):
        cc, gg, bb, kk = (lo for lo, _ in vals)
        rec = record("genus_formula_bound", g2=gg, b=bb, k=kk)
        status = Membership.IN_F if rec.value == cc else Membership.NOT_IN_F
        return FVerdict(status, (rec,))
    return FVerdict(Membership.UNKNOWN, ())


def composite_bound(factors: Sequence[tuple[int, int, int]]) -> int:
    """Sum of ``2g_i + b_i + |K_i| - 2`` over the prime factors."""
    if not factors:
        raise ValueError("composite_bound needs at least one factor")
    return sum(genus_formula_bound(g2, b, k) for g2, b, k in factors)


def composite_braid_index(b_list: Sequence[int]) -> int:
    if not b_list:
        raise ValueError("composite_braid_index needs at least one factor")
    return sum(b_list) - (len(b_list) - 1)


def _span(deg: DegreeSummary) -> int:
    d = deg.E - deg.e
    if d % 2:
        raise ParityError(f"odd v-spread {d}")
    return d // 2


def mwf_bound(deg: DegreeSummary) -> int:
    """Braid-index lower bound ``(E - e)/2 + 1``."""
    return _span(deg) + 1


def morton_genus_bound(deg: DegreeSummary) -> int:
    """``M``, which never exceeds ``2g(D) + |K| - 1`` for any diagram D."""
    _span(deg)
    return deg.M


def homfly_crossing_bound(deg: DegreeSummary) -> int:
    """Crossing-number lower bound ``M + (E - e)/2``."""
    return deg.M + _span(deg)


def ohyama_bound(b: int) -> int:
    _need(b >= 1, "b must be positive")
    return 2 * b - 2


def kidwell_bound(maxdeg_z_f: int) -> int:
    return maxdeg_z_f + 1


def arc_index_bound_mod2(spread: int) -> int:
    """Arc-index lower bound from the a-spread of the mod-2 Kauffman polynomial."""
    _need(spread >= 0, "spread must be nonnegative")
    return spread + 2


def _coprime(p: int, q: int) -> None:
    _need(p >= 1 and q >= 1, "cable parameters must be positive")
    _need(gcd(p, q) == 1, "cable parameters must be coprime")


def cable_genus(p: int, q: int, g2_c: int) -> int:
    """Doubled genus of the (p, q)-cable, ``(p-1)(q-1) + p * 2g(C)``."""
    _coprime(p, q)
    return (p - 1) * (q - 1) + p * g2_c


def cable_crossing_bound(p: int, q: int, c_c: int) -> int:
    """``q(p-1) + p c(C)`` for a companion C in the family."""
    _coprime(p, q)
    return q * (p - 1) + p * c_c


def satellite_bound(
    pattern_type,
    w0: int | None = None,
    w1: int | None = None,
    g2_c: int | None = None,
    b_c: int | None = None,
    g_b: int | None = None,
    alpha_c: int | None = None,
) -> int:
    """Three-case satellite bound keyed on the pattern type (0, 1 or anything else)."""
    if pattern_type in (0, 1):
        missing = [n for n, v in (("w0", w0), ("g2_c", g2_c), ("b_c", b_c), ("g_b", g_b)) if v is None]
        if pattern_type == 1 and w1 is None:
            missing.append("w1")
        if missing:
            raise ValueError(f"satellite_bound type {pattern_type} needs {', '.join(missing)}")
        value = w0 * (g2_c + b_c - 1) + g_b + w0
        return value + w1 if pattern_type == 1 else value
    if alpha_c is None:
        raise ValueError("satellite_bound for other patterns needs alpha_c")
    return 2 * alpha_c - 2


def satellite_alt_braid_bound(c_b: int, b_b: int, c_c: int) -> int:
    return c_b + b_b * c_c


def alt_fibered_companion_bound(c_c: int) -> int:
    return 2 * c_c + 2


def murasugi_sum_sa_check(total_sa: int, part_sa_list: Sequence[int]) -> bool:
    return total_sa - 1 == sum(s - 1 for s in part_sa_list)


def sab_criterion(s_a: int, b) -> FVerdict:
    """Membership of an alternating link from ``s_a`` and a (possibly bracketed) braid index.

    Since ``b <= s_a`` always, a bracket lying strictly below ``s_a`` still
    decides NOT_IN_F.
    """
    lo, hi = _interval(b)
    if lo == hi == s_a:
        return FVerdict(Membership.IN_F)
    if hi < s_a:
        return FVerdict(Membership.NOT_IN_F)
    if lo < s_a <= hi:
        return FVerdict(Membership.UNKNOWN)
    raise ValueError(f"braid index {b} exceeds s_a = {s_a}")


CALCULATORS: dict[str, tuple[Callable[..., int], str]] = {
    "genus_formula_bound": (genus_formula_bound, "c >= 2g + b + |K| - 2"),
    "composite_braid_index": (composite_braid_index, "b(K1 # K2) = b(K1) + b(K2) - 1"),
    "ohyama_bound": (ohyama_bound, "c >= 2b - 2"),
    "kidwell_bound": (kidwell_bound, "c >= maxdeg_z F + 1"),
    "arc_index_bound_mod2": (arc_index_bound_mod2, "alpha >= spread_a G + 2"),
    "cable_genus": (cable_genus, "2g = (p-1)(q-1) + 2p g(C)"),
    "cable_crossing_bound": (cable_crossing_bound, "c >= q(p-1) + p c(C)"),
    "satellite_bound": (satellite_bound, "three-case satellite bound"),
    "satellite_alt_braid_bound": (satellite_alt_braid_bound, "c >= c(B) + b(B) c(C)"),
    "alt_fibered_companion_bound": (alt_fibered_companion_bound, "c >= 2 c(C) + 2"),
}


def record(name: str, **inputs) -> BoundRecord:
    """Evaluate a registered calculator and keep its inputs alongside the value."""
    fn, ref = CALCULATORS[name]
    value = fn(**inputs)
    return BoundRecord(name, int(value), tuple(sorted(inputs.items())), ref)
