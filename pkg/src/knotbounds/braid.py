"""Braid words, their closures, homogeneity and Markov moves."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .diagram import DiagramError, PlanarDiagram, assemble, unlink

__all__ = [
    "BraidWord",
    "BraidError",
    "closure",
    "is_homogeneous",
    "torus_braid",
    "conjugate",
    "stabilize",
    "permutation_cycles",
    "parse_braid",
]


class BraidError(DiagramError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators; ``letters`` holds ``(i, sign)`` pairs."""

    strand_count: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise BraidError("a braid needs at least one strand")
        for i, s in self.letters:
            if not 1 <= i < self.strand_count or s not in (1, -1):
                raise BraidError(f"generator {i}^{s} is invalid on {self.strand_count} strands")

    @classmethod
    def from_ints(cls, word: Iterable[int], strand_count: int | None = None) -> "BraidWord":
        """``[1, -2, 1]`` means sigma_1 sigma_2^-1 sigma_1."""
        word = [int(w) for w in word]
        if any(w == 0 for w in word):
            raise BraidError("0 is not a braid generator")
        if strand_count is None:
            strand_count = max((abs(w) for w in word), default=0) + 1
        return cls(strand_count, tuple((abs(w), 1 if w > 0 else -1) for w in word))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(w) for w in self.to_ints()) + f" / {self.strand_count}"


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    return BraidWord.from_ints(text.replace(",", " ").split(), strands)


def permutation_cycles(w: BraidWord) -> int:
    perm = list(range(w.strand_count))
    for i, _ in w.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    seen, cycles = set(), 0
    for p in range(w.strand_count):
        if p in seen:
            continue
        cycles += 1
        while p not in seen:
            seen.add(p)
            p = perm[p]
    return cycles


# Port layout of a braid crossing seen with strands running upwards: BL, BR, TR, TL.
# A positive generator sends its over-strand from bottom-left to top-right.
_POS_SLOTS = {"BR": 0, "TR": 1, "TL": 2, "BL": 3}
_NEG_SLOTS = {"BL": 0, "BR": 1, "TR": 2, "TL": 3}


def closure(w: BraidWord) -> PlanarDiagram:
    """Diagram of the closed braid; strands that never cross become free loops.

    Closures that are split (missing generators, the empty word on several
    strands) are returned with ``split=True`` rather than rejected.
    """
    n = len(w.letters)
    if n == 0:
        return unlink(w.strand_count)
    other = [-1] * (4 * n)
    exits = set()
    pending: list[int | None] = [None] * (w.strand_count + 1)
    first_entry: list[int | None] = [None] * (w.strand_count + 1)

    def link(p, q):
        other[p], other[q] = q, p

    for k, (i, sign) in enumerate(w.letters):
        slots = _POS_SLOTS if sign > 0 else _NEG_SLOTS
        for pos, port in ((i, "BL"), (i + 1, "BR")):
            s = 4 * k + slots[port]
            if pending[pos] is None:
                first_entry[pos] = s
            else:
                link(pending[pos], s)
        pending[i] = 4 * k + slots["TL"]
        pending[i + 1] = 4 * k + slots["TR"]
        exits.update((pending[i], pending[i + 1]))
    loops = 0
    for pos in range(1, w.strand_count + 1):
        if pending[pos] is None:
            loops += 1
        else:
            link(pending[pos], first_entry[pos])
    D = assemble(other, [0] * n, exits, free_loops=loops, allow_split=True)
    return D


def is_homogeneous(w: BraidWord) -> bool:
    """Every generator occurs, and all its occurrences share one sign."""
    signs: dict[int, set[int]] = {}
    for i, s in w.letters:
        signs.setdefault(i, set()).add(s)
    return all(len(signs.get(i, ())) == 1 for i in range(1, w.strand_count))


def torus_braid(p: int, q: int) -> BraidWord:
    """``(sigma_1 ... sigma_{q-1})^p`` on ``q`` strands."""
    if q < 2 or p < q:
        raise BraidError("torus braids need p >= q >= 2")
    return BraidWord(q, tuple((i, 1) for _ in range(p) for i in range(1, q)))


def conjugate(w: BraidWord, g: BraidWord | Sequence[int] | int) -> BraidWord:
    """``g^-1 w g`` without free reduction."""
    if isinstance(g, int):
        g = BraidWord.from_ints([g], w.strand_count)
    elif not isinstance(g, BraidWord):
        g = BraidWord.from_ints(g, w.strand_count)
    if g.strand_count != w.strand_count:
        raise BraidError("conjugating braid has a different strand count")
    inv = tuple((i, -s) for i, s in reversed(g.letters))
    return BraidWord(w.strand_count, inv + w.letters + g.letters)


def stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilisation: append ``sigma_n^{+-1}`` on ``n + 1`` strands."""
    n = w.strand_count
    return BraidWord(n + 1, w.letters + ((n, 1 if sign > 0 else -1),))


def torus_link_components(p: int, q: int) -> int:
    return gcd(p, q)
