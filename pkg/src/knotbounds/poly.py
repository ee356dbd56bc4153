"""Exact two-variable Laurent polynomials over the integers.

A polynomial is a mapping ``(i, j) -> coefficient`` for the monomial
``x**i * y**j``; zero coefficients are never stored.  The same class serves
HOMFLY polynomials in ``(v, z)`` and Kauffman polynomials in ``(a, z)``; the
variable names only matter for the text form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = ["LaurentPoly2", "DegreeSummary", "degrees", "ZeroPolynomialError"]


class ZeroPolynomialError(ValueError):
    """Raised when degree information is requested for the zero polynomial."""


class LaurentPoly2:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[(int(key[0]), int(key[1]))] = int(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly2":
        # terms must already be free of zeros
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, coeff: int = 1) -> "LaurentPoly2":
        return cls({(i, j): coeff})

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls._raw({(0, 0): 1})

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls._raw({})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.monomial(0, 0, other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.monomial(0, 0, other)
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            c = out.get(key, 0) + coeff
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        return LaurentPoly2._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.monomial(0, 0, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly2.zero()
            return LaurentPoly2._raw({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, di: int, dj: int = 0, coeff: int = 1) -> "LaurentPoly2":
        """Multiply by the monomial ``coeff * x**di * y**dj``."""
        if coeff == 0:
            return LaurentPoly2.zero()
        return LaurentPoly2._raw(
            {(i + di, j + dj): c * coeff for (i, j), c in self._terms.items()}
        )

    def reduce_mod(self, modulus: int) -> "LaurentPoly2":
        return LaurentPoly2({k: c % modulus for k, c in self._terms.items()})

    def specialize_x(self, value: int = 1) -> dict[int, int]:
        """Substitute an integer for the first variable; returns ``{j: coeff}``."""
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            if value == 1:
                term = c
            elif i >= 0:
                term = c * value**i
            else:
                if value not in (1, -1):
                    raise ValueError("negative exponents only specialize at x = +-1")
                term = c * value ** (-i)
            out[j] = out.get(j, 0) + term
        return {j: c for j, c in out.items() if c}

    def substitute(self, fx, fy) -> "LaurentPoly2":
        """Apply ``x**i y**j -> fx(i) * fy(j)`` where both return polynomials."""
        out = LaurentPoly2.zero()
        for (i, j), c in self._terms.items():
            out = out + fx(i) * fy(j) * c
        return out

    def swap_x_inverse(self, sign: int = 1) -> "LaurentPoly2":
        """``x -> sign * x**-1``; used for mirror images."""
        return LaurentPoly2._raw(
            {(-i, j): c * (sign**abs(i)) for (i, j), c in self._terms.items()}
        )

    def to_text(self, names: tuple[str, str] = ("v", "z")) -> str:
        if not self._terms:
            return "0"
        x, y = names
        parts = [f"{c} {x}^{i} {y}^{j}" for (i, j), c in sorted(self._terms.items())]
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly2":
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[tuple[int, int], int] = {}
        for part in text.split(" + "):
            m = _TERM_RE.fullmatch(part.strip())
            if m is None:
                raise ValueError(f"malformed polynomial term: {part!r}")
            coeff, i, j = int(m.group(1)), int(m.group(2)), int(m.group(3))
            terms[(i, j)] = terms.get((i, j), 0) + coeff
        return cls(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()})"


_TERM_RE = re.compile(r"(-?\d+) [A-Za-z]\^(-?\d+) [A-Za-z]\^(-?\d+)")


def poly_sum(polys: Iterable[LaurentPoly2]) -> LaurentPoly2:
    out = LaurentPoly2.zero()
    for p in polys:
        out = out + p
    return out


@dataclass(frozen=True)
class DegreeSummary:
    """Extreme exponents: ``e``/``E`` in the first variable, ``m``/``M`` in z."""

    e: int
    E: int
    m: int
    M: int

    @property
    def spread(self) -> int:
        return self.E - self.e


def degrees(p: LaurentPoly2) -> DegreeSummary:
    if p.is_zero():
        raise ZeroPolynomialError("degrees of the zero polynomial are undefined")
    xs = [i for i, _ in p._terms]
    ys = [j for _, j in p._terms]
    return DegreeSummary(min(xs), max(xs), min(ys), max(ys))
