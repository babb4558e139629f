"""Exact arithmetic in the rational function field Q(q).

Elements are stored as a pair of integer polynomials in ``q`` (backed by
``flint.fmpz_poly``) kept in a canonical form, so structural equality is
field equality.  Negative powers of ``q`` are ordinary rational functions.
"""
from __future__ import annotations

import re
from functools import lru_cache

from flint import fmpz_poly

__all__ = [
    "IntPoly",
    "QRat",
    "ZERO",
    "ONE",
    "Q",
    "qpow",
    "q_number",
    "poly_coeffs",
    "format_poly",
    "parse_poly",
]

IntPoly = fmpz_poly

_POLY_ONE = fmpz_poly([1])
_POLY_ZERO = fmpz_poly([])


def poly_coeffs(p: IntPoly) -> dict[int, int]:
    """Sparse ``{exponent: coefficient}`` view of an integer polynomial."""
    return {i: int(c) for i, c in enumerate(p.coeffs()) if c != 0}


def _canonical(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    if den == 0:
        raise ZeroDivisionError("QRat with zero denominator")
    if num == 0:
        return _POLY_ZERO, _POLY_ONE
    if den != 1:
        # fmpz_poly.gcd includes the gcd of the contents and has positive lc
        g = num.gcd(den)
        if g != 1:
            num = num // g
            den = den // g
        if den[den.degree()] < 0:
            num = -num
            den = -den
    return num, den


class QRat:
    """An element ``num/den`` of Q(q) in canonical form.

    Canonical form: ``gcd(num, den) = 1`` in Z[q] (so coprime over Q and with
    coprime integer contents) and ``den`` has a positive leading coefficient.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, QRat):
            if den == 1:
                self.num, self.den, self._hash = num.num, num.den, num._hash
                return
            other = num / QRat(den)
            self.num, self.den, self._hash = other.num, other.den, None
            return
        num = num if isinstance(num, fmpz_poly) else fmpz_poly([num])
        den = den if isinstance(den, fmpz_poly) else fmpz_poly([den])
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "QRat":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def from_coeffs(cls, num: dict[int, int], den: dict[int, int] | None = None) -> "QRat":
        return cls(_poly_from_dict(num), _poly_from_dict(den or {0: 1}))

    # -- predicates -----------------------------------------------------
    def __bool__(self):
        return self.num != 0

    def is_zero(self) -> bool:
        return self.num == 0

    def is_one(self) -> bool:
        return self.num == 1 and self.den == 1

    def is_laurent_monomial(self) -> bool:
        """True for ``c*q^n`` with ``c`` an integer."""
        n = poly_coeffs(self.num)
        d = poly_coeffs(self.den)
        return len(n) == 1 and len(d) == 1 and d.get(max(d)) == 1

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, int):
                other = QRat(other)
            else:
                return NotImplemented
        if self.num == 0:
            return other
        if other.num == 0:
            return self
        if self.den == other.den:
            if self.den == 1:
                return QRat._raw(*_canonical(self.num + other.num, _POLY_ONE))
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, int):
                other = QRat(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                return QRat(self.num * other, self.den)
            return NotImplemented
        if self.num == 0 or other.num == 0:
            return ZERO
        if self.den == 1 and other.den == 1:
            return QRat._raw(self.num * other.num, _POLY_ONE)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            if isinstance(other, int):
                other = QRat(other)
            else:
                return NotImplemented
        if other.num == 0:
            raise ZeroDivisionError("division by zero in Q(q)")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat(other) / self

    def inverse(self) -> "QRat":
        return ONE / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return QRat(self.num**n, self.den**n)

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(int(c) for c in self.num.coeffs()),
                               tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    # -- text -----------------------------------------------------------
    def __str__(self):
        if self.den == 1:
            return format_poly(self.num)
        return f"{format_poly(self.num)} / {format_poly(self.den)}"

    def __repr__(self):
        return f"QRat({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "QRat":
        """Inverse of ``str``: ``"<poly>"`` or ``"<poly> / <poly>"``."""
        parts = text.split("/")
        if len(parts) == 1:
            return cls(parse_poly(parts[0]))
        if len(parts) == 2:
            return cls(parse_poly(parts[0]), parse_poly(parts[1]))
        raise ValueError(f"malformed rational function: {text!r}")

    def evaluate(self, value):
        """Evaluate at a number (used only by tests and numeric sanity checks)."""
        n = sum(int(c) * value**i for i, c in enumerate(self.num.coeffs()))
        d = sum(int(c) * value**i for i, c in enumerate(self.den.coeffs()))
        return n / d


def _poly_from_dict(d: dict[int, int]) -> IntPoly:
    if not d:
        return _POLY_ZERO
    top = max(d)
    return fmpz_poly([d.get(i, 0) for i in range(top + 1)])


def format_poly(p: IntPoly) -> str:
    """Sparse text for an integer polynomial, highest degree first."""
    coeffs = poly_coeffs(p)
    if not coeffs:
        return "0"
    out = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(q(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse the sparse form produced by :func:`format_poly`."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at column {pos + 1}")
        sign, digits, qpart, exp = m.groups()
        if not sign and not first:
            raise ValueError(f"missing operator in {text!r} at column {pos + 1}")
        if not digits and not qpart:
            raise ValueError(f"dangling sign in {text!r} at column {pos + 1}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0 if not qpart else (int(exp) if exp else 1)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False
    return _poly_from_dict({e: c for e, c in coeffs.items() if c})


ZERO = QRat._raw(_POLY_ZERO, _POLY_ONE)
ONE = QRat._raw(_POLY_ONE, _POLY_ONE)
Q = QRat._raw(fmpz_poly([0, 1]), _POLY_ONE)


@lru_cache(maxsize=None)
def qpow(n: int) -> QRat:
    """``q**n`` for any integer ``n``."""
    if n >= 0:
        return QRat._raw(fmpz_poly([0] * n + [1]), _POLY_ONE)
    return QRat._raw(_POLY_ONE, fmpz_poly([0] * (-n) + [1]))


@lru_cache(maxsize=None)
def q_number(n: int) -> QRat:
    """Symmetric quantum integer ``(q^n - q^-n)/(q - q^-1)``."""
    return (qpow(n) - qpow(-n)) / (Q - qpow(-1))
