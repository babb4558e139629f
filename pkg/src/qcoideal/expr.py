"""Text and JSON forms of elements.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' ['-'] int)?
    atom   := int | 'q' | name | gen | '(' expr ')' | '-' factor
    gen    := ('E'|'F') '[' label ']' | 'K' '[' weight ']'

Division is only allowed by scalars; negative powers only for scalars and
torus monomials.  ``name`` is a parameter looked up in a substitution map.
"""
from __future__ import annotations

import json
import re

from .pbw import Algebra, UElement, get_algebra, E, F, K
from .rootdata import format_weight
from .scalar import ONE, Q, QRat, format_poly

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9']*")
_INT = re.compile(r"\d+")
_WEIGHT_CHARS = set("0123456789ab+- ")


class ParseError(ValueError):
    def __init__(self, msg: str, column: int):
        super().__init__(f"{msg} at column {column}")
        self.column = column


class _Parser:
    def __init__(self, text: str, alg: Algebra, params: dict | None):
        self.s = text
        self.i = 0
        self.alg = alg
        self.params = params or {}

    # -- lexing helpers -------------------------------------------------
    def _ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self._ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = repr(self.s[self.i]) if self.i < len(self.s) else "end of input"
            raise ParseError(f"expected {ch!r}, got {got}", self.i + 1)
        self.i += 1

    def error(self, msg):
        raise ParseError(msg, self.i + 1)

    # -- grammar ----------------------------------------------------------
    def parse(self) -> UElement:
        x = self.expr()
        if self.peek():
            self.error(f"unexpected {self.s[self.i]!r}")
        return x

    def expr(self) -> UElement:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
        x = self.term()
        if sign < 0:
            x = -x
        while self.peek() in ("+", "-") and self.peek():
            op = self.s[self.i]
            self.i += 1
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self) -> UElement:
        x = self.factor()
        while self.peek() in ("*", "/") and self.peek():
            op = self.s[self.i]
            self.i += 1
            col = self.i + 1
            y = self.factor()
            if op == "*":
                x = x * y
            else:
                c = _as_scalar(y)
                if c is None:
                    raise ParseError("division by a non-scalar", col)
                if c.is_zero():
                    raise ParseError("division by zero", col)
                x = x.scale(ONE / c)
        return x

    def factor(self) -> UElement:
        x = self.atom()
        if self.peek() == "^":
            self.i += 1
            neg = False
            if self.peek() == "-":
                neg = True
                self.i += 1
            self._ws()
            m = _INT.match(self.s, self.i)
            if not m:
                self.error("expected an integer exponent")
            self.i = m.end()
            n = int(m.group())
            x = _power(x, -n if neg else n, self.i)
        return x

    def atom(self) -> UElement:
        ch = self.peek()
        alg = self.alg
        if not ch:
            self.error("unexpected end of input")
        if ch == "(":
            self.i += 1
            x = self.expr()
            self.expect(")")
            return x
        if ch == "-":
            self.i += 1
            return -self.factor()
        if ch.isdigit():
            m = _INT.match(self.s, self.i)
            self.i = m.end()
            return UElement.scalar(alg, int(m.group()))
        m = _NAME.match(self.s, self.i)
        if not m:
            self.error(f"unexpected {ch!r}")
        name = m.group()
        after = m.end()
        if name in ("E", "F", "K") and after < len(self.s) and self.s[after] == "[":
            self.i = after + 1
            return self.generator(name)
        self.i = after
        if name == "q":
            return UElement.scalar(alg, Q)
        if name in self.params:
            v = self.params[name]
            if isinstance(v, UElement):
                return v
            return UElement.scalar(alg, v if isinstance(v, QRat) else QRat.parse(str(v)))
        self.i = m.start()
        self.error(f"unknown symbol {name!r}")

    def generator(self, kind: str) -> UElement:
        start = self.i
        while self.i < len(self.s) and self.s[self.i] != "]":
            c = self.s[self.i]
            ok = c in _WEIGHT_CHARS if kind == "K" else (c.isalpha() or c == "_")
            if not ok:
                self.error(f"invalid character {c!r} in generator")
            self.i += 1
        if self.i >= len(self.s):
            self.error("expected ']'")
        body = self.s[start:self.i].strip()
        col = start + 1
        self.i += 1
        try:
            if kind == "K":
                return K(self.alg, self.alg.rs.parse_weight(body))
            label = body.replace("_", "")
            return E(self.alg, label) if kind == "E" else F(self.alg, label)
        except ValueError as exc:
            raise ParseError(str(exc), col) from None


def _as_scalar(x: UElement):
    if not x.terms:
        return QRat(0)
    if set(x.terms) == {x.alg.one_mono}:
        return x.terms[x.alg.one_mono]
    return None


def _power(x: UElement, n: int, pos: int) -> UElement:
    if n >= 0:
        return x ** n
    c = _as_scalar(x)
    if c is not None:
        if c.is_zero():
            raise ParseError("zero to a negative power", pos)
        return UElement.scalar(x.alg, c ** n)
    if len(x.terms) == 1:
        (m, c), = x.terms.items()
        if not any(m[0]) and not any(m[2]):
            nu = tuple(n * v for v in m[1])
            return UElement(x.alg, {(m[0], nu, m[2]): c ** n})
    raise ParseError("negative power of a non-invertible element", pos)


def parse_element(text: str, system="A2", params: dict | None = None) -> UElement:
    alg = system if isinstance(system, Algebra) else get_algebra(system)
    return _Parser(text, alg, params).parse()


# -- printing ------------------------------------------------------------------

def format_monomial(alg: Algebra, m) -> str:
    e, nu, f = m
    parts = []
    for i in reversed(range(alg.n)):
        if e[i]:
            parts.append(_pow(f"E[{alg.rs.root_label(i)}]", e[i]))
    if any(nu):
        parts.append(f"K[{format_weight(nu)}]")
    for i in range(alg.n):
        if f[i]:
            parts.append(_pow(f"F[{alg.rs.root_label(i)}]", f[i]))
    return "*".join(parts) or "1"


def _pow(s: str, k: int) -> str:
    return s if k == 1 else f"{s}^{k}"


def format_scalar(c: QRat) -> str:
    """Parenthesized form that the expression grammar reads back."""
    if c.den == 1:
        return f"({format_poly(c.num)})"
    return f"({format_poly(c.num)})/({format_poly(c.den)})"


def _term(alg: Algebra, m, c: QRat) -> tuple[str, str]:
    """Sign and body of one printed term."""
    mono = format_monomial(alg, m)
    is_one = m == alg.one_mono
    sign = "+"
    if c.den == 1 and len(c.num.coeffs()) and _single_term(c.num):
        if c.num.coeffs()[-1] < 0:
            sign = "-"
            c = -c
        coeff = format_poly(c.num)
        if is_one:
            return sign, coeff
        if coeff == "1":
            return sign, mono
        return sign, f"{coeff}*{mono}"
    coeff = format_scalar(c)
    return sign, coeff if is_one else f"{coeff}*{mono}"


def _single_term(p) -> bool:
    return sum(1 for x in p.coeffs() if x != 0) == 1


def format_element(x: UElement) -> str:
    if not x.terms:
        return "0"
    out = []
    for m, c in x.sorted_terms():
        sign, body = _term(x.alg, m, c)
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def format_tensor(t) -> str:
    if not t.terms:
        return "0"
    out = []
    for (l, r), c in t.sorted_terms():
        sign, body = _term(t.alg, l, c)
        body = f"{body} (x) {format_monomial(t.alg, r)}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


# -- JSON ------------------------------------------------------------------------

def mono_to_json(m) -> dict:
    return {"e": list(m[0]), "k": list(m[1]), "f": list(m[2])}


def mono_from_json(d) -> tuple:
    return (tuple(d["e"]), tuple(d["k"]), tuple(d["f"]))


def element_to_json(x: UElement) -> list:
    return [dict(mono_to_json(m), c=str(c)) for m, c in x.sorted_terms()]


def element_from_json(data, system="A2") -> UElement:
    alg = system if isinstance(system, Algebra) else get_algebra(system)
    terms = {}
    for item in data:
        m = mono_from_json(item)
        if len(m[0]) != alg.n or len(m[2]) != alg.n or len(m[1]) != alg.rs.rank:
            raise ValueError(f"monomial {item} does not fit {alg.rs.name}")
        c = QRat.parse(item["c"])
        if m in terms:
            raise ValueError(f"duplicate monomial {item}")
        if not c.is_zero():
            terms[m] = c
    return UElement(alg, terms)


def tensor_to_json(t) -> list:
    return [
        {"left": mono_to_json(l), "right": mono_to_json(r), "c": str(c)}
        for (l, r), c in t.sorted_terms()
    ]


def tensor_from_json(data, system="A2"):
    from .hopf import TensorElement

    alg = system if isinstance(system, Algebra) else get_algebra(system)
    terms = {}
    for item in data:
        key = (mono_from_json(item["left"]), mono_from_json(item["right"]))
        terms[key] = QRat.parse(item["c"])
    return TensorElement(alg, {k: v for k, v in terms.items() if not v.is_zero()})


def dumps_element(x: UElement) -> str:
    return json.dumps(element_to_json(x), sort_keys=True)


def loads_element(text: str, system="A2") -> UElement:
    return element_from_json(json.loads(text), system)
