"""Coproduct, counit and slicing functionals on U_q(g)."""
from __future__ import annotations

from dataclasses import dataclass

from .pbw import Algebra, Mono, UElement, _acc, mono_key
from .scalar import ONE, ZERO, QRat


class TensorElement:
    """Finite combination of ``left (x) right`` pairs of PBW monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict | None = None):
        self.alg = alg
        self.terms = terms if terms is not None else {}

    @classmethod
    def pure(cls, x: UElement, y: UElement) -> "TensorElement":
        t: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _acc(t, (m1, m2), c1 * c2)
        return cls(x.alg, t)

    def __add__(self, other):
        res = dict(self.terms)
        for k, c in other.terms.items():
            _acc(res, k, c)
        return TensorElement(self.alg, res)

    def __neg__(self):
        return TensorElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: QRat) -> "TensorElement":
        if c.is_zero():
            return TensorElement(self.alg, {})
        return TensorElement(self.alg, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (QRat, int)):
            return self.scale(QRat(other) if isinstance(other, int) else other)
        return TensorElement(self.alg, tensor_mul_terms(self.alg, self.terms, other.terms))

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def by_right(self) -> dict:
        """Group as ``{right monomial: left UElement}``."""
        groups: dict = {}
        for (l, r), c in self.terms.items():
            groups.setdefault(r, {})[l] = c
        return {r: UElement(self.alg, d) for r, d in groups.items()}

    def by_left(self) -> dict:
        groups: dict = {}
        for (l, r), c in self.terms.items():
            groups.setdefault(l, {})[r] = c
        return {l: UElement(self.alg, d) for l, d in groups.items()}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (mono_key(t[0][0]), mono_key(t[0][1])))

    def __str__(self):
        from .expr import format_tensor

        return format_tensor(self)

    __repr__ = __str__


def tensor_mul_terms(alg: Algebra, x: dict, y: dict) -> dict:
    res: dict = {}
    for (l1, r1), c1 in x.items():
        for (l2, r2), c2 in y.items():
            ls = alg.mul_mono(l1, l2)
            rs = alg.mul_mono(r1, r2)
            c12 = c1 * c2
            for l, cl in ls.items():
                f = c12 * cl
                for r, cr in rs.items():
                    _acc(res, (l, r), f * cr)
    return res


# -- coproduct ---------------------------------------------------------------

_DELTA: dict = {}


def _simple_delta(alg: Algebra, kind: str, s: int) -> dict:
    rs = alg.rs
    a = rs.simple_roots[s]
    i = rs.root_index(a)
    one = alg.one_mono
    if kind == "E":
        e = alg.e_letter(i)
        return {(e, one): ONE, (alg.k_mono(a), e): ONE}
    f = alg.f_letter(i)
    return {(f, alg.k_mono(tuple(-x for x in a))): ONE, (one, f): ONE}


def _letter_delta(alg: Algebra, kind: str, i: int) -> dict:
    key = (id(alg), "letter", kind, i)
    got = _DELTA.get(key)
    if got is not None:
        return got
    out: dict = {}
    for word, c in alg.letter_def(kind, i).items():
        t = {(alg.one_mono, alg.one_mono): ONE}
        for s in word:
            t = tensor_mul_terms(alg, t, _simple_delta(alg, kind, s))
        for k, v in t.items():
            _acc(out, k, c * v)
    _DELTA[key] = out
    return out


def mono_delta(alg: Algebra, m: Mono) -> dict:
    """``Delta`` of one PBW monomial as tensor terms (memoized)."""
    key = (id(alg), m)
    got = _DELTA.get(key)
    if got is not None:
        return got
    e, nu, f = m
    if any(e):
        y = max(i for i, k in enumerate(e) if k)
        rest = (alg._minus(e, y), nu, f)
        out = tensor_mul_terms(alg, _letter_delta(alg, "E", y), mono_delta(alg, rest))
    elif any(f):
        y = max(i for i, k in enumerate(f) if k)
        rest = (e, nu, alg._minus(f, y))
        out = tensor_mul_terms(alg, mono_delta(alg, rest), _letter_delta(alg, "F", y))
    else:
        out = {(m, m): ONE}
    _DELTA[key] = out
    return out


def coproduct(x: UElement) -> TensorElement:
    alg = x.alg
    res: dict = {}
    for m, c in x.terms.items():
        for k, v in mono_delta(alg, m).items():
            _acc(res, k, c * v)
    return TensorElement(alg, res)


def iterated_coproduct(x: UElement, side: str = "left") -> dict:
    """``(Delta (x) id) Delta(x)`` for ``side="left"``, ``(id (x) Delta) Delta(x)``
    for ``side="right"``, as ``{(m1, m2, m3): c}``."""
    alg = x.alg
    res: dict = {}
    for (l, r), c in coproduct(x).terms.items():
        if side == "left":
            for (a, b), d in mono_delta(alg, l).items():
                _acc(res, (a, b, r), c * d)
        else:
            for (a, b), d in mono_delta(alg, r).items():
                _acc(res, (l, a, b), c * d)
    return res


def counit(x: UElement) -> QRat:
    total = ZERO
    for (e, _nu, f), c in x.terms.items():
        if not any(e) and not any(f):
            total = total + c
    return total


def apply_left(t: TensorElement, fn) -> TensorElement:
    """``(fn (x) id)`` for a linear map ``fn`` on UElements."""
    res: dict = {}
    for r, left in t.by_right().items():
        for l, c in fn(left).terms.items():
            _acc(res, (l, r), c)
    return TensorElement(t.alg, res)


def apply_right(t: TensorElement, fn) -> TensorElement:
    res: dict = {}
    for l, right in t.by_left().items():
        for r, c in fn(right).terms.items():
            _acc(res, (l, r), c)
    return TensorElement(t.alg, res)


def epsilon_left(t: TensorElement) -> UElement:
    """``(eps (x) id) t``."""
    res: dict = {}
    for (l, r), c in t.terms.items():
        if not any(l[0]) and not any(l[2]):
            _acc(res, r, c)
    return UElement(t.alg, res)


def epsilon_right(t: TensorElement) -> UElement:
    res: dict = {}
    for (l, r), c in t.terms.items():
        if not any(r[0]) and not any(r[2]):
            _acc(res, l, c)
    return UElement(t.alg, res)


# -- slicing -----------------------------------------------------------------

@dataclass(frozen=True)
class DualFunctional:
    """The linear form that is 1 on ``target`` and 0 on every other PBW monomial."""

    target: Mono

    def __call__(self, x: UElement) -> QRat:
        return x.terms.get(self.target, ZERO)


def slice_right(x: UElement, phi: DualFunctional) -> UElement:
    """``(id (x) phi) Delta(x)``."""
    res: dict = {}
    for (l, r), c in coproduct(x).terms.items():
        if r == phi.target:
            _acc(res, l, c)
    return UElement(x.alg, res)


def eta_slice(x: UElement, eta) -> UElement:
    """Terms ``E K_nu F_gamma`` of ``x`` with ``nu - gamma = eta``.

    Agrees with ``slice_right(x, dual of K_eta)``."""
    alg = x.alg
    eta = tuple(eta)
    return UElement(alg, {
        m: c for m, c in x.terms.items()
        if tuple(n - g for n, g in zip(m[1], alg.pr(m[2]))) == eta
    })


def eta_values(x: UElement) -> list:
    alg = x.alg
    return sorted({tuple(n - g for n, g in zip(m[1], alg.pr(m[2]))) for m in x.terms})


def slice_left(x: UElement, phi) -> UElement:
    """``(phi (x) id) Delta(x)``.

    ``phi`` is a :class:`DualFunctional` or any object with an ``evaluate``
    method taking a UElement (a character); the latter is applied to the
    grouped left legs, one per right monomial.
    """
    t = coproduct(x)
    res: dict = {}
    if isinstance(phi, DualFunctional):
        for (l, r), c in t.terms.items():
            if l == phi.target:
                _acc(res, r, c)
        return UElement(x.alg, res)
    for r, left in t.by_right().items():
        v = phi.evaluate(left)
        if not v.is_zero():
            _acc(res, r, v)
    return UElement(x.alg, res)


def check_coproduct_shape(x: UElement, mu, nu, gamma) -> bool:
    """Test ``Delta(X) - X (x) K_{nu-gamma} - K_{mu+nu} (x) X`` against the
    lower-order span of the triangular coproduct formula."""
    alg = x.alg
    mu, nu, gamma = tuple(mu), tuple(nu), tuple(gamma)
    for m in x.terms:
        if alg.pr(m[0]) != mu or m[1] != nu or alg.pr(m[2]) != gamma:
            raise ValueError("element is not homogeneous of the given triangular degree")
    rest = coproduct(x)
    kr = UElement(alg, {alg.k_mono(tuple(a - b for a, b in zip(nu, gamma))): ONE})
    kl = UElement(alg, {alg.k_mono(tuple(a + b for a, b in zip(mu, nu))): ONE})
    zero = alg.zero_wt
    rest = rest - TensorElement.pure(x, kr)
    if (mu, gamma) != (zero, zero):
        # for torus elements both leading tensors are the same term
        rest = rest - TensorElement.pure(kl, x)
    for (l, r) in rest.terms:
        mu1, gam1 = alg.pr(l[0]), alg.pr(l[2])
        if (mu1, gam1) == (zero, zero) or (mu1, gam1) == (mu, gamma):
            return False
        if any(a > b for a, b in zip(mu1, mu)) or any(a > b for a, b in zip(gam1, gamma)):
            return False
        if l[1] != tuple(a + b - c for a, b, c in zip(nu, mu, mu1)):
            return False
        if alg.pr(r[0]) != tuple(a - b for a, b in zip(mu, mu1)):
            return False
        if r[1] != tuple(a - b for a, b in zip(nu, gam1)):
            return False
        if alg.pr(r[2]) != tuple(a - b for a, b in zip(gamma, gam1)):
            return False
    return True
