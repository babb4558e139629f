"""PBW normal forms and straightening multiplication in U_q(g), g = sl_2, sl_3.

A PBW monomial is a triple ``(ebar, nu, fbar)`` of integer tuples standing for
``E_ebar K_nu F_fbar``, where ``E_ebar = E_{b_n}^{e_n} ... E_{b_1}^{e_1}``
(decreasing convex order) and ``F_fbar = F_{b_1}^{f_1} ... F_{b_n}^{f_n}``
(increasing).  Elements are dicts from monomials to :class:`QRat`.

Products are computed by recursive straightening against a
:class:`~qcoideal.relations.RelationTable`; the three partial products
(E-block times E-block, F-block times F-block and F-block times E-block) are
memoized per algebra.
"""
from __future__ import annotations

from functools import lru_cache

from .relations import RelationTable, relation_table
from .rootdata import RootSystem, get_system
from .scalar import ONE, ZERO, QRat, qpow

Mono = tuple  # (ebar, nu, fbar)


def _acc(d: dict, key, c: QRat) -> None:
    v = d.get(key)
    if v is None:
        d[key] = c
    else:
        v = v + c
        if v.is_zero():
            del d[key]
        else:
            d[key] = v


class Algebra:
    """Straightening engine for one relation table (one root system)."""

    def __init__(self, table: RelationTable):
        self.table = table
        self.rs: RootSystem = table.root_system
        self.n = len(self.rs.positive_roots)
        self.zero_exp = (0,) * self.n
        self.zero_wt = self.rs.zero
        self.one_mono: Mono = (self.zero_exp, self.zero_wt, self.zero_exp)
        self._unit = tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n))
        self._ee: dict = {}
        self._ff: dict = {}
        self._fe: dict = {}
        self._fe1: dict = {}
        self._pr: dict = {}
        self._letters: dict = {}
        self._mm: dict = {}

    # -- small helpers --------------------------------------------------
    def pr(self, e: tuple) -> tuple:
        w = self._pr.get(e)
        if w is None:
            out = [0] * self.rs.rank
            for k, root in zip(e, self.rs.positive_roots):
                if k:
                    for j, r in enumerate(root):
                        out[j] += k * r
            w = self._pr[e] = tuple(out)
        return w

    def form(self, x: tuple, y: tuple) -> int:
        return self.rs.form(x, y)

    def degree(self, m: Mono) -> tuple:
        a, b = self.pr(m[0]), self.pr(m[2])
        return tuple(x - y for x, y in zip(a, b))

    def _plus(self, e: tuple, i: int) -> tuple:
        return tuple(x + u for x, u in zip(e, self._unit[i]))

    def _minus(self, e: tuple, i: int) -> tuple:
        return tuple(x - u for x, u in zip(e, self._unit[i]))

    # -- U^+ ------------------------------------------------------------
    def ee_mul(self, a1: tuple, a2: tuple) -> dict:
        """``E_a1 * E_a2`` as ``{ebar: c}``."""
        if not any(a2):
            return {a1: ONE}
        if not any(a1):
            return {a2: ONE}
        key = (a1, a2)
        res = self._ee.get(key)
        if res is not None:
            return res
        y = max(i for i, k in enumerate(a2) if k)
        rest = self._minus(a2, y)
        res = {}
        for b, c in self._ee_single(a1, y).items():
            for b2, c2 in self.ee_mul(b, rest).items():
                _acc(res, b2, c * c2)
        self._ee[key] = res
        return res

    def _ee_single(self, a: tuple, y: int) -> dict:
        z = min((i for i, k in enumerate(a) if k), default=None)
        if z is None or y <= z:
            return {self._plus(a, y): ONE}
        head = self._minus(a, z)
        res: dict = {}
        for (b, _nu, _f), c in self.table.rule("EE", z, y).items():
            for b2, c2 in self.ee_mul(head, b).items():
                _acc(res, b2, c * c2)
        return res

    # -- U^- ------------------------------------------------------------
    def ff_mul(self, c1: tuple, c2: tuple) -> dict:
        """``F_c1 * F_c2`` as ``{fbar: c}``."""
        if not any(c2):
            return {c1: ONE}
        if not any(c1):
            return {c2: ONE}
        key = (c1, c2)
        res = self._ff.get(key)
        if res is not None:
            return res
        y = min(i for i, k in enumerate(c2) if k)
        rest = self._minus(c2, y)
        res = {}
        for b, c in self._ff_single(c1, y).items():
            for b2, cc in self.ff_mul(b, rest).items():
                _acc(res, b2, c * cc)
        self._ff[key] = res
        return res

    def _ff_single(self, c: tuple, y: int) -> dict:
        z = max((i for i, k in enumerate(c) if k), default=None)
        if z is None or y >= z:
            return {self._plus(c, y): ONE}
        head = self._minus(c, z)
        res: dict = {}
        for (_e, _nu, b), cf in self.table.rule("FF", z, y).items():
            for b2, c2 in self.ff_mul(head, b).items():
                _acc(res, b2, cf * c2)
        return res

    # -- F past E -------------------------------------------------------
    def fe_mul(self, c: tuple, a: tuple) -> dict:
        """``F_c * E_a`` as ``{(ebar, nu, fbar): coeff}``."""
        if not any(c) or not any(a):
            return {(a, self.zero_wt, c): ONE}
        key = (c, a)
        res = self._fe.get(key)
        if res is not None:
            return res
        y = max(i for i, k in enumerate(a) if k)
        rest = self._minus(a, y)
        res = {}
        for (x, lam, d), coef in self._fe_single(c, y).items():
            for (x2, lam2, d2), coef2 in self.fe_mul(d, rest).items():
                s = self.form(lam, self.pr(x2))
                f = coef * coef2 * qpow(s) if s else coef * coef2
                nu = tuple(u + v for u, v in zip(lam, lam2))
                for e, ce in self.ee_mul(x, x2).items():
                    _acc(res, (e, nu, d2), f * ce)
        self._fe[key] = res
        return res

    def _fe_single(self, c: tuple, y: int) -> dict:
        key = (c, y)
        res = self._fe1.get(key)
        if res is not None:
            return res
        z = max(i for i, k in enumerate(c) if k)
        head = self._minus(c, z)
        res = {}
        for (x, lam, d), coef in self.table.rule("FE", z, y).items():
            for (x2, lam2, d2), coef2 in self.fe_mul(head, x).items():
                s = self.form(lam, self.pr(d2))
                f = coef * coef2 * qpow(s) if s else coef * coef2
                nu = tuple(u + v for u, v in zip(lam, lam2))
                for fb, cf in self.ff_mul(d2, d).items():
                    _acc(res, (x2, nu, fb), f * cf)
        self._fe1[key] = res
        return res

    # -- monomials and elements ------------------------------------------
    def mul_mono(self, m1: Mono, m2: Mono) -> dict:
        key = (m1, m2)
        res = self._mm.get(key)
        if res is None:
            res = self._mm[key] = self._mul_mono(m1, m2)
        return res

    def _mul_mono(self, m1: Mono, m2: Mono) -> dict:
        a1, n1, c1 = m1
        a2, n2, c2 = m2
        res: dict = {}
        for (x, lam, d), coef in self.fe_mul(c1, a2).items():
            s = self.form(n1, self.pr(x)) + self.form(n2, self.pr(d))
            f = coef * qpow(s) if s else coef
            nu = tuple(u + v + w for u, v, w in zip(n1, lam, n2))
            es = self.ee_mul(a1, x)
            fs = self.ff_mul(d, c2)
            for e, ce in es.items():
                fe = f * ce
                for fb, cf in fs.items():
                    _acc(res, (e, nu, fb), fe * cf)
        return res

    def mul_terms(self, x: dict, y: dict) -> dict:
        res: dict = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                c12 = c1 * c2
                for m, c in self.mul_mono(m1, m2).items():
                    _acc(res, m, c12 * c)
        return res

    def e_letter(self, i: int) -> Mono:
        return (self._unit[i], self.zero_wt, self.zero_exp)

    def f_letter(self, i: int) -> Mono:
        return (self.zero_exp, self.zero_wt, self._unit[i])

    def k_mono(self, nu) -> Mono:
        return (self.zero_exp, tuple(nu), self.zero_exp)

    def mono_letters(self, m: Mono) -> list:
        """The letters of a monomial in written order."""
        e, nu, f = m
        out = []
        for i in reversed(range(self.n)):
            out += [("E", i)] * e[i]
        if any(nu):
            out.append(("K", nu))
        for i in range(self.n):
            out += [("F", i)] * f[i]
        return out

    def letter_def(self, kind: str, i: int) -> dict:
        """A global root-vector letter as ``{simple-word: c}``."""
        label = self.rs.root_label(i)
        if len(label) == 1:
            return {(self.rs.positive_roots[i].index(1),): ONE}
        return self.table.root_vector_defs[(kind, label)]


@lru_cache(maxsize=None)
def get_algebra(system="A2") -> Algebra:
    rs = get_system(system)
    return Algebra(relation_table(rs.name))


class UElement:
    """Finite Q(q)-linear combination of PBW monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict | None = None):
        self.alg = alg
        self.terms = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, alg):
        return cls(alg, {})

    @classmethod
    def one(cls, alg):
        return cls(alg, {alg.one_mono: ONE})

    @classmethod
    def scalar(cls, alg, c):
        c = _coerce(c)
        return cls(alg, {alg.one_mono: c} if c else {})

    @classmethod
    def monomial(cls, alg, ebar, nu, fbar, c=ONE):
        return cls(alg, {(tuple(ebar), tuple(nu), tuple(fbar)): _coerce(c)})

    # -- arithmetic -----------------------------------------------------
    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        if not isinstance(other, UElement):
            other = UElement.scalar(self.alg, other)
        self._check(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            _acc(res, m, c)
        return UElement(self.alg, res)

    __radd__ = __add__

    def __neg__(self):
        return UElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UElement):
            other = UElement.scalar(self.alg, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "UElement":
        c = _coerce(c)
        if c.is_zero():
            return UElement(self.alg, {})
        return UElement(self.alg, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElement):
            self._check(other)
            return UElement(self.alg, self.alg.mul_terms(self.terms, other.terms))
        if isinstance(other, (QRat, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (QRat, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for torus monomials")
        out = UElement.one(self.alg)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, QRat)):
            other = UElement.scalar(self.alg, other)
        if not isinstance(other, UElement):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def __str__(self):
        from .expr import format_element

        return format_element(self)

    def __repr__(self):
        return f"UElement({str(self)!r})"


def mono_key(m: Mono) -> tuple:
    """Deterministic print order: by total degree, then E, K, F exponents."""
    e, nu, f = m
    return (sum(e) + sum(f), tuple(-x for x in e), nu, f)


def _coerce(c) -> QRat:
    if isinstance(c, QRat):
        return c
    if isinstance(c, int):
        return QRat(c)
    raise TypeError(f"cannot use {c!r} as a scalar")


# -- generators ----------------------------------------------------------

def _alg(system) -> Algebra:
    return system if isinstance(system, Algebra) else get_algebra(system)


def E(system, label: str) -> UElement:
    """Root vector ``E_label`` (labels ``a``, ``b``, ``ab``, ``ba``)."""
    return _root_vector(_alg(system), "E", label)


def F(system, label: str) -> UElement:
    return _root_vector(_alg(system), "F", label)


def K(system, nu, power: int = 1) -> UElement:
    alg = _alg(system)
    if isinstance(nu, str):
        nu = alg.rs.parse_weight(nu)
    return UElement(alg, {alg.k_mono(tuple(power * x for x in nu)): ONE})


def _root_vector(alg: Algebra, kind: str, label: str) -> UElement:
    key = (kind, label)
    got = alg._letters.get(key)
    if got is not None:
        return got
    labels = [alg.rs.root_label(i) for i in range(alg.n)]
    if label in labels:
        i = labels.index(label)
        m = alg.e_letter(i) if kind == "E" else alg.f_letter(i)
        out = UElement(alg, {m: ONE})
    elif (kind, label) in alg.table.root_vector_defs:
        out = _from_simple_words(alg, kind, alg.table.root_vector_defs[(kind, label)])
    else:
        raise ValueError(f"unknown generator {kind}_{label} in {alg.rs.name}")
    alg._letters[key] = out
    return out


def _simple(alg: Algebra, kind: str, s: int) -> UElement:
    root = alg.rs.simple_roots[s]
    i = alg.rs.root_index(root)
    return UElement(alg, {alg.e_letter(i) if kind == "E" else alg.f_letter(i): ONE})


def _from_simple_words(alg: Algebra, kind: str, words: dict) -> UElement:
    out = UElement.zero(alg)
    for w, c in words.items():
        t = UElement.one(alg)
        for s in w:
            t = t * _simple(alg, kind, s)
        out = out + t.scale(c)
    return out


# -- operations ------------------------------------------------------------

def multiply(x: UElement, y: UElement) -> UElement:
    return x * y


def q_commutator(x: UElement, y: UElement, c=ONE) -> UElement:
    """``x*y - c*y*x``."""
    return x * y - (y * x).scale(c)


def project_triangular(x: UElement, mu, nu, gamma) -> UElement:
    """Component in ``U^+_mu K_nu U^-_{-gamma}``."""
    alg = x.alg
    mu, nu, gamma = tuple(mu), tuple(nu), tuple(gamma)
    return UElement(alg, {
        m: c for m, c in x.terms.items()
        if m[1] == nu and alg.pr(m[0]) == mu and alg.pr(m[2]) == gamma
    })


def parts(x: UElement) -> tuple[UElement, UElement, UElement]:
    """``(geq0, leq0, mixed)``; pure torus terms are assigned to ``geq0``."""
    geq, leq, mixed = {}, {}, {}
    for m, c in x.terms.items():
        has_e, has_f = any(m[0]), any(m[2])
        if has_e and has_f:
            mixed[m] = c
        elif has_f:
            leq[m] = c
        else:
            geq[m] = c
    a = x.alg
    return UElement(a, geq), UElement(a, leq), UElement(a, mixed)


def coefficient(x: UElement, ebar, nu, fbar) -> QRat:
    return x.terms.get((tuple(ebar), tuple(nu), tuple(fbar)), ZERO)


def degree(x: UElement) -> set:
    """Set of Q-degrees ``pr(ebar) - pr(fbar)`` occurring in ``x``."""
    return {x.alg.degree(m) for m in x.terms}


def is_homogeneous(x: UElement) -> bool:
    return len(degree(x)) <= 1


def _map_letters(x: UElement, image, anti: bool, cache: dict) -> UElement:
    """Extend a map on PBW letters multiplicatively (or anti-multiplicatively)."""
    alg = x.alg
    out: dict = {}
    for m, c in x.terms.items():
        img = cache.get(m)
        if img is None:
            letters = alg.mono_letters(m)
            if anti:
                letters = letters[::-1]
            t = UElement.one(alg)
            for letter in letters:
                t = t * image(letter)
            img = cache[m] = t
        for m2, c2 in img.terms.items():
            _acc(out, m2, c * c2)
    return UElement(alg, out)


_CACHES: dict = {}


def _letter_image_factory(alg: Algebra, simple_image, anti: bool):
    """Images of global PBW letters from images of simple generators."""
    memo: dict = {}

    def image(letter):
        kind, val = letter
        if kind == "K":
            return simple_image(("K", val))
        if letter in memo:
            return memo[letter]
        out = UElement.zero(alg)
        for w, c in alg.letter_def(kind, val).items():
            seq = w[::-1] if anti else w
            t = UElement.one(alg)
            for s in seq:
                t = t * simple_image((kind, s))
            out = out + t.scale(c)
        memo[letter] = out
        return out

    return image


def _apply(name: str, x: UElement, simple_image, anti: bool) -> UElement:
    alg = x.alg
    key = (name, id(alg))
    if key not in _CACHES:
        _CACHES[key] = (_letter_image_factory(alg, lambda l: simple_image(alg, l), anti), {})
    image, cache = _CACHES[key]
    return _map_letters(x, image, anti, cache)


def _omega_simple(alg, letter):
    kind, val = letter
    if kind == "K":
        return K(alg, tuple(-v for v in val))
    return _simple(alg, "F" if kind == "E" else "E", val)


def omega(x: UElement) -> UElement:
    """Algebra automorphism ``E_i <-> F_i``, ``K_nu -> K_-nu``."""
    return _apply("omega", x, _omega_simple, anti=False)


def _sigma_simple(alg, letter):
    kind, val = letter
    if kind == "K":
        return K(alg, val)
    a = alg.rs.simple_roots[val]
    if kind == "E":
        return _simple(alg, "F", val) * K(alg, a)
    return K(alg, a, -1) * _simple(alg, "E", val)


def sigma(x: UElement) -> UElement:
    """Algebra anti-automorphism ``E_i -> F_i K_i``, ``F_i -> K_i^-1 E_i``,
    ``K -> K``.  It is an involution and preserves the coproduct, so it maps
    right coideal subalgebras to right coideal subalgebras."""
    return _apply("sigma", x, _sigma_simple, anti=True)


def _swap_simple(alg, letter):
    kind, val = letter
    if kind == "K":
        return K(alg, tuple(reversed(val)))
    return _simple(alg, kind, alg.rs.rank - 1 - val)


def swap(x: UElement) -> UElement:
    """Diagram automorphism exchanging the two simple roots (identity on A1)."""
    return _apply("swap", x, _swap_simple, anti=False)


def derive_relation(system, x, y) -> UElement:
    """Normal form of ``x*y`` for generators ``('E'|'F', label)`` or
    ``('K', nu)``, derived from simple-generator rules only."""
    from .derive import derive_relation_terms

    alg = _alg(system)
    return UElement(alg, derive_relation_terms(alg.rs, x, y))


def normalize(system, word) -> UElement:
    """Normal form of a product of generators ``('E'|'F', label)``/``('K', nu)``."""
    alg = _alg(system)
    out = UElement.one(alg)
    for kind, val in word:
        if kind == "K":
            out = out * K(alg, val)
        elif kind == "E":
            out = out * E(alg, val)
        elif kind == "F":
            out = out * F(alg, val)
        else:
            raise ValueError(f"unknown generator symbol {kind!r}")
    return out
