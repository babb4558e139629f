"""Bounded-degree spans of generated subalgebras and the right-coideal check.

``S_D`` is the span of all products of at most ``D`` generators (the empty
product is 1).  It is built level by level: level ``d`` only multiplies the
products that were new at level ``d-1`` by each generator.  Rows are kept in
echelon form with pivots ordered so that rows with a torus pivot lie entirely
in ``U^0`` and therefore span ``S_D`` intersected with ``U^0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import coproduct
from .linalg import Echelon
from .pbw import UElement
from .rootdata import format_weight
from .scalar import ONE


def pivot_key(m) -> tuple:
    e, nu, f = m
    mixed = 1 if (any(e) or any(f)) else 0
    return (mixed, sum(e) + sum(f), e, nu, f)


@dataclass
class GeneratorSet:
    gens: list
    name: str = ""
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if not self.gens:
            raise ValueError("a generator set needs at least one element")
        alg = self.gens[0].alg
        if any(g.alg is not alg for g in self.gens):
            raise ValueError("generators from different root systems")
        if not self.labels:
            self.labels = [str(g) for g in self.gens]

    @property
    def alg(self):
        return self.gens[0].alg

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


class SpanBasis:
    """Lazily extended echelon basis of ``S_d`` for growing ``d``."""

    def __init__(self, gens: GeneratorSet | list, track: bool = False):
        if not isinstance(gens, GeneratorSet):
            gens = GeneratorSet(list(gens))
        self.gens = gens
        self.alg = gens.alg
        self.track = track
        self.ech = Echelon(key=pivot_key, track=track)
        self.degree = 0
        self.words: dict = {}  # word -> product element (only independent ones)
        one = UElement.one(self.alg)
        self.ech.add(one.terms, label=())
        self.words[()] = one
        self._frontier = [((), one)]
        self.level_dims = [1]

    def extend_to(self, d: int) -> "SpanBasis":
        while self.degree < d:
            nxt = []
            for word, p in self._frontier:
                for i, g in enumerate(self.gens.gens):
                    prod = p * g
                    if not prod.terms:
                        continue
                    w = word + (i,)
                    if self.ech.add(prod.terms, label=w):
                        self.words[w] = prod
                        nxt.append((w, prod))
            self._frontier = nxt
            self.degree += 1
            self.level_dims.append(len(self.ech))
        return self

    @property
    def dim(self) -> int:
        return len(self.ech)

    def basis(self) -> list[UElement]:
        return [UElement(self.alg, r) for r in self.ech.basis()]

    def products(self) -> list[tuple]:
        """The independent products ``(word, element)`` used as rows."""
        return list(self.words.items())

    def contains(self, x: UElement, d: int | None = None) -> bool:
        if d is not None:
            self.extend_to(d)
        return self.ech.contains(x.terms)

    def find_level(self, x: UElement, max_d: int):
        """Smallest level ``d <= max_d`` with ``x`` in ``S_d`` (or None)."""
        for d in range(0, max_d + 1):
            if d > self.degree:
                self.extend_to(d)
            if self.ech.contains(x.terms):
                return max(d, 0)
        return None

    def certificate(self, x: UElement):
        """``{word: coefficient}`` with ``x = sum c * product(word)``, or None."""
        if not self.track:
            raise ValueError("certificates need a SpanBasis built with track=True")
        return self.ech.express(x.terms)

    def torus_rows(self) -> list[UElement]:
        rows = self.ech.rref_rows()
        return [UElement(self.alg, r) for r in rows if pivot_key(max(r, key=pivot_key))[0] == 0]


def span_basis(gens, d: int, track: bool = False) -> SpanBasis:
    if d < 1:
        raise ValueError("degree bound must be at least 1")
    return SpanBasis(gens, track=track).extend_to(d)


def contains(basis: SpanBasis, x: UElement):
    """``(True, certificate)`` or ``(False, None)``; certificate only when tracked."""
    if basis.track:
        cert = basis.certificate(x)
        return cert is not None, cert
    return basis.contains(x), None


# -- coideal check ------------------------------------------------------------

VERIFIED, FAILED, INCONCLUSIVE = "verified_up_to_D", "failed", "inconclusive"


@dataclass
class CoidealReport:
    status: str
    degree: int
    margin: int
    witnesses: list = field(default_factory=list)  # (element, offending left leg)
    checked: int = 0
    span_dims: list = field(default_factory=list)
    note: str = ""

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def to_json(self) -> dict:
        from .expr import format_element

        return {
            "status": self.status,
            "degree": self.degree,
            "margin": self.margin,
            "checked": self.checked,
            "span_dims": self.span_dims,
            "witnesses": [
                {"element": format_element(x), "left_leg": format_element(l)}
                for x, l in self.witnesses
            ],
            "note": self.note,
        }


def left_legs(x: UElement) -> list[UElement]:
    """Left legs of ``Delta(x)`` against linearly independent right legs."""
    return list(coproduct(x).by_right().values())


def is_right_coideal(gens, D: int, margin: int = 2, exhaustive: bool = False,
                     span: SpanBasis | None = None) -> CoidealReport:
    """Bounded check of ``Delta(C) in C (x) U`` for ``C`` generated by ``gens``.

    Every generator's left legs are tested against ``S_{D+margin}``; since
    ``Delta`` is multiplicative this covers all products.  With
    ``exhaustive`` each independent product of at most ``D`` generators is
    also tested directly.
    """
    if D < 1 or margin < 0:
        raise ValueError("need D >= 1 and margin >= 0")
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(list(gens))
    span = span or SpanBasis(gens)
    bound = D + margin
    witnesses = []
    checked = 0
    for g in gens.gens:
        for leg in left_legs(g):
            checked += 1
            if span.find_level(leg, bound) is None:
                witnesses.append((g, leg))
    if witnesses:
        return CoidealReport(FAILED, D, margin, witnesses, checked, list(span.level_dims))
    status = VERIFIED
    bad = []
    if exhaustive:
        span.extend_to(D)
        for word, b in list(span.words.items()):
            if len(word) > D:
                continue
            for leg in left_legs(b):
                checked += 1
                if span.find_level(leg, bound) is None:
                    bad.append((b, leg))
        if bad:
            status = INCONCLUSIVE
    return CoidealReport(status, D, margin, bad, checked, list(span.level_dims))


def is_closed_under_multiplication(gens, D: int, span: SpanBasis | None = None):
    """Check that pairwise products of the listed generators lie in ``S_D``.

    Returns ``(True, None)`` or ``(False, (i, j))`` for the first failure.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(list(gens))
    span = span or SpanBasis(gens)
    span.extend_to(max(D, 2))
    for i, x in enumerate(gens.gens):
        for j, y in enumerate(gens.gens):
            if not span.contains(x * y):
                return False, (i, j)
    return True, None


@dataclass
class TorusReport:
    ok: bool
    weights: list  # torus monomials K_nu found in S_D
    problem: str = ""


def torus_subhopf_check(gens, D: int, margin: int = 2, span: SpanBasis | None = None) -> TorusReport:
    """Is ``S_D`` intersected with ``U^0`` spanned by torus monomials closed under inverses?"""
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(list(gens))
    span = span or SpanBasis(gens)
    span.extend_to(D)
    rows = span.torus_rows()
    weights = []
    alg = span.alg
    for r in rows:
        if len(r.terms) != 1:
            return TorusReport(False, weights, f"torus part contains the non-monomial {r}")
        (m,) = r.terms
        weights.append(m[1])
    for nu in weights:
        inv = UElement(alg, {alg.k_mono(tuple(-x for x in nu)): ONE})
        if span.find_level(inv, D + margin) is None:
            return TorusReport(False, weights, f"K[{format_weight(nu)}] lies in the span but its inverse does not")
    return TorusReport(True, weights)
