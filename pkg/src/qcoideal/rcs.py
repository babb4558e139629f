"""Homogeneous right coideal subalgebras, characters and character shifts."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from math import gcd

from .hopf import slice_left
from .linalg import solve_in_span
from .pbw import UElement, E, F, K, get_algebra
from .rootdata import WeylWord, format_weight, phi_plus_of
from .scalar import ONE, ZERO, QRat
from .subalgebra import GeneratorSet, is_right_coideal


@dataclass(frozen=True)
class Lattice:
    """Sublattice of the root lattice given by a Z-basis."""

    basis: tuple = ()
    rank: int = 2

    def __post_init__(self):
        vecs = [tuple(v) for v in self.basis]
        object.__setattr__(self, "basis", tuple(vecs))
        if any(len(v) != self.rank for v in vecs):
            raise ValueError("lattice vector of the wrong length")
        if len(vecs) > self.rank or (len(vecs) == 2 and _det(vecs) == 0):
            raise ValueError(f"lattice basis {vecs} is not Z-independent")
        if any(not any(v) for v in vecs):
            raise ValueError("zero vector in lattice basis")

    @classmethod
    def full(cls, rank: int) -> "Lattice":
        return cls(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)), rank)

    @classmethod
    def zero(cls, rank: int) -> "Lattice":
        return cls((), rank)

    def contains(self, v) -> bool:
        v = tuple(v)
        if not self.basis:
            return not any(v)
        if len(self.basis) == 1:
            return _divides(self.basis[0], v)
        d = _det(self.basis)
        (a, b), (c, e) = self.basis
        # solve x*(a,b) + y*(c,e) = v over Q and check integrality
        x_num = v[0] * e - v[1] * c
        y_num = a * v[1] - b * v[0]
        return x_num % d == 0 and y_num % d == 0

    def torus_generators(self, alg) -> list[UElement]:
        out = []
        for v in self.basis:
            out.append(K(alg, v))
            out.append(K(alg, v, -1))
        return out

    def __str__(self):
        return "<" + ", ".join(format_weight(v) for v in self.basis) + ">"


def _det(vecs) -> int:
    (a, b), (c, d) = vecs
    return a * d - b * c


def _divides(b, v) -> bool:
    ks = {x // y for x, y in zip(v, b) if y}
    if len(ks) != 1:
        return not any(v)
    k = ks.pop()
    return all(k * y == x for x, y in zip(v, b))


def perp_lattice(S, system="A2") -> Lattice:
    """Basis of ``{l in Q : (l, s) = 0 for all s in S}``."""
    rs = get_algebra(system).rs
    functionals = []
    for s in S:
        f = tuple(sum(rs.bilinear[i][j] * s[j] for j in range(rs.rank)) for i in range(rs.rank))
        if any(f):
            functionals.append(f)
    if not functionals:
        return Lattice.full(rs.rank)
    if rs.rank == 1:
        return Lattice.zero(1)
    p, r = functionals[0]
    if any(p * y - r * x for x, y in functionals[1:]):
        return Lattice.zero(2)
    g = gcd(p, r)
    v = (r // g, -p // g)
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        v = (-v[0], -v[1])
    return Lattice((v,), 2)


# -- characters -----------------------------------------------------------------

def normalized_generators(word: WeylWord, side: str, alg=None) -> list[tuple]:
    """``[(root, element)]``: ``E_b K_b^-1`` (E side) or ``F_b`` (F side) over Phi+(w)."""
    alg = alg or get_algebra(word.system.name)
    order = phi_plus_of(word)
    out = []
    for root, el, fl in zip(order.roots, order.e_labels, order.f_labels):
        if side == "E":
            out.append((root, E(alg, el) * K(alg, root, -1)))
        else:
            out.append((root, F(alg, fl)))
    return out


@dataclass
class Character:
    """A character on the subalgebra generated by the normalized root vectors
    of ``Phi+(w)``, given by its values on those generators."""

    word: WeylWord
    side: str
    values: dict  # root -> QRat
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.side not in ("E", "F"):
            raise ValueError("character side must be 'E' or 'F'")
        roots = set(phi_plus_of(self.word).roots)
        vals = {}
        for r, v in self.values.items():
            r = tuple(r)
            if r not in roots:
                raise ValueError(f"root {format_weight(r)} is not in Phi+({self.word})")
            vals[r] = v if isinstance(v, QRat) else QRat(v) if isinstance(v, int) else QRat.parse(str(v))
        self.values = vals

    @property
    def alg(self):
        return get_algebra(self.word.system.name)

    def generators(self) -> list[tuple]:
        return normalized_generators(self.word, self.side, self.alg)

    def value(self, root) -> QRat:
        return self.values.get(tuple(root), ZERO)

    def _monomials(self, weight):
        """Ordered monomials ``prod gen_i^{a_i}`` of the given E/F weight."""
        key = tuple(weight)
        if key in self._cache:
            return self._cache[key]
        gens = self.generators()
        roots = [r for r, _ in gens]
        top = sum(abs(x) for x in weight)
        out = []
        for a in iproduct(range(top + 1), repeat=len(gens)):
            w = tuple(sum(k * r[j] for k, r in zip(a, roots)) for j in range(len(weight)))
            if w != key:
                continue
            el = UElement.one(self.alg)
            for k, (_, g) in zip(a, gens):
                for _ in range(k):
                    el = el * g
            val = ONE
            for k, (r, _) in zip(a, gens):
                if k:
                    val = val * self.value(r) ** k
            out.append((a, el, val))
        self._cache[key] = out
        return out

    def _weight_of(self, m):
        alg = self.alg
        return alg.pr(m[0]) if self.side == "E" else alg.pr(m[2])

    def evaluate(self, x: UElement) -> QRat:
        """``phi(x)``; raises ``ValueError`` when ``x`` is outside the domain."""
        groups: dict = {}
        for m, c in x.terms.items():
            groups.setdefault(self._weight_of(m), {})[m] = c
        total = ZERO
        for wt, terms in groups.items():
            monos = self._monomials(wt)
            coeffs = solve_in_span([el.terms for _, el, _ in monos], terms)
            if coeffs is None:
                raise ValueError(f"character undefined on {UElement(self.alg, terms)}")
            for i, c in coeffs.items():
                total = total + c * monos[i][2]
        return total

    def support(self) -> set:
        return {r for r, v in self.values.items() if not v.is_zero()}

    def to_json(self) -> dict:
        return {
            "word": list("ab"[i] for i in self.word.letters),
            "side": self.side,
            "values": {format_weight(r): str(v) for r, v in sorted(self.values.items())},
        }

    @classmethod
    def from_json(cls, data: dict, system="A2", params: dict | None = None) -> "Character":
        alg = get_algebra(system)
        word = WeylWord.parse(list(data["word"]) if isinstance(data["word"], list) else data["word"], alg.rs)
        vals = {}
        for r, v in data["values"].items():
            root = alg.rs.parse_weight(r)
            if isinstance(v, str) and params and v in params:
                v = params[v]
            vals[root] = v if isinstance(v, QRat) else QRat.parse(str(v))
        return cls(word, data["side"], vals)


def character_support(phi: Character) -> set:
    return phi.support()


def validate_character(phi: Character, D: int = 2) -> bool:
    """Multiplicativity of ``phi`` on ordered monomials of total degree <= D."""
    gens = phi.generators()
    roots = [r for r, _ in gens]
    monos = []
    for a in iproduct(range(D + 1), repeat=len(gens)):
        if 0 < sum(a) <= D:
            w = tuple(sum(k * r[j] for k, r in zip(a, roots)) for j in range(len(roots[0])))
            for b, el, val in phi._monomials(w):
                if b == a:
                    monos.append((a, el, val))
    for a1, x, v1 in monos:
        for a2, y, v2 in monos:
            if sum(a1) + sum(a2) > D:
                continue
            try:
                v = phi.evaluate(x * y)
            except ValueError:
                return False
            if v != v1 * v2:
                return False
    return True


# -- constructions --------------------------------------------------------------------

def homogeneous_rcs(wplus, L: Lattice, wminus, system="A2") -> GeneratorSet:
    """Generators of ``U^+[w+] T_L U^-[w-]`` (no admissibility filtering)."""
    alg = get_algebra(system)
    wplus = wplus if isinstance(wplus, WeylWord) else WeylWord.parse(wplus, alg.rs)
    wminus = wminus if isinstance(wminus, WeylWord) else WeylWord.parse(wminus, alg.rs)
    gens, labels = [], []
    for root, g in normalized_generators(wplus, "E", alg):
        gens.append(g)
        labels.append(str(g))
    for g in L.torus_generators(alg):
        gens.append(g)
        labels.append(str(g))
    for root, g in normalized_generators(wminus, "F", alg):
        gens.append(g)
        labels.append(str(g))
    if not gens:
        gens = [UElement.one(alg)]
        labels = ["1"]
    return GeneratorSet(gens, f"U+[{wplus}] T_{L} U-[{wminus}]", labels)


def _is_torus_monomial(x: UElement) -> bool:
    return len(x.terms) == 1 and all(not any(m[0]) and not any(m[2]) for m in x.terms)


def shift_element(x: UElement, phi: Character) -> UElement:
    """``(phi (x) id) Delta(x)``."""
    return slice_left(x, phi)


def character_shift_set(Z, phi: Character, D: int = 3, verify: bool = True):
    """Shift each non-torus generator by ``phi``; torus generators are kept.

    Returns ``(GeneratorSet, CoidealReport | None)``.
    """
    if not isinstance(Z, GeneratorSet):
        Z = GeneratorSet(list(Z))
    new = []
    for g in Z.gens:
        new.append(g if _is_torus_monomial(g) else shift_element(g, phi))
    out = GeneratorSet(new, f"{Z.name} shifted")
    report = is_right_coideal(out, D, 2) if verify else None
    return out, report


__all__ = [
    "Lattice",
    "Character",
    "perp_lattice",
    "normalized_generators",
    "character_support",
    "validate_character",
    "homogeneous_rcs",
    "shift_element",
    "character_shift_set",
]
