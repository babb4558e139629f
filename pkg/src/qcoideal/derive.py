"""Independent derivation of straightening rules from simple generators.

Everything here works with words in the simple generators only: the rule
``F_i E_j = E_j F_i - delta_ij (K_i - K_i^-1)/(q - q^-1)``, the K-commutation
rules and the quantum Serre relations.  Compound root vectors are expanded by
their defining q-commutators, the word is straightened into E-words, a torus
element and F-words, and each E-/F-word is re-expressed in the PBW basis by
linear algebra in the graded pieces of the free algebra modulo the Serre ideal.

This is deliberately slow and simple: it exists to populate and cross-check
the shipped relation tables, not to be used in the inner loops.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .linalg import Echelon, axpy
from .rootdata import RootSystem, get_system
from .scalar import ONE, QRat, qpow, q_number

_LABEL_INDEX = {"a": 0, "b": 1}


def _kbracket() -> QRat:
    return ONE / (qpow(1) - qpow(-1))


def root_vector_words(system: RootSystem, side: str, label: str) -> dict:
    """Expansion of a root vector as ``{simple-word: coefficient}``."""
    if label in _LABEL_INDEX:
        if _LABEL_INDEX[label] >= system.rank:
            raise ValueError(f"no generator {side}_{label} in {system.name}")
        return {(_LABEL_INDEX[label],): ONE}
    if system.rank < 2 or label not in ("ab", "ba"):
        raise ValueError(f"no root vector {side}_{label} in {system.name}")
    qi = qpow(-1)
    if side == "E":
        if label == "ab":
            return {(0, 1): ONE, (1, 0): -qi}
        # -q^-1 (E_a E_b - q E_b E_a)
        return {(0, 1): -qi, (1, 0): ONE}
    if label == "ab":
        # F_b F_a - q F_a F_b
        return {(1, 0): ONE, (0, 1): -qpow(1)}
    return {(0, 1): ONE, (1, 0): -qpow(1)}


def _wt(system: RootSystem, word) -> tuple:
    out = [0] * system.rank
    for i in word:
        out[i] += 1
    return tuple(out)


def _straighten_word(system: RootSystem, letters) -> dict:
    """Straighten a word of simple letters into ``{(eword, nu, fword): c}``.

    Letters are ``('E', i)``, ``('F', i)`` or ``('K', nu)``.
    """
    zero = system.zero
    cur = {((), zero, ()): ONE}
    for kind, val in letters:
        nxt: dict = {}
        for (ew, nu, fw), c in cur.items():
            if kind == "K":
                f = c * qpow(system.form(val, _wt(system, fw)))
                _acc(nxt, (ew, tuple(a + b for a, b in zip(nu, val)), fw), f)
            elif kind == "F":
                _acc(nxt, (ew, nu, fw + (val,)), c)
            else:
                for c2, pre, nu2, fw2 in _move_e(system, fw, val):
                    shift = system.form(nu, _wt(system, pre))
                    key = (ew + pre, tuple(a + b for a, b in zip(nu, nu2)), fw2)
                    _acc(nxt, key, c * c2 * qpow(shift))
        cur = nxt
    return cur


def _acc(d, key, c):
    v = d.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        d.pop(key, None)
    else:
        d[key] = v


def _move_e(system: RootSystem, fw, j):
    """``F_fw E_j`` as a list of ``(c, eprefix, nu, fword)``."""
    if not fw:
        return [(ONE, (j,), system.zero, ())]
    head, i = fw[:-1], fw[-1]
    out = [(c, pre, nu, f + (i,)) for c, pre, nu, f in _move_e(system, head, j)]
    if i == j:
        a = system.simple_roots[i]
        w = _wt(system, head)
        kb = _kbracket()
        for sign in (1, -1):
            nu = tuple(sign * x for x in a)
            # F_head K_nu = q^{(nu, wt head)} K_nu F_head
            out.append((-sign * kb * qpow(system.form(nu, w)), (), nu, head))
    return out


# -- PBW re-expression in U^+ and U^- ------------------------------------

def _serre_words(system: RootSystem) -> list[dict]:
    if system.rank == 1:
        return []
    out = []
    two = q_number(2)
    for i, j in ((0, 1), (1, 0)):
        out.append({(i, i, j): ONE, (i, j, i): -two, (j, i, i): ONE})
    return out


def _words_of_weight(wt: tuple) -> list[tuple]:
    base = []
    for i, k in enumerate(wt):
        base.extend([i] * k)
    return sorted(set(permutations(base)))


def _word_product(x: dict, y: dict) -> dict:
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            _acc(out, w1 + w2, c1 * c2)
    return out


def _pbw_monomials_of_weight(system: RootSystem, wt: tuple) -> list[tuple]:
    if system.rank == 1:
        return [(wt[0],)]
    m, n = wt
    return [(m - b, b, n - b) for b in range(min(m, n) + 1)]


def _pbw_expansion(system: RootSystem, side: str, exps: tuple) -> dict:
    """Expand E_exps (decreasing order) or F_exps (increasing) into words."""
    if system.rank == 1:
        return {(0,) * exps[0]: ONE}
    factors = [
        ({(0,): ONE}, exps[0]),
        (root_vector_words(system, side, "ab"), exps[1]),
        ({(1,): ONE}, exps[2]),
    ]
    if side == "E":
        factors.reverse()
    out = {(): ONE}
    for word, k in factors:
        for _ in range(k):
            out = _word_product(out, word)
    return out


@lru_cache(maxsize=None)
def _quotient_solver(system_name: str, side: str, wt: tuple) -> Echelon:
    system = get_system(system_name)
    ech = Echelon(track=True)
    # ideal part of this graded piece: u * S * v
    for k, s in enumerate(_serre_words(system)):
        swt = _wt(system, next(iter(s)))
        rest = tuple(a - b for a, b in zip(wt, swt))
        if any(r < 0 for r in rest):
            continue
        for total in _words_of_weight(rest):
            for cut in range(len(total) + 1):
                u, v = total[:cut], total[cut:]
                vec = {u + w + v: c for w, c in s.items()}
                ech.add(vec, label=("I", k, u, v))
    for mono in _pbw_monomials_of_weight(system, wt):
        vec = _pbw_expansion(system, side, mono)
        if not ech.add(vec, label=("P", mono)):
            raise ArithmeticError(f"PBW monomial {mono} dependent modulo Serre ideal")
    return ech


def word_to_pbw(system: RootSystem, side: str, word: tuple) -> dict:
    """Express a simple-generator word as ``{exps: c}`` in the PBW basis."""
    system = get_system(system)
    wt = _wt(system, word)
    if not word:
        return {(0,) * len(system.positive_roots): ONE}
    ech = _quotient_solver(system.name, side, wt)
    combo = ech.express({word: ONE})
    if combo is None:
        raise ArithmeticError(f"word {word} not in the span of PBW monomials")
    return {lab[1]: c for lab, c in combo.items() if lab[0] == "P" and not c.is_zero()}


def straighten_to_pbw(system: RootSystem, letters) -> dict:
    """Normal form ``{(ebar, nu, fbar): c}`` of a word of simple letters."""
    system = get_system(system)
    out: dict = {}
    for (ew, nu, fw), c in _straighten_word(system, letters).items():
        ep = word_to_pbw(system, "E", ew)
        fp = word_to_pbw(system, "F", fw)
        for e, ce in ep.items():
            for f, cf in fp.items():
                _acc(out, (e, nu, f), c * ce * cf)
    return out


def expand_generator(system: RootSystem, gen) -> dict:
    """``{letters: c}`` for a generator ``('E'|'F', label)`` or ``('K', nu)``."""
    kind, val = gen
    if kind == "K":
        return {(("K", tuple(val)),): ONE}
    return {tuple((kind, i) for i in w): c for w, c in root_vector_words(system, kind, val).items()}


def derive_product(system, gens) -> dict:
    """Normal form of a product of generators, derived from scratch."""
    system = get_system(system)
    words = {(): ONE}
    for g in gens:
        nxt: dict = {}
        for w1, c1 in words.items():
            for w2, c2 in expand_generator(system, g).items():
                _acc(nxt, w1 + w2, c1 * c2)
        words = nxt
    out: dict = {}
    for w, c in words.items():
        axpy(out, c, straighten_to_pbw(system, w))
    return out


def derive_relation_terms(system, x, y) -> dict:
    """Normal form of ``x*y`` for two generators, as a term dict."""
    return derive_product(system, [x, y])


__all__ = [
    "root_vector_words",
    "word_to_pbw",
    "straighten_to_pbw",
    "expand_generator",
    "derive_product",
    "derive_relation_terms",
]
