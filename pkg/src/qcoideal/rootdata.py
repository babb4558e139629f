"""Root systems of type A1 and A2, Weyl words and the orderings on roots.

Weights (elements of the root lattice Q) are plain integer tuples in
simple-root coordinates; for A2 the first coordinate counts ``a`` (alpha) and
the second ``b`` (beta).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

Weight = tuple[int, ...]
ExpVec = tuple[int, ...]

LESS, EQUAL, GREATER, INCOMPARABLE = "less", "equal", "greater", "incomparable"

_LETTERS = "ab"


@dataclass(frozen=True)
class RootSystem:
    name: str
    cartan: tuple[tuple[int, ...], ...]
    bilinear: tuple[tuple[int, ...], ...]
    # global convex order on the positive roots (from the fixed reduced word of w0)
    positive_roots: tuple[Weight, ...]
    w0_word: tuple[int, ...]
    _labels: tuple[str, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def form(self, x: Weight, y: Weight) -> int:
        """The symmetric bilinear form ``(x, y)``."""
        b = self.bilinear
        return sum(x[i] * b[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def root_index(self, root: Weight) -> int:
        return self.positive_roots.index(tuple(root))

    def root_label(self, i: int) -> str:
        """Label of the i-th global root vector: 'a', 'ab', 'b'."""
        return self._labels[i]

    def reflect(self, i: int, x: Weight) -> Weight:
        """Simple reflection ``s_i`` applied to ``x``."""
        a = self.simple_roots[i]
        c = 2 * self.form(x, a) // self.form(a, a)
        return tuple(xj - c * aj for xj, aj in zip(x, a))

    def apply_word(self, word, x: Weight) -> Weight:
        for i in reversed(tuple(word)):
            x = self.reflect(i, x)
        return x

    @cached_property
    def weyl_group(self) -> dict[tuple, tuple[int, ...]]:
        """All Weyl group elements keyed by their action on the simple roots,
        each with a lexicographically first reduced word (BFS)."""
        start = self.simple_roots
        seen = {start: ()}
        frontier = [start]
        while frontier:
            nxt = []
            for key in frontier:
                word = seen[key]
                for i in range(self.rank):
                    new_word = word + (i,)
                    img = tuple(self.apply_word(new_word, a) for a in self.simple_roots)
                    if img not in seen:
                        seen[img] = new_word
                        nxt.append(img)
            frontier = nxt
        return seen

    def element_key(self, word) -> tuple:
        return tuple(self.apply_word(word, a) for a in self.simple_roots)

    def length(self, word) -> int:
        return len(self.weyl_group[self.element_key(word)])

    def is_reduced(self, word) -> bool:
        return len(tuple(word)) == self.length(word)

    def all_elements(self) -> list[tuple[int, ...]]:
        return sorted(self.weyl_group.values(), key=lambda w: (len(w), w))

    def weight_str(self, w: Weight) -> str:
        return format_weight(w)

    def parse_weight(self, text: str) -> Weight:
        return parse_weight(text, self.rank)


def _a1() -> RootSystem:
    return RootSystem("A1", ((2,),), ((2,),), ((1,),), (0,), ("a",))


def _a2() -> RootSystem:
    # w0 = s_a s_b s_a  gives the convex order a < a+b < b
    return RootSystem(
        "A2",
        ((2, -1), (-1, 2)),
        ((2, -1), (-1, 2)),
        ((1, 0), (1, 1), (0, 1)),
        (0, 1, 0),
        ("a", "ab", "b"),
    )


A1 = _a1()
A2 = _a2()
SYSTEMS = {"A1": A1, "A2": A2}


def get_system(name) -> RootSystem:
    if isinstance(name, RootSystem):
        return name
    try:
        return SYSTEMS[str(name).upper()]
    except KeyError:
        raise ValueError(f"unknown root system {name!r}; expected A1 or A2") from None


@dataclass(frozen=True)
class WeylWord:
    letters: tuple[int, ...]
    system: RootSystem = A2

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if any(not 0 <= i < self.system.rank for i in self.letters):
            raise ValueError(f"letter out of range in {self.letters}")

    @property
    def is_reduced(self) -> bool:
        return self.system.is_reduced(self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"s_{_LETTERS[i]}" for i in self.letters) or "e"

    @classmethod
    def parse(cls, text, system=A2) -> "WeylWord":
        """Accepts ``"ab"``, ``"s_a s_b"``, ``"e"`` or a list of letters/indices."""
        system = get_system(system)
        if isinstance(text, (list, tuple)):
            return cls(tuple(_letter_index(x) for x in text), system)
        s = text.replace("s_", "").replace(" ", "").replace("*", "")
        if s in ("", "e", "1"):
            return cls((), system)
        return cls(tuple(_letter_index(c) for c in s), system)


def _letter_index(x) -> int:
    if isinstance(x, int):
        return x
    return _LETTERS.index(str(x))


@dataclass(frozen=True)
class ConvexOrder:
    word: WeylWord
    roots: tuple[Weight, ...]
    # label of the root vector attached to each root for this word ('ab' vs 'ba')
    e_labels: tuple[str, ...]
    f_labels: tuple[str, ...]

    def index(self, root: Weight) -> int:
        return self.roots.index(tuple(root))


def phi_plus_of(word: WeylWord) -> ConvexOrder:
    """Roots ``beta_i = s_1...s_{i-1}(alpha_i)`` of a reduced word, in word order."""
    rs = word.system
    if not word.is_reduced:
        raise ValueError(f"word {word} is not reduced")
    roots = []
    e_labels, f_labels = [], []
    for k, i in enumerate(word.letters):
        beta = rs.apply_word(word.letters[:k], rs.simple_roots[i])
        roots.append(beta)
        e_labels.append(_vector_label(rs, word.letters[:k], beta, side="E"))
        f_labels.append(_vector_label(rs, word.letters[:k], beta, side="F"))
    return ConvexOrder(word, tuple(roots), tuple(e_labels), tuple(f_labels))


def _vector_label(rs: RootSystem, prefix, beta: Weight, side: str) -> str:
    if sum(beta) == 1:
        return _LETTERS[beta.index(1)]
    # the only non-simple positive root of A2 is a+b
    # E side: T_a(E_b) when reached through s_a; F side uses the vector whose
    # coproduct has the earlier simple root vector as left leg
    first = prefix[0]
    if side == "E":
        return "ab" if first == 0 else "ba"
    return "ba" if first == 0 else "ab"


def inversion_set(word: WeylWord) -> frozenset:
    """``{alpha in Phi+ : w^{-1} alpha < 0}`` computed from the group action."""
    rs = word.system
    inv = tuple(reversed(word.letters))
    out = set()
    for root in all_positive_roots(rs):
        img = rs.apply_word(inv, root)
        if all(c <= 0 for c in img):
            out.add(root)
    return frozenset(out)


def all_positive_roots(rs: RootSystem) -> tuple[Weight, ...]:
    return rs.positive_roots


def weak_leq(v: WeylWord, w: WeylWord) -> bool:
    """Prefix (weak) order: ``l(v) + l(v^{-1} w) = l(w)``."""
    rs = w.system
    vinv = tuple(reversed(v.letters))
    return rs.length(vinv + w.letters) == rs.length(w.letters) - rs.length(v.letters)


def is_convex(order: ConvexOrder) -> bool:
    roots = order.roots
    for i, mu in enumerate(roots):
        for j in range(i + 1, len(roots)):
            s = tuple(a + b for a, b in zip(mu, roots[j]))
            if s in roots:
                k = roots.index(s)
                if not i < k < j:
                    return False
    return True


def dominance_leq(mu: Weight, nu: Weight) -> str:
    """Compare in the dominance order: ``mu <= nu`` iff ``nu - mu`` is in N Pi."""
    diff = [b - a for a, b in zip(mu, nu)]
    if all(d == 0 for d in diff):
        return EQUAL
    if all(d >= 0 for d in diff):
        return LESS
    if all(d <= 0 for d in diff):
        return GREATER
    return INCOMPARABLE


def dom_lt(mu: Weight, nu: Weight) -> bool:
    return dominance_leq(mu, nu) == LESS


def lex_compare(a: ExpVec, b: ExpVec) -> str:
    if len(a) != len(b):
        raise ValueError("exponent vectors indexed by different orders")
    for x, y in zip(a, b):
        if x != y:
            return GREATER if x > y else LESS
    return EQUAL


def pr(e: ExpVec, rs: RootSystem) -> Weight:
    """Weight ``sum_i e_i beta_i`` of an exponent vector over the global order."""
    out = [0] * rs.rank
    for k, root in zip(e, rs.positive_roots):
        if k:
            for j in range(rs.rank):
                out[j] += k * root[j]
    return tuple(out)


def is_nonneg(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def add(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def scale(k: int, x: Weight) -> Weight:
    return tuple(k * a for a in x)


def format_weight(w: Weight) -> str:
    parts = []
    for c, name in zip(w, _LETTERS):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + mag + name)
        else:
            parts.append(("-" if c < 0 else "+") + mag + name)
    return "".join(parts) or "0"


_WTERM = re.compile(r"([+-]?)(\d*)([ab])")


def parse_weight(text: str, rank: int) -> Weight:
    s = text.replace(" ", "")
    if s in ("0", ""):
        return (0,) * rank
    out = [0] * rank
    pos = 0
    while pos < len(s):
        m = _WTERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse weight {text!r}")
        sign, digits, letter = m.groups()
        if pos and not sign:
            raise ValueError(f"cannot parse weight {text!r}")
        k = int(digits) if digits else 1
        idx = _LETTERS.index(letter)
        if idx >= rank:
            raise ValueError(f"weight {text!r} uses a root outside rank {rank}")
        out[idx] += -k if sign == "-" else k
        pos = m.end()
    return tuple(out)


def all_exp_vectors(n: int, max_total: int):
    """Exponent vectors of length n with entry sum <= max_total."""
    for e in product(range(max_total + 1), repeat=n):
        if sum(e) <= max_total:
            yield e
