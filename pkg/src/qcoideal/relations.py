"""Shipped straightening tables for U_q(sl_2) and U_q(sl_3).

Each rule gives the PBW normal form of an out-of-order product of two root
vectors: ``('EE', i, j)`` is ``E_i E_j`` with ``i < j``, ``('FF', j, i)`` is
``F_j F_i`` with ``j > i`` and ``('FE', z, y)`` is ``F_z E_y``.  Indices refer
to the global convex order (``a < ab < b`` for A2).  Terms are
``(ebar, nu, fbar, coefficient)``.

The tables were generated by :mod:`qcoideal.derive` and are re-derived in the
test suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .rootdata import A1, A2, RootSystem, get_system
from .scalar import QRat

_A1_RULES = {
    ('FE', 0, 0): [
        ((0,), (-1,), (0,), 'q / q^2 - 1'),
        ((0,), (1,), (0,), '-q / q^2 - 1'),
        ((1,), (0,), (1,), '1'),
    ],
}

_A2_RULES = {
    ('EE', 0, 1): [
        ((1, 1, 0), (0, 0), (0, 0, 0), 'q'),
    ],
    ('EE', 0, 2): [
        ((0, 1, 0), (0, 0), (0, 0, 0), '1'),
        ((1, 0, 1), (0, 0), (0, 0, 0), '1 / q'),
    ],
    ('EE', 1, 2): [
        ((0, 1, 1), (0, 0), (0, 0, 0), 'q'),
    ],
    ('FF', 1, 0): [
        ((0, 0, 0), (0, 0), (1, 1, 0), '1 / q'),
    ],
    ('FF', 2, 0): [
        ((0, 0, 0), (0, 0), (0, 1, 0), '1'),
        ((0, 0, 0), (0, 0), (1, 0, 1), 'q'),
    ],
    ('FF', 2, 1): [
        ((0, 0, 0), (0, 0), (0, 1, 1), '1 / q'),
    ],
    ('FE', 0, 0): [
        ((0, 0, 0), (-1, 0), (0, 0, 0), 'q / q^2 - 1'),
        ((0, 0, 0), (1, 0), (0, 0, 0), '-q / q^2 - 1'),
        ((1, 0, 0), (0, 0), (1, 0, 0), '1'),
    ],
    ('FE', 0, 1): [
        ((0, 0, 1), (-1, 0), (0, 0, 0), '1'),
        ((0, 1, 0), (0, 0), (1, 0, 0), '1'),
    ],
    ('FE', 0, 2): [
        ((0, 0, 1), (0, 0), (1, 0, 0), '1'),
    ],
    ('FE', 1, 0): [
        ((0, 0, 0), (1, 0), (0, 0, 1), '1'),
        ((1, 0, 0), (0, 0), (0, 1, 0), '1'),
    ],
    ('FE', 1, 1): [
        ((0, 0, 0), (-1, -1), (0, 0, 0), 'q / q^2 - 1'),
        ((0, 0, 0), (1, 1), (0, 0, 0), '-q / q^2 - 1'),
        ((0, 1, 0), (0, 0), (0, 1, 0), '1'),
    ],
    ('FE', 1, 2): [
        ((0, 0, 0), (0, -1), (1, 0, 0), '-q'),
        ((0, 0, 1), (0, 0), (0, 1, 0), '1'),
    ],
    ('FE', 2, 0): [
        ((1, 0, 0), (0, 0), (0, 0, 1), '1'),
    ],
    ('FE', 2, 1): [
        ((0, 1, 0), (0, 0), (0, 0, 1), '1'),
        ((1, 0, 0), (0, 1), (0, 0, 0), '-1 / q'),
    ],
    ('FE', 2, 2): [
        ((0, 0, 0), (0, -1), (0, 0, 0), 'q / q^2 - 1'),
        ((0, 0, 0), (0, 1), (0, 0, 0), '-q / q^2 - 1'),
        ((0, 0, 1), (0, 0), (0, 0, 1), '1'),
    ],
}

# root vectors that are not simple, as q-commutators of simple generators
# (words over simple-root indices; 'ba' vectors are derived, not PBW letters)
_A2_ROOT_VECTORS = {
    ("E", "ab"): {(0, 1): "1", (1, 0): "-1 / q"},
    ("E", "ba"): {(0, 1): "-1 / q", (1, 0): "1"},
    ("F", "ab"): {(1, 0): "1", (0, 1): "-q"},
    ("F", "ba"): {(0, 1): "1", (1, 0): "-q"},
}


@dataclass(frozen=True)
class RelationTable:
    root_system: RootSystem
    rules: dict = field(repr=False)
    root_vector_defs: dict = field(repr=False)

    def rule(self, kind: str, x: int, y: int) -> dict:
        """``{(ebar, nu, fbar): QRat}`` for an out-of-order pair."""
        return self.rules[(kind, x, y)]

    def out_of_order_pairs(self) -> list[tuple]:
        n = len(self.root_system.positive_roots)
        pairs = [("EE", i, j) for i in range(n) for j in range(i + 1, n)]
        pairs += [("FF", j, i) for i in range(n) for j in range(i + 1, n)]
        pairs += [("FE", z, y) for z in range(n) for y in range(n)]
        return pairs


def _load(rs: RootSystem, raw: dict, defs: dict) -> RelationTable:
    rules = {
        key: {(e, nu, f): QRat.parse(c) for e, nu, f, c in terms}
        for key, terms in raw.items()
    }
    parsed_defs = {k: {w: QRat.parse(c) for w, c in v.items()} for k, v in defs.items()}
    table = RelationTable(rs, rules, parsed_defs)
    missing = set(table.out_of_order_pairs()) - set(rules)
    if missing:
        raise ValueError(f"relation table for {rs.name} lacks rules {sorted(missing)}")
    return table


_TABLES: dict = {}


def relation_table(system) -> RelationTable:
    rs = get_system(system)
    if rs.name not in _TABLES:
        if rs.name == "A1":
            _TABLES["A1"] = _load(A1, _A1_RULES, {})
        else:
            _TABLES["A2"] = _load(A2, _A2_RULES, _A2_ROOT_VECTORS)
    return _TABLES[rs.name]
