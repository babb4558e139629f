"""Sparse row echelon forms over Q(q).

Vectors are dicts ``column -> QRat`` with no zero entries.  The pivot of a row
is its largest column under a caller-supplied sort key.
"""
from __future__ import annotations

from typing import Callable, Hashable

from .scalar import ONE, QRat

Vector = dict


def axpy(y: Vector, a: QRat, x: Vector) -> None:
    """In place ``y += a*x``, dropping cancelled entries."""
    for col, c in x.items():
        v = y.get(col)
        if v is None:
            y[col] = a * c
        else:
            v = v + a * c
            if v.is_zero():
                del y[col]
            else:
                y[col] = v


class Echelon:
    """Incrementally built echelon basis with optional provenance tracking.

    ``add`` reduces a vector against the current rows and keeps it if
    something survives; ``reduce`` returns the remainder and, when tracking,
    the combination of input labels that was subtracted.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None, track: bool = False):
        self._key = key
        self._keycache: dict = {}
        self.track = track
        self.rows: dict = {}  # pivot column -> (row, combo)
        self.order: list = []  # pivots in insertion order

    def _k(self, col):
        if self._key is None:
            return col
        k = self._keycache.get(col)
        if k is None:
            k = self._keycache[col] = self._key(col)
        return k

    def leading(self, vec: Vector):
        return max(vec, key=self._k)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Vector, full: bool = False):
        """Return ``(remainder, combo)``.

        Without ``full`` the loop stops at the first leading column that has
        no pivot (enough to decide membership or to insert a row).
        """
        v = dict(vec)
        combo: dict = {}
        done: dict = {}
        while v:
            col = self.leading(v)
            entry = self.rows.get(col)
            if entry is None:
                if not full:
                    v.update(done)
                    return v, combo
                done[col] = v.pop(col)
                continue
            row, rcombo = entry
            f = -v[col]
            axpy(v, f, row)
            if self.track:
                axpy(combo, f, rcombo)
        v.update(done)
        return v, combo

    def add(self, vec: Vector, label=None) -> bool:
        rem, combo = self.reduce(vec)
        if not rem:
            return False
        col = self.leading(rem)
        inv = ONE / rem[col]
        row = {c: x * inv for c, x in rem.items()}
        if self.track:
            rc = {c: x * inv for c, x in combo.items()}
            axpy(rc, inv, {label: ONE})
            self.rows[col] = (row, rc)
        else:
            self.rows[col] = (row, None)
        self.order.append(col)
        return True

    def contains(self, vec: Vector) -> bool:
        rem, _ = self.reduce(vec)
        return not rem

    def express(self, vec: Vector):
        """Coefficients over input labels with ``vec = sum c_l * input_l``,
        or ``None`` when ``vec`` is outside the span."""
        if not self.track:
            raise ValueError("express() needs an Echelon built with track=True")
        rem, combo = self.reduce(vec)
        if rem:
            return None
        return {lab: -c for lab, c in combo.items()}

    def basis(self) -> list[Vector]:
        return [self.rows[c][0] for c in self.order]

    def rref_rows(self) -> list[Vector]:
        """Fully reduced copies of the rows (back substitution)."""
        cols = sorted(self.rows, key=self._k)
        out: dict = {}
        for col in cols:
            row = dict(self.rows[col][0])
            for other in list(row):
                if other != col and other in out:
                    axpy(row, -row[other], out[other])
            out[col] = row
        return [out[c] for c in cols]


def solve_in_span(vectors: list[Vector], target: Vector, key=None):
    """Coefficients ``c_i`` with ``sum c_i vectors[i] = target`` or ``None``."""
    ech = Echelon(key=key, track=True)
    for i, v in enumerate(vectors):
        ech.add(v, label=i)
    return ech.express(target)
