"""Simple finite-dimensional U_q(sl_2)-modules and restriction to subalgebras."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .pbw import UElement
from .scalar import ONE, ZERO, QRat, q_number, qpow
from .subalgebra import GeneratorSet

Matrix = list  # list of rows of QRat


def _zero(n: int) -> Matrix:
    return [[ZERO] * n for _ in range(n)]


def _identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        row = a[i]
        for k in range(m):
            if row[k].is_zero():
                continue
            c = row[k]
            bk = b[k]
            for j in range(p):
                if not bk[j].is_zero():
                    out[i][j] = out[i][j] + c * bk[j]
    return out


def mat_add(a: Matrix, b: Matrix, c: QRat = ONE) -> Matrix:
    return [[x + c * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = _identity(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


@dataclass(frozen=True)
class SimpleModule:
    """``L(m)`` with basis ``x_0..x_m``; column ``i`` of each matrix is the image of ``x_i``."""

    m: int
    E: tuple
    F: tuple
    K: tuple
    Kinv: tuple

    @property
    def dim(self) -> int:
        return self.m + 1


@lru_cache(maxsize=None)
def build_simple_module(m: int) -> SimpleModule:
    if m < 0:
        raise ValueError("highest weight must be non-negative")
    n = m + 1
    e, f, k, ki = _zero(n), _zero(n), _zero(n), _zero(n)
    for i in range(n):
        k[i][i] = qpow(m - 2 * i)
        ki[i][i] = qpow(2 * i - m)
        if i > 0:
            e[i - 1][i] = q_number(m - i + 1)
        if i < m:
            f[i + 1][i] = q_number(i + 1)
    freeze = lambda a: tuple(tuple(r) for r in a)
    return SimpleModule(m, freeze(e), freeze(f), freeze(k), freeze(ki))


def _as_lists(t) -> Matrix:
    return [list(r) for r in t]


def matrix_of(x: UElement, M: SimpleModule) -> Matrix:
    """Matrix of ``x`` acting on ``M`` (PBW monomial ``E^a K^nu F^c`` acts right to left)."""
    if x.alg.rs.name != "A1":
        raise ValueError("modules are only provided for A1")
    e, f = _as_lists(M.E), _as_lists(M.F)
    n = M.dim
    out = _zero(n)
    for (ea, nu, fc), c in x.terms.items():
        a, (p,), cc = ea[0], nu, fc[0]
        kp = [[qpow(p * (M.m - 2 * i)) if i == j else ZERO for j in range(n)] for i in range(n)]
        mat = mat_mul(mat_pow(e, a), mat_mul(kp, mat_pow(f, cc)))
        out = mat_add(out, mat, c)
    return out


def act(x: UElement, M: SimpleModule, v) -> list:
    mat = matrix_of(x, M)
    if len(v) != M.dim:
        raise ValueError("vector length does not match the module")
    return [sum((r[j] * v[j] for j in range(M.dim)), ZERO) for r in mat]


# -- exact linear algebra over Q(q) -------------------------------------------------

def _rref(rows: Matrix):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def kernel(a: Matrix) -> list:
    """Basis of the null space of ``a`` (as column vectors)."""
    n = len(a[0]) if a else 0
    rows, piv = _rref(a)
    free = [j for j in range(n) if j not in piv]
    out = []
    for fj in free:
        v = [ZERO] * n
        v[fj] = ONE
        for row, pj in zip(rows, piv):
            v[pj] = -row[fj]
        out.append(v)
    return out


def _normalize(v) -> list:
    lead = next(x for x in v if not x.is_zero())
    return [x / lead for x in v]


def _eigenvalues_on(mats, v) -> list | None:
    vals = []
    for mat in mats:
        w = [sum((r[j] * v[j] for j in range(len(v))), ZERO) for r in mat]
        k = next(i for i, x in enumerate(v) if not x.is_zero())
        lam = w[k] / v[k]
        if any(w[i] != lam * v[i] for i in range(len(v))):
            return None
        vals.append(lam)
    return vals


def _candidate_eigenvalues(mat) -> list:
    """Eigenvalues of a triangular matrix, else of its diagonal as a fallback search set."""
    n = len(mat)
    return sorted({mat[i][i] for i in range(n)}, key=str)


@dataclass
class OneDim:
    vector: list
    eigenvalues: list


@dataclass
class RestrictionReport:
    eigenvectors: list
    quotient: list | None  # eigenvalues on M / (codim-1 invariant subspace), if any


def _common_kernel(mats, vals, n) -> list:
    stacked = []
    for mat, lam in zip(mats, vals):
        shifted = mat_add(mat, _identity(n), -lam)
        stacked.extend(shifted)
    return kernel(stacked) if stacked else [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]


def _eigen_candidates(mat, n):
    """Eigenvalues found from factors of the characteristic data we can reach exactly."""
    cands = set(_candidate_eigenvalues(mat))
    # a 2x2 block can have off-diagonal eigenvalues; try the kernel of (mat - lam) for trace roots
    if n == 2:
        a, b = mat[0]
        c, d = mat[1]
        tr, det = a + d, a * d - b * c
        # rational roots only: test the diagonal entries and the pair (tr - lam)
        for lam in list(cands):
            other = tr - lam
            if lam * other == det:
                cands.add(other)
    return cands


def restrict_find_onedim(M: SimpleModule, B) -> RestrictionReport:
    """Common eigenvectors of the generators of ``B`` on ``M`` and the quotient data."""
    gens = B.gens if isinstance(B, GeneratorSet) else list(B)
    mats = [matrix_of(g, M) for g in gens]
    n = M.dim
    found: list[OneDim] = []
    cand_lists = [_eigen_candidates(m, n) | _eigen_candidates(_transpose(m), n) for m in mats]
    seen = []
    for vals in _product(cand_lists):
        for v in _common_kernel(mats, vals, n):
            v = _normalize(v)
            if any(v == s for s in seen):
                continue
            ev = _eigenvalues_on(mats, v)
            if ev is not None:
                seen.append(v)
                found.append(OneDim(v, ev))
    quotient = None
    # codimension-1 invariant subspace <-> common eigenvector of the transposes
    dual = []
    tmats = [_transpose(m) for m in mats]
    for vals in _product(cand_lists):
        for v in _common_kernel(tmats, vals, n):
            ev = _eigenvalues_on(tmats, _normalize(v))
            if ev is not None:
                dual.append(ev)
    if dual:
        quotient = dual[0]
    return RestrictionReport(found, quotient)


def quotient_eigenvalues(M: SimpleModule, B, line) -> list:
    """Eigenvalues of the generators on ``M / <line>`` when ``M`` is 2-dimensional."""
    if M.dim != 2:
        raise ValueError("quotient by a line is one-dimensional only for dim 2")
    gens = B.gens if isinstance(B, GeneratorSet) else list(B)
    out = []
    # complement coordinate: pick basis vector not parallel to line
    j = 0 if line[1].is_zero() is False else 1
    comp = [ONE if i == j else ZERO for i in range(2)]
    for g in gens:
        w = act(g, M, comp)
        # w = a*line + b*comp  -> eigenvalue b
        det = line[0] * comp[1] - line[1] * comp[0]
        b = (line[0] * w[1] - line[1] * w[0]) / det
        out.append(b)
    return out


def _transpose(m: Matrix) -> Matrix:
    return [list(r) for r in zip(*m)]


def _product(lists):
    from itertools import product

    return product(*[sorted(l, key=str) for l in lists])


def composition_factors_onedim(M: SimpleModule, B) -> bool:
    """Does ``M`` restricted to ``B`` have a full flag of invariant subspaces?"""
    gens = B.gens if isinstance(B, GeneratorSet) else list(B)
    mats = [matrix_of(g, M) for g in gens]
    return _has_flag(mats, M.dim)


def _has_flag(mats, n, cands=None) -> bool:
    if n <= 1:
        return True
    # quotient eigenvalues are among the eigenvalues of the full matrices,
    # so the candidate sets are computed once on the original basis
    if cands is None:
        cands = [_eigen_candidates(m, n) | _eigen_candidates(_transpose(m), n) for m in mats]
    for vals in _product(cands):
        ker = _common_kernel(mats, vals, n)
        if not ker:
            continue
        v = ker[0]
        # change basis so that v is the first vector, then recurse on the quotient
        k = next(i for i, x in enumerate(v) if not x.is_zero())
        basis = [v] + [[ONE if i == j else ZERO for i in range(n)] for j in range(n) if j != k]
        P = _transpose(basis)
        Pinv = _inverse(P)
        sub = []
        for m in mats:
            conj = mat_mul(Pinv, mat_mul(m, P))
            sub.append([row[1:] for row in conj[1:]])
        return _has_flag(sub, n - 1, cands)
    return False


def _inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m)]
    rows, piv = _rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in rows]


__all__ = [
    "SimpleModule",
    "build_simple_module",
    "matrix_of",
    "act",
    "kernel",
    "restrict_find_onedim",
    "quotient_eigenvalues",
    "composition_factors_onedim",
    "OneDim",
    "RestrictionReport",
]
