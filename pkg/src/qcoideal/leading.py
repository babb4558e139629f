"""Leading terms, the M-order and the reduction of mixed generators.

The E-side reduction follows the constructive proof that every right coideal
subalgebra with a Hopf torus part has generators whose E-leading terms lie
in ``U^{>=0}``: for the maximal mixed PBW monomial ``mu`` of ``X`` it forms

* ``A4 = (id (x) phi) Delta(X)`` with ``phi`` dual to ``E_mu K_eta``,
* ``Y6 = (id (x) phi') Delta(X)`` with ``phi'`` dual to ``K_{eta+gmax} F_gmax``,
* the torus element ``K_t``, ``t = eta + gmax + mu``, and its inverse,

and replaces ``X`` by these together with ``X - Y6 K_t^-1 A4``.  The F side
is handled by conjugating with the coalgebra-preserving anti-automorphism
:func:`~qcoideal.pbw.sigma`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import DualFunctional, eta_slice, eta_values, slice_right
from .pbw import UElement, sigma, K, E as E_gen, F as F_gen
from .rootdata import EQUAL, LESS, dominance_leq, format_weight, lex_compare
from .scalar import ONE, ZERO, QRat
from .subalgebra import GeneratorSet, SpanBasis, torus_subhopf_check

SMALLER, NOT_SMALLER = "smaller", "not-smaller"


class ReductionError(RuntimeError):
    pass


# -- splitting ---------------------------------------------------------------

def eta_split(x: UElement) -> dict:
    """``{eta: X^(eta)}`` partitioning the terms of ``x`` by ``nu - gamma``."""
    return {eta: eta_slice(x, eta) for eta in eta_values(x)}


def _maximal(weights) -> set:
    ws = set(weights)
    return {w for w in ws if not any(dominance_leq(w, v) == LESS for v in ws)}


def e_degrees(x: UElement) -> set:
    alg = x.alg
    degs = {alg.pr(m[0]) for m in x.terms if any(m[0])}
    return _maximal(degs)


def f_degrees(x: UElement) -> set:
    alg = x.alg
    degs = {alg.pr(m[2]) for m in x.terms if any(m[2])}
    return _maximal(degs)


def leading_term(x: UElement, mu) -> UElement:
    mu = tuple(mu)
    if mu not in e_degrees(x):
        raise ValueError(f"{format_weight(mu)} is not a maximal E-degree")
    alg = x.alg
    return UElement(alg, {m: c for m, c in x.terms.items() if alg.pr(m[0]) == mu})


def f_leading_term(x: UElement, nu) -> UElement:
    nu = tuple(nu)
    if nu not in f_degrees(x):
        raise ValueError(f"{format_weight(nu)} is not a maximal F-degree")
    alg = x.alg
    return UElement(alg, {m: c for m, c in x.terms.items() if alg.pr(m[2]) == nu})


def weight_decompose(x: UElement, lattice_basis) -> list:
    """Split ``x`` into ``ad(T_L)`` eigencomponents.

    Returns ``[(pairings, representative degree, component)]`` where
    ``pairings`` lists ``(l, deg)`` for the lattice basis vectors ``l``."""
    alg = x.alg
    basis = [tuple(l) for l in lattice_basis]
    groups: dict = {}
    reps: dict = {}
    for m, c in x.terms.items():
        d = alg.degree(m)
        key = tuple(alg.rs.form(l, d) for l in basis)
        groups.setdefault(key, {})[m] = c
        if key not in reps or d < reps[key]:
            reps[key] = d
    return [(k, reps[k], UElement(alg, groups[k])) for k in sorted(groups)]


# -- the M-set and its order ------------------------------------------------------

def m_set(x: UElement) -> frozenset:
    """PBW E-monomials of E-leading terms that carry a nontrivial F-part."""
    alg = x.alg
    maxima = e_degrees(x)
    return frozenset(m[0] for m in x.terms if any(m[2]) and any(m[0]) and alg.pr(m[0]) in maxima)


def f_m_set(x: UElement) -> frozenset:
    return m_set(sigma(x))


def _dominated(alg, nu, mu) -> bool:
    """``nu <= mu``: ``pr(nu) < pr(mu)``, or equal weights and ``nu <=_lex mu``."""
    a, b = alg.pr(nu), alg.pr(mu)
    rel = dominance_leq(a, b)
    if rel == LESS:
        return True
    if rel == EQUAL:
        return lex_compare(nu, mu) in (LESS, EQUAL)
    return False


def m_compare(N, M, alg) -> str:
    N, M = frozenset(N), frozenset(M)
    if N == M:
        return EQUAL
    leq = all(any(_dominated(alg, n, m) for m in M) for n in N)
    if not leq:
        return NOT_SMALLER
    if any(not any(_dominated(alg, m, n) for n in N) for m in M):
        return SMALLER
    return NOT_SMALLER


def _choose_max(alg, mset):
    """Maximal element: dominance-maximal weight, ties by weight coordinates then lex."""
    weights = _maximal(alg.pr(e) for e in mset)
    cands = [e for e in mset if alg.pr(e) in weights]
    return max(cands, key=lambda e: (alg.pr(e), e))


# -- reduction -----------------------------------------------------------------------

@dataclass
class ReductionStep:
    mu_bar: tuple
    eta: tuple
    gamma_max: tuple
    gamma_bar_max: tuple
    torus: tuple
    y6: UElement
    a4: UElement
    z: UElement
    remainder: UElement
    m_before: frozenset
    m_after: frozenset

    def lines(self) -> list[str]:
        return [
            f"mu_bar={self.mu_bar} eta={format_weight(self.eta)} gamma_max={format_weight(self.gamma_max)}",
            f"  E-part element: {self.y6}",
            f"  torus element:  K[{format_weight(self.torus)}]",
            f"  F-side element: {self.a4}",
            f"  remainder:      {self.remainder}",
            f"  M: {sorted(self.m_before)} -> {sorted(self.m_after)}",
        ]


@dataclass
class Reduction:
    outputs: list
    steps: list = field(default_factory=list)
    m_input: frozenset = frozenset()
    m_output: frozenset = frozenset()
    certified: bool | None = None

    def trace(self) -> str:
        out = []
        for i, s in enumerate(self.steps):
            out.append(f"step {i + 1}:")
            out.extend(s.lines())
        return "\n".join(out)


def _single_eta(x: UElement):
    etas = eta_values(x)
    if len(etas) != 1:
        raise ReductionError("input is not eta-homogeneous; split it with eta_split first")
    return etas[0]


def _one_step(x: UElement):
    alg = x.alg
    eta = _single_eta(x)
    mset = m_set(x)
    mu_bar = _choose_max(alg, mset)
    mu = alg.pr(mu_bar)
    row = {m: c for m, c in x.terms.items() if m[0] == mu_bar and any(m[2])}
    gammas = {alg.pr(m[2]) for m in row}
    gmax = max(_maximal(gammas))
    gbar_max = max(m[2] for m in row if alg.pr(m[2]) == gmax)
    nu_max = tuple(a + b for a, b in zip(eta, gmax))
    # (id (x) phi) Delta(X) for phi dual to E_mu K_eta
    a4 = slice_right(x, DualFunctional((mu_bar, tuple(eta), alg.zero_exp)))
    y6 = slice_right(x, DualFunctional((alg.zero_exp, nu_max, gbar_max)))
    c = y6.terms.get((mu_bar, nu_max, alg.zero_exp))
    if c is None or c.is_zero():
        raise ReductionError("E-part element lacks its leading monomial")
    y6 = y6.scale(ONE / c)
    t = tuple(a + b for a, b in zip(nu_max, mu))
    kt = K(alg, t)
    kt_inv = K(alg, t, -1)
    z = y6 * kt_inv * a4
    rem = x - z
    step = ReductionStep(mu_bar, tuple(eta), gmax, gbar_max, t, y6, a4, z, rem, mset, m_set(rem))
    return step, [y6, kt, kt_inv, a4]


def reduce_generator(x: UElement, C=None, D: int = 3, bound: int = 64,
                     check_membership: bool = True) -> Reduction:
    """One application of the E-side reduction to an eta-homogeneous ``x``."""
    alg = x.alg
    m0 = m_set(x)
    if not m0:
        raise ReductionError("m_set is empty: nothing to reduce")
    span = None
    if C is not None and check_membership:
        if not isinstance(C, GeneratorSet):
            C = GeneratorSet(list(C))
        span = SpanBasis(C)
        if span.find_level(x, D) is None:
            raise ReductionError("input does not lie in the span of C at the given degree")
        for g in C.gens:
            if len(g.terms) == 1:
                (m,) = g.terms
                if not any(m[0]) and not any(m[2]):
                    inv = K(alg, m[1], -1)
                    if span.find_level(inv, D + 1) is None:
                        raise ReductionError("torus part of C is not closed under inverses")
    outputs: list = []
    steps = []
    cur = x
    for _ in range(bound):
        step, made = _one_step(cur)
        steps.append(step)
        for y in made:
            if not any(y == o for o in outputs):
                outputs.append(y)
        cur = step.remainder
        if m_compare(m_set(cur), m0, alg) == SMALLER:
            break
    else:
        raise ReductionError(f"no strict decrease after {bound} iterations")
    if cur.terms:
        outputs.append(cur)
    m_out = frozenset().union(*(m_set(y) for y in outputs)) if outputs else frozenset()
    red = Reduction(outputs, steps, m0, m_out)
    if m_compare(m_out, m0, alg) != SMALLER:
        raise ReductionError("reduction did not decrease the M-set")
    cert = SpanBasis(GeneratorSet(outputs))
    red.certified = cert.find_level(x, D + 1) is not None
    return red


def reduce_generator_f(x: UElement, C=None, D: int = 3, bound: int = 64) -> Reduction:
    """F-side reduction: conjugate by ``sigma``, reduce, conjugate back."""
    sx = sigma(x)
    sC = None
    if C is not None:
        gens = C.gens if isinstance(C, GeneratorSet) else list(C)
        sC = GeneratorSet([sigma(g) for g in gens])
    red = reduce_generator(sx, sC, D, bound)
    red.outputs = [sigma(y) for y in red.outputs]
    for s in red.steps:
        s.y6, s.a4, s.z, s.remainder = sigma(s.y6), sigma(s.a4), sigma(s.z), sigma(s.remainder)
    red.certified = SpanBasis(GeneratorSet(red.outputs)).find_level(x, D + 1) is not None
    return red


def _lattice_basis(weights) -> list:
    """A maximal independent subset of the given torus weights."""
    basis: list = []
    for w in weights:
        if not any(w):
            continue
        if not basis:
            basis.append(w)
        elif len(basis) == 1 and len(w) == 2 and w[0] * basis[0][1] - w[1] * basis[0][0] != 0:
            basis.append(w)
    return basis


def reduce_system(Z, D: int = 3, bound: int = 64):
    """Reduce a generating set until no generator has a mixed leading term.

    Returns ``(GeneratorSet, log lines)``.
    """
    if not isinstance(Z, GeneratorSet):
        Z = GeneratorSet(list(Z))
    alg = Z.alg
    span = SpanBasis(Z)
    tor = torus_subhopf_check(Z, D, span=span)
    if not tor.ok:
        raise ReductionError(f"torus part is not a sub-Hopf algebra: {tor.problem}")
    lattice = _lattice_basis(tor.weights)
    log = []
    todo = []
    for g in Z.gens:
        for eta, part in eta_split(g).items():
            for _, _, comp in weight_decompose(part, lattice):
                todo.append(comp)
    done: list = []
    rounds = 0
    while todo:
        rounds += 1
        if rounds > bound * max(1, len(Z.gens)):
            raise ReductionError("reduce_system exceeded its iteration bound")
        x = todo.pop(0)
        if m_set(x):
            red = reduce_generator(x, None, D, bound, check_membership=False)
            log.append(f"E-reduce {x}")
            log.extend("  " + line for line in red.trace().splitlines())
            new = red.outputs
        elif f_m_set(x):
            red = reduce_generator_f(x, None, D, bound)
            log.append(f"F-reduce {x}")
            log.extend("  " + line for line in red.trace().splitlines())
            new = red.outputs
        else:
            is_scalar = set(x.terms) <= {alg.one_mono}
            if not is_scalar and not any(x == d for d in done):
                done.append(x)
            continue
        for y in new:
            for eta, part in eta_split(y).items():
                for _, _, comp in weight_decompose(part, lattice):
                    todo.append(comp)
    out = GeneratorSet(done or [UElement.one(alg)], f"{Z.name} reduced")
    new_span = SpanBasis(out)
    for g in Z.gens:
        if new_span.find_level(g, D + 1) is None:
            raise ReductionError(f"reduced system lost {g}")
    for g in out.gens:
        if span.find_level(g, D + 1) is None:
            raise ReductionError(f"reduced system gained {g} outside the original span")
    return out, log


# -- generator form --------------------------------------------------------------

@dataclass
class GeneratorForm:
    accepted: bool
    reason: str = ""
    lambdaE: QRat = ZERO
    lambdaF: QRat = ZERO
    lambdaK: QRat = ZERO
    mu: tuple | None = None
    nu: tuple | None = None
    twist: tuple | None = None

    def to_json(self) -> dict:
        fw = lambda w: None if w is None else format_weight(w)
        return {
            "accepted": self.accepted,
            "reason": self.reason,
            "lambdaE": str(self.lambdaE),
            "lambdaF": str(self.lambdaF),
            "lambdaK": str(self.lambdaK),
            "mu": fw(self.mu),
            "nu": fw(self.nu),
            "twist": fw(self.twist),
        }


def _is_root_vector(x: UElement, side: str, mu) -> bool:
    """Is the U^+ (or U^-) factor of a leading term a multiple of a root vector?"""
    alg = x.alg
    labels = [alg.rs.root_label(i) for i in range(alg.n)]
    if len(alg.rs.positive_roots) > 1:
        labels += ["ba"]
    cands = []
    for lab in labels:
        try:
            v = E_gen(alg, lab) if side == "E" else F_gen(alg, lab)
        except ValueError:
            continue
        m = next(iter(v.terms))
        w = alg.pr(m[0]) if side == "E" else alg.pr(m[2])
        if w == tuple(mu):
            cands.append(v)
    # strip the torus factor: compare on E/F exponents only
    key = (lambda m: m[0]) if side == "E" else (lambda m: m[2])
    target = {}
    for m, c in x.terms.items():
        target[key(m)] = target.get(key(m), ZERO) + c
    for v in cands:
        vt = {key(m): c for m, c in v.terms.items()}
        if set(vt) != set(target):
            continue
        ratios = {target[k] / vt[k] for k in vt}
        if len(ratios) == 1:
            return True
    return False


def check_generator_form(x: UElement, lattice=None, support=(), shift_constant=None) -> GeneratorForm:
    """Match ``x`` against ``lam_E E^phi_mu + lam_F K^-1_{mu-nu} F^phi_nu + lam_K K^-1_mu``
    (up to a right torus twist) and apply the two weight constraints.

    ``shift_constant`` is the part of the torus coefficient produced by the
    characters (so that ``lam_K`` is what remains); ``support`` is the union of
    the character supports and ``lattice`` the ambient torus lattice basis.
    """
    alg = x.alg
    rs = alg.rs
    pick = lambda e, f: UElement(alg, {m: c for m, c in x.terms.items()
                                       if bool(any(m[0])) == e and bool(any(m[2])) == f})
    e_part, f_part, k_part, mixed = pick(True, False), pick(False, True), pick(False, False), pick(True, True)
    mu = nu = twist = None
    lam_e = lam_f = ZERO
    if e_part.terms:
        degs = e_degrees(e_part)
        if len(degs) != 1:
            return GeneratorForm(False, "more than one E-leading term")
        mu = next(iter(degs))
        lead = leading_term(e_part, mu)
        ks = {m[1] for m in lead.terms}
        if len(ks) != 1:
            return GeneratorForm(False, "E-leading term has several torus parts")
        if mu not in rs.positive_roots or not _is_root_vector(lead, "E", mu):
            return GeneratorForm(False, "E-leading term is not a root vector")
        twist = tuple(a + b for a, b in zip(ks.pop(), mu))
        lam_e = lead.terms[max(lead.terms)]
    if f_part.terms:
        degs = f_degrees(f_part)
        if len(degs) != 1:
            return GeneratorForm(False, "more than one F-leading term")
        nu = next(iter(degs))
        lead = f_leading_term(f_part, nu)
        ks = {m[1] for m in lead.terms}
        if len(ks) != 1:
            return GeneratorForm(False, "F-leading term has several torus parts")
        if nu not in rs.positive_roots or not _is_root_vector(lead, "F", nu):
            return GeneratorForm(False, "F-leading term is not a root vector")
        kf = ks.pop()
        lam_f = lead.terms[max(lead.terms)]
        if mu is not None:
            expected = tuple(t - a + b for a, b, t in zip(mu, nu, twist))
            if kf != expected:
                return GeneratorForm(False, "F-term torus part does not match K^-1_{mu-nu}", lam_e, lam_f,
                                     ZERO, mu, nu, twist)
    for m in mixed.terms:
        # lower-order mixed terms are allowed below both leading terms
        if mu is None or nu is None or dominance_leq(alg.pr(m[0]), mu) != LESS \
                or dominance_leq(alg.pr(m[2]), nu) != LESS:
            return GeneratorForm(False, "mixed term not below the leading terms", lam_e, lam_f, ZERO, mu, nu, twist)
    if len(k_part.terms) > 1:
        return GeneratorForm(False, "torus part is not a single monomial", lam_e, lam_f, ZERO, mu, nu, twist)
    lam_k = next(iter(k_part.terms.values())) if k_part.terms else ZERO
    if shift_constant is not None:
        lam_k = lam_k - shift_constant
    form = GeneratorForm(True, "", lam_e, lam_f, lam_k, mu, nu, twist)
    if mu is not None and nu is not None and mu != nu:
        if not lam_k.is_zero() and not lam_f.is_zero():
            form.accepted, form.reason = False, "weight-pair: lambda_K and lambda_F both nonzero"
            return form
        s = tuple(a + b for a, b in zip(mu, nu))
        d = tuple(a - b for a, b in zip(mu, nu))
        if rs.form(s, d) != 0:
            form.accepted, form.reason = False, "weight-pair: mu+nu not orthogonal to mu-nu"
            return form
    if lattice:
        for l in lattice:
            for s in support:
                if rs.form(tuple(l), tuple(s)) != 0:
                    form.accepted = False
                    form.reason = f"torus-part: lattice vector {format_weight(l)} not orthogonal to support {format_weight(s)}"
                    return form
            if mu is not None and nu is not None:
                s = tuple(a + b for a, b in zip(mu, nu))
                if rs.form(tuple(l), s) != 0:
                    form.accepted = False
                    form.reason = f"torus-part: lattice vector {format_weight(l)} not orthogonal to mu+nu"
                    return form
    return form
