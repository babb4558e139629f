"""Acceptance suite: ten criteria, each printing one PASS/FAIL line.

Every comparison is exact equality in Q(q).  Run on its own with
``pytest tests/test_acceptance.py -v -s`` or ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import time
from itertools import product

from conftest import ACCEPTANCE_LINES, exponent_vectors, random_element
from qcoideal import (
    E,
    F,
    K,
    GeneratorSet,
    Lattice,
    UElement,
    WeylWord,
    check_coproduct_shape,
    check_generator_form,
    coproduct,
    format_element,
    get_algebra,
    homogeneous_rcs,
    instantiate,
    inversion_set,
    is_convex,
    load_catalog,
    parse_element,
    phi_plus_of,
    q_commutator,
    verify_catalog,
    weak_leq,
)
from qcoideal.catalog import mutation_suite, root_vector_coefficient, verify_generators, verify_relation_tables
from qcoideal.expr import dumps_element, element_from_json, element_to_json, loads_element
from qcoideal.hopf import epsilon_left, epsilon_right, iterated_coproduct
from qcoideal.leading import SMALLER, eta_split, m_compare, m_set, reduce_generator
from qcoideal.repr import act, build_simple_module, restrict_find_onedim
from qcoideal.scalar import ONE, Q, ZERO, QRat, qpow

KAPPA = Q * Q / ((ONE - Q * Q) * (Q - ONE / Q))


def report(n: int, title: str, ok: bool, detail: str, started: float, limit: float | None = None) -> bool:
    elapsed = time.perf_counter() - started
    if limit is not None and elapsed >= limit:
        ok = False
        detail += f"; over the {limit:g} s budget"
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail} ({elapsed:.2f} s)"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def _is_scalar(x: UElement) -> bool:
    return all(m == x.alg.one_mono for m in x.terms)


def _monomials(alg, max_deg: int, torus):
    out = []
    for de in range(max_deg + 1):
        for df in range(max_deg + 1 - de):
            for e in exponent_vectors(alg.n, de):
                for f in exponent_vectors(alg.n, df):
                    for nu in torus:
                        out.append(UElement(alg, {(e, nu, f): ONE}))
    return out


def _total_degree(x: UElement) -> int:
    (m,) = x.terms
    return sum(m[0]) + sum(m[2])


# -- 1 -------------------------------------------------------------------------------

def test_criterion_01_relation_tables():
    t0 = time.perf_counter()
    rows = verify_relation_tables()
    bad = [name for name, ok, _, _ in rows if not ok]
    ok = not bad and len(rows) >= 9
    detail = f"{len(rows) - len(bad)}/{len(rows)} relations and coproducts reproduced"
    if bad:
        detail += f"; mismatched: {', '.join(bad)}"
    assert report(1, "relation tables", ok, detail, t0, 1.0)


# -- 2 -------------------------------------------------------------------------------

def test_criterion_02_shifted_commutator():
    t0 = time.perf_counter()
    A1 = get_algebra("A1")
    want = UElement.scalar(A1, Q * Q / (Q - ONE / Q))

    def comm(lam, lamp):
        x = parse_element("E[a]*K[a]^-1 + l*K[a]^-1", A1, {"l": lam})
        y = parse_element("F[a] + lp*K[a]^-1", A1, {"lp": lamp})
        return q_commutator(x, y, Q * Q)

    good = [ONE, Q, QRat(2), Q * Q + ONE, ONE / (Q - ONE), -qpow(-3)]
    hits = sum(comm(lam, KAPPA / lam) == want for lam in good)
    rng = random.Random(41)
    misses = 0
    for _ in range(5):
        lam = QRat(rng.randint(1, 9)) * qpow(rng.randint(-2, 2))
        lamp = QRat(rng.randint(1, 9)) * qpow(rng.randint(-2, 2))
        assert lam * lamp != KAPPA
        misses += not _is_scalar(comm(lam, lamp))
    ok = hits == len(good) and misses == 5
    detail = f"scalar q^2/(q-q^-1) on {hits}/{len(good)} constrained pairs, non-scalar on {misses}/5 violating pairs"
    assert report(2, "shifted commutator", ok, detail, t0, 1.0)


# -- 3 -------------------------------------------------------------------------------

def test_criterion_03_catalog_sweep():
    t0 = time.perf_counter()
    entries = load_catalog()
    reports = verify_catalog("*", 3, entries)
    failed = [r.id for r in reports if not r.verified]
    leaked = [name for name, gens in mutation_suite() if verify_generators(gens, name, 3).verified]
    ok = not failed and not leaked and len(entries) >= 40
    detail = (f"{len(reports) - len(failed)}/{len(reports)} instantiations of {len(entries)} entries verified, "
              f"{10 - len(leaked)}/10 mutations rejected")
    if failed:
        detail += f"; failed: {', '.join(failed)}"
    if leaked:
        detail += f"; mutations verified: {', '.join(leaked)}"
    assert report(3, "catalog sweep", ok, detail, t0, 600.0)


# -- 4 -------------------------------------------------------------------------------

def _reduce_fully(x: UElement, C, D: int = 3, bound: int = 64):
    """Reduce every eta-piece until no mixed leading terms remain; count calls."""
    alg = x.alg
    queue = [p for p in eta_split(x).values() if m_set(p)]
    calls = 0
    while queue:
        y = queue.pop()
        red = reduce_generator(y, C, D, bound)
        calls += 1
        if m_compare(red.m_output, red.m_input, alg) != SMALLER or not red.certified:
            return False, calls
        for out in red.outputs:
            queue.extend(p for p in eta_split(out).values() if m_set(p))
        if calls > bound:
            return False, calls
    return True, calls


def test_criterion_04_reduction():
    t0 = time.perf_counter()
    A1, A2 = get_algebra("A1"), get_algebra("A2")
    cases = [(E(A1, "a") * K(A1, (1,), -1) * F(A1, "a"),
              GeneratorSet([E(A1, "a") * K(A1, (1,), -1), K(A1, (2,)), K(A1, (2,), -1), F(A1, "a")]))]
    full = homogeneous_rcs("aba", Lattice.full(2), "aba")
    for text in ["E[ab]*K[a+b]^-1*F[a]", "E[ab]*K[a+b]^-1*F[ab]", "E[a]*E[b]*K[a+b]^-1*F[b]",
                 "E[ab]*K[a]^-1*F[b] + F[b]*K[a]^-1", "E[ab]*K[a+b]^-1*F[ab] + E[a]*K[a]^-1*F[a]"]:
        cases.append((parse_element(text, A2), full))
    results = [_reduce_fully(x, C) for x, C in cases]
    ok = all(r for r, _ in results)
    calls = sum(c for _, c in results)
    detail = f"{sum(r for r, _ in results)}/{len(cases)} inputs reduced with strict M-set decrease and certified, {calls} calls"
    assert report(4, "reduction algorithm", ok, detail, t0, 60.0)


# -- 5 -------------------------------------------------------------------------------

def test_criterion_05_hopf_axioms():
    t0 = time.perf_counter()
    A2 = get_algebra("A2")
    monos = _monomials(A2, 3, [(0, 0), (1, -1)])
    bad = 0
    for x in monos:
        t = coproduct(x)
        bad += epsilon_left(t) != x or epsilon_right(t) != x
        bad += iterated_coproduct(x, "left") != iterated_coproduct(x, "right")
    plain = [x for x in monos if next(iter(x.terms))[1] == (0, 0)]
    pairs = 0
    for x, y in product(plain, repeat=2):
        if _total_degree(x) + _total_degree(y) <= 3:
            pairs += 1
            bad += coproduct(x * y) != coproduct(x) * coproduct(y)
    rng = random.Random(7)
    for _ in range(200):
        x, y = random_element(A2, rng, 2, 3), random_element(A2, rng, 2, 3)
        bad += coproduct(x * y) != coproduct(x) * coproduct(y)
    ok = bad == 0
    detail = (f"{len(monos)} monomials (coassociativity, counit), {pairs} monomial pairs and 200 random pairs "
              f"(multiplicativity), {bad} failures")
    assert report(5, "Hopf axioms", ok, detail, t0, 120.0)


# -- 6 -------------------------------------------------------------------------------

def test_criterion_06_coproduct_shape():
    t0 = time.perf_counter()
    A2 = get_algebra("A2")
    monos = _monomials(A2, 3, [(0, 0), (-1, 0), (1, -1), (-1, -1)])
    classes: dict = {}
    for x in monos:
        (m,) = x.terms
        classes.setdefault((A2.pr(m[0]), m[1], A2.pr(m[2])), []).append(x)
    rng = random.Random(3)
    bad = checked = 0
    for (mu, nu, gamma), xs in classes.items():
        combo = sum((x.scale(QRat(rng.randint(1, 5)) * qpow(rng.randint(-2, 2))) for x in xs),
                    UElement.zero(A2))
        for x in xs + [combo]:
            checked += 1
            bad += not check_coproduct_shape(x, mu, nu, gamma)
    ok = bad == 0
    detail = f"{checked} homogeneous elements in {len(classes)} degree classes, {bad} failures"
    assert report(6, "coproduct shape", ok, detail, t0)


# -- 7 -------------------------------------------------------------------------------

def test_criterion_07_orderings():
    t0 = time.perf_counter()
    rs = get_algebra("A2").rs
    words = [WeylWord(l, rs) for n in range(4) for l in product(range(2), repeat=n) if rs.is_reduced(l)]
    elements = {rs.element_key(w.letters) for w in words}
    convex = all(is_convex(phi_plus_of(w)) for w in words)
    agree = all(weak_leq(v, w) == (inversion_set(v) <= inversion_set(w)) for v, w in product(words, repeat=2))
    coeff = root_vector_coefficient()
    ok = len(elements) == 6 and convex and agree and not coeff.is_zero()
    detail = (f"{len(words)} reduced words over {len(elements)} Weyl elements convex={convex}, "
              f"weak order = inversion containment on all pairs={agree}, "
              f"E_ab coefficient of E_a E_b = {coeff}")
    assert report(7, "orderings", ok, detail, t0, 1.0)


# -- 8 -------------------------------------------------------------------------------

def test_criterion_08_representation():
    t0 = time.perf_counter()
    A1 = get_algebra("A1")
    lam = ONE
    lamp = KAPPA / lam
    g1 = parse_element("E[a]*K[a]^-1 + l*K[a]^-1", A1, {"l": lam})
    g2 = parse_element("F[a] + lp*K[a]^-1", A1, {"lp": lamp})
    M = build_simple_module(1)
    x0, x1 = [ONE, ZERO], [ZERO, ONE]
    actions = [
        (act(g1, M, x0), [lam / Q, ZERO]),
        (act(g1, M, x1), [Q, lam * Q]),
        (act(g2, M, x0), [lamp / Q, ONE]),
        (act(g2, M, x1), [ZERO, lamp * Q]),
    ]
    action_ok = sum(got == want for got, want in actions)
    rep = restrict_find_onedim(M, [g1, g2])
    vec_ok = (len(rep.eigenvectors) == 1
              and rep.eigenvectors[0].vector == [ONE, lam * (ONE - qpow(-2))]
              and rep.eigenvectors[0].eigenvalues == [lam * Q, lamp / Q])
    quot_ok = rep.quotient == [lam / Q, lamp * Q]
    ok = action_ok == 4 and vec_ok and quot_ok
    detail = (f"{action_ok}/4 action formulas (six coefficients), eigenvector and eigenvalues={vec_ok}, "
              f"quotient eigenvalues={quot_ok}")
    assert report(8, "representation example", ok, detail, t0, 1.0)


# -- 9 -------------------------------------------------------------------------------

def _listed_lattice(gens):
    weights = set()
    for g in gens:
        if len(g.terms) == 1:
            (m,) = g.terms
            if not any(m[0]) and not any(m[2]) and any(m[1]):
                weights.add(m[1])
    from qcoideal.leading import _lattice_basis

    return _lattice_basis(sorted(w for w in weights if tuple(-x for x in w) in weights))


def test_criterion_09_generator_form():
    t0 = time.perf_counter()
    A2 = get_algebra("A2")
    rejected, checked = [], 0
    for entry in load_catalog():
        support = [A2.rs.parse_weight(s) if isinstance(s, str) else tuple(s) for s in entry.support]
        for label, over, ints in entry.samples():
            over = {k: v for k, v in over.items() if k != "expected"}
            gens = instantiate(entry, over, ints).gens
            lattice = _listed_lattice(gens)
            for g in gens:
                if all(not any(m[0]) and not any(m[2]) for m in g.terms):
                    continue
                checked += 1
                if not check_generator_form(g, lattice, support).accepted:
                    rejected.append(f"{entry.id}[{label}]: {format_element(g)}")
    weight_pair = check_generator_form(parse_element("E[a]*K[b]^-1 + 2*F[b] + K[a]^-1", A2))
    torus_part = check_generator_form(parse_element("E[a]*K[a]^-1 + F[a]", A2), lattice=[(1, 0)])
    violations = [weight_pair.reason.split(":")[0], torus_part.reason.split(":")[0]]
    ok = not rejected and not weight_pair.accepted and not torus_part.accepted
    detail = f"{checked - len(rejected)}/{checked} catalog generators accepted, violations rejected as {violations}"
    if rejected:
        detail += f"; rejected: {'; '.join(rejected[:3])}"
    assert report(9, "generator form", ok, detail, t0, 1.0)


# -- 10 ------------------------------------------------------------------------------

def test_criterion_10_serialization():
    t0 = time.perf_counter()
    rng = random.Random(10)
    algs = [get_algebra("A1"), get_algebra("A2")]
    bad = 0
    for i in range(1000):
        alg = algs[i % 2]
        x = random_element(alg, rng, 3, 5)
        bad += parse_element(format_element(x), alg) != x
        bad += element_from_json(element_to_json(x), alg) != x
        s = dumps_element(x)
        bad += dumps_element(loads_element(s, alg)) != s
        bad += format_element(parse_element(format_element(x), alg)) != format_element(x)
    ok = bad == 0
    assert report(10, "serialization", ok, f"1000 random elements, {bad} round-trip mismatches", t0)


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
