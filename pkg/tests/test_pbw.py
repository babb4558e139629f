from itertools import product

import pytest

from conftest import random_element
from qcoideal import E, F, K, UElement, derive_relation, parse_element, q_commutator, sigma, omega, swap
from qcoideal.pbw import parts, normalize
from qcoideal.scalar import ONE, Q, q_number, qpow

GENS_A2 = [("E", "a"), ("E", "b"), ("E", "ab"), ("E", "ba"),
           ("F", "a"), ("F", "b"), ("F", "ab"), ("F", "ba"),
           ("K", (1, 0)), ("K", (0, -1))]


def _gen(alg, g):
    kind, val = g
    return {"E": E, "F": F, "K": K}[kind](alg, val)


def test_torus_conjugation(A2):
    for beta, label in [((1, 0), "a"), ((0, 1), "b"), ((1, 1), "ab")]:
        for nu in [(1, 0), (0, 1), (2, -1)]:
            k, kinv = K(A2, nu), K(A2, nu, -1)
            c = qpow(A2.rs.form(nu, beta))
            assert k * E(A2, label) * kinv == E(A2, label).scale(c)
            assert k * F(A2, label) * kinv == F(A2, label).scale(ONE / c)


def test_ef_relation(A1, A2):
    for alg, labels in [(A1, "a"), (A2, "ab")]:
        for i in labels:
            for j in labels:
                lhs = q_commutator(E(alg, i), F(alg, j))
                if i != j:
                    assert lhs.is_zero()
                else:
                    nu = alg.rs.simple_roots["ab".index(i)]
                    assert lhs == (K(alg, nu) - K(alg, nu, -1)).scale(ONE / (Q - qpow(-1)))


def test_serre_relations(A2):
    ea, eb = E(A2, "a"), E(A2, "b")
    two = q_number(2)
    assert (ea * ea * eb - (ea * eb * ea).scale(two) + eb * ea * ea).is_zero()
    fa, fb = F(A2, "a"), F(A2, "b")
    assert (fb * fb * fa - (fb * fa * fb).scale(two) + fa * fb * fb).is_zero()


def test_root_vector_definitions(A2):
    p = lambda s: parse_element(s, A2)
    assert E(A2, "ab") == p("E[a]*E[b] - q^-1*E[b]*E[a]")
    assert E(A2, "ba") == p("-q^-1*(E[a]*E[b] - q*E[b]*E[a])")
    assert F(A2, "ab") == p("F[b]*F[a] - q*F[a]*F[b]")
    assert F(A2, "ba") == p("F[a]*F[b] - q*F[b]*F[a]")


def test_engine_matches_independent_derivation(A2):
    for x, y in product(GENS_A2, repeat=2):
        assert derive_relation(A2, x, y) == _gen(A2, x) * _gen(A2, y), (x, y)


def test_associativity_on_random_triples(A2, rng):
    for _ in range(15):
        x, y, z = (random_element(A2, rng, 2, 3) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_sigma_is_an_involutive_anti_automorphism(A2, rng):
    for _ in range(15):
        x, y = random_element(A2, rng), random_element(A2, rng)
        assert sigma(sigma(x)) == x
        assert sigma(x * y) == sigma(y) * sigma(x)


def test_omega_and_swap_are_automorphisms(A2, rng):
    for _ in range(10):
        x, y = random_element(A2, rng), random_element(A2, rng)
        assert omega(x * y) == omega(x) * omega(y)
        assert swap(x * y) == swap(x) * swap(y)
        assert swap(swap(x)) == x


def test_parts_assigns_torus_to_geq0(A2):
    x = parse_element("E[a]*F[b] + K[a] + F[b] + 3", A2)
    geq, leq, mixed = parts(x)
    assert geq == parse_element("K[a] + 3", A2)
    assert leq == F(A2, "b")
    assert mixed == E(A2, "a") * F(A2, "b")


def test_normalize_words(A2):
    assert normalize(A2, [("F", "a"), ("E", "a")]) == F(A2, "a") * E(A2, "a")
    with pytest.raises(ValueError):
        normalize(A2, [("X", "a")])


def test_mixed_root_systems_rejected(A1, A2):
    with pytest.raises(ValueError):
        E(A1, "a") + E(A2, "a")
    with pytest.raises(ValueError):
        E(A1, "b")


def test_scalars_and_zero(A2):
    assert UElement.one(A2) * E(A2, "a") == E(A2, "a")
    assert (E(A2, "a") - E(A2, "a")).is_zero()
    assert E(A2, "a") ** 0 == UElement.one(A2)
