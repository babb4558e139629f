import pytest

from conftest import random_element
from qcoideal import E, F, K, GeneratorSet, get_entry, instantiate, parse_element
from qcoideal.repr import (
    act,
    build_simple_module,
    composition_factors_onedim,
    kernel,
    mat_add,
    mat_mul,
    matrix_of,
    quotient_eigenvalues,
    restrict_find_onedim,
)
from qcoideal.scalar import ONE, Q, ZERO, QRat, qpow

KAPPA = Q * Q / ((ONE - Q * Q) * (Q - ONE / Q))


def vec(*xs):
    return [x if isinstance(x, QRat) else QRat(x) for x in xs]


@pytest.mark.parametrize("m", range(7))
def test_defining_relations_as_matrices(m):
    M = build_simple_module(m)
    e, f, k, ki = ([list(r) for r in t] for t in (M.E, M.F, M.K, M.Kinv))
    lhs = mat_add(mat_mul(e, f), mat_mul(f, e), -ONE)
    rhs = [[(a - b) / (Q - ONE / Q) for a, b in zip(ra, rb)] for ra, rb in zip(k, ki)]
    assert lhs == rhs
    assert mat_mul(k, ki) == [[ONE if i == j else ZERO for j in range(m + 1)] for i in range(m + 1)]
    assert mat_mul(mat_mul(k, e), ki) == [[qpow(2) * x for x in r] for r in e]


def test_small_modules(A1):
    M0 = build_simple_module(0)
    assert matrix_of(E(A1, "a"), M0) == [[ZERO]]
    assert matrix_of(K(A1, (1,)), M0) == [[ONE]]
    M1 = build_simple_module(1)
    assert act(F(A1, "a"), M1, vec(1, 0)) == vec(0, 1)
    assert act(E(A1, "a"), M1, vec(0, 1)) == vec(1, 0)
    assert act(K(A1, (1,)), M1, vec(1, 0)) == [Q, ZERO]
    M2 = build_simple_module(2)
    two = Q + ONE / Q
    assert act(E(A1, "a"), M2, vec(0, 1, 0)) == [two, ZERO, ZERO]
    with pytest.raises(ValueError):
        build_simple_module(-1)


def test_action_is_multiplicative(A1, rng):
    M = build_simple_module(3)
    for _ in range(10):
        x, y = random_element(A1, rng), random_element(A1, rng)
        assert matrix_of(x * y, M) == mat_mul(matrix_of(x, M), matrix_of(y, M))


def test_wrong_system(A2):
    with pytest.raises(ValueError):
        matrix_of(E(A2, "a"), build_simple_module(1))


def test_nilpotent_has_one_eigenvector(A1):
    rep = restrict_find_onedim(build_simple_module(1), [E(A1, "a")])
    assert [(o.vector, o.eigenvalues) for o in rep.eigenvectors] == [(vec(1, 0), [ZERO])]


def test_borel_restriction_quotient(A1):
    lam = Q
    B = [parse_element("E[a]*K[a]^-1 + l*K[a]^-1", A1, {"l": lam}),
         parse_element("F[a] + lm*K[a]^-1", A1, {"lm": KAPPA / lam})]
    M = build_simple_module(1)
    rep = restrict_find_onedim(M, B)
    (one,) = rep.eigenvectors
    assert one.vector == [ONE, lam * (ONE - qpow(-2))]
    assert one.eigenvalues == [lam * Q, KAPPA / lam / Q]
    assert rep.quotient == [lam / Q, KAPPA / lam * Q]
    assert quotient_eigenvalues(M, B, one.vector) == rep.quotient


@pytest.mark.parametrize("m", range(4))
def test_borel_has_one_dimensional_factors(m):
    B = instantiate(get_entry("sl2-borel-B"))
    assert composition_factors_onedim(build_simple_module(m), B)


def test_full_algebra_is_irreducible(A1):
    B = GeneratorSet([E(A1, "a"), F(A1, "a"), K(A1, (1,)), K(A1, (1,), -1)])
    assert not composition_factors_onedim(build_simple_module(1), B)
    assert restrict_find_onedim(build_simple_module(2), B).eigenvectors == []


def test_kernel():
    a = [vec(1, 2), vec(2, 4)]
    (v,) = kernel(a)
    assert mat_mul(a, [[x] for x in v]) == [[ZERO], [ZERO]]
