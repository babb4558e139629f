import pytest

from qcoideal import E, F, K, GeneratorSet, SpanBasis, parse_element
from qcoideal.subalgebra import (
    contains,
    is_closed_under_multiplication,
    is_right_coideal,
    left_legs,
    span_basis,
    torus_subhopf_check,
)


def gens(alg, *texts):
    return GeneratorSet([parse_element(t, alg) for t in texts])


def test_e_alone_is_not_a_coideal(A1):
    rep = is_right_coideal(gens(A1, "E[a]"), 2)
    assert rep.status == "failed"
    (x, leg), = rep.witnesses
    assert leg == K(A1, (1,))


def test_borel_parts_are_coideals(A1, A2):
    assert is_right_coideal(gens(A1, "E[a]", "K[a]", "K[a]^-1"), 3).verified
    assert is_right_coideal(gens(A1, "E[a]*K[a]^-1"), 3).verified
    assert is_right_coideal(gens(A1, "F[a]"), 3).verified
    assert is_right_coideal(gens(A2, "E[a]*K[a]^-1", "E[b]*K[b]^-1"), 3).verified


def test_shifted_generator_in_a1(A1):
    g = gens(A1, "E[a]*K[a]^-1 + K[a]^-1", "F[a] + 2*K[a]^-1")
    rep = is_right_coideal(g, 3, exhaustive=True)
    assert rep.verified
    assert torus_subhopf_check(g, 3).ok is False


def test_f_ab_needs_its_left_leg(A2):
    rep = is_right_coideal(gens(A2, "F[ab]"), 2)
    assert not rep.verified
    assert is_right_coideal(gens(A2, "F[ab]", "F[b]"), 2).verified


def test_span_membership(A2):
    g = gens(A2, "E[a]", "E[b]")
    basis = span_basis(g, 2)
    assert contains(basis, E(A2, "ab"))[0]
    assert contains(basis, E(A2, "a") * K(A2, (1, 0))) == (False, None)
    sb = SpanBasis(g)
    assert sb.find_level(E(A2, "ab") * E(A2, "a"), 3) is not None
    assert sb.find_level(F(A2, "a"), 3) is None


def test_closure_and_torus(A2):
    g = gens(A2, "K[a]", "K[a]^-1", "E[b]")
    assert is_closed_under_multiplication(g, 2) == (True, None)
    assert torus_subhopf_check(g, 2).ok
    h = gens(A2, "K[a]", "E[b]")
    rep = torus_subhopf_check(h, 2)
    assert not rep.ok and "inverse" in rep.problem


def test_left_legs(A2):
    legs = left_legs(E(A2, "a"))
    assert set(map(str, legs)) == {str(E(A2, "a")), str(K(A2, (1, 0)))}


def test_empty_and_mixed_sets_rejected(A1, A2):
    with pytest.raises(ValueError):
        GeneratorSet([])
    with pytest.raises(ValueError):
        GeneratorSet([E(A1, "a"), E(A2, "a")])
    with pytest.raises(ValueError):
        is_right_coideal(gens(A1, "E[a]"), 0)
