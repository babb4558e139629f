import pytest

from qcoideal import E, F, K, GeneratorSet, Lattice, homogeneous_rcs, parse_element
from qcoideal.leading import (
    SMALLER,
    ReductionError,
    check_generator_form,
    e_degrees,
    eta_split,
    f_m_set,
    leading_term,
    m_compare,
    m_set,
    reduce_generator,
    reduce_generator_f,
    reduce_system,
    weight_decompose,
)
from qcoideal.scalar import ONE


def test_eta_split_partitions(A2):
    x = parse_element("E[a]*K[a]^-1*F[a] + F[b] + K[a]", A2)
    parts = eta_split(x)
    assert set(parts) == {(-2, 0), (0, -1), (1, 0)}
    total = sum(parts.values(), parse_element("0", A2))
    assert total == x


def test_leading_terms(A2):
    x = parse_element("E[ab]*K[b] + E[a]*F[a] + E[b]", A2)
    assert e_degrees(x) == {(1, 1)}
    assert leading_term(x, (1, 1)) == parse_element("E[ab]*K[b]", A2)


def test_weight_decompose(A2):
    x = parse_element("E[a] + E[b] + F[a]", A2)
    comps = weight_decompose(x, [(1, 2)])
    assert sum((c for _, _, c in comps), parse_element("0", A2)) == x


def test_a1_trace(A1):
    x = E(A1, "a") * K(A1, (1,), -1) * F(A1, "a")
    C = GeneratorSet([E(A1, "a") * K(A1, (1,), -1), K(A1, (2,)), K(A1, (2,), -1), F(A1, "a")])
    red = reduce_generator(x, C, D=3)
    assert red.outputs == [E(A1, "a") * K(A1, (1,), -1), parse_element("1", A1), F(A1, "a")]
    assert red.certified
    assert m_compare(red.m_output, red.m_input, A1) == SMALLER
    assert "step 1:" in red.trace()


def test_mixed_a2_input(A2):
    C = homogeneous_rcs("aba", Lattice.full(2), "aba")
    x = parse_element("E[ab]*K[a+b]^-1*F[a]", A2)
    red = reduce_generator(x, C, D=3)
    assert red.certified
    assert all(not m_set(y) for y in red.outputs)


def test_f_side_reduction(A2):
    x = parse_element("E[a]*K[a]^-1*F[ab]", A2)
    assert f_m_set(x)
    red = reduce_generator_f(x)
    assert red.certified


def test_reduction_errors(A2):
    with pytest.raises(ReductionError):
        reduce_generator(E(A2, "a"))
    with pytest.raises(ReductionError):
        reduce_generator(parse_element("E[a]*F[a] + E[b]*K[b]^-1*F[b]*K[b]", A2))
    C = GeneratorSet([E(A2, "a")])
    with pytest.raises(ReductionError):
        reduce_generator(E(A2, "a") * F(A2, "a"), C, D=2)


def test_reduce_system_keeps_the_span(A1):
    Z = GeneratorSet([E(A1, "a") * K(A1, (1,), -1) * F(A1, "a"), K(A1, (2,)), K(A1, (2,), -1),
                      E(A1, "a") * K(A1, (1,), -1), F(A1, "a")])
    out, log = reduce_system(Z, D=2)
    assert all(not m_set(g) for g in out.gens)
    assert log


def test_generator_form_accepts_and_rejects(A1, A2):
    form = check_generator_form(parse_element("E[a]*K[a]^-1 + F[a] + K[a]^-1", A1))
    assert form.accepted and form.lambdaK == ONE
    bad = check_generator_form(parse_element("E[a]*K[b]^-1 + 2*F[b] + K[a]^-1", A2))
    assert not bad.accepted and bad.reason.startswith("weight-pair")
    bad = check_generator_form(parse_element("E[a]*K[a]^-1 + F[a]", A2), lattice=[(1, 0)])
    assert not bad.accepted and bad.reason.startswith("torus-part")
    assert not check_generator_form(parse_element("E[a]*E[b]*K[a+b]^-1", A2)).accepted
    assert check_generator_form(E(A2, "ab") * K(A2, (1, 1), -1)).accepted
