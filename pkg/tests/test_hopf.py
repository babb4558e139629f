from conftest import random_element
from qcoideal import E, F, K, UElement, coproduct, counit, parse_element
from qcoideal.hopf import (
    DualFunctional,
    TensorElement,
    check_coproduct_shape,
    epsilon_left,
    epsilon_right,
    eta_slice,
    eta_values,
    iterated_coproduct,
    slice_left,
    slice_right,
)
from qcoideal.scalar import ONE, Q


def test_simple_generator_coproducts(A2):
    for i, nu in (("a", (1, 0)), ("b", (0, 1))):
        e, f, k = E(A2, i), F(A2, i), K(A2, nu)
        one = UElement.one(A2)
        assert coproduct(e) == TensorElement.pure(e, one) + TensorElement.pure(k, e)
        assert coproduct(f) == TensorElement.pure(f, K(A2, nu, -1)) + TensorElement.pure(one, f)
        assert coproduct(k) == TensorElement.pure(k, k)


def test_coproduct_of_f_ba(A2):
    p = lambda s: parse_element(s, A2)
    want = (TensorElement.pure(F(A2, "ba"), K(A2, (1, 1), -1)) + TensorElement.pure(p("1"), F(A2, "ba"))
            + TensorElement.pure(p("(q^-1 - q)*F[a]"), p("F[b]*K[a]^-1")))
    assert coproduct(F(A2, "ba")) == want


def test_counit(A2):
    assert counit(E(A2, "a")) == 0
    assert counit(K(A2, (2, -1))) == ONE
    assert counit(parse_element("3*K[a] + E[a]*F[a] + q", A2)) == 3 + Q


def test_counit_laws_and_coassociativity(A2, rng):
    for _ in range(20):
        x = random_element(A2, rng)
        t = coproduct(x)
        assert epsilon_left(t) == x
        assert epsilon_right(t) == x
        assert iterated_coproduct(x, "left") == iterated_coproduct(x, "right")


def test_coproduct_is_multiplicative(A2, rng):
    for _ in range(20):
        x, y = random_element(A2, rng), random_element(A2, rng)
        assert coproduct(x * y) == coproduct(x) * coproduct(y)


def test_slices(A2):
    x = parse_element("E[a]*K[b] + F[a] + 2*K[a]", A2)
    # (id (x) phi) picks the left legs against one right monomial
    phi = DualFunctional(next(iter(K(A2, (-1, 0)).terms)))
    assert slice_right(x, phi) == F(A2, "a")
    phi = DualFunctional(next(iter(UElement.one(A2).terms)))
    assert slice_left(x, phi) == F(A2, "a")
    assert eta_values(x) == sorted([(0, 1), (-1, 0), (1, 0)])
    assert eta_slice(x, (0, 1)) == parse_element("E[a]*K[b]", A2)


def test_shape_on_a_sample(A2):
    x = parse_element("E[ab]*K[a]^-1*F[b]", A2)
    assert check_coproduct_shape(x, (1, 1), (-1, 0), (0, 1))
    y = E(A2, "a") * K(A2, (0, 1))
    assert check_coproduct_shape(y, (1, 0), (0, 1), (0, 0))
