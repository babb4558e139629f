import pytest

from qcoideal import E, K, Character, Lattice, WeylWord, homogeneous_rcs, is_right_coideal, parse_element
from qcoideal.rcs import character_shift_set, normalized_generators, perp_lattice, shift_element, validate_character
from qcoideal.scalar import ONE, Q, QRat


def test_lattice_membership():
    L = Lattice(((1, 2),), 2)
    assert L.contains((2, 4)) and not L.contains((1, 1))
    full = Lattice.full(2)
    assert full.contains((3, -7))
    M = Lattice(((2, 0), (0, 1)), 2)
    assert M.contains((4, 5)) and not M.contains((1, 0))
    with pytest.raises(ValueError):
        Lattice(((1, 1), (2, 2)), 2)


def test_perp_lattice():
    assert perp_lattice([(1, 0)]).basis == ((1, 2),)
    assert perp_lattice([(1, 1)]).basis == ((1, -1),)
    assert perp_lattice([(1, 0), (0, 1)]).basis == ()
    assert perp_lattice([]) == Lattice.full(2)


def test_normalized_generators(A2):
    out = normalized_generators(WeylWord.parse("ab"), "E", A2)
    assert [r for r, _ in out] == [(1, 0), (1, 1)]
    assert out[0][1] == E(A2, "a") * K(A2, (1, 0), -1)


@pytest.mark.parametrize("wplus,wminus", [("aba", "e"), ("ab", "b"), ("a", "a"), ("ba", "ab"), ("e", "aba")])
def test_homogeneous_rcs_are_coideals(wplus, wminus):
    g = homogeneous_rcs(wplus, Lattice.full(2), wminus)
    assert is_right_coideal(g, 2).verified


def test_character_on_a1(A1):
    phi = Character(WeylWord.parse("a", "A1"), "E", {(1,): ONE})
    assert validate_character(phi, 3)
    x = E(A1, "a") * K(A1, (1,), -1)
    assert phi.evaluate(x) == ONE
    assert phi.evaluate(x * x) == ONE
    assert shift_element(x, phi) == x + K(A1, (1,), -1)


def test_character_shift_gives_coideal(A2):
    Z = homogeneous_rcs("a", Lattice(((1, 2),), 2), "e")
    phi = Character(WeylWord.parse("a"), "E", {(1, 0): Q})
    shifted, rep = character_shift_set(Z, phi, D=2)
    assert rep.verified
    assert parse_element("E[a]*K[a]^-1 + q*K[a]^-1", A2) in shifted.gens


def test_character_rejects_foreign_roots():
    with pytest.raises(ValueError):
        Character(WeylWord.parse("a"), "E", {(0, 1): QRat(1)})
    with pytest.raises(ValueError):
        Character(WeylWord.parse("a"), "X", {})


def test_character_json_round_trip():
    phi = Character(WeylWord.parse("ab"), "F", {(1, 0): Q, (1, 1): QRat(0)})
    again = Character.from_json(phi.to_json())
    assert again.values == phi.values and again.word == phi.word
    assert phi.support() == {(1, 0)}
