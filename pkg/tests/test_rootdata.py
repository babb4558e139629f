from itertools import product

import pytest

from qcoideal.rootdata import (
    WeylWord,
    dominance_leq,
    format_weight,
    get_system,
    inversion_set,
    is_convex,
    parse_weight,
    phi_plus_of,
    weak_leq,
)

A2 = get_system("A2")


def reduced_words(rs):
    out = []
    for n in range(len(rs.positive_roots) + 1):
        for letters in product(range(rs.rank), repeat=n):
            if rs.is_reduced(letters):
                out.append(WeylWord(letters, rs))
    return out


def test_a2_basics():
    assert A2.positive_roots == ((1, 0), (1, 1), (0, 1))
    assert len(A2.weyl_group) == 6
    assert A2.form((1, 0), (0, 1)) == -1
    assert A2.form((1, 1), (1, 1)) == 2


def test_phi_plus_order_for_longest_word():
    order = phi_plus_of(WeylWord.parse("aba"))
    assert order.roots == ((1, 0), (1, 1), (0, 1))
    order = phi_plus_of(WeylWord.parse("bab"))
    assert order.roots == ((0, 1), (1, 1), (1, 0))


def test_non_reduced_word_rejected():
    with pytest.raises(ValueError):
        phi_plus_of(WeylWord.parse("aa"))


def test_every_reduced_word_is_convex_and_matches_inversions():
    for w in reduced_words(A2):
        order = phi_plus_of(w)
        assert is_convex(order)
        assert set(order.roots) == inversion_set(w)


def test_weak_order_is_inversion_containment():
    words = reduced_words(A2)
    for v, w in product(words, repeat=2):
        assert weak_leq(v, w) == (inversion_set(v) <= inversion_set(w))


def test_weights_round_trip():
    for w in [(1, 0), (0, 1), (1, 1), (1, 2), (-2, -2), (0, 0), (3, -1)]:
        assert parse_weight(format_weight(w), 2) == w
    assert parse_weight("2b+a", 2) == (1, 2)


def test_dominance():
    assert dominance_leq((1, 0), (1, 1)) == "less"
    assert dominance_leq((1, 0), (0, 1)) not in ("less", "equal")
