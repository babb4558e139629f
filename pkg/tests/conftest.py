import random
from itertools import product

import pytest

from qcoideal import QRat, UElement, get_algebra
from qcoideal.scalar import qpow

ACCEPTANCE_LINES: list[str] = []


def random_scalar(rng: random.Random) -> QRat:
    num = sum((qpow(k) * rng.randint(-3, 3) for k in range(-2, 3)), QRat(0))
    if num.is_zero():
        num = QRat(rng.choice([1, -1, 2]))
    if rng.random() < 0.3:
        den = qpow(rng.randint(0, 2)) - QRat(rng.choice([1, -1]))
        if not den.is_zero():
            return num / den
    return num


def exponent_vectors(n: int, total: int):
    """All exponent vectors of length ``n`` with entry sum exactly ``total``."""
    return [v for v in product(range(total + 1), repeat=n) if sum(v) == total]


def random_monomial(alg, rng: random.Random, max_deg: int = 2):
    n, r = alg.n, alg.rs.rank
    de = rng.randint(0, max_deg)
    df = rng.randint(0, max_deg - de)
    e = rng.choice(exponent_vectors(n, de))
    f = rng.choice(exponent_vectors(n, df))
    nu = tuple(rng.randint(-2, 2) for _ in range(r))
    return (e, nu, f)


def random_element(alg, rng: random.Random, max_deg: int = 2, max_terms: int = 4) -> UElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(alg, rng, max_deg)] = random_scalar(rng)
    return UElement(alg, terms)


@pytest.fixture
def rng():
    return random.Random(20240531)


@pytest.fixture(scope="session")
def A1():
    return get_algebra("A1")


@pytest.fixture(scope="session")
def A2():
    return get_algebra("A2")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
