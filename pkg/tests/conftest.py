from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from strongclean.matrices import Matrix
from strongclean.poly import Polynomial
from strongclean.rings import (
    DualExtension,
    GaloisField4,
    GroupRingC2,
    Integers,
    IntegersMod,
    QuotientXPow,
    Ring,
    TruncatedPowerSeries,
    _Truncated,
)

SAMPLE_RINGS = [
    Integers(),
    IntegersMod(2),
    IntegersMod(6),
    IntegersMod(8),
    GaloisField4(),
    DualExtension(GaloisField4()),
    DualExtension(IntegersMod(4)),
    TruncatedPowerSeries(Integers(), 4),
    TruncatedPowerSeries(IntegersMod(4), 3),
    QuotientXPow(IntegersMod(2), 3),
    GroupRingC2(IntegersMod(2)),
    GroupRingC2(IntegersMod(3)),
    GroupRingC2(DualExtension(GaloisField4())),
]


def elements(R: Ring, bound: int = 20) -> st.SearchStrategy:
    """Hypothesis strategy for raw elements of R."""
    if isinstance(R, Integers):
        return st.integers(-bound, bound)
    if isinstance(R, IntegersMod):
        return st.integers(0, R.n - 1)
    if isinstance(R, GaloisField4):
        return st.integers(0, 3)
    inner = elements(R.base, bound)
    width = R.length if isinstance(R, _Truncated) else 2
    return st.tuples(*[inner] * width)


def random_element(R: Ring, rng: random.Random, bound: int = 5):
    if isinstance(R, Integers):
        return rng.randint(-bound, bound)
    if isinstance(R, IntegersMod):
        return rng.randrange(R.n)
    if isinstance(R, GaloisField4):
        return rng.randrange(4)
    width = R.length if isinstance(R, _Truncated) else 2
    return tuple(random_element(R.base, rng, bound) for _ in range(width))


def random_poly(R: Ring, rng: random.Random, degree: int, monic: bool = True, bound: int = 5) -> Polynomial:
    lower = [random_element(R, rng, bound) for _ in range(degree)]
    top = R.one if monic else random_element(R, rng, bound)
    return Polynomial(R, (*lower, top))


def random_matrix(R: Ring, rng: random.Random, n: int, bound: int = 5) -> Matrix:
    return Matrix(R, ([random_element(R, rng, bound) for _ in range(n)] for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
