"""Shared fixtures: rings, a parse helper and seeded random ideals."""

import random

import pytest

from gnice.core.ideal import Ideal
from gnice.core.parser import parse_polynomial, parse_ring
from gnice.core.polynomial import Polynomial
from gnice.core.ring import Ring

PRIME = 32003


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def qq_xy() -> Ring:
    return parse_ring("x,y")


@pytest.fixture
def qq_xyz() -> Ring:
    return parse_ring("x,y,z")


@pytest.fixture
def gf_xyz() -> Ring:
    return parse_ring("x,y,z", f"GF({PRIME})")


def ideal(ring: Ring, *polys: str) -> Ideal:
    return Ideal(ring, [parse_polynomial(p, ring) for p in polys])


def poly(ring: Ring, text: str) -> Polynomial:
    return parse_polynomial(text, ring)


def random_polynomial(rng: random.Random, ring: Ring, max_degree: int = 4, max_terms: int = 3) -> Polynomial:
    """A nonzero polynomial with a few terms of total degree at most `max_degree`."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            degree = rng.randint(1, max_degree)
            exps = [0] * ring.arity
            for _ in range(degree):
                exps[rng.randrange(ring.arity)] += 1
            terms[tuple(exps)] = rng.randint(1, PRIME - 1) if ring.domain.name != "QQ" else rng.randint(-3, 3)
        f = Polynomial(ring, terms)
        if f:
            return f


def random_monomial(rng: random.Random, ring: Ring, max_degree: int = 4) -> tuple[int, ...]:
    exps = [0] * ring.arity
    for _ in range(rng.randint(1, max_degree)):
        exps[rng.randrange(ring.arity)] += 1
    return tuple(exps)


def random_ideal(rng: random.Random, ring: Ring, max_generators: int = 3, **kwargs: int) -> Ideal:
    return Ideal(ring, [random_polynomial(rng, ring, **kwargs) for _ in range(rng.randint(1, max_generators))])


def random_gf_ring(rng: random.Random, max_variables: int = 3) -> Ring:
    names = ["x", "y", "z"][: rng.randint(2, max_variables)]
    return parse_ring(",".join(names), f"GF({PRIME})")
