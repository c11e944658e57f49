import random

import pytest

from gnice.core import monomial as mono
from gnice.core.monomial import Comparison, MonomialOrder
from gnice.core.parser import parse_ring
from gnice.exceptions import InputError, RingMismatchError


def test_ring_rejects_bad_variables():
    with pytest.raises(InputError):
        parse_ring("x,x")
    with pytest.raises(InputError):
        parse_ring("x,2y")
    with pytest.raises(InputError):
        parse_ring("x", "GF(4)")


def test_ring_fresh_variable_avoids_clashes():
    ring = parse_ring("t,x")
    assert ring.fresh_variable("t") == "t_0"
    assert ring.extended("s").variables == ("s", "t", "x")
    assert str(parse_ring("x,y", "GF(32003)")) == "GF(32003)[x,y]"


def test_monomial_arithmetic():
    a, b = (2, 1, 0), (1, 3, 1)
    assert mono.mul(a, b) == (3, 4, 1)
    assert mono.lcm(a, b) == (2, 3, 1)
    assert mono.gcd(a, b) == (1, 1, 0)
    assert mono.divides((1, 1, 0), a)
    assert not mono.divides(a, b)
    assert mono.colon(a, b) == (1, 0, 0)
    assert mono.coprime((2, 0, 0), (0, 1, 1))
    assert mono.minimalize([(2, 0), (1, 1), (3, 0), (1, 1)]) == [(1, 1), (2, 0)]


def test_lcm_monomial_checks_arity():
    with pytest.raises(RingMismatchError):
        mono.lcm_monomial((1, 0), (1, 0, 0))


@pytest.mark.parametrize(
    "order,a,b,expected",
    [
        (MonomialOrder.lex(2), (1, 0), (0, 2), Comparison.GT),
        (MonomialOrder.lex(2, [1, 0]), (1, 0), (0, 2), Comparison.LT),
        (MonomialOrder.degrevlex(3), (1, 0, 1), (0, 2, 0), Comparison.LT),
        (MonomialOrder.degrevlex(3), (2, 0, 0), (1, 1, 0), Comparison.GT),
        (MonomialOrder.degrevlex(3), (0, 0, 3), (1, 0, 0), Comparison.GT),
        (MonomialOrder.block(3, 1), (1, 0, 0), (0, 5, 0), Comparison.GT),
        (MonomialOrder.block(3, 1, tail=MonomialOrder.lex(2)), (0, 1, 0), (0, 0, 3), Comparison.GT),
        (MonomialOrder.lex(2), (1, 1), (1, 1), Comparison.EQ),
    ],
)
def test_compare(order, a, b, expected):
    assert order.compare(a, b) == expected


def test_compare_rejects_wrong_arity():
    with pytest.raises(RingMismatchError):
        MonomialOrder.lex(2).compare((1, 0, 0), (0, 1, 0))


def test_orders_are_multiplicative_and_total():
    monomials = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    for order in (MonomialOrder.lex(3), MonomialOrder.degrevlex(3, [2, 0, 1]), MonomialOrder.block(3, 2)):
        keys = {order.key(m) for m in monomials}
        assert len(keys) == len(monomials)
        for a in monomials[:9]:
            for b in monomials[:9]:
                if order.compare(a, b) is Comparison.GT:
                    assert order.compare(mono.mul(a, (1, 2, 0)), mono.mul(b, (1, 2, 0))) is Comparison.GT


def random_exponents(rng: random.Random, arity: int, max_degree: int) -> tuple[int, ...]:
    exps = [0] * arity
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(arity)] += 1
    return tuple(exps)


@pytest.mark.parametrize(
    "order",
    [
        MonomialOrder.lex(5),
        MonomialOrder.lex(3, [1, 2, 0]),
        MonomialOrder.degrevlex(5),
        MonomialOrder.degrevlex(5, [3, 1, 4, 0, 2]),
        MonomialOrder.block(5, 2),
    ],
)
def test_random_monomials_respect_the_order_axioms(order):
    rng = random.Random(order.arity)
    arity = order.arity
    one = mono.one(arity)
    monomials = {random_exponents(rng, arity, 12) for _ in range(10_000)}
    assert len({order.key(m) for m in monomials}) == len(monomials)
    assert all(order.compare(m, one) is Comparison.GT for m in monomials if m != one)

    pool = sorted(monomials)
    for _ in range(2_000):
        a, b = rng.choice(pool), rng.choice(pool)
        c = random_exponents(rng, arity, 6)
        first = order.compare(a, b)
        assert order.compare(b, a) is Comparison(-first)
        assert order.compare(mono.mul(a, c), mono.mul(b, c)) is first


def test_display_key_sorts_by_degree_then_descending():
    order = MonomialOrder.degrevlex(3)
    monomials = [(0, 3, 0), (1, 1, 0), (0, 1, 2), (2, 0, 0)]
    assert sorted(monomials, key=order.display_key) == [(2, 0, 0), (1, 1, 0), (0, 3, 0), (0, 1, 2)]


def test_describe_and_identity():
    names = ("x", "y", "z")
    assert MonomialOrder.lex(3, [2, 1, 0]).describe(names) == "lex(z>y>x)"
    assert MonomialOrder.degrevlex(3).describe(names) == "degrevlex(x>y>z)"
    assert MonomialOrder.lex(3, [0, 1, 2]) == MonomialOrder.lex(3)
    assert MonomialOrder.block(3, 1, tail=MonomialOrder.lex(2)).describe(names) == "block(1,lex;x>y>z)"


def test_invalid_orders():
    with pytest.raises(ValueError):
        MonomialOrder.lex(2, [0, 0])
    with pytest.raises(ValueError):
        MonomialOrder.block(2, 3)
