import random

import pytest
from conftest import PRIME, ideal, poly, random_monomial, random_polynomial

from gnice.core.closures import hat_closure, nf_ideal, sharp_closure, tilde_closure
from gnice.core.constants import GniceMode
from gnice.core.groebner import groebner_basis, ideal_contains, ideal_equal
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.ideal_algebra import ideal_intersection
from gnice.core.limits import EngineLimits
from gnice.core.monomial import MonomialOrder
from gnice.core.niceness import is_gnice, is_snice
from gnice.core.parser import parse_ring
from gnice.exceptions import InvariantViolation, ResourceLimitError

DEGREVLEX = MonomialOrder.degrevlex(3)
XY = (1, 1, 0)


@pytest.fixture
def running_j(qq_xyz):
    return ideal(qq_xyz, "x^2+y^2+z^2")


def test_hat_closure_trace(qq_xyz, running_j):
    hat, trace = hat_closure(running_j, MonomialIdeal.of(qq_xyz, [XY]), DEGREVLEX)
    assert hat == MonomialIdeal.of(qq_xyz, [XY, (0, 3, 0), (0, 1, 2)])
    assert [step.snapshot for step in trace.steps] == [
        MonomialIdeal.of(qq_xyz, [XY]),
        MonomialIdeal.of(qq_xyz, [XY, (0, 3, 0)]),
        hat,
        hat,
    ]
    assert trace.steps[1].added == (poly(qq_xyz, "y^3"),)
    assert trace.steps[2].added == (poly(qq_xyz, "y*z^2"),)
    assert trace.iterations == 2
    assert trace.fixed_point == hat
    assert trace.sum_preserved is False


def test_hat_closure_is_idempotent_and_nice(qq_xyz, running_j):
    hat, _ = hat_closure(running_j, MonomialIdeal.of(qq_xyz, [XY]), DEGREVLEX)
    again, trace = hat_closure(running_j, hat, DEGREVLEX)
    assert again == hat
    assert trace.iterations == 0
    assert is_gnice(running_j, hat.to_ideal(), DEGREVLEX).verdict


def test_tilde_closure_trace(qq_xyz, running_j):
    gb_j = groebner_basis(running_j, DEGREVLEX)
    tilde, trace = tilde_closure(gb_j, ideal(qq_xyz, "x*y"))
    assert list(tilde) == [poly(qq_xyz, "x*y"), poly(qq_xyz, "y^3 + y*z^2")]
    assert trace.steps[1].added == (poly(qq_xyz, "y^3 + y*z^2"),)
    assert trace.iterations == 1
    assert is_snice(tilde, gb_j)
    assert ideal_equal(running_j + ideal(qq_xyz, "x*y"), running_j + tilde)


def test_sharp_closure_trace(qq_xyz, running_j):
    gb_j = groebner_basis(running_j, DEGREVLEX)
    sharp, trace = sharp_closure(gb_j, MonomialIdeal.of(qq_xyz, [XY]))
    assert sharp == MonomialIdeal.of(qq_xyz, [XY, (0, 3, 0), (0, 1, 2)])
    assert trace.steps[1].added == (poly(qq_xyz, "y^3"), poly(qq_xyz, "y*z^2"))
    assert trace.iterations == 1
    assert is_snice(sharp.to_ideal(), gb_j)


def test_sharp_closure_can_enlarge_the_sum(qq_xyz, running_j):
    gb_j = groebner_basis(running_j, DEGREVLEX)
    e = ideal(qq_xyz, "x*y")
    sharp, trace = sharp_closure(gb_j, MonomialIdeal.of(qq_xyz, [XY]))
    assert trace.sum_preserved is False
    assert ideal_contains(running_j + sharp.to_ideal(), running_j + e)
    assert not ideal_contains(running_j + e, running_j + sharp.to_ideal())


def test_sharp_closure_accepts_the_hat_closure(qq_xyz, running_j):
    gb_j = groebner_basis(running_j, DEGREVLEX)
    e = MonomialIdeal.of(qq_xyz, [XY])
    hat, _ = hat_closure(running_j, e, DEGREVLEX)
    assert sharp_closure(gb_j, e, hat=hat)[0] == sharp_closure(gb_j, e)[0]
    with pytest.raises(InvariantViolation, match="not contained in the S-nice monomial closure"):
        sharp_closure(gb_j, e, hat=MonomialIdeal.of(qq_xyz, [(1, 0, 0)]))


def test_nf_ideal(qq_xyz, running_j):
    gb_j = groebner_basis(running_j, DEGREVLEX)
    result = nf_ideal(gb_j, ideal(qq_xyz, "x*y"))
    assert list(result) == [poly(qq_xyz, "x*y"), poly(qq_xyz, "y^3 + y*z^2")]
    assert is_gnice(running_j, result, DEGREVLEX).verdict


def test_nf_ideal_of_a_lex_pair(qq_xy):
    gb_j = groebner_basis(ideal(qq_xy, "x^2+y^2"), MonomialOrder.lex(2))
    result = nf_ideal(gb_j, ideal(qq_xy, "x^2"))
    assert list(result) == [poly(qq_xy, "y^2")]
    assert is_gnice(gb_j.ideal(), result, MonomialOrder.lex(2)).verdict


def test_binomial_closures_coincide(qq_xyz):
    j = ideal(qq_xyz, "x^2 - y*z")
    gb_j = groebner_basis(j, DEGREVLEX)
    expected = MonomialIdeal.of(qq_xyz, [XY, (0, 2, 1)])

    hat, trace = hat_closure(j, MonomialIdeal.of(qq_xyz, [XY]), DEGREVLEX)
    assert hat == expected
    assert trace.sum_preserved
    tilde, _ = tilde_closure(gb_j, ideal(qq_xyz, "x*y"))
    assert MonomialIdeal.from_ideal(tilde) == expected
    sharp, _ = sharp_closure(gb_j, MonomialIdeal.of(qq_xyz, [XY]))
    assert sharp == expected

    hat, _ = hat_closure(j, MonomialIdeal.of(qq_xyz, [(1, 0, 1)]), DEGREVLEX)
    assert hat == MonomialIdeal.of(qq_xyz, [(1, 0, 1), (0, 1, 2)])


def test_hat_closure_skips_generators_of_ini_j():
    ring = parse_ring("x,y,z")
    lex = MonomialOrder.lex(3)
    j = ideal(ring, "x^2 - y^2", "z^2")
    hat, trace = hat_closure(j, MonomialIdeal.of(ring, [XY]), lex)
    assert hat == MonomialIdeal.of(ring, [XY, (0, 3, 0)])
    assert trace.sum_preserved

    # also G-nice with J, but z^2 already lies in ini(J)
    padded = MonomialIdeal.of(ring, [XY, (0, 3, 0), (0, 0, 2)])
    assert is_gnice(j, padded.to_ideal(), lex).verdict
    assert hat <= padded
    assert hat != padded


def test_iteration_cap(qq_xyz, running_j):
    limits = EngineLimits(max_pairs=10_000, max_degree=60, max_iterations=1)
    with pytest.raises(ResourceLimitError, match="did not stabilize"):
        hat_closure(running_j, MonomialIdeal.of(qq_xyz, [XY]), DEGREVLEX, limits)


@pytest.mark.parametrize("seed", range(50))
def test_random_closure_chain(seed):
    rng = random.Random(seed)
    ring = parse_ring("x,y,z", f"GF({PRIME})")
    j = ideal(ring, rng.choice(["x^2 - y*z", "x*y - z^2", "y^2 - x*z", "x^3 - y^2*z"]))
    gb_j = groebner_basis(j, DEGREVLEX)
    e = MonomialIdeal.of(ring, [random_monomial(rng, ring, max_degree=3) for _ in range(rng.randint(1, 2))])

    hat, hat_trace = hat_closure(j, e, DEGREVLEX)
    tilde, _ = tilde_closure(gb_j, e.to_ideal())
    sharp, _ = sharp_closure(gb_j, e)

    assert e <= hat <= sharp
    assert hat_trace.sum_preserved
    assert ideal_contains(tilde, e.to_ideal())
    assert ideal_contains(sharp.to_ideal(), tilde)
    assert ideal_equal(j + e.to_ideal(), j + tilde)
    # binomial G_J keeps the S-nice closure monomial
    assert ideal_equal(tilde, sharp.to_ideal())

    assert tilde_closure(gb_j, tilde)[1].iterations == 0
    assert sharp_closure(gb_j, sharp)[0] == sharp
    assert is_gnice(j, tilde, DEGREVLEX, GniceMode.BOTH).verdict


@pytest.mark.parametrize("seed", range(8))
def test_random_nf_ideal_is_nice(seed):
    rng = random.Random(seed)
    ring = parse_ring("x,y,z", f"GF({PRIME})")
    j = ideal(ring, "x^2+y^2+z^2")
    gb_j = groebner_basis(j, DEGREVLEX)
    e = Ideal(ring, [poly(ring, "x*y"), random_polynomial(rng, ring, max_degree=2)])
    result = nf_ideal(gb_j, e)
    assert ideal_equal(j + e, j + result)
    assert is_gnice(j, result, DEGREVLEX).verdict


@pytest.mark.parametrize("seed", range(8))
def test_snice_ideals_are_closed_under_intersection(seed):
    rng = random.Random(seed)
    ring = parse_ring("x,y,z", f"GF({PRIME})")
    gb_j = groebner_basis(ideal(ring, "x^2+y^2+z^2"), DEGREVLEX)
    first, _ = tilde_closure(gb_j, Ideal(ring, [random_polynomial(rng, ring, max_degree=2)]))
    second, _ = tilde_closure(gb_j, Ideal(ring, [random_polynomial(rng, ring, max_degree=2)]))
    assert is_snice(ideal_intersection(first, second, DEGREVLEX), gb_j)


@pytest.mark.parametrize("seed", range(8))
def test_hat_closure_is_minimal(seed):
    rng = random.Random(seed)
    ring = parse_ring("x,y,z", f"GF({PRIME})")
    j = ideal(ring, "x^2 - y*z")
    e = MonomialIdeal.of(ring, [random_monomial(rng, ring, max_degree=3)])
    # a larger monomial ideal forming a G-nice pair with J
    bigger, _ = hat_closure(j, e + MonomialIdeal.of(ring, [random_monomial(rng, ring, max_degree=3)]), DEGREVLEX)
    hat, _ = hat_closure(j, e, DEGREVLEX)
    assert hat <= bigger


@pytest.mark.parametrize("seed", range(20))
def test_enlarging_within_the_sum_keeps_niceness(seed):
    rng = random.Random(seed)
    ring = parse_ring("x,y,z", f"GF({PRIME})")
    j = ideal(ring, "x^2+y^2+z^2")
    gb_j = groebner_basis(j, DEGREVLEX)
    f = nf_ideal(gb_j, Ideal(ring, [poly(ring, "x*y"), random_polynomial(rng, ring, max_degree=2)]))
    extra = random_polynomial(rng, ring, max_degree=1) * j.generators[0]
    extra = extra + random_polynomial(rng, ring, max_degree=1) * f.generators[0]
    e = f + Ideal(ring, [extra])

    assert ideal_contains(e, f)
    assert ideal_equal(j + e, j + f)
    assert is_gnice(j, f, DEGREVLEX).verdict
    assert is_gnice(j, e, DEGREVLEX).verdict
