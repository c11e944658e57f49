import random

import pytest
from conftest import PRIME, ideal, poly, random_monomial, random_polynomial

from gnice.core.closures import hat_closure, sharp_closure
from gnice.core.groebner import groebner_basis, initial_ideal
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.ideal_algebra import ideal_intersection, is_regular_element
from gnice.core.lattice import (
    binomial_family_intersection,
    distributivity_check,
    dual_distributivity_check,
    gnice_sum_split,
    monomial_family_intersection,
    regular_sequence_transfer,
    sharp_sum_check,
    snice_distributivity_check,
    snice_family_sum,
)
from gnice.core.limits import EngineLimits
from gnice.core.monomial import MonomialOrder
from gnice.core.niceness import is_gnice
from gnice.core.parser import parse_ring
from gnice.exceptions import InputError, NotGniceError, NotRegularSequenceError, PreconditionError

DEGREVLEX = MonomialOrder.degrevlex(3)
RUNNING_J = "x^2+y^2+z^2"
E1 = ("x*y", "y^3+y*z^2")
E2 = ("x*y", "y^3+y*z^2+x^2+y^2+z^2")


def test_regular_sequence_transfers(qq_xyz):
    report = regular_sequence_transfer(ideal(qq_xyz, RUNNING_J), [poly(qq_xyz, "y")], DEGREVLEX)
    assert report.transfers
    assert report.gnice_chain
    assert report.initial_monomials == [(0, 1, 0)]
    assert report.ini_total == MonomialIdeal.of(qq_xyz, [(2, 0, 0), (0, 1, 0)])
    assert report.first_zero_divisor is None


def test_regular_sequence_that_does_not_transfer(qq_xy):
    report = regular_sequence_transfer(ideal(qq_xy, "x^2+y^2"), [poly(qq_xy, "x")], MonomialOrder.lex(2))
    assert not report.transfers
    assert not report.gnice_chain
    assert report.first_zero_divisor == 0


def test_regular_sequence_precondition(qq_xyz):
    with pytest.raises(NotRegularSequenceError) as info:
        regular_sequence_transfer(ideal(qq_xyz, "x*y"), [poly(qq_xyz, "x")], DEGREVLEX)
    assert info.value.index == 0


def regular_element(rng: random.Random, ideal: Ideal, order: MonomialOrder):
    for _ in range(50):
        f = random_polynomial(rng, ideal.ring, max_degree=2)
        if is_regular_element(f, ideal, order):
            return f
    pytest.fail("no regular element drawn")


@pytest.mark.parametrize("seed", range(50))
def test_random_regular_sequences(seed):
    rng = random.Random(seed)
    ring = parse_ring("x,y,z", f"GF({PRIME})")
    order = rng.choice([DEGREVLEX, MonomialOrder.lex(3)])
    j = Ideal(ring, [random_polynomial(rng, ring, max_degree=3)])
    first = regular_element(rng, j, order)

    report = regular_sequence_transfer(j, [first], order)
    assert report.transfers == report.gnice_chain
    assert report.gnice_chain == is_gnice(j, Ideal(ring, [first]), order).verdict

    second = regular_element(rng, j + Ideal(ring, [first]), order)
    report = regular_sequence_transfer(j, [first, second], order)
    assert report.transfers == report.gnice_chain
    assert report.initial_monomials == [first.leading_monomial(order), second.leading_monomial(order)]


def test_distributivity_of_s_nice_and_non_s_nice(qq_xyz):
    report = distributivity_check(ideal(qq_xyz, RUNNING_J), ideal(qq_xyz, *E1), ideal(qq_xyz, *E2), DEGREVLEX)
    assert report.lattice_equality
    assert not report.pair_gnice
    assert not report.condition_a
    assert not report.condition_b
    assert report.combined == MonomialIdeal.of(qq_xyz, [(1, 1, 0), (0, 4, 0)])
    assert report.witness is None


def test_distributivity_requires_gnice_pairs(qq_xyz):
    with pytest.raises(NotGniceError):
        distributivity_check(ideal(qq_xyz, RUNNING_J), ideal(qq_xyz, "x*y"), ideal(qq_xyz, *E1), DEGREVLEX)


def test_dual_distributivity(qq_xyz):
    report = dual_distributivity_check(ideal(qq_xyz, "x"), ideal(qq_xyz, "y"), ideal(qq_xyz, "z"), DEGREVLEX)
    assert report.lattice_equality
    assert report.pair_gnice
    assert report.condition_b
    assert report.witness is None


def test_monomial_family_intersection(qq_xyz):
    es = [MonomialIdeal.of(qq_xyz, [(1, 1, 0), (0, 3, 0), (0, 1, 2)]), MonomialIdeal.of(qq_xyz, [(0, 2, 0)])]
    report = monomial_family_intersection(ideal(qq_xyz, RUNNING_J), es, DEGREVLEX)
    assert report.intersection == MonomialIdeal.of(qq_xyz, [(1, 2, 0), (0, 3, 0), (0, 2, 2)])
    assert report.gnice
    assert report.sum_equality
    assert report.basis_criterion
    assert report.sum_gnice


def test_monomial_family_rejects_bad_input(qq_xyz):
    j = ideal(qq_xyz, RUNNING_J)
    with pytest.raises(InputError):
        monomial_family_intersection(j, [], DEGREVLEX)
    with pytest.raises(NotGniceError):
        monomial_family_intersection(j, [MonomialIdeal.of(qq_xyz, [(1, 1, 0)])], DEGREVLEX)


def test_binomial_family_intersection(qq_xyz):
    es = [MonomialIdeal.of(qq_xyz, [(1, 1, 0)]), MonomialIdeal.of(qq_xyz, [(1, 0, 1)])]
    report = binomial_family_intersection(ideal(qq_xyz, "x^2 - y*z"), es, DEGREVLEX)
    assert report.hats == [
        MonomialIdeal.of(qq_xyz, [(1, 1, 0), (0, 2, 1)]),
        MonomialIdeal.of(qq_xyz, [(1, 0, 1), (0, 1, 2)]),
    ]
    assert report.intersection == MonomialIdeal.of(qq_xyz, [(1, 1, 1), (0, 2, 2)])
    assert report.gnice
    assert report.sum_equality
    assert report.sum_gnice

    with pytest.raises(PreconditionError, match="binomial"):
        binomial_family_intersection(ideal(qq_xyz, RUNNING_J), es, DEGREVLEX)


@pytest.mark.parametrize(
    "gens,subset",
    [
        ([("x",), ("y",), ("z",)], [0]),
        ([(RUNNING_J,), E1, ("z",)], [1]),
        ([(RUNNING_J,), E1, ("z",)], []),
    ],
)
def test_sum_split(qq_xyz, gens, subset):
    report = gnice_sum_split([ideal(qq_xyz, *g) for g in gens], subset, DEGREVLEX)
    assert report.verdict
    assert report.witness is None


def test_sum_split_errors(qq_xyz):
    with pytest.raises(NotGniceError):
        gnice_sum_split([ideal(qq_xyz, "x^2+y^2"), ideal(qq_xyz, "x*y")], [0], DEGREVLEX)
    with pytest.raises(InputError):
        gnice_sum_split([ideal(qq_xyz, "x"), ideal(qq_xyz, "y")], [2], DEGREVLEX)
    with pytest.raises(InputError):
        gnice_sum_split([], [], DEGREVLEX)


def test_snice_distributivity(qq_xyz):
    j = ideal(qq_xyz, RUNNING_J)
    report = snice_distributivity_check(j, ideal(qq_xyz, *E1), ideal(qq_xyz, "x*y", "y^3", "y*z^2"))
    assert report.lattice_equality
    assert report.condition_b

    with pytest.raises(PreconditionError, match="not S-nice"):
        snice_distributivity_check(j, ideal(qq_xyz, *E1), ideal(qq_xyz, *E2), groebner_basis(j, DEGREVLEX))


@pytest.mark.parametrize("seed", range(10))
def test_binomial_hats_distribute(seed):
    rng = random.Random(seed)
    ring = parse_ring("x,y,z", f"GF({PRIME})")
    j = ideal(ring, rng.choice(["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]))
    hats = [
        hat_closure(j, MonomialIdeal.of(ring, [random_monomial(rng, ring, max_degree=3)]), DEGREVLEX)[0]
        for _ in range(2)
    ]
    report = distributivity_check(j, hats[0].to_ideal(), hats[1].to_ideal(), DEGREVLEX)
    assert report.condition_a
    assert report.condition_b
    assert monomial_family_intersection(j, hats, DEGREVLEX).intersection == hats[0].intersection(hats[1])
    dual_distributivity_check(j, hats[0].to_ideal(), hats[1].to_ideal(), DEGREVLEX)


@pytest.mark.slow
def test_distributivity_fails_without_niceness_of_the_sums():
    ring = parse_ring("x,y,z,t", f"GF({PRIME})")
    order = MonomialOrder.degrevlex(4)
    limits = EngineLimits.from_settings(slow=True)
    j = ideal(ring, "x^4+y^3+z^2", "x*y^3-t^2")
    e = ideal(
        ring,
        "-y^2*z*t^2+x*z^2+t^2",
        "x^2*y*z^2-z*t^4+x*y*t^2",
        "x^2*z*t^4+y^4*z^2-x^3*y*t^2+y*z^4",
        "y*z*t^6-x*y^2*t^4-x^3*z^3-x^2*z*t^2",
        "-z*t^8-y^5*z^3+x*y*t^6-y^2*z^5-y^3*z^2+x^3*t^2-z^4",
    )
    e2 = ideal(
        ring,
        "x*z^5-y*z*t^2",
        "y^4*z*t^2-z^5*t^2",
        "y^3*z^5+z^7+x^3*y*z*t^2",
        "y^2*z^5*t^2+y^3*z^3*t^2+x^3*z*t^4",
        "-z^9*t^2-y*z^7*t^2-x^3*y^2*z*t^4",
    )
    marker = (0, 2, 6, 2)
    meet = ideal_intersection(e, e2, order, limits)
    assert marker in initial_ideal(ideal_intersection(j + e, j + e2, order, limits), order, limits)
    assert marker not in initial_ideal(j + meet, order, limits)
    assert is_gnice(j, meet, order, limits=limits).verdict


def test_snice_family_sum(qq_xyz):
    gb_j = groebner_basis(ideal(qq_xyz, RUNNING_J), DEGREVLEX)
    report = snice_family_sum(gb_j, [ideal(qq_xyz, *E1), ideal(qq_xyz, "z")])
    assert report.snice
    assert report.witness is None
    expected = [poly(qq_xyz, "z"), poly(qq_xyz, "x*y"), poly(qq_xyz, "y^3")]
    assert list(groebner_basis(report.total, DEGREVLEX)) == expected


def test_snice_family_sum_preconditions(qq_xyz):
    gb_j = groebner_basis(ideal(qq_xyz, RUNNING_J), DEGREVLEX)
    with pytest.raises(InputError):
        snice_family_sum(gb_j, [])
    with pytest.raises(PreconditionError, match="E_0 is not S-nice"):
        snice_family_sum(gb_j, [ideal(qq_xyz, *E2), ideal(qq_xyz, "z")])


def test_sharp_sum_check(qq_xyz):
    gb_j = groebner_basis(ideal(qq_xyz, "x^2 - y*z"), DEGREVLEX)
    e = MonomialIdeal.of(qq_xyz, [(1, 1, 0)])
    f, _ = sharp_closure(gb_j, e)
    assert f == MonomialIdeal.of(qq_xyz, [(1, 1, 0), (0, 2, 1)])
    report = sharp_sum_check(gb_j, e, f)
    assert report.sharp == f
    assert report.sum_preserved


def test_sharp_sum_check_preconditions(qq_xyz):
    gb_j = groebner_basis(ideal(qq_xyz, RUNNING_J), DEGREVLEX)
    e = MonomialIdeal.of(qq_xyz, [(1, 1, 0)])
    with pytest.raises(PreconditionError, match="not contained in F"):
        sharp_sum_check(gb_j, e, MonomialIdeal.of(qq_xyz, [(0, 2, 1)]))
    sharp, _ = sharp_closure(gb_j, e)
    with pytest.raises(PreconditionError, match="J \\+ F differs"):
        sharp_sum_check(gb_j, e, sharp)
