"""Star operator checks: frozen examples plus the defining-identity law.

The expected values here were derived before the star was written, either
from the defining identity phi ^ star(psi) = <phi,psi> vol expanded by
hand, or from the real-coordinate oracle.
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from helpers import homogeneous_forms, random_form
from pqforms import (
    DEFAULT_CONVENTION,
    Form,
    HermitianMetric,
    LITERAL_CONVENTION,
    StarConvention,
    WirtingerPolynomial,
    defining_identity_check,
    gaussian,
    hodge_star,
    pointwise_inner,
    raise_indices,
    volume_form,
)


def lemma31_coeff(n=4):
    return WirtingerPolynomial.z(n, 1) * WirtingerPolynomial.zb(n, 4) + WirtingerPolynomial.constant(n, 3)


def test_raise_indices_identity_is_conjugation():
    n = 4
    f = lemma31_coeff(n)
    psi = Form.term(n, (1, 2), (3, 4), f.scale(4))
    table = raise_indices(psi, HermitianMetric.identity(n))
    assert table == {((1, 2), (3, 4)): f.conjugate().scale(4)}


def test_raise_indices_diagonal_metric():
    metric = HermitianMetric.diagonal([2, 1])
    psi = Form.term(2, (1,), (2,), 1)
    table = raise_indices(psi, metric)
    assert table == {((1,), (2,)): WirtingerPolynomial.constant(2, Fraction(1, 2))}


def test_raise_indices_zero_form():
    assert raise_indices(Form.zero(2), HermitianMetric.identity(2)) == {}


def test_raise_indices_rejects_mixed_bidegree():
    mixed = Form.term(2, (1,), (), 1) + Form.term(2, (1,), (1,), 1)
    with pytest.raises(ValueError):
        raise_indices(mixed, HermitianMetric.identity(2))


def test_pointwise_inner_unit_monomials():
    n = 1
    metric = HermitianMetric.identity(n)
    dz1 = Form.term(n, (1,), (), 1)
    assert pointwise_inner(dz1, dz1, metric) == WirtingerPolynomial.one(n)
    pair = Form.term(n, (1,), (1,), 1)
    assert pointwise_inner(pair, pair, metric) == WirtingerPolynomial.one(n)


def test_pointwise_inner_of_coefficient_form():
    n = 4
    f = lemma31_coeff(n)
    psi = Form.term(n, (1, 2), (3, 4), f)
    value = pointwise_inner(psi, psi, HermitianMetric.identity(n))
    assert value == f * f.conjugate()


def test_pointwise_inner_bidegree_mismatch():
    n = 2
    with pytest.raises(ValueError):
        pointwise_inner(Form.term(n, (1,), (), 1), Form.term(n, (), (1,), 1), HermitianMetric.identity(n))


def test_star_of_dz1_at_n1():
    # derived from dz1 ^ star(dz1) = (dz1,dz1) vol = i dz1^dzb1
    metric = HermitianMetric.identity(1)
    assert hodge_star(Form.term(1, (1,), (), 1), metric) == Form.term(1, (), (1,), gaussian(0, 1))


def test_star_of_one_is_volume():
    metric = HermitianMetric.identity(1)
    assert hodge_star(Form.from_scalar(1, 1), metric) == volume_form(metric)


def test_star_of_holomorphic_block_form():
    n = 4
    metric = HermitianMetric.identity(n)
    f = lemma31_coeff(n)
    psi = Form.term(n, (1, 2), (3, 4), f)
    expected = Form.term(n, (3, 4), (1, 2), f.conjugate())
    assert hodge_star(psi, metric) == expected


def test_star_literal_variant_returns_input_shape():
    n = 4
    metric = HermitianMetric.identity(n)
    f = lemma31_coeff(n)
    psi = Form.term(n, (1, 2), (3, 4), f)
    assert hodge_star(psi, metric, LITERAL_CONVENTION) == psi


def test_defining_identity_simplest_case():
    metric = HermitianMetric.identity(1)
    dz1 = Form.term(1, (1,), (), 1)
    report = defining_identity_check(dz1, dz1, metric)
    assert report.holds
    assert report.residual.is_zero()


def test_defining_identity_fails_for_printed_index_mode():
    metric = HermitianMetric.identity(1)
    dz1 = Form.term(1, (1,), (), 1)
    printed = StarConvention(conjugation_mode="single", output_index_mode="printed_eq_2_9")
    report = defining_identity_check(dz1, dz1, metric, printed)
    assert not report.holds
    # phi ^ star(psi) = dz1 ^ (i dz1) = 0, so the residual is minus the inner-product volume
    assert report.residual == -volume_form(metric)


def test_defining_identity_zero_form():
    metric = HermitianMetric.identity(2)
    report = defining_identity_check(Form.zero(2), Form.term(2, (1,), (), 1), metric)
    assert report.holds


@settings(max_examples=60, deadline=None)
@given(homogeneous_forms(n=2, max_degree=1), homogeneous_forms(n=2, max_degree=1))
def test_defining_identity_random_pairs(a, b):
    if a.is_zero() or b.is_zero():
        return
    if a.homogeneous_bidegree() != b.homogeneous_bidegree():
        return
    for metric in (HermitianMetric.identity(2), HermitianMetric.diagonal([2, 1])):
        assert defining_identity_check(a, b, metric).holds


def test_double_star_involution_exhaustive_monomials():
    for n in (1, 2, 3):
        metric = HermitianMetric.identity(n)
        for p in range(n + 1):
            for q in range(n + 1):
                sign = -1 if (p + q) % 2 else 1
                for A in combinations(range(1, n + 1), p):
                    for B in combinations(range(1, n + 1), q):
                        psi = Form.term(n, A, B, 1)
                        twice = hodge_star(hodge_star(psi, metric), metric)
                        assert twice == (psi if sign == 1 else -psi), (n, A, B)


def test_star_is_antilinear_in_constants():
    rng = random.Random(3)
    metric = HermitianMetric.identity(2)
    c = gaussian(Fraction(2, 3), Fraction(-1, 2))
    for _ in range(20):
        psi = random_form(rng, 2, bidegree=(1, 1))
        assert hodge_star(psi.scale(c), metric) == hodge_star(psi, metric).scale(c.conjugate())


def test_star_of_volume_is_one():
    for n in (1, 2, 3):
        metric = HermitianMetric.identity(n)
        assert hodge_star(volume_form(metric), metric) == Form.from_scalar(n, 1)


def test_star_records_convention_default():
    assert DEFAULT_CONVENTION.conjugation_mode == "single"
    assert DEFAULT_CONVENTION.output_index_mode == "same_type_complement"
    assert LITERAL_CONVENTION.conjugation_mode == "literal_eq_2_9"
    assert LITERAL_CONVENTION.output_index_mode == "printed_eq_2_9"


def test_star_mixed_bidegree_dispatch():
    n = 2
    metric = HermitianMetric.identity(n)
    a = Form.term(n, (1,), (), 1)
    b = Form.term(n, (1,), (2,), 1)
    assert hodge_star(a + b, metric) == hodge_star(a, metric) + hodge_star(b, metric)
