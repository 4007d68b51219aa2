import random
from itertools import combinations

import pytest

from helpers import random_form
from pqforms import (
    Form,
    HermitianMetric,
    ORACLE_STAR_RATIOS,
    RealForm,
    WirtingerPolynomial,
    complexify,
    gaussian,
    oracle_compare,
    real_hodge_star,
    realify,
    volume_form,
)


def test_realify_dz1():
    result = realify(Form.term(1, (1,), (), 1))
    expected = RealForm.term(1, (1,), 1) + RealForm.term(1, (2,), gaussian(0, 1))
    assert result == expected


def test_realify_paired_product():
    # (dx + i dy) ^ (dx - i dy) = -2i dx ^ dy
    result = realify(Form.term(1, (1,), (1,), 1))
    assert result == RealForm.term(1, (1, 2), gaussian(0, -2))


def test_realify_zero():
    assert realify(Form.zero(3)).is_zero()


def test_realify_variables():
    n = 1
    form = Form.from_scalar(n, WirtingerPolynomial.z(n, 1))
    result = realify(form)
    coeff = result.terms[()]
    x = WirtingerPolynomial.z(n, 1)  # slot reused as x1
    y = WirtingerPolynomial.zb(n, 1)  # slot reused as y1
    assert coeff == x + y.scale(gaussian(0, 1))


def test_complexify_dx1():
    result = complexify(RealForm.term(1, (1,), 1))
    half = gaussian(1) / gaussian(2)
    expected = Form.term(1, (1,), (), half) + Form.term(1, (), (1,), half)
    assert result == expected


def test_complexify_inverts_realify_example():
    assert complexify(RealForm.term(1, (1, 2), gaussian(0, -2))) == Form.term(1, (1,), (1,), 1)


def test_round_trip_random_forms():
    rng = random.Random(23)
    for n in (1, 2, 3):
        for _ in range(15):
            form = random_form(rng, n)
            assert complexify(realify(form)) == form


def test_real_star_orientation_n1():
    assert real_hodge_star(RealForm.term(1, (1,), 1)) == RealForm.term(1, (2,), 1)
    assert real_hodge_star(RealForm.term(1, (2,), 1)) == RealForm.term(1, (1,), -1)


def test_real_star_n2_pair():
    # indices: dx1=1, dy1=2, dx2=3, dy2=4; sign of (1,3 | 2,4) is -1
    result = real_hodge_star(RealForm.term(2, (1, 3), 1))
    assert result == RealForm.term(2, (2, 4), -1)


def test_real_star_rejects_mixed_degree():
    mixed = RealForm.term(1, (1,), 1) + RealForm.term(1, (1, 2), 1)
    with pytest.raises(ValueError):
        real_hodge_star(mixed)


def test_real_double_star_law_exhaustive():
    # star(star(e_K)) = (-1)^(k(2n-k)) e_K over all monomials up to 2n = 8
    for n in (1, 2, 3, 4):
        two_n = 2 * n
        for k in range(two_n + 1):
            sign = -1 if (k * (two_n - k)) % 2 else 1
            for K in combinations(range(1, two_n + 1), k):
                e = RealForm.term(n, K, 1)
                assert real_hodge_star(real_hodge_star(e)) == e.scale(sign), (n, K)


def test_orientation_agrees_with_complex_volume():
    # realified volume forms land on +2^n dx1^dy1^...^dxn^dyn
    for n in (1, 2):
        vol = realify(volume_form(HermitianMetric.identity(n)))
        assert vol == RealForm.term(n, tuple(range(1, 2 * n + 1)), 2 ** n)


def test_oracle_compare_dz1():
    report = oracle_compare(Form.term(1, (1,), (), 1), HermitianMetric.identity(1))
    assert report.proportional
    assert report.ratio_for(1, 0) == gaussian(1)


def test_oracle_compare_block_form():
    n = 4
    psi = Form.term(n, (1, 2), (3, 4), 1)
    report = oracle_compare(psi, HermitianMetric.identity(n))
    assert report.proportional
    assert report.ratio_for(2, 2) == gaussian(1)  # 2^(4-2-2)


def test_oracle_compare_zero_form():
    report = oracle_compare(Form.zero(2), HermitianMetric.identity(2))
    assert report.proportional


def test_oracle_compare_requires_identity_metric():
    with pytest.raises(ValueError):
        oracle_compare(Form.term(2, (1,), (), 1), HermitianMetric.diagonal([2, 1]))


def test_single_ratio_across_random_forms():
    # >= 50 random forms per bidegree and dimension, all giving one constant
    rng = random.Random(91)
    for n in (1, 2):
        metric = HermitianMetric.identity(n)
        for p in range(n + 1):
            for q in range(n + 1):
                expected = ORACLE_STAR_RATIOS[(n, p, q)]
                for _ in range(50):
                    psi = random_form(rng, n, bidegree=(p, q), max_degree=1)
                    if psi.is_zero():
                        continue
                    report = oracle_compare(psi, metric)
                    assert report.proportional
                    assert report.ratio_for(p, q) == expected
