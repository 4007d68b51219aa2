import json
import random
from fractions import Fraction
from itertools import combinations

import pytest

from helpers import random_form
from pqforms import (
    Direction,
    Form,
    HermitianMetric,
    RealOrthogonalMatrix,
    WirtingerPolynomial,
    gaussian,
    harmonic_check,
    k3_product_form,
    lemma34_scenario,
    load_transform,
    obstruction,
    obstruction_direction_coefficients,
    paired_class_form,
    pr_minus,
    pr_plus,
    transform_form,
)
from pqforms.scenarios import scenario_transforms


def e(n, j):
    return Direction.basis(n, j)


def test_direction_validation():
    with pytest.raises(ValueError):
        Direction(2, (Fraction(0), Fraction(0)))
    with pytest.raises(ValueError):
        Direction.parse("1,2", 3)
    assert Direction.parse("1,-1/2", 2).components == (Fraction(1), Fraction(-1, 2))


def test_pr_on_paired_term():
    n = 2
    form = Form.term(n, (1,), (1,), 1)
    v = Direction.parse("3,5", n)
    assert pr_plus(form, v) == WirtingerPolynomial.constant(n, 3)
    assert pr_minus(form, v) == WirtingerPolynomial.constant(n, 3)


def test_pr_plus_block_form_scales_coefficient():
    n = 4
    f = WirtingerPolynomial.z(n, 1) * WirtingerPolynomial.zb(n, 4)
    form = Form.term(n, (1, 2), (3, 4), f)
    v = Direction.parse("2,3,-1,7", n)
    assert pr_plus(form, v) == f.scale(5)  # c1 + c2
    assert pr_minus(form, v) == f.scale(6)  # c3 + c4


def test_pr_of_zero_form():
    assert pr_plus(Form.zero(3), e(3, 1)).is_zero()


def test_obstruction_of_paired_forms_vanishes():
    n = 2
    paired = Form.term(n, (1, 2), (1, 2), 1)  # dz1^dzb1^dz2^dzb2 canonicalized
    for v in (e(n, 1), e(n, 2), Direction.parse("1,1", n), Direction.parse("2,-5/3", n)):
        assert obstruction(paired, v).is_zero()


def test_obstruction_of_candidate_form():
    n = 4
    candidate = Form.term(n, (1, 2), (3, 4), 1)
    assert obstruction(candidate, e(n, 1)) == WirtingerPolynomial.one(n)
    coefficients = obstruction_direction_coefficients(candidate)
    assert coefficients == {
        1: WirtingerPolynomial.one(n),
        2: WirtingerPolynomial.one(n),
        3: WirtingerPolynomial.constant(n, -1),
        4: WirtingerPolynomial.constant(n, -1),
    }


def test_obstruction_linearity():
    rng = random.Random(61)
    n = 3
    v = Direction.parse("2,-1,1/3", n)
    for _ in range(20):
        a = random_form(rng, n)
        b = random_form(rng, n)
        alpha, beta = Fraction(3, 2), Fraction(-2)
        combined = a.scale(gaussian(alpha)) + b.scale(gaussian(beta))
        expected = obstruction(a, v).scale(gaussian(alpha)) + obstruction(b, v).scale(gaussian(beta))
        assert obstruction(combined, v) == expected


def test_paired_class_form_canonical_order():
    built = paired_class_form({3, 4}, 1, 4)
    direct = Form.from_factors(4, [("z", 3), ("zb", 3), ("z", 4), ("zb", 4)], 1)
    assert built == direct
    assert paired_class_form({1}, 1, 1) == Form.term(1, (1,), (1,), 1)


def test_paired_class_forms_have_symbolically_zero_obstruction():
    n = 4
    for size in range(1, n + 1):
        for subset in combinations(range(1, n + 1), size):
            form = paired_class_form(subset, 1, n)
            assert obstruction_direction_coefficients(form) == {}


def test_transform_identity():
    rng = random.Random(67)
    a = random_form(rng, 3)
    assert transform_form(a, RealOrthogonalMatrix.identity(3)) == a


def test_transform_rotation_of_dz1():
    matrix = RealOrthogonalMatrix([["3/5", "4/5"], ["-4/5", "3/5"]])
    image = transform_form(Form.term(2, (1,), (), 1), matrix)
    expected = Form.term(2, (1,), (), gaussian(Fraction(3, 5))) + Form.term(
        2, (2,), (), gaussian(Fraction(4, 5))
    )
    assert image == expected


def test_transform_fixes_paired_one_one_sum():
    n = 2
    invariant = Form.term(n, (1,), (1,), 1) + Form.term(n, (2,), (2,), 1)
    for matrix in (
        RealOrthogonalMatrix([["3/5", "4/5"], ["-4/5", "3/5"]]),
        RealOrthogonalMatrix.permutation([2, 1]),
        RealOrthogonalMatrix.sign_flip(2, [1]),
    ):
        assert transform_form(invariant, matrix) == invariant


def test_transform_preserves_wedge():
    rng = random.Random(71)
    matrix = RealOrthogonalMatrix.rotation(3, 1, 3, "5/13", "12/13")
    for _ in range(10):
        a = random_form(rng, 3, max_terms=2, max_degree=1)
        b = random_form(rng, 3, max_terms=2, max_degree=1)
        assert transform_form(a.wedge(b), matrix) == transform_form(a, matrix).wedge(
            transform_form(b, matrix)
        )


def test_transform_substitutes_variables():
    n = 2
    matrix = RealOrthogonalMatrix.permutation([2, 1])
    form = Form.from_scalar(n, WirtingerPolynomial.z(n, 1))
    assert transform_form(form, matrix) == Form.from_scalar(n, WirtingerPolynomial.z(n, 2))


def test_non_orthogonal_matrix_rejected():
    with pytest.raises(ValueError):
        RealOrthogonalMatrix([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        RealOrthogonalMatrix.rotation(2, 1, 2, "1/2", "1/2")


def test_k3_product_form_unit_factors():
    n = 4
    one = WirtingerPolynomial.one(n)
    assert k3_product_form(one, one) == Form.term(n, (1, 2), (3, 4), 1)


def test_k3_product_form_variable_factors():
    n = 4
    f1 = WirtingerPolynomial.z(n, 1)
    f2 = WirtingerPolynomial.z(n, 3)
    expected_coeff = WirtingerPolynomial.z(n, 1) * WirtingerPolynomial.zb(n, 3)
    assert k3_product_form(f1, f2) == Form.term(n, (1, 2), (3, 4), expected_coeff)


def test_k3_product_form_rejects_antiholomorphic_factor():
    n = 4
    with pytest.raises(ValueError) as err:
        k3_product_form(WirtingerPolynomial.zb(n, 1), WirtingerPolynomial.one(n))
    assert "zb1" in str(err.value)
    with pytest.raises(ValueError) as err:
        k3_product_form(WirtingerPolynomial.one(n), WirtingerPolynomial.z(n, 1))
    assert "z1" in str(err.value)


def test_k3_product_form_harmonic_for_constants():
    n = 4
    metric = HermitianMetric.identity(n)
    for c1, c2 in ((1, 1), (3, -2), (gaussian(0, 1), gaussian(2, 5))):
        psi = k3_product_form(
            WirtingerPolynomial.constant(n, c1), WirtingerPolynomial.constant(n, c2)
        )
        assert harmonic_check(psi, metric).harmonic


def test_lemma34_scenario_paired_combination():
    n = 4
    rng = random.Random(73)
    weights = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(5)]
    combo = Form.zero(n)
    subsets = [(1,), (2, 3), (1, 4), (1, 2, 3), (1, 2, 3, 4)]
    for w, subset in zip(weights, subsets):
        combo = combo + paired_class_form(subset, gaussian(w), n)
    directions = [e(n, j) for j in range(1, 5)] + [Direction.parse("1,2,-3,1/2", n)]
    report = lemma34_scenario(combo, directions, scenario_transforms())
    assert report.all_zero
    assert report.zero_verdict_stable
    assert len(report.frames) == 4


def test_lemma34_scenario_candidate_nonzero():
    n = 4
    candidate = Form.term(n, (1, 2), (3, 4), 1)
    report = lemma34_scenario(candidate, [e(n, 1)])
    assert not report.frames[0].all_zero


def test_lemma34_scenario_zero_form():
    report = lemma34_scenario(Form.zero(4), [e(4, 1)], scenario_transforms())
    assert report.all_zero


def test_load_transform(tmp_path):
    path = tmp_path / "rot.json"
    path.write_text(json.dumps([["3/5", "4/5"], ["-4/5", "3/5"]]))
    matrix = load_transform(str(path))
    assert matrix.entries[0][0] == Fraction(3, 5)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([["1", "1"], ["0", "1"]]))
    with pytest.raises(ValueError):
        load_transform(str(bad))
