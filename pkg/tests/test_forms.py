import random

import pytest
from hypothesis import given, settings

from helpers import brute_parity, forms, homogeneous_forms, random_form
from pqforms import Form, WirtingerPolynomial, gaussian
from pqforms.forms import complement, sort_with_sign
from pqforms.wpoly import Z, ZBAR


def test_repeated_factor_vanishes():
    assert Form.from_factors(1, [(Z, 1), (Z, 1)], 1).is_zero()


def test_single_transposition_sign():
    built = Form.from_factors(1, [(ZBAR, 1), (Z, 1)], 1)
    assert built == Form.term(1, (1,), (1,), -1)


def test_canonicalization_sign_matches_brute_parity():
    # factors dz1, dzb3, dz2 sort with one out-of-order pair
    factors = [(Z, 1), (ZBAR, 3), (Z, 2)]
    keys = [(0, k) if kind == Z else (1, k) for kind, k in factors]
    assert brute_parity(keys) == -1
    built = Form.from_factors(3, factors, 1)
    assert built == Form.term(3, (1, 2), (3,), -1)


def test_factor_index_out_of_range():
    with pytest.raises(ValueError):
        Form.from_factors(2, [(Z, 3)], 1)


def test_wedge_square_is_zero():
    dz1 = Form.term(2, (1,), (), 1)
    assert dz1.wedge(dz1).is_zero()


def test_wedge_of_block_factors():
    n = 4
    f1 = WirtingerPolynomial.z(n, 1)
    f2 = WirtingerPolynomial.zb(n, 3)
    left = Form.term(n, (1, 2), (), f1)
    right = Form.term(n, (), (3, 4), f2)
    assert left.wedge(right) == Form.term(n, (1, 2), (3, 4), f1 * f2)


def test_wedge_transposition_sign():
    n = 2
    left = Form.term(n, (1,), (1,), 1)
    right = Form.term(n, (2,), (2,), 1)
    assert left.wedge(right) == Form.term(n, (1, 2), (1, 2), -1)


def test_wedge_dimension_mismatch():
    with pytest.raises(ValueError):
        Form.term(1, (1,), (), 1).wedge(Form.term(2, (1,), (), 1))


def test_conjugate_of_holomorphic_block():
    n = 4
    f = WirtingerPolynomial.z(n, 3) * WirtingerPolynomial.z(n, 4)
    form = Form.term(n, (3, 4), (), f)
    assert form.conjugate() == Form.term(n, (), (3, 4), f.conjugate())


def test_conjugate_with_reordering_sign():
    # conj(i*dz1^dzb2) picks up (-1)^{|I||J|} = -1 besides the scalar conjugation
    form = Form.term(2, (1,), (2,), gaussian(0, 1))
    assert form.conjugate() == Form.term(2, (2,), (1,), gaussian(0, 1))


@given(forms())
def test_conjugate_is_involution(a):
    assert a.conjugate().conjugate() == a


def test_component_extraction():
    n = 1
    mixed = Form.term(n, (1,), (), 1) + Form.term(n, (1,), (1,), 1)
    assert mixed.component(1, 0) == Form.term(n, (1,), (), 1)
    assert mixed.component(0, 1).is_zero()
    assert Form.zero(n).component(2, 2).is_zero()


@given(forms(n=2))
def test_components_reassemble(a):
    total = Form.zero(a.n)
    for p in range(a.n + 1):
        for q in range(a.n + 1):
            total = total + a.component(p, q)
    assert total == a


@settings(max_examples=50)
@given(homogeneous_forms(n=3), homogeneous_forms(n=3))
def test_graded_anticommutativity(a, b):
    if a.is_zero() or b.is_zero():
        return
    deg_a = sum(a.homogeneous_bidegree())
    deg_b = sum(b.homogeneous_bidegree())
    sign = -1 if (deg_a * deg_b) % 2 else 1
    assert a.wedge(b) == (b.wedge(a) if sign == 1 else -b.wedge(a))


@settings(max_examples=40)
@given(forms(n=3, max_terms=2), forms(n=3, max_terms=2), forms(n=3, max_terms=2))
def test_wedge_associativity(a, b, c):
    assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


@given(forms(n=3))
def test_conjugation_swaps_bidegrees(a):
    for p in range(4):
        for q in range(4):
            assert a.conjugate().component(p, q) == a.component(q, p).conjugate()


def test_recanonicalization_is_identity():
    rng = random.Random(7)
    for _ in range(25):
        a = random_form(rng, 3)
        rebuilt = Form.zero(a.n)
        for (I, J), coeff in a.terms.items():
            factors = [(Z, k) for k in I] + [(ZBAR, k) for k in J]
            rebuilt = rebuilt + Form.from_factors(a.n, factors, coeff)
        assert rebuilt == a


def test_sort_with_sign_matches_brute_parity():
    rng = random.Random(11)
    for _ in range(200):
        seq = [rng.randint(1, 6) for _ in range(rng.randint(0, 6))]
        _, sign = sort_with_sign(seq)
        assert sign == brute_parity(seq)


def test_complement():
    assert complement((2, 4), 5) == (1, 3, 5)
    assert complement((), 3) == (1, 2, 3)
