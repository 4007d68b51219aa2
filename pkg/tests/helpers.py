"""Shared generators and independent brute-force oracles for the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Tuple

from hypothesis import strategies as st

from pqforms import Form, WirtingerPolynomial, gaussian


def brute_parity(values) -> int:
    """Permutation parity by counting out-of-order pairs with a double loop.

    Deliberately independent of the engine's insertion-sort bookkeeping.
    Returns 0 when a value repeats.
    """
    sign = 1
    values = list(values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] == values[j]:
                return 0
            if values[i] > values[j]:
                sign = -sign
    return sign


def random_scalar(rng: random.Random, span: int = 3):
    return gaussian(
        Fraction(rng.randint(-span, span), rng.randint(1, 3)),
        Fraction(rng.randint(-span, span), rng.randint(1, 3)),
    )


def random_poly(rng: random.Random, n: int, max_terms: int = 3, max_degree: int = 2) -> WirtingerPolynomial:
    poly = WirtingerPolynomial.zero(n)
    for _ in range(rng.randint(0, max_terms)):
        exponents = [0] * (2 * n)
        for _ in range(rng.randint(0, max_degree)):
            exponents[rng.randrange(2 * n)] += 1
        poly = poly + WirtingerPolynomial(n, {tuple(exponents): random_scalar(rng)})
    return poly


def random_multi_index(rng: random.Random, n: int, size: int) -> Tuple[int, ...]:
    return tuple(sorted(rng.sample(range(1, n + 1), size)))


def random_form(
    rng: random.Random,
    n: int,
    max_terms: int = 3,
    max_degree: int = 2,
    bidegree: Optional[Tuple[int, int]] = None,
    total_degree: Optional[int] = None,
) -> Form:
    form = Form.zero(n)
    for _ in range(rng.randint(1, max_terms)):
        if bidegree is not None:
            p, q = bidegree
        elif total_degree is not None:
            p = rng.randint(max(0, total_degree - n), min(total_degree, n))
            q = total_degree - p
        else:
            p = rng.randint(0, n)
            q = rng.randint(0, n)
        coeff = random_poly(rng, n, max_terms=2, max_degree=max_degree)
        form = form + Form(
            n, {(random_multi_index(rng, n, p), random_multi_index(rng, n, q)): coeff}
        )
    return form


def random_nonzero_form(rng: random.Random, n: int, **kwargs) -> Form:
    for _ in range(50):
        candidate = random_form(rng, n, **kwargs)
        if not candidate.is_zero():
            return candidate
    raise AssertionError("failed to draw a nonzero form")


# -- hypothesis strategies ------------------------------------------------------


@st.composite
def scalars(draw):
    return gaussian(
        Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3))),
        Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3))),
    )


@st.composite
def nonzero_scalars(draw):
    value = draw(scalars().filter(lambda s: not s.is_zero()))
    return value


@st.composite
def exponent_vectors(draw, n: int, max_degree: int = 2):
    return tuple(draw(st.lists(st.integers(0, max_degree), min_size=2 * n, max_size=2 * n)))


@st.composite
def polys(draw, n: Optional[int] = None, max_degree: int = 2, max_terms: int = 3):
    if n is None:
        n = draw(st.integers(1, 3))
    entries = draw(
        st.lists(st.tuples(exponent_vectors(n, max_degree), scalars()), max_size=max_terms)
    )
    poly = WirtingerPolynomial.zero(n)
    for exponents, coeff in entries:
        poly = poly + WirtingerPolynomial(n, {exponents: coeff})
    return poly


@st.composite
def multi_indices(draw, n: int, size: Optional[int] = None):
    if size is None:
        size = draw(st.integers(0, n))
    subset = draw(st.permutations(list(range(1, n + 1))))[:size]
    return tuple(sorted(subset))


@st.composite
def forms(draw, n: Optional[int] = None, max_terms: int = 3, max_degree: int = 2,
          bidegree: Optional[Tuple[int, int]] = None):
    if n is None:
        n = draw(st.integers(1, 3))
    form = Form.zero(n)
    for _ in range(draw(st.integers(1, max_terms))):
        if bidegree is None:
            I = draw(multi_indices(n))
            J = draw(multi_indices(n))
        else:
            I = draw(multi_indices(n, bidegree[0]))
            J = draw(multi_indices(n, bidegree[1]))
        coeff = draw(polys(n=n, max_degree=max_degree, max_terms=2))
        form = form + Form(n, {(I, J): coeff})
    return form


@st.composite
def homogeneous_forms(draw, n: Optional[int] = None, max_terms: int = 2, max_degree: int = 2):
    if n is None:
        n = draw(st.integers(1, 3))
    p = draw(st.integers(0, n))
    q = draw(st.integers(0, n))
    return draw(forms(n=n, max_terms=max_terms, max_degree=max_degree, bidegree=(p, q)))
