"""Independent real-coordinate validator for the complex Hodge star.

Complex forms are expanded over the 2n real coordinates x1, y1, ..., xn, yn
via dz^k = dx^k + i dy^k, the textbook Euclidean Hodge star is applied
monomial-wise with orientation dx1 ^ dy1 ^ ... ^ dxn ^ dyn, and the result
is mapped back.  None of the complex star machinery is reused, so an exact
proportionality between the two paths is strong evidence for both.

The Euclidean real metric dx^2 + dy^2 is used as-is; the resulting
normalization gap against the Hermitian identity metric is not hidden but
surfaces as the per-bidegree ratio recorded in ORACLE_STAR_RATIOS.

Real polynomial coefficients reuse the sparse container from
:mod:`pqforms.wpoly` with reinterpreted slots: the first n slots hold
x-exponents and the last n slots hold y-exponents.  Conjugation and
Wirtinger derivatives of that container are meaningless under this reading
and are never called here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .forms import Form, sort_with_sign
from .metric import HermitianMetric
from .scalars import GaussianRational, gaussian
from .star import DEFAULT_CONVENTION, StarConvention, hodge_star
from .wpoly import WirtingerPolynomial, Z, ZBAR

RealIndex = Tuple[int, ...]

# Engine star versus oracle star: exact ratio per (n, p, q), derived by
# running the oracle over every unit monomial before the star tests were
# frozen.  The observed pattern is 2^(n-p-q); the table keeps the raw
# recorded values rather than the formula.
ORACLE_STAR_RATIOS: Dict[Tuple[int, int, int], GaussianRational] = {
    (1, 0, 0): gaussian(2),
    (1, 0, 1): gaussian(1),
    (1, 1, 0): gaussian(1),
    (1, 1, 1): gaussian(Fraction(1, 2)),
    (2, 0, 0): gaussian(4),
    (2, 0, 1): gaussian(2),
    (2, 0, 2): gaussian(1),
    (2, 1, 0): gaussian(2),
    (2, 1, 1): gaussian(1),
    (2, 1, 2): gaussian(Fraction(1, 2)),
    (2, 2, 0): gaussian(1),
    (2, 2, 1): gaussian(Fraction(1, 2)),
    (2, 2, 2): gaussian(Fraction(1, 4)),
}


def _validate_real_index(indices: RealIndex, two_n: int) -> RealIndex:
    indices = tuple(indices)
    for k in indices:
        if not 1 <= k <= two_n:
            raise ValueError(f"real index {k} out of range 1..{two_n}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise ValueError(f"real multi-index {indices} is not strictly increasing")
    return indices


class RealForm:
    """A form over coordinates x1, y1, ..., xn, yn with complex-valued
    polynomial coefficients.  Basis covectors are numbered 1..2n with
    2k-1 = dx^k and 2k = dy^k."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[RealIndex, WirtingerPolynomial] | None = None):
        if n < 1:
            raise ValueError(f"ambient dimension must be positive, got {n}")
        clean: Dict[RealIndex, WirtingerPolynomial] = {}
        if terms:
            for indices, coeff in terms.items():
                indices = _validate_real_index(indices, 2 * n)
                if not isinstance(coeff, WirtingerPolynomial):
                    coeff = WirtingerPolynomial.constant(n, coeff)
                if coeff.is_zero():
                    continue
                if indices in clean:
                    merged = clean[indices] + coeff
                    if merged.is_zero():
                        del clean[indices]
                    else:
                        clean[indices] = merged
                else:
                    clean[indices] = coeff
        self.n = n
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "RealForm":
        return cls(n)

    @classmethod
    def term(cls, n: int, indices: RealIndex, coeff) -> "RealForm":
        return cls(n, {tuple(indices): coeff})

    def __add__(self, other: "RealForm") -> "RealForm":
        if other.n != self.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out[key] + coeff if key in out else coeff
        return RealForm(self.n, out)

    def __neg__(self) -> "RealForm":
        return RealForm(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "RealForm") -> "RealForm":
        return self + (-other)

    def scale(self, value) -> "RealForm":
        factor = value if isinstance(value, WirtingerPolynomial) else None
        out = {}
        for key, coeff in self.terms.items():
            out[key] = coeff * factor if factor is not None else coeff.scale(value)
        return RealForm(self.n, out)

    def wedge(self, other: "RealForm") -> "RealForm":
        if other.n != self.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")
        out = RealForm.zero(self.n)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                merged, sign = sort_with_sign(k1 + k2)
                if sign == 0:
                    continue
                out = out + RealForm.term(self.n, merged, (c1 * c2).scale(sign))
        return out

    def degrees(self):
        return {len(k) for k in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RealForm):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "<realform 0>"
        bits = []
        for key in sorted(self.terms, key=lambda k: (len(k), k)):
            names = [f"dx{(v + 1) // 2}" if v % 2 else f"dy{v // 2}" for v in key]
            bits.append(f"{self.terms[key]!r}*{'^'.join(names) if names else '1'}")
        return "<realform " + " + ".join(bits) + ">"


def _x_poly(n: int, k: int) -> WirtingerPolynomial:
    return WirtingerPolynomial.z(n, k)


def _y_poly(n: int, k: int) -> WirtingerPolynomial:
    return WirtingerPolynomial.zb(n, k)


def realify(form: Form) -> RealForm:
    """Expand dz^k = dx^k + i dy^k, z^k = x^k + i y^k exactly."""
    n = form.n
    substitution = {}
    for k in range(1, n + 1):
        substitution[(Z, k)] = _x_poly(n, k) + _y_poly(n, k).scale(gaussian(0, 1))
        substitution[(ZBAR, k)] = _x_poly(n, k) - _y_poly(n, k).scale(gaussian(0, 1))
    dx = {k: RealForm.term(n, (2 * k - 1,), 1) for k in range(1, n + 1)}
    dy = {k: RealForm.term(n, (2 * k,), 1) for k in range(1, n + 1)}
    out = RealForm.zero(n)
    for (I, J), coeff in form.terms.items():
        real_coeff = coeff.substitute(substitution)
        piece = RealForm.term(n, (), real_coeff)
        for k in I:
            piece = piece.wedge(dx[k] + dy[k].scale(gaussian(0, 1)))
        for k in J:
            piece = piece.wedge(dx[k] - dy[k].scale(gaussian(0, 1)))
        out = out + piece
    return out


def complexify(real: RealForm) -> Form:
    """Exact inverse of :func:`realify`."""
    n = real.n
    half = Fraction(1, 2)
    substitution = {}
    for k in range(1, n + 1):
        z = WirtingerPolynomial.z(n, k)
        zb = WirtingerPolynomial.zb(n, k)
        substitution[(Z, k)] = (z + zb).scale(gaussian(half))
        substitution[(ZBAR, k)] = (z - zb).scale(gaussian(0, -half))
    dz = {k: Form.term(n, (k,), (), 1) for k in range(1, n + 1)}
    dzb = {k: Form.term(n, (), (k,), 1) for k in range(1, n + 1)}
    out = Form.zero(n)
    for indices, coeff in real.terms.items():
        complex_coeff = coeff.substitute(substitution)
        piece = Form.from_scalar(n, complex_coeff)
        for v in indices:
            k = (v + 1) // 2
            if v % 2:  # dx^k
                piece = piece.wedge((dz[k] + dzb[k]).scale(gaussian(half)))
            else:  # dy^k
                piece = piece.wedge((dz[k] - dzb[k]).scale(gaussian(0, -half)))
        out = out + piece
    return out


def real_hodge_star(real: RealForm) -> RealForm:
    """Euclidean Hodge star on monomials: star(e_K) = sgn(K, K^c) e_(K^c)
    with orientation dx1 ^ dy1 ^ ... ^ dxn ^ dyn.  Linear; coefficients
    pass through untouched."""
    degrees = real.degrees()
    if len(degrees) > 1:
        raise ValueError(f"real star needs a homogeneous form, got degrees {sorted(degrees)}")
    two_n = 2 * real.n
    out: Dict[RealIndex, WirtingerPolynomial] = {}
    for indices, coeff in real.terms.items():
        rest = tuple(v for v in range(1, two_n + 1) if v not in indices)
        _, sign = sort_with_sign(indices + rest)
        out[rest] = coeff.scale(sign)
    return RealForm(real.n, out)


def oracle_star(psi: Form) -> Form:
    """The oracle path: conjugate, realify, Euclidean star, map back.

    The engine star is antilinear while the Euclidean star is linear, so
    conjugating first lines up both the bidegree and the coefficient
    conjugation of the two paths.
    """
    out = Form.zero(psi.n)
    for p, q in sorted(psi.bidegrees()):
        part = psi.component(p, q)
        out = out + complexify(real_hodge_star(realify(part.conjugate())))
    return out


@dataclass(frozen=True)
class BidegreeComparison:
    p: int
    q: int
    proportional: bool
    ratio: Optional[GaussianRational]


@dataclass(frozen=True)
class OracleReport:
    """Engine star versus oracle star, compared per bidegree."""

    n: int
    convention: StarConvention
    proportional: bool
    comparisons: Tuple[BidegreeComparison, ...]

    def ratio_for(self, p: int, q: int) -> Optional[GaussianRational]:
        for cmp in self.comparisons:
            if (cmp.p, cmp.q) == (p, q):
                return cmp.ratio
        return None


def _proportionality_ratio(engine: Form, oracle: Form) -> Tuple[bool, Optional[GaussianRational]]:
    if oracle.is_zero():
        return engine.is_zero(), None
    if engine.is_zero():
        return False, None
    key, oracle_coeff = oracle.sorted_terms()[0]
    exponents, scalar = next(iter(sorted(oracle_coeff.terms.items())))
    engine_coeff = engine.coefficient(*key)
    lead = engine_coeff.terms.get(exponents)
    if lead is None:
        return False, None
    ratio = lead / scalar
    residual = engine - oracle.scale(ratio)
    return residual.is_zero(), (ratio if residual.is_zero() else None)


def oracle_compare(
    psi: Form,
    metric: HermitianMetric,
    convention: StarConvention = DEFAULT_CONVENTION,
) -> OracleReport:
    """Compare the engine star against the real-coordinate oracle.

    Restricted to the identity metric, where the Euclidean real star is
    the matching ground truth.  Reports the exact proportionality constant
    per (p,q)-component or flags the mismatch.
    """
    if not metric.is_identity():
        raise ValueError("oracle comparison is defined for the identity metric only")
    if psi.n != metric.n:
        raise ValueError("ambient dimension mismatch")
    comparisons = []
    overall = True
    for p, q in sorted(psi.bidegrees()):
        part = psi.component(p, q)
        engine = hodge_star(part, metric, convention)
        oracle = oracle_star(part)
        proportional, ratio = _proportionality_ratio(engine, oracle)
        overall = overall and proportional
        comparisons.append(BidegreeComparison(p=p, q=q, proportional=proportional, ratio=ratio))
    return OracleReport(
        n=psi.n,
        convention=convention,
        proportional=overall,
        comparisons=tuple(comparisons),
    )
