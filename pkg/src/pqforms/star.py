"""Hodge star, index raising and inner products for (p,q)-forms.

The star is pinned down by the defining identity

    phi ^ star(psi) = <phi, psi> * vol

which must hold exactly as a polynomial-form identity for homogeneous
forms of equal bidegree.  Two printed variants of the star formula found
in the literature disagree on where the complementary indices land and on
how many conjugations the coefficient receives; both are kept behind a
convention flag so the disagreement can be demonstrated instead of being
hidden.

Default convention ("single" conjugation, "same_type_complement" output):
a term on dz^A ^ dzb^B is sent to dz^(A complement) ^ dzb^(B complement)
with exactly one net conjugation of the coefficient.  This is the variant
that satisfies the defining identity; the "literal" variant fails it
already for star(dz1) at n=1, which the reports document.

For a (p,q)-term with coefficient c on (A, B) the default star emits

    i^n * (-1)^(n(n-1)/2 + (n-p)q) * sgn(A, A^c) * sgn(B, B^c)
        * det(g) * raised(c)  on  dz^(A^c) ^ dzb^(B^c)

where sgn sorts the concatenated index blocks into 1..n and raised(c)
contracts the conjugated coefficient with inverse-metric entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Literal, Tuple

from .forms import Form, MultiIndex, complement, concat_sign
from .metric import HermitianMetric, Matrix, mat_determinant, volume_form
from .scalars import GaussianRational, I_UNIT, MINUS_ONE, ONE
from .wpoly import WirtingerPolynomial

ConjugationMode = Literal["single", "literal_eq_2_9"]
OutputIndexMode = Literal["same_type_complement", "printed_eq_2_9"]


@dataclass(frozen=True)
class StarConvention:
    """Switches selecting between the consistent star and the literal
    printed variant.  Every report records which convention produced it."""

    conjugation_mode: ConjugationMode = "single"
    output_index_mode: OutputIndexMode = "same_type_complement"

    def describe(self) -> Dict[str, str]:
        return {
            "conjugation": self.conjugation_mode,
            "output_index": self.output_index_mode,
        }


DEFAULT_CONVENTION = StarConvention()
LITERAL_CONVENTION = StarConvention(
    conjugation_mode="literal_eq_2_9",
    output_index_mode="printed_eq_2_9",
)


def _minor(metric_inverse: Matrix, rows: MultiIndex, cols: MultiIndex) -> GaussianRational:
    """Determinant of the inverse-metric submatrix on 1-based index tuples."""
    if not rows:
        return ONE
    sub = tuple(tuple(metric_inverse[r - 1][c - 1] for c in cols) for r in rows)
    return mat_determinant(sub)


def raise_indices(psi: Form, metric: HermitianMetric) -> Dict[Tuple[MultiIndex, MultiIndex], WirtingerPolynomial]:
    """Raised coefficient table of a homogeneous (p,q)-form.

    For each strictly increasing (A, B) the raised coefficient contracts
    every conjugated stored coefficient with inverse-metric minors:

        raised[A, B] = sum over stored (L, M) of
            det(ginv[L, A]) * det(ginv[B, M]) * conj(coeff[L, M])

    With the identity metric this collapses to coefficient-wise
    conjugation.  The table carries exactly one conjugation; callers pick
    how many more they want.
    """
    if psi.is_zero():
        return {}
    if not psi.is_homogeneous():
        raise ValueError(f"raise_indices needs a homogeneous form, got bidegrees {sorted(psi.bidegrees())}")
    n = metric.n
    if psi.n != n:
        raise ValueError(f"form ambient dimension {psi.n} != metric dimension {n}")
    p, q = psi.homogeneous_bidegree()
    ginv = metric.inverse
    table: Dict[Tuple[MultiIndex, MultiIndex], WirtingerPolynomial] = {}
    conjugated = {key: coeff.conjugate() for key, coeff in psi.terms.items()}
    for A in combinations(range(1, n + 1), p):
        for B in combinations(range(1, n + 1), q):
            total = WirtingerPolynomial.zero(n)
            for (L, M), coeff in conjugated.items():
                factor = _minor(ginv, L, A) * _minor(ginv, B, M)
                if factor.is_zero():
                    continue
                total = total + coeff.scale(factor)
            if not total.is_zero():
                table[(A, B)] = total
    return table


def pointwise_inner(phi: Form, psi: Form, metric: HermitianMetric) -> WirtingerPolynomial:
    """Pointwise inner product: sum over increasing (A, B) of
    phi[A, B] * raised(psi)[A, B].  Sesquilinear; with the identity metric
    it is the plain sum of phi coefficients times conjugated psi
    coefficients."""
    n = metric.n
    if phi.n != n or psi.n != n:
        raise ValueError("ambient dimension mismatch between forms and metric")
    if phi.is_zero() or psi.is_zero():
        return WirtingerPolynomial.zero(n)
    if phi.homogeneous_bidegree() != psi.homogeneous_bidegree():
        raise ValueError(
            f"bidegree mismatch: {phi.homogeneous_bidegree()} vs {psi.homogeneous_bidegree()}"
        )
    raised = raise_indices(psi, metric)
    total = WirtingerPolynomial.zero(n)
    for key, coeff in phi.terms.items():
        if key in raised:
            total = total + coeff * raised[key]
    return total


def _star_prefactor(n: int, p: int, q: int) -> GaussianRational:
    exponent = n * (n - 1) // 2 + (n - p) * q
    sign = MINUS_ONE if exponent % 2 else ONE
    return (I_UNIT ** n) * sign


def hodge_star(psi: Form, metric: HermitianMetric, convention: StarConvention = DEFAULT_CONVENTION) -> Form:
    """Hodge star of a form, applied per (p,q)-component.

    Antilinear under the default convention: star(c * psi) equals
    conj(c) * star(psi) for constant c.
    """
    n = metric.n
    if psi.n != n:
        raise ValueError(f"form ambient dimension {psi.n} != metric dimension {n}")
    out = Form.zero(n)
    for p, q in sorted(psi.bidegrees()):
        part = psi.component(p, q)
        prefactor = _star_prefactor(n, p, q) * metric.determinant
        for (A, B), raised in raise_indices(part, metric).items():
            A_c = complement(A, n)
            B_c = complement(B, n)
            sign = concat_sign(A, A_c) * concat_sign(B, B_c)
            # the literal variant's extra bar applies to the raised
            # coefficient only, never to the i^n prefactor
            if convention.conjugation_mode == "literal_eq_2_9":
                raised = raised.conjugate()
            coeff = raised.scale(prefactor * sign)
            if convention.output_index_mode == "same_type_complement":
                key = (A_c, B_c)
            else:
                key = (B_c, A_c)
            out = out + Form.term(n, key[0], key[1], coeff)
    return out


@dataclass(frozen=True)
class DefiningIdentityReport:
    """Outcome of checking phi ^ star(psi) == <phi, psi> * vol exactly."""

    holds: bool
    residual: Form
    convention: StarConvention


def defining_identity_check(
    phi: Form,
    psi: Form,
    metric: HermitianMetric,
    convention: StarConvention = DEFAULT_CONVENTION,
) -> DefiningIdentityReport:
    """Check the star-defining identity as an exact polynomial-form identity.

    Inputs must be homogeneous of equal bidegree (zero forms pass
    trivially).  The residual is phi ^ star(psi) - <phi, psi> * vol.
    """
    if not phi.is_zero() and not psi.is_zero():
        if phi.homogeneous_bidegree() != psi.homogeneous_bidegree():
            raise ValueError("defining identity needs forms of equal bidegree")
    lhs = phi.wedge(hodge_star(psi, metric, convention))
    rhs = volume_form(metric).scale(pointwise_inner(phi, psi, metric))
    residual = lhs - rhs
    return DefiningIdentityReport(holds=residual.is_zero(), residual=residual, convention=convention)
