"""Constant Hermitian metrics, their associated (1,1)-form and volume form.

Only constant matrices are supported: the engine works at a base point of
the flat local model, where the metric can always be brought to a constant
(usually the identity).  Position-dependent metrics are out of scope.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple, Union

from .forms import Form
from .scalars import GaussianRational, I_UNIT, ONE, ScalarLike, ZERO, parse_scalar

Matrix = Tuple[Tuple[GaussianRational, ...], ...]
MatrixLike = Sequence[Sequence[Union[ScalarLike, str]]]


def _coerce_entry(value: Union[ScalarLike, str]) -> GaussianRational:
    if isinstance(value, str):
        return parse_scalar(value)
    return GaussianRational.coerce(value)


def coerce_matrix(entries: MatrixLike) -> Matrix:
    rows = tuple(tuple(_coerce_entry(v) for v in row) for row in entries)
    if not rows:
        raise ValueError("matrix must be non-empty")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("matrix rows have unequal lengths")
    if width != len(rows):
        raise ValueError(f"matrix must be square, got {len(rows)}x{width}")
    return rows


def mat_determinant(matrix: Matrix) -> GaussianRational:
    """Exact determinant by fraction-friendly Gaussian elimination."""
    n = len(matrix)
    rows: List[List[GaussianRational]] = [list(row) for row in matrix]
    det = ONE
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            ratio = rows[r][col] / pivot
            if ratio.is_zero():
                continue
            rows[r] = [a - ratio * b for a, b in zip(rows[r], rows[col])]
    return det


def mat_inverse(matrix: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
    n = len(matrix)
    work: List[List[GaussianRational]] = [
        list(row) + [ONE if i == j else ZERO for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [v / pivot for v in work[col]]
        for r in range(n):
            if r == col:
                continue
            factor = work[r][col]
            if factor.is_zero():
                continue
            work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n))
        for i in range(n)
    )


def leading_principal_minors(matrix: Matrix) -> List[GaussianRational]:
    n = len(matrix)
    return [
        mat_determinant(tuple(tuple(matrix[i][j] for j in range(k)) for i in range(k)))
        for k in range(1, n + 1)
    ]


@dataclass(frozen=True)
class MetricValidation:
    """Validation report for a candidate Hermitian metric matrix."""

    n: int
    is_hermitian: bool
    hermitian_failures: Tuple[Tuple[int, int], ...]
    determinant: GaussianRational
    is_invertible: bool
    is_positive_definite: bool
    leading_minors: Tuple[GaussianRational, ...] = field(default=())

    @property
    def is_valid(self) -> bool:
        return self.is_hermitian and self.is_invertible and self.is_positive_definite


def validate_matrix(entries: MatrixLike) -> MetricValidation:
    """Check Hermitian-ness, invertibility and positive-definiteness.

    Positive-definiteness is decided exactly by the leading principal
    minors, which for a Hermitian matrix are all real.
    """
    matrix = coerce_matrix(entries)
    n = len(matrix)
    failures = tuple(
        (i + 1, j + 1)
        for i in range(n)
        for j in range(n)
        if matrix[i][j] != matrix[j][i].conjugate()
    )
    hermitian = not failures
    det = mat_determinant(matrix)
    minors = tuple(leading_principal_minors(matrix)) if hermitian else ()
    positive = hermitian and all(m.im == 0 and m.re > 0 for m in minors)
    return MetricValidation(
        n=n,
        is_hermitian=hermitian,
        hermitian_failures=failures,
        determinant=det,
        is_invertible=not det.is_zero(),
        is_positive_definite=positive,
        leading_minors=minors,
    )


class HermitianMetric:
    """A constant n x n Hermitian invertible matrix with cached inverse.

    Entry [a][b] is the metric coefficient pairing dz^(a+1) with the
    conjugate of dz^(b+1).
    """

    __slots__ = ("n", "entries", "inverse", "determinant")

    def __init__(self, entries: MatrixLike):
        matrix = coerce_matrix(entries)
        report = validate_matrix(matrix)
        if not report.is_hermitian:
            offenders = ", ".join(
                f"[{i},{j}]={matrix[i - 1][j - 1]} vs conj([{j},{i}])={matrix[j - 1][i - 1].conjugate()}"
                for i, j in report.hermitian_failures
            )
            raise ValueError(f"matrix is not Hermitian: {offenders}")
        if not report.is_invertible:
            raise ValueError("metric matrix is singular")
        self.n = len(matrix)
        self.entries = matrix
        self.determinant = report.determinant
        self.inverse = mat_inverse(matrix)

    @classmethod
    def identity(cls, n: int) -> "HermitianMetric":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike]) -> "HermitianMetric":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def validate(self) -> MetricValidation:
        return validate_matrix(self.entries)

    def is_identity(self) -> bool:
        return all(
            self.entries[i][j] == (ONE if i == j else ZERO)
            for i in range(self.n)
            for j in range(self.n)
        )

    def inverse_entry(self, row: int, col: int) -> GaussianRational:
        """Inverse-metric coefficient with 1-based indices: barred row, unbarred column."""
        return self.inverse[row - 1][col - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HermitianMetric):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(v) for v in row) for row in self.entries)
        return f"HermitianMetric[{rows}]"


def associated_form(metric: HermitianMetric) -> Form:
    """The (1,1)-form i * sum g[a][b] dz^a ^ dzb^b attached to the metric."""
    n = metric.n
    out = Form.zero(n)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            coeff = I_UNIT * metric.entries[a - 1][b - 1]
            if coeff.is_zero():
                continue
            out = out + Form.term(n, (a,), (b,), coeff)
    return out


def volume_form(metric: HermitianMetric) -> Form:
    """The exact volume form: the n-th wedge power of the associated
    (1,1)-form divided by n!.  Computed by explicit wedge powers, which is
    the engine's ground truth for every other volume normalization."""
    n = metric.n
    omega = associated_form(metric)
    power = Form.from_scalar(n, 1)
    for _ in range(n):
        power = power.wedge(omega)
    return power.scale(GaussianRational.coerce(Fraction(1, factorial(n))))


@dataclass(frozen=True)
class VolumeCoefficientReport:
    """Comparison of the wedge-power volume coefficient against the
    real-prefactor variant (-1)^{n(n-1)/2} det(g) that some texts print
    without the i^n factor."""

    n: int
    wedge_power_coefficient: GaussianRational
    real_prefactor_variant: GaussianRational
    match: bool


def volume_coefficient_report(metric: HermitianMetric) -> VolumeCoefficientReport:
    n = metric.n
    vol = volume_form(metric)
    full = tuple(range(1, n + 1))
    computed = vol.coefficient(full, full).constant_value()
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    variant = metric.determinant * sign
    return VolumeCoefficientReport(
        n=n,
        wedge_power_coefficient=computed,
        real_prefactor_variant=variant,
        match=computed == variant,
    )


def load_metric(path: str) -> HermitianMetric:
    """Load a metric from JSON: {"n": int, "entries": [["1", "i", ...], ...]}.

    Entries may be integers, rational strings like "1/2", or complex
    literals like "1/2+3/4i".  Non-Hermitian matrices are rejected with a
    diff of the offending entries.
    """
    with open(path, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    if not isinstance(payload, dict) or "entries" not in payload:
        raise ValueError(f"{path}: metric file must be an object with an 'entries' field")
    entries = payload["entries"]
    declared = payload.get("n")
    if declared is not None and declared != len(entries):
        raise ValueError(f"{path}: declared n={declared} but entries have {len(entries)} rows")
    return HermitianMetric(entries)
