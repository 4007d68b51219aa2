"""Pairing functionals that separate paired-index forms from the rest.

A class dual to a complex submanifold looks, in adapted local coordinates,
like a wedge of paired factors dz^s ^ dzb^s: every dz carries its matching
dzb.  The two linear functionals here contract a form against a real
direction v, once over the dz indices and once over the dzb indices; their
difference vanishes on every real-rational combination of paired forms but
not on a form such as dz1 ^ dz2 ^ dzb3 ^ dzb4.  Real orthogonal coordinate
changes with exact rational entries let the zero verdict be re-checked in
rotated frames instead of being assumed invariant.

The projection of dz^s (and of dzb^s) on v = sum_j c_j x^j is read as the
component c_s.  This is the reading under which both displayed behaviors
come out exactly: paired forms give zero, the candidate form gives
c1 + c2 - c3 - c4.  Alternative readings of "projection" (for instance a
complex pairing against v) are conceivable but not implemented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .forms import Form, MultiIndex
from .scalars import GaussianRational
from .wpoly import WirtingerPolynomial, Z, ZBAR

RationalLike = Union[int, str, Fraction]


def _fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Direction:
    """A real rational vector v = sum_j c_j x^j, not all components zero."""

    n: int
    components: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("dimension must be positive")
        components = tuple(_fraction(c) for c in self.components)
        if len(components) != self.n:
            raise ValueError(f"expected {self.n} components, got {len(components)}")
        if all(c == 0 for c in components):
            raise ValueError("direction must have at least one nonzero component")
        object.__setattr__(self, "components", components)

    @classmethod
    def basis(cls, n: int, index: int) -> "Direction":
        if not 1 <= index <= n:
            raise ValueError(f"basis index {index} out of range 1..{n}")
        return cls(n, tuple(Fraction(1 if j == index else 0) for j in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int) -> "Direction":
        """Parse the CLI syntax: comma-separated rationals, e.g. "1,0,-1/2,0"."""
        parts = [p for p in text.split(",")]
        if len(parts) != n:
            raise ValueError(f"direction {text!r} has {len(parts)} components, expected {n}")
        return cls(n, tuple(_fraction(p) for p in parts))

    def component(self, index: int) -> Fraction:
        return self.components[index - 1]


class RealOrthogonalMatrix:
    """An exact rational matrix with A^T A = I.

    Supported constructions (permutations, sign flips, Pythagorean 2x2
    rotation blocks and their products) keep every entry rational, so all
    transformed verdicts stay exact.
    """

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence[RationalLike]]):
        rows = tuple(tuple(_fraction(v) for v in row) for row in entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("orthogonal matrix must be square and non-empty")
        for i in range(n):
            for j in range(n):
                dot = sum(rows[k][i] * rows[k][j] for k in range(n))
                if dot != (1 if i == j else 0):
                    raise ValueError(
                        f"matrix is not orthogonal: column {i + 1} . column {j + 1} = {dot}"
                    )
        self.n = n
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "RealOrthogonalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, order: Sequence[int]) -> "RealOrthogonalMatrix":
        """Rows of the identity re-ordered; order is 1-based."""
        n = len(order)
        if sorted(order) != list(range(1, n + 1)):
            raise ValueError(f"{order} is not a permutation of 1..{n}")
        return cls([[1 if order[i] == j + 1 else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def sign_flip(cls, n: int, flipped: Iterable[int]) -> "RealOrthogonalMatrix":
        flipped = set(flipped)
        return cls(
            [[(-1 if i + 1 in flipped else 1) if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def rotation(cls, n: int, axis_a: int, axis_b: int, cos: RationalLike, sin: RationalLike) -> "RealOrthogonalMatrix":
        """Plane rotation with exact rational cosine and sine, e.g. 3/5 and 4/5."""
        c, s = _fraction(cos), _fraction(sin)
        if c * c + s * s != 1:
            raise ValueError(f"({c}, {s}) is not on the rational unit circle")
        rows = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        i, j = axis_a - 1, axis_b - 1
        rows[i][i], rows[i][j] = c, s
        rows[j][i], rows[j][j] = -s, c
        return cls(rows)

    def compose(self, other: "RealOrthogonalMatrix") -> "RealOrthogonalMatrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        n = self.n
        return RealOrthogonalMatrix(
            [[sum(self.entries[i][k] * other.entries[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RealOrthogonalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(v) for v in row) for row in self.entries)
        return f"RealOrthogonalMatrix[{rows}]"


def pr_plus(form: Form, direction: Direction) -> WirtingerPolynomial:
    """Contract the dz indices against v: each term contributes its
    coefficient times sum of c_s over s in I.  Linear in the form."""
    return _pr(form, direction, over_dz=True)


def pr_minus(form: Form, direction: Direction) -> WirtingerPolynomial:
    """Contract the dzb indices against v."""
    return _pr(form, direction, over_dz=False)


def _pr(form: Form, direction: Direction, over_dz: bool) -> WirtingerPolynomial:
    if direction.n != form.n:
        raise ValueError(f"direction dimension {direction.n} != form dimension {form.n}")
    total = WirtingerPolynomial.zero(form.n)
    for (I, J), coeff in form.terms.items():
        weight = sum((direction.component(s) for s in (I if over_dz else J)), Fraction(0))
        if weight:
            total = total + coeff.scale(GaussianRational.coerce(weight))
    return total


def obstruction(form: Form, direction: Direction) -> WirtingerPolynomial:
    """The separating functional pr_plus - pr_minus; exact zero test."""
    return pr_plus(form, direction) - pr_minus(form, direction)


def obstruction_direction_coefficients(form: Form) -> Dict[int, WirtingerPolynomial]:
    """Coefficients of the obstruction as a symbolic linear function of v.

    The functional is linear in v, so evaluating it on each basis
    direction recovers the whole symbolic expression: obstruction(form, v)
    equals sum_j c_j * result[j].  Keys with zero value are dropped, so an
    empty dict means the obstruction vanishes identically in v.
    """
    out: Dict[int, WirtingerPolynomial] = {}
    for j in range(1, form.n + 1):
        value = obstruction(form, Direction.basis(form.n, j))
        if not value.is_zero():
            out[j] = value
    return out


def paired_class_form(indices: Iterable[int], coeff, n: int) -> Form:
    """The local normal form of a paired-index class representative:
    coeff * product over s of (dz^s ^ dzb^s), in canonical order."""
    index_tuple: MultiIndex = tuple(sorted(set(indices)))
    if not index_tuple:
        raise ValueError("paired class form needs at least one index")
    factors = []
    for s in index_tuple:
        if not 1 <= s <= n:
            raise ValueError(f"paired index {s} out of range 1..{n}")
        factors.append((Z, s))
        factors.append((ZBAR, s))
    return Form.from_factors(n, factors, coeff)


def transform_form(form: Form, matrix: RealOrthogonalMatrix) -> Form:
    """Rewrite a form in a rotated real-orthogonal frame.

    Differentials and variables transform with the same real entries:
    dz^j becomes sum_m a[j][m] dz^m, and z^j becomes sum_m a[j][m] z^m,
    likewise for the barred copies.  The result is an ordinary form read
    in the primed frame.
    """
    n = form.n
    if matrix.n != n:
        raise ValueError(f"matrix dimension {matrix.n} != form dimension {n}")
    entries = matrix.entries
    dz_images = [
        Form(n, {((m,), ()): GaussianRational.coerce(entries[j - 1][m - 1]) for m in range(1, n + 1)})
        for j in range(1, n + 1)
    ]
    dzb_images = [
        Form(n, {((), (m,)): GaussianRational.coerce(entries[j - 1][m - 1]) for m in range(1, n + 1)})
        for j in range(1, n + 1)
    ]
    substitution = {}
    for j in range(1, n + 1):
        z_image = WirtingerPolynomial.zero(n)
        zb_image = WirtingerPolynomial.zero(n)
        for m in range(1, n + 1):
            scale = GaussianRational.coerce(entries[j - 1][m - 1])
            z_image = z_image + WirtingerPolynomial.z(n, m).scale(scale)
            zb_image = zb_image + WirtingerPolynomial.zb(n, m).scale(scale)
        substitution[(Z, j)] = z_image
        substitution[(ZBAR, j)] = zb_image
    out = Form.zero(n)
    for (I, J), coeff in form.terms.items():
        piece = Form.from_scalar(n, coeff.substitute(substitution))
        for j in I:
            piece = piece.wedge(dz_images[j - 1])
        for j in J:
            piece = piece.wedge(dzb_images[j - 1])
        out = out + piece
    return out


def _restricted_to(poly: WirtingerPolynomial, allowed: Iterable[int]) -> Tuple[bool, str]:
    """Check a polynomial only uses the allowed z-variables (and no zb
    variables at all); returns (ok, offending variable name)."""
    n = poly.n
    allowed = set(allowed)
    for slot in poly.used_slots():
        if slot < n:
            index = slot + 1
            if index not in allowed:
                return False, f"z{index}"
        else:
            return False, f"zb{slot - n + 1}"
    return True, ""


def k3_product_form(
    factor_one: WirtingerPolynomial,
    factor_two: WirtingerPolynomial,
    n: int = 4,
) -> Form:
    """Build the (2,2)-form factor_one * conj(factor_two) on
    dz1 ^ dz2 ^ dzb3 ^ dzb4 out of two holomorphic block factors.

    factor_one may depend only on z1, z2 and factor_two only on z3, z4;
    the wedge of factor_one * dz1 ^ dz2 with the conjugate of
    factor_two * dz3 ^ dz4 then lands on the single mixed-index monomial.
    """
    if n < 4:
        raise ValueError("the product construction needs at least 4 coordinates")
    if factor_one.n != n or factor_two.n != n:
        raise ValueError(f"factors must live in ambient dimension {n}")
    ok, offender = _restricted_to(factor_one, (1, 2))
    if not ok:
        raise ValueError(f"first factor must be holomorphic in z1, z2 only; it uses {offender}")
    ok, offender = _restricted_to(factor_two, (3, 4))
    if not ok:
        raise ValueError(f"second factor must be holomorphic in z3, z4 only; it uses {offender}")
    left = Form.term(n, (1, 2), (), factor_one)
    right = Form.term(n, (3, 4), (), factor_two).conjugate()
    return left.wedge(right)


@dataclass(frozen=True)
class DirectionVerdict:
    direction: Direction
    value: WirtingerPolynomial
    is_zero: bool


@dataclass(frozen=True)
class FrameVerdict:
    frame: str
    verdicts: Tuple[DirectionVerdict, ...]

    @property
    def all_zero(self) -> bool:
        return all(v.is_zero for v in self.verdicts)


@dataclass(frozen=True)
class FrameReport:
    """Obstruction verdicts for one form across rotated frames."""

    frames: Tuple[FrameVerdict, ...]

    @property
    def all_zero(self) -> bool:
        return all(f.all_zero for f in self.frames)

    @property
    def zero_verdict_stable(self) -> bool:
        """True when every frame agrees with the original frame's verdict."""
        reference = self.frames[0].all_zero
        return all(f.all_zero == reference for f in self.frames)


def lemma34_scenario(
    form: Form,
    directions: Sequence[Direction],
    transforms: Sequence[RealOrthogonalMatrix] = (),
) -> FrameReport:
    """Evaluate the obstruction in the given frame and in every rotated
    frame, reporting zero/nonzero per direction.

    Nothing cohomological is concluded here: the report only records the
    algebraic functional values.  Whether the zero verdict survives all
    real orthogonal frames for arbitrary forms is an experiment this
    runner can execute, not a claimed invariant.
    """
    frames: List[FrameVerdict] = []

    def evaluate(label: str, candidate: Form) -> None:
        verdicts = []
        for v in directions:
            value = obstruction(candidate, v)
            verdicts.append(DirectionVerdict(direction=v, value=value, is_zero=value.is_zero()))
        frames.append(FrameVerdict(frame=label, verdicts=tuple(verdicts)))

    evaluate("standard", form)
    for idx, matrix in enumerate(transforms, start=1):
        evaluate(f"transform_{idx}", transform_form(form, matrix))
    return FrameReport(frames=tuple(frames))


def load_transform(path: str) -> RealOrthogonalMatrix:
    """Load an exact orthogonal matrix from JSON: an n x n array whose
    entries are integers or rational strings.  Orthogonality is validated
    exactly on load."""
    with open(path, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    if not isinstance(payload, list):
        raise ValueError(f"{path}: transform file must be a JSON array of rows")
    return RealOrthogonalMatrix(payload)
