"""Graded exterior algebra of (p,q)-forms with polynomial coefficients.

Storage convention: every term is coeff * dz^I ^ dzb^J with all dz factors
before all dzb factors and both index blocks strictly increasing.  Every
sign in the engine flows from this single convention via permutation
parity, so re-canonicalizing a stored form is always the identity.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Set, Tuple, Union

from .scalars import GaussianRational, ScalarLike
from .wpoly import Z, ZBAR, PolyLike, WirtingerPolynomial

MultiIndex = Tuple[int, ...]
TermKey = Tuple[MultiIndex, MultiIndex]
Factor = Tuple[str, int]  # (kind, index): ("z", 3) means dz3, ("zb", 3) means dzb3

CoeffLike = Union[PolyLike, "WirtingerPolynomial"]


def sort_with_sign(values: Sequence[int]) -> Tuple[MultiIndex, int]:
    """Sort a sequence of indices, returning (sorted tuple, permutation sign).

    Sign is 0 when a value repeats (the wedge monomial vanishes).
    """
    items = list(values)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and items[j - 1] == items[j]:
            return tuple(items), 0
    return tuple(items), sign


def complement(indices: MultiIndex, n: int) -> MultiIndex:
    """Increasing complement of an index set inside 1..n."""
    present = set(indices)
    return tuple(k for k in range(1, n + 1) if k not in present)


def concat_sign(first: Sequence[int], second: Sequence[int]) -> int:
    """Sign of the permutation sorting the concatenation into increasing order."""
    _, sign = sort_with_sign(tuple(first) + tuple(second))
    return sign


def _validate_multi_index(indices: MultiIndex, n: int, label: str) -> MultiIndex:
    indices = tuple(indices)
    for k in indices:
        if not 1 <= k <= n:
            raise ValueError(f"{label} index {k} out of range 1..{n}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise ValueError(f"{label} multi-index {indices} is not strictly increasing")
    return indices


class Form:
    """A finite sum of terms coeff * dz^I ^ dzb^J in canonical order.

    Terms of different bidegrees may coexist, so the exterior derivative
    needs no special casing; homogeneous pieces are recovered with
    :meth:`component`.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[TermKey, CoeffLike] | None = None):
        if n < 1:
            raise ValueError(f"ambient dimension must be positive, got {n}")
        clean: Dict[TermKey, WirtingerPolynomial] = {}
        if terms:
            for (I, J), coeff in terms.items():
                I = _validate_multi_index(I, n, "dz")
                J = _validate_multi_index(J, n, "dzb")
                if not isinstance(coeff, WirtingerPolynomial):
                    coeff = WirtingerPolynomial.constant(n, coeff)
                elif coeff.n != n:
                    raise ValueError(f"coefficient ambient dimension {coeff.n} != {n}")
                if coeff.is_zero():
                    continue
                key = (I, J)
                if key in clean:
                    merged = clean[key] + coeff
                    if merged.is_zero():
                        del clean[key]
                    else:
                        clean[key] = merged
                else:
                    clean[key] = coeff
        self.n = n
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Form":
        return cls(n)

    @classmethod
    def from_scalar(cls, n: int, value: CoeffLike) -> "Form":
        return cls(n, {((), ()): value})

    @classmethod
    def term(cls, n: int, I: Iterable[int], J: Iterable[int], coeff: CoeffLike = 1) -> "Form":
        """Single canonical term; I and J must already be strictly increasing."""
        return cls(n, {(tuple(I), tuple(J)): coeff})

    # -- canonicalization ----------------------------------------------------

    @classmethod
    def from_factors(cls, n: int, factors: Sequence[Factor], coeff: CoeffLike = 1) -> "Form":
        """Build coeff * (product of tagged differentials) in canonical order.

        The factors may arrive in any order; the result carries the parity
        of the permutation that sorts all dz factors (by index) in front of
        all dzb factors (by index).  A repeated differential gives zero.
        """
        keys: List[Tuple[int, int]] = []
        for kind, index in factors:
            if kind not in (Z, ZBAR):
                raise ValueError(f"differential kind must be 'z' or 'zb', got {kind!r}")
            if not 1 <= index <= n:
                raise ValueError(f"differential index {index} out of range 1..{n}")
            keys.append((0 if kind == Z else 1, index))
        flat = [group * n + index for group, index in keys]
        sorted_flat, sign = sort_with_sign(flat)
        if sign == 0:
            return cls.zero(n)
        I = tuple(v for v in sorted_flat if v <= n)
        J = tuple(v - n for v in sorted_flat if v > n)
        if not isinstance(coeff, WirtingerPolynomial):
            coeff = WirtingerPolynomial.constant(n, coeff)
        return cls(n, {(I, J): coeff.scale(sign)})

    # -- linear structure ------------------------------------------------------

    def _coerce(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            raise TypeError(f"expected a Form, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other: "Form") -> "Form":
        o = self._coerce(other)
        out: Dict[TermKey, WirtingerPolynomial] = dict(self.terms)
        for key, coeff in o.terms.items():
            out[key] = out[key] + coeff if key in out else coeff
        return Form(self.n, out)

    def __neg__(self) -> "Form":
        return Form(self.n, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-self._coerce(other))

    def scale(self, value: CoeffLike) -> "Form":
        """Multiply every coefficient by a scalar or polynomial."""
        if isinstance(value, WirtingerPolynomial):
            factor = value
        else:
            factor = WirtingerPolynomial.constant(self.n, value)
        return Form(self.n, {key: c * factor for key, c in self.terms.items()})

    # -- graded multiplication ---------------------------------------------------

    def wedge(self, other: "Form") -> "Form":
        """Exterior product; bilinear, associative, graded-anticommutative."""
        o = self._coerce(other)
        out = Form.zero(self.n)
        for (I1, J1), c1 in self.terms.items():
            factors1 = [(Z, k) for k in I1] + [(ZBAR, k) for k in J1]
            for (I2, J2), c2 in o.terms.items():
                factors2 = [(Z, k) for k in I2] + [(ZBAR, k) for k in J2]
                out = out + Form.from_factors(self.n, factors1 + factors2, c1 * c2)
        return out

    def __xor__(self, other: "Form") -> "Form":
        return self.wedge(other)

    # -- conjugation and grading ---------------------------------------------

    def conjugate(self) -> "Form":
        """Complex conjugate form.

        Each term (I, J, c) maps to (J, I, conj(c) * (-1)^{|I||J|}); the sign
        is forced by reordering dzb^I ^ dz^J back into canonical order, and
        bidegrees (p,q) swap to (q,p).  An involution.
        """
        out = {}
        for (I, J), coeff in self.terms.items():
            sign = -1 if (len(I) * len(J)) % 2 else 1
            out[(J, I)] = coeff.conjugate().scale(sign)
        return Form(self.n, out)

    def component(self, p: int, q: int) -> "Form":
        """The (p,q)-homogeneous part; summing over all (p,q) rebuilds the form."""
        return Form(
            self.n,
            {key: c for key, c in self.terms.items() if len(key[0]) == p and len(key[1]) == q},
        )

    def bidegrees(self) -> Set[Tuple[int, int]]:
        return {(len(I), len(J)) for I, J in self.terms}

    def total_degrees(self) -> Set[int]:
        return {len(I) + len(J) for I, J in self.terms}

    def is_homogeneous(self) -> bool:
        """Single bidegree (vacuously true for the zero form)."""
        return len(self.bidegrees()) <= 1

    def homogeneous_bidegree(self) -> Tuple[int, int]:
        degrees = self.bidegrees()
        if len(degrees) != 1:
            raise ValueError(f"form is not homogeneous: bidegrees {sorted(degrees)}")
        return next(iter(degrees))

    # -- queries ------------------------------------------------------------------

    def coefficient(self, I: Iterable[int], J: Iterable[int]) -> WirtingerPolynomial:
        return self.terms.get((tuple(I), tuple(J)), WirtingerPolynomial.zero(self.n))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> List[Tuple[TermKey, WirtingerPolynomial]]:
        """Terms ordered by (total degree, I, J); the printer's order."""
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if not self.terms:
            return "<form 0>"
        bits = []
        for (I, J), coeff in self.sorted_terms():
            names = [f"dz{k}" for k in I] + [f"dzb{k}" for k in J]
            bits.append(f"{coeff!r}*{'^'.join(names) if names else '1'}")
        return "<form " + " + ".join(bits) + ">"


def wedge(a: Form, b: Form) -> Form:
    return a.wedge(b)


def wedge_all(forms: Sequence[Form]) -> Form:
    if not forms:
        raise ValueError("need at least one form")
    out = forms[0]
    for f in forms[1:]:
        out = out.wedge(f)
    return out
