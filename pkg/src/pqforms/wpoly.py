"""Polynomials in the 2n independent formal variables z1..zn, zb1..zn.

The barred variables are genuinely independent symbols, never obtained from
the unbarred ones by evaluation.  A polynomial is stored sparsely as a map
from exponent vectors of length 2n (first n slots are z-exponents, last n
slots are zb-exponents) to nonzero Gaussian-rational coefficients, so two
polynomials are equal exactly when their term maps are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .scalars import ZERO, GaussianRational, ScalarLike

Exponents = Tuple[int, ...]

Z = "z"
ZBAR = "zb"
_KINDS = (Z, ZBAR)

PolyLike = Union[int, Fraction, GaussianRational, "WirtingerPolynomial"]


class WirtingerPolynomial:
    """Sparse exact polynomial over the variables z1..zn, zb1..zn."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponents, GaussianRational] | None = None):
        if n < 1:
            raise ValueError(f"ambient dimension must be positive, got {n}")
        clean: Dict[Exponents, GaussianRational] = {}
        if terms:
            for exponents, coeff in terms.items():
                exponents = tuple(exponents)
                if len(exponents) != 2 * n:
                    raise ValueError(
                        f"exponent vector {exponents} has length {len(exponents)}, expected {2 * n}"
                    )
                if any(e < 0 for e in exponents):
                    raise ValueError(f"negative exponent in {exponents}")
                coeff = GaussianRational.coerce(coeff)
                if not coeff.is_zero():
                    clean[exponents] = coeff
        self.n = n
        self.terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "WirtingerPolynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: ScalarLike) -> "WirtingerPolynomial":
        return cls(n, {(0,) * (2 * n): GaussianRational.coerce(value)})

    @classmethod
    def one(cls, n: int) -> "WirtingerPolynomial":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, kind: str, index: int) -> "WirtingerPolynomial":
        slot = cls._slot(n, kind, index)
        exponents = [0] * (2 * n)
        exponents[slot] = 1
        return cls(n, {tuple(exponents): GaussianRational.coerce(1)})

    @classmethod
    def z(cls, n: int, index: int) -> "WirtingerPolynomial":
        return cls.variable(n, Z, index)

    @classmethod
    def zb(cls, n: int, index: int) -> "WirtingerPolynomial":
        return cls.variable(n, ZBAR, index)

    @staticmethod
    def _slot(n: int, kind: str, index: int) -> int:
        if kind not in _KINDS:
            raise ValueError(f"variable kind must be one of {_KINDS}, got {kind!r}")
        if not 1 <= index <= n:
            raise ValueError(f"variable index {index} out of range 1..{n}")
        return index - 1 if kind == Z else n + index - 1

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other: PolyLike) -> "WirtingerPolynomial":
        if isinstance(other, WirtingerPolynomial):
            if other.n != self.n:
                raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")
            return other
        return WirtingerPolynomial.constant(self.n, other)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: PolyLike) -> "WirtingerPolynomial":
        o = self._coerce(other)
        out = dict(self.terms)
        for exponents, coeff in o.terms.items():
            out[exponents] = out.get(exponents, ZERO) + coeff
        return WirtingerPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "WirtingerPolynomial":
        return WirtingerPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "WirtingerPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: PolyLike) -> "WirtingerPolynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other: PolyLike) -> "WirtingerPolynomial":
        o = self._coerce(other)
        out: Dict[Exponents, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return WirtingerPolynomial(self.n, out)

    __rmul__ = __mul__

    def scale(self, value: ScalarLike) -> "WirtingerPolynomial":
        c = GaussianRational.coerce(value)
        return WirtingerPolynomial(self.n, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, exponent: int) -> "WirtingerPolynomial":
        if exponent < 0:
            raise ValueError("polynomial powers must be non-negative")
        result = WirtingerPolynomial.one(self.n)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def conjugate(self) -> "WirtingerPolynomial":
        """Complex conjugation: swap the z block with the zb block and
        conjugate every coefficient.  An involution."""
        n = self.n
        out = {}
        for exponents, coeff in self.terms.items():
            swapped = exponents[n:] + exponents[:n]
            out[swapped] = coeff.conjugate()
        return WirtingerPolynomial(n, out)

    def derivative(self, kind: str, index: int) -> "WirtingerPolynomial":
        """Formal partial derivative with respect to z_index or zb_index.

        The z and zb variables are independent, so d(zb1)/d(z1) = 0.
        """
        slot = self._slot(self.n, kind, index)
        out: Dict[Exponents, GaussianRational] = {}
        for exponents, coeff in self.terms.items():
            e = exponents[slot]
            if e == 0:
                continue
            lowered = exponents[:slot] + (e - 1,) + exponents[slot + 1 :]
            out[lowered] = out.get(lowered, ZERO) + coeff * e
        return WirtingerPolynomial(self.n, out)

    def substitute(self, mapping: Mapping[Tuple[str, int], "WirtingerPolynomial"]) -> "WirtingerPolynomial":
        """Substitute polynomials for variables; unmapped variables stay put.

        Keys are (kind, index) pairs.  Used for linear coordinate changes.
        """
        n = self.n
        images: Dict[int, WirtingerPolynomial] = {}
        for (kind, index), image in mapping.items():
            slot = self._slot(n, kind, index)
            images[slot] = self._coerce(image)
        result = WirtingerPolynomial.zero(n)
        for exponents, coeff in self.terms.items():
            term = WirtingerPolynomial.constant(n, coeff)
            for slot, e in enumerate(exponents):
                if e == 0:
                    continue
                if slot in images:
                    term = term * images[slot] ** e
                else:
                    base = [0] * (2 * n)
                    base[slot] = e
                    term = term * WirtingerPolynomial(n, {tuple(base): GaussianRational.coerce(1)})
            result = result + term
        return result

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * (2 * self.n), ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def used_slots(self) -> Iterable[int]:
        """Indices of variable slots that appear with a positive exponent."""
        seen = set()
        for exponents in self.terms:
            for slot, e in enumerate(exponents):
                if e > 0:
                    seen.add(slot)
        return sorted(seen)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WirtingerPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if not self.terms:
            return "<poly 0>"
        parts = []
        for exponents in sorted(self.terms, reverse=True):
            coeff = self.terms[exponents]
            names = []
            for slot, e in enumerate(exponents):
                if e == 0:
                    continue
                kind = Z if slot < self.n else ZBAR
                index = slot + 1 if slot < self.n else slot - self.n + 1
                names.append(f"{kind}{index}" + (f"**{e}" if e > 1 else ""))
            body = "*".join(names)
            parts.append(f"({coeff}){'*' + body if body else ''}")
        return "<poly " + " + ".join(parts) + ">"
