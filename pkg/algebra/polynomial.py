"""
Dense univariate polynomials with exact rational coefficients.

Coefficients are kept as `Fraction` tuples for hashing and cheap ring
arithmetic; division, gcd and cancellation go through `sympy.Poly` over QQ.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy
from sympy import QQ, Poly

Scalar = Union[Fraction, int]

X = sympy.Symbol("x")


def to_sympy_rational(c: Scalar) -> sympy.Rational:
    c = Fraction(c)
    return sympy.Rational(c.numerator, c.denominator)


def from_sympy_rational(r) -> Fraction:
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


def _trim(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Polynomial:
    """
    Ascending coefficient tuple; the zero polynomial is the empty tuple.

    No trailing zero is ever stored, so `degree` is canonical and two
    equal polynomials compare equal as dataclasses.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in self.coeffs]))

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def linear(cls, root: Scalar) -> "Polynomial":
        """Monic x - root."""
        return cls((-Fraction(root), 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Polynomial":
        result = cls.constant(1)
        for r in roots:
            result = result * cls.linear(r)
        return result

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def root_multiplicity(self, root: Scalar) -> int:
        """Multiplicity of `root` as a zero of self (0 if not a root)."""
        if self.is_zero():
            raise ValueError("zero polynomial has no finite root multiplicity")
        count = 0
        p = self
        factor = Polynomial.linear(root)
        while p.degree > 0:
            quotient, remainder = divmod(p, factor)
            if not remainder.is_zero():
                break
            p = quotient
            count += 1
        return count

    # ------------------------------------------------------------------
    # evaluation
    # ------------------------------------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out: List[Fraction] = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(tuple(c * a for a in self.coeffs))

    # ------------------------------------------------------------------
    # sympy bridge
    # ------------------------------------------------------------------

    def to_sympy(self) -> Poly:
        """The same polynomial as a `sympy.Poly` in x over QQ."""
        dense = [to_sympy_rational(c) for c in reversed(self.coeffs)] or [sympy.Integer(0)]
        return Poly(dense, X, domain=QQ)

    @classmethod
    def from_sympy(cls, p: Poly) -> "Polynomial":
        return cls(tuple(from_sympy_rational(c) for c in reversed(p.all_coeffs())))

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = self.to_sympy().div(other.to_sympy())
        return Polynomial.from_sympy(quotient), Polynomial.from_sympy(remainder)

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial.from_sympy(self.to_sympy().monic())

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor over Q."""
        other = self._coerce(other)
        if self.is_zero() and other.is_zero():
            return Polynomial()
        return Polynomial.from_sympy(self.to_sympy().gcd(other.to_sympy())).monic()

    def cancel(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """self/other in lowest terms, denominator monic."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("cancel against the zero polynomial")
        if self.is_zero():
            return Polynomial(), Polynomial.constant(1)
        num, den = self.to_sympy().cancel(other.to_sympy(), include=True)
        num, den = Polynomial.from_sympy(num), Polynomial.from_sympy(den)
        lead = den.leading
        return num.scale(1 / lead), den.scale(1 / lead)

    def dilate(self, c: Scalar) -> "Polynomial":
        """Return x -> self(c*x)."""
        c = Fraction(c)
        factor = Fraction(1)
        out = []
        for a in self.coeffs:
            out.append(a * factor)
            factor *= c
        return Polynomial(tuple(out))

    # ------------------------------------------------------------------
    # display
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out
