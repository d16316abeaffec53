"""
Exact univariate rational functions in canonical form.

Canonical form: numerator and denominator coprime, denominator monic.
The zero function is 0/1.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Union

from .polynomial import Polynomial, Scalar


@dataclass(frozen=True)
class RationalFunction:
    """numerator / denominator, canonicalized on construction."""

    numerator: Polynomial
    denominator: Polynomial = Polynomial((1,))

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial.constant(1)
        elif den.degree == 0:
            num, den = num.scale(1 / den.leading), Polynomial.constant(1)
        else:
            num, den = num.cancel(den)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    @classmethod
    def polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p)

    @classmethod
    def simple_pole(cls, residue: Scalar, pole: Scalar, order: int = 1) -> "RationalFunction":
        """residue / (x - pole)^order."""
        return cls(Polynomial.constant(residue), Polynomial.linear(pole) ** order)

    @classmethod
    def coerce(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value)
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as a rational function")

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_constant(self) -> bool:
        return self.denominator.degree == 0 and self.numerator.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.numerator.coefficient(0)

    def pole_orders(self, candidates: Iterable[Scalar]) -> Dict[Fraction, int]:
        """Order of the pole at each candidate point (0 where regular)."""
        return {Fraction(c): self.denominator.root_multiplicity(c) for c in candidates}

    # ------------------------------------------------------------------
    # evaluation and transforms
    # ------------------------------------------------------------------

    def __call__(self, x: Scalar) -> Fraction:
        den = self.denominator(x)
        if den == 0:
            raise ZeroDivisionError(f"pole of {self} at x={x}")
        return self.numerator(x) / den

    def dilate(self, c: Scalar) -> "RationalFunction":
        """x -> self(c*x), re-canonicalized."""
        return RationalFunction(self.numerator.dilate(c), self.denominator.dilate(c))

    def divided_difference(self, a: Scalar) -> "RationalFunction":
        """
        Exact kernel y -> (self(a) - self(y)) / (a - y).

        The numerator self(a)*den(y) - num(y) vanishes at y = a, so the
        division by (y - a) is exact.
        """
        a = Fraction(a)
        fa = self(a)
        top = self.denominator.scale(fa) - self.numerator
        quotient, remainder = divmod(top, Polynomial.linear(a))
        if not remainder.is_zero():
            raise ArithmeticError("divided difference numerator does not vanish at the node")
        return RationalFunction(-quotient, self.denominator)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __add__(self, other) -> "RationalFunction":
        other = self.coerce(other)
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self.coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self.coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.numerator.scale(other), self.denominator)
        other = self.coerce(other)
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __rtruediv__(self, other) -> "RationalFunction":
        return self.coerce(other) / self

    def __str__(self) -> str:
        if self.denominator.degree == 0:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


def ratfun_identity_equal(lhs, rhs) -> bool:
    """
    Exact identity test: clear denominators and compare coefficients.

    Args:
        lhs: RationalFunction, Polynomial or scalar
        rhs: RationalFunction, Polynomial or scalar

    Returns:
        True iff lhs - rhs is the zero rational function
    """
    lhs = RationalFunction.coerce(lhs)
    rhs = RationalFunction.coerce(rhs)
    cleared = lhs.numerator * rhs.denominator - rhs.numerator * lhs.denominator
    return cleared.is_zero()
