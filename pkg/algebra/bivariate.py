"""
Sparse bivariate polynomials in (x, y); only what the Christoffel-Darboux
check needs.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from .polynomial import Polynomial, Scalar

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class BivariatePolynomial:
    """Map (i, j) -> coefficient of x^i y^j, zero terms dropped."""

    terms: Dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {k: Fraction(v) for k, v in self.terms.items() if v != 0}
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def outer(cls, px: Polynomial, py: Polynomial) -> "BivariatePolynomial":
        """px(x) * py(y)."""
        terms: Dict[Monomial, Fraction] = {}
        for i, a in enumerate(px.coeffs):
            for j, b in enumerate(py.coeffs):
                if a and b:
                    terms[(i, j)] = a * b
        return cls(terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return BivariatePolynomial(terms)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + (-other)

    def scale(self, c: Scalar) -> "BivariatePolynomial":
        c = Fraction(c)
        return BivariatePolynomial({k: c * v for k, v in self.terms.items()})

    def times_x_minus_y(self) -> "BivariatePolynomial":
        terms: Dict[Monomial, Fraction] = {}
        for (i, j), v in self.terms.items():
            terms[(i + 1, j)] = terms.get((i + 1, j), Fraction(0)) + v
            terms[(i, j + 1)] = terms.get((i, j + 1), Fraction(0)) - v
        return BivariatePolynomial(terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))
