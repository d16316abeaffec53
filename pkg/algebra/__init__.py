"""Exact algebra layer: q-context, polynomials, rational functions, q-calculus."""
from .qcontext import QContext
from .polynomial import Polynomial, from_sympy_rational, to_sympy_rational
from .rational_function import RationalFunction, ratfun_identity_equal
from .bivariate import BivariatePolynomial
from .qcalculus import (
    TruncatedProduct,
    dilate,
    dq_apply,
    dq_inverse_apply,
    q_integer,
    q_pochhammer,
)

__all__ = [
    "QContext",
    "Polynomial",
    "from_sympy_rational",
    "to_sympy_rational",
    "RationalFunction",
    "ratfun_identity_equal",
    "BivariatePolynomial",
    "TruncatedProduct",
    "dilate",
    "dq_apply",
    "dq_inverse_apply",
    "q_integer",
    "q_pochhammer",
]
