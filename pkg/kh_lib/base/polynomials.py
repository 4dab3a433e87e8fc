"""
Laurent polynomials with integer coefficients as SymPy expressions.

Jones polynomials and graded Euler characteristics are expanded SymPy
expressions in ``q``; the Kauffman bracket uses ``A``. Expanded expressions
with integer coefficients compare equal exactly when they are the same
polynomial.
"""

from typing import Iterable

import sympy as sp

q = sp.Symbol("q", positive=True)
"""Quantum grading variable."""

A = sp.Symbol("A", positive=True)
"""Kauffman bracket variable."""


def from_terms(terms: Iterable[tuple[int, int]], variable: sp.Symbol = q) -> sp.Expr:
    """Sum of ``coefficient * variable**exponent`` over ``(exponent, coefficient)`` pairs.

    Example:
        >>> from_terms([(1, 1), (-1, 1), (1, 1)])
        2*q + 1/q
    """
    return sp.expand(sp.Add(*(sp.Integer(c) * variable ** int(e) for e, c in terms)))


def laurent_terms(expr: sp.Expr, variable: sp.Symbol = q) -> dict[int, int]:
    """Nonzero coefficients of a Laurent polynomial keyed by exponent.

    Raises:
        ValueError: If ``expr`` has a non-integer exponent or coefficient, or
            depends on another symbol.

    Example:
        >>> laurent_terms(q**3 - 2/q)
        {-1: -2, 3: 1}
    """
    coeffs: dict[int, int] = {}
    for term in sp.Add.make_args(sp.expand(expr)):
        coefficient, exponent = term.as_coeff_exponent(variable)
        if coefficient == 0:
            continue
        if not (coefficient.is_Integer and exponent.is_Integer):
            raise ValueError(f"{term} is not an integer Laurent monomial in {variable}")
        coeffs[int(exponent)] = coeffs.get(int(exponent), 0) + int(coefficient)
    return {e: c for e, c in sorted(coeffs.items()) if c}


def format_laurent(expr: sp.Expr, variable: sp.Symbol = q) -> str:
    """Text form in increasing exponent order, e.g. ``q^-2 + 2 + q^2``."""
    terms = laurent_terms(expr, variable)
    if not terms:
        return "0"
    parts = []
    for e, c in terms.items():
        if e == 0:
            body = str(abs(c))
        else:
            power = str(variable) if e == 1 else f"{variable}^{e}"
            body = power if abs(c) == 1 else f"{abs(c)}{power}"
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
