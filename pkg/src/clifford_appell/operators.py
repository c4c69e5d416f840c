"""Left-acting differential operators of Clifford analysis on polynomials.

``dirac`` is ``sum_j e_j d/dx_j`` over the space variables, ``cauchy_riemann``
adds ``d/dx_0``.  Generators act on coefficients by left multiplication.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import _product_sign
from .errors import DependsOnX0Error
from .poly import CliffordPolynomial, _build, partial_derivative, poly_add, poly_scale, poly_sum


def dirac(p: CliffordPolynomial) -> CliffordPolynomial:
    """Dirac operator on R^m, ``sum_{j=1}^m e_j d/dx_j p``."""
    m = p.m
    acc: dict = {}
    for exp, coeff in p.terms.items():
        for j in range(1, m + 1):
            e = exp[j]
            if not e:
                continue
            new = exp[:j] + (e - 1,) + exp[j + 1:]
            g = 1 << (j - 1)
            slot = acc.setdefault(new, {})
            for mask, value in coeff.coeffs.items():
                term = value * e
                if _product_sign(g, mask) < 0:
                    term = -term
                slot[mask ^ g] = slot.get(mask ^ g, 0) + term
    return _build(m, acc)


def cauchy_riemann(p: CliffordPolynomial) -> CliffordPolynomial:
    """Generalized Cauchy-Riemann operator ``d/dx_0 + dirac``."""
    return poly_add(partial_derivative(p, 0), dirac(p))


def cauchy_riemann_conjugate(p: CliffordPolynomial) -> CliffordPolynomial:
    """Conjugate operator ``d/dx_0 - dirac``."""
    return poly_add(partial_derivative(p, 0), poly_scale(dirac(p), -1))


def hypercomplex_derivative(p: CliffordPolynomial) -> CliffordPolynomial:
    """Half the conjugate Cauchy-Riemann operator.

    Defined for every polynomial.  On monogenic input it coincides with
    ``d/dx_0`` and with ``-dirac``.
    """
    return poly_scale(cauchy_riemann_conjugate(p), Fraction(1, 2))


def laplacian(p: CliffordPolynomial) -> CliffordPolynomial:
    return poly_sum(
        (partial_derivative(partial_derivative(p, j), j) for j in range(p.m + 1)), p.m)


def is_monogenic(p: CliffordPolynomial) -> bool:
    return cauchy_riemann(p).is_zero()


def is_dirac_monogenic(p: CliffordPolynomial) -> bool:
    """Exact test for ``dirac(p) == 0``; ``p`` must not depend on x_0."""
    if p.involves_x0():
        raise DependsOnX0Error("Dirac monogenicity is only defined for polynomials in x_1..x_m")
    return dirac(p).is_zero()
