"""Shifted Appell sequences of monogenic polynomials.

The pipeline for a monogenic seed ``P`` of degree ``k`` is

1. restrict to ``x_0 = 0``, giving a homogeneous polynomial in x_1..x_m;
2. split it as ``sum_nu xvec^nu P_{k-nu}`` with every ``P_{k-nu}`` annihilated
   by the Dirac operator (Fischer decomposition);
3. send the ``nu``-th piece to the sequence
   ``M_n = lambda_n * CK[xvec^(nu+n) P_{k-nu}]`` and sum over ``nu``.

``xvec`` is the vector variable ``x_1 e_1 + ... + x_m e_m`` and ``CK`` the
Cauchy-Kovalevskaya extension.  Seeds that are not homogeneous are handled
one homogeneous part at a time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Tuple

from .algebra import Multivector, check_dim
from .errors import DependsOnX0Error, NotHomogeneousError, NotMonogenicError
from .operators import cauchy_riemann, dirac
from .poly import (
    CliffordPolynomial,
    homogeneous_components,
    is_homogeneous,
    poly_mul,
    poly_scale,
    poly_sum,
    restrict_x0,
)


def _check_nonneg(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
    return value


# --------------------------------------------------------------------------
# coefficients
# --------------------------------------------------------------------------

def beta(m: int, k: int, n: int) -> int:
    """Factor in ``dirac(xvec^n P_k) = -beta * xvec^(n-1) P_k``.

    ``n`` for even ``n`` and ``2k + m + n - 1`` for odd ``n``.
    """
    check_dim(m)
    _check_nonneg("k", k)
    _check_nonneg("n", n)
    if n == 0:
        raise ValueError("beta is defined for n >= 1")
    return n if n % 2 == 0 else 2 * k + m + n - 1


def mu(m: int, k: int, nu: int, j: int) -> int:
    """``prod_{s=nu-j+1}^{nu} beta(m, k - nu, s)``, the empty product for ``j = 0``."""
    _check_nonneg("j", j)
    _check_nonneg("nu", nu)
    _check_nonneg("k", k)
    if nu > k:
        raise ValueError(f"nu={nu} exceeds k={k}")
    if j > nu:
        raise ValueError(f"j={j} exceeds nu={nu}")
    out = 1
    for s in range(nu - j + 1, nu + 1):
        out *= beta(m, k - nu, s)
    return out


def lambda_coeff(m: int, k: int, nu: int, n: int) -> Fraction:
    """Normalisation ``n! / prod_{s=1}^{n} beta(m, k - nu, nu + s)``."""
    _check_nonneg("k", k)
    _check_nonneg("nu", nu)
    _check_nonneg("n", n)
    if nu > k:
        raise ValueError(f"nu={nu} exceeds k={k}")
    denominator = 1
    for s in range(1, n + 1):
        denominator *= beta(m, k - nu, nu + s)
    return Fraction(factorial(n), denominator)


# --------------------------------------------------------------------------
# vector variable and CK extension
# --------------------------------------------------------------------------

def vector_variable(m: int) -> CliffordPolynomial:
    """``xvec = x_1 e_1 + ... + x_m e_m``."""
    check_dim(m)
    return CliffordPolynomial(m, {
        tuple(1 if i == j else 0 for i in range(m + 1)): Multivector.basis(m, j)
        for j in range(1, m + 1)})


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=256)
def vector_power(m: int, n: int) -> CliffordPolynomial:
    """``xvec^n`` in closed form.

    Even powers are the scalars ``(-1)^l |x|^(2l)``; odd powers are
    ``xvec`` times the preceding even power.
    """
    check_dim(m)
    _check_nonneg("n", n)
    half = n // 2
    sign = -1 if half % 2 else 1
    terms = {}
    for parts in _compositions(half, m):
        coeff = factorial(half)
        for a in parts:
            coeff //= factorial(a)
        terms[(0,) + tuple(2 * a for a in parts)] = Multivector.scalar(m, sign * coeff)
    even = CliffordPolynomial(m, terms)
    if n % 2 == 0:
        return even
    return poly_mul(vector_variable(m), even)


def _shift_x0(p: CliffordPolynomial, j: int, c: Fraction) -> CliffordPolynomial:
    # c * x_0^j * p
    return CliffordPolynomial._raw(p.m, {
        (exp[0] + j,) + exp[1:]: Multivector._raw(p.m, {k: v * c for k, v in coeff.coeffs.items()})
        for exp, coeff in p.terms.items()})


def ck_extension(g: CliffordPolynomial) -> CliffordPolynomial:
    """Monogenic extension of a polynomial in x_1..x_m to R^{m+1}.

    Computes ``sum_j (-x_0)^j / j! * dirac^j(g)``.  The series stops after
    ``deg g + 1`` terms since each Dirac application lowers the degree.
    """
    if g.involves_x0():
        raise DependsOnX0Error("the CK extension takes a polynomial in x_1..x_m only")
    pieces = [g]
    current = g
    j = 0
    while True:
        current = dirac(current)
        if current.is_zero():
            break
        j += 1
        pieces.append(_shift_x0(current, j, Fraction((-1) ** j, factorial(j))))
    return poly_sum(pieces, g.m)


# --------------------------------------------------------------------------
# Fischer decomposition
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FischerComponents:
    """Pieces ``P_k, P_{k-1}, ..., P_0`` with ``p = sum_nu xvec^nu P_{k-nu}``.

    ``components[nu]`` is annihilated by the Dirac operator and is zero or
    homogeneous of degree ``k - nu``.
    """

    m: int
    k: int
    components: Tuple[CliffordPolynomial, ...]

    def __post_init__(self):
        if len(self.components) != self.k + 1:
            raise ValueError(f"expected {self.k + 1} components, got {len(self.components)}")

    def reconstruct(self) -> CliffordPolynomial:
        return poly_sum(
            (poly_mul(vector_power(self.m, nu), piece)
             for nu, piece in enumerate(self.components) if piece), self.m)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, nu: int) -> CliffordPolynomial:
        return self.components[nu]


def _fischer(p: CliffordPolynomial, k: int) -> Tuple[CliffordPolynomial, ...]:
    m = p.m
    if k == 0:
        return (p,)
    # dirac(xvec^nu P_{k-nu}) = -beta_{k-nu}(nu) xvec^(nu-1) P_{k-nu}, so the
    # decomposition of dirac(p) carries every component but the first
    lower = _fischer(dirac(p), k - 1)
    rest = tuple(
        poly_scale(lower[nu - 1], Fraction(-1, beta(m, k - nu, nu)))
        for nu in range(1, k + 1))
    head = poly_sum(
        [p] + [poly_scale(poly_mul(vector_power(m, nu), piece), -1)
               for nu, piece in enumerate(rest, start=1) if piece], m)
    return (head,) + rest


def fischer_decompose(p: CliffordPolynomial, k: int) -> FischerComponents:
    """Split a homogeneous degree ``k`` polynomial in x_1..x_m as
    ``sum_nu xvec^nu P_{k-nu}`` with Dirac-monogenic ``P_{k-nu}``.

    Raises:
        DependsOnX0Error: ``p`` involves ``x_0``.
        NotHomogeneousError: ``p`` is not zero or homogeneous of degree ``k``.
    """
    _check_nonneg("k", k)
    if p.involves_x0():
        raise DependsOnX0Error("the Fischer decomposition takes a polynomial in x_1..x_m only")
    if not is_homogeneous(p, k):
        raise NotHomogeneousError(f"polynomial is not homogeneous of degree {k}")
    return FischerComponents(p.m, k, _fischer(p, k))


# --------------------------------------------------------------------------
# sequence terms
# --------------------------------------------------------------------------

def _check_piece(m: int, k: int, nu: int, n: int, piece: CliffordPolynomial) -> None:
    _check_nonneg("k", k)
    _check_nonneg("nu", nu)
    _check_nonneg("n", n)
    if nu > k:
        raise ValueError(f"nu={nu} exceeds k={k}")
    if piece.m != m:
        raise ValueError(f"polynomial has m={piece.m}, expected m={m}")
    if piece.involves_x0():
        raise DependsOnX0Error("the monogenic piece must be a polynomial in x_1..x_m")
    if not is_homogeneous(piece, k - nu):
        raise NotHomogeneousError(f"the monogenic piece must be homogeneous of degree {k - nu}")
    residual = dirac(piece)
    if residual:
        raise NotMonogenicError("the piece is not annihilated by the Dirac operator", residual)


def _appell_term(m, k, nu, n, piece):
    if piece.is_zero():
        return piece
    inner = poly_mul(vector_power(m, nu + n), piece)
    return poly_scale(ck_extension(inner), lambda_coeff(m, k, nu, n))


def appell_term(m: int, k: int, nu: int, n: int, piece: CliffordPolynomial) -> CliffordPolynomial:
    """``lambda_n * CK[xvec^(nu+n) piece]`` for a Dirac-monogenic ``piece`` of
    degree ``k - nu``.

    The result is homogeneous of degree ``k + n``, monogenic, and its
    hypercomplex derivative is ``n`` times the term for ``n - 1``.
    """
    _check_piece(m, k, nu, n, piece)
    return _appell_term(m, k, nu, n, piece)


def appell_term_closed_form(m: int, k: int, nu: int, n: int,
                            piece: CliffordPolynomial) -> CliffordPolynomial:
    """Same polynomial as :func:`appell_term`, assembled from the explicit
    expansion in powers of ``x_0`` instead of through the CK series."""
    _check_piece(m, k, nu, n, piece)
    if n == 0:
        weights = [(j, Fraction(mu(m, k, nu, j), factorial(j))) for j in range(nu + 1)]
        scale = 1
    else:
        weights = [(j, lambda_coeff(m, k, nu, n - j) / (factorial(j) * factorial(n - j)))
                   for j in range(n)]
        weights += [(j, Fraction(mu(m, k, nu, j - n), factorial(j)))
                    for j in range(n, nu + n + 1)]
        scale = factorial(n)
    top = nu + n
    radial = poly_sum(
        (_shift_x0(vector_power(m, top - j), j, w * scale) for j, w in weights), m)
    return poly_mul(radial, piece)


# --------------------------------------------------------------------------
# whole sequences
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftedAppellSequence:
    """Terms ``M_0 .. M_N`` with ``M_0 = seed`` and
    ``hypercomplex_derivative(M_n) == n * M_(n-1)``.

    ``decompositions`` holds one :class:`FischerComponents` per nonzero
    homogeneous part of the seed; further terms can be produced from it
    with :meth:`term`.
    """

    seed: CliffordPolynomial
    decompositions: Tuple[FischerComponents, ...]
    terms: Tuple[CliffordPolynomial, ...]

    @property
    def m(self) -> int:
        return self.seed.m

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> CliffordPolynomial:
        return self.terms[n]

    def __iter__(self):
        return iter(self.terms)

    def term(self, n: int) -> CliffordPolynomial:
        if 0 <= n < len(self.terms):
            return self.terms[n]
        return _sequence_term(self.m, self.decompositions, n)


def _sequence_term(m, decompositions, n):
    return poly_sum(
        (_appell_term(m, fc.k, nu, n, piece)
         for fc in decompositions for nu, piece in enumerate(fc.components) if piece), m)


def shifted_appell_sequence(seed: CliffordPolynomial, N: int) -> ShiftedAppellSequence:
    """Build ``M_0 .. M_N`` starting from a monogenic seed.

    Raises:
        NotMonogenicError: ``cauchy_riemann(seed)`` is nonzero; the residual
            is attached to the exception.
    """
    _check_nonneg("N", N)
    residual = cauchy_riemann(seed)
    if residual:
        raise NotMonogenicError("seed is not monogenic", residual)
    decompositions = tuple(
        fischer_decompose(restrict_x0(part), k) for k, part in homogeneous_components(seed))
    terms = tuple(_sequence_term(seed.m, decompositions, n) for n in range(N + 1))
    return ShiftedAppellSequence(seed, decompositions, terms)


# --------------------------------------------------------------------------
# random inputs
# --------------------------------------------------------------------------

def make_rng(seed, *labels) -> random.Random:
    """Deterministic generator; distinct labels give independent streams."""
    return random.Random("/".join(str(part) for part in (seed,) + labels))


def random_rational(rng: random.Random, bound: int = 3) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_homogeneous(m: int, k: int, rng: random.Random, *, max_terms: int = 4,
                       with_x0: bool = False) -> CliffordPolynomial:
    """Nonzero random homogeneous polynomial of degree ``k`` with small
    rational coefficients; in x_1..x_m unless ``with_x0``."""
    check_dim(m)
    first = 0 if with_x0 else 1
    while True:
        terms: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            exp = [0] * (m + 1)
            for _ in range(k):
                exp[rng.randint(first, m)] += 1
            coeff = Multivector(m, {rng.randrange(1 << m): random_rational(rng)})
            exp = tuple(exp)
            terms[exp] = terms[exp] + coeff if exp in terms else coeff
        p = CliffordPolynomial(m, terms)
        if p:
            return p


def random_monogenic(m: int, k: int, rng_seed) -> CliffordPolynomial:
    """CK extension of a random homogeneous degree ``k`` polynomial; the same
    ``rng_seed`` always yields the same polynomial."""
    _check_nonneg("k", k)
    rng = make_rng(rng_seed, "random-monogenic", m, k)
    return ck_extension(random_homogeneous(m, k, rng))
