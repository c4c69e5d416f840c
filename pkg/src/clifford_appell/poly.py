"""Sparse polynomials in x_0, x_1, ..., x_m with R_{0,m} coefficients.

A monomial is a tuple of ``m + 1`` exponents, position ``j`` belonging to
``x_j``.  The variables are real, so they commute with every blade and the
coefficient can sit on one side of the monomial without loss.  Products of
coefficients keep factor order, which makes :func:`poly_mul` noncommutative.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, List, Mapping, Sequence, Tuple

from .algebra import (
    Multivector,
    Scalar,
    _as_fraction,
    _blade_text,
    _product_sign,
    blade_indices,
    check_dim,
    format_multivector_text,
    format_rational_short,
    join_signed,
    multivector_from_json,
    multivector_to_json,
    parse_rational,
)
from .errors import DimensionError, ParseError

Monomial = Tuple[int, ...]


class _ZeroDegree:
    """Degree marker carried by the zero polynomial instead of a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO_DEGREE"

    def __reduce__(self):
        return (_ZeroDegree, ())


ZERO_DEGREE = _ZeroDegree()


def monomial_sort_key(exp: Monomial):
    """Graded lexicographic order: total degree ascending, then the exponent
    vector lexicographically descending (so ``x_0`` leads within a degree)."""
    return sum(exp), tuple(-e for e in exp)


def _check_monomial(m: int, exp) -> Monomial:
    exp = tuple(exp)
    if len(exp) != m + 1:
        raise ValueError(f"monomial {exp!r} must have {m + 1} exponents")
    for e in exp:
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise ValueError(f"monomial {exp!r} has an invalid exponent {e!r}")
    return exp


def _build(m: int, acc: dict) -> "CliffordPolynomial":
    # acc: monomial -> {blade: Fraction}; zero entries are dropped here
    terms = {}
    for exp, coeffs in acc.items():
        clean = {k: v for k, v in coeffs.items() if v}
        if clean:
            terms[exp] = Multivector._raw(m, clean)
    return CliffordPolynomial._raw(m, terms)


class CliffordPolynomial:
    """Finite sum ``sum_alpha x^alpha c_alpha`` with multivector coefficients.

    Immutable.  The zero polynomial has no terms.
    """

    __slots__ = ("_m", "_terms", "_hash")

    def __init__(self, m: int, terms: Mapping[Sequence[int], Multivector] | None = None):
        check_dim(m)
        acc: dict = {}
        for exp, coeff in (terms or {}).items():
            exp = _check_monomial(m, exp)
            if not isinstance(coeff, Multivector):
                coeff = Multivector.scalar(m, coeff)
            if coeff.m != m:
                raise DimensionError(f"coefficient lives in R_(0,{coeff.m}), expected m={m}")
            slot = acc.setdefault(exp, {})
            for mask, value in coeff.coeffs.items():
                slot[mask] = slot.get(mask, 0) + value
        built = _build(m, acc)
        self._m = m
        self._terms = built._terms
        self._hash = None

    @classmethod
    def _raw(cls, m: int, terms: dict) -> "CliffordPolynomial":
        obj = object.__new__(cls)
        obj._m = m
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors ------------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "CliffordPolynomial":
        return cls(m)

    @classmethod
    def constant(cls, value: Multivector | Scalar, m: int | None = None) -> "CliffordPolynomial":
        if isinstance(value, Multivector):
            m = value.m
        else:
            if m is None:
                raise ValueError("m is required for a scalar constant")
            value = Multivector.scalar(m, value)
        return cls(m, {(0,) * (m + 1): value})

    @classmethod
    def monomial(cls, m: int, exp: Sequence[int],
                 coeff: Multivector | Scalar = 1) -> "CliffordPolynomial":
        return cls(m, {tuple(exp): coeff})

    @classmethod
    def variable(cls, m: int, j: int, coeff: Multivector | Scalar = 1) -> "CliffordPolynomial":
        """``x_j * coeff`` for ``0 <= j <= m``."""
        _check_variable(m, j)
        exp = [0] * (m + 1)
        exp[j] = 1
        return cls.monomial(m, exp, coeff)

    # access ------------------------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    @property
    def terms(self) -> Mapping[Monomial, Multivector]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Multivector]]:
        for exp in sorted(self._terms, key=monomial_sort_key):
            yield exp, self._terms[exp]

    def coefficient(self, exp: Sequence[int]) -> Multivector:
        return self._terms.get(tuple(exp), Multivector._raw(self._m, {}))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self):
        """Largest total degree, or :data:`ZERO_DEGREE` for the zero polynomial."""
        if not self._terms:
            return ZERO_DEGREE
        return max(sum(exp) for exp in self._terms)

    def involves_x0(self) -> bool:
        return any(exp[0] for exp in self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self._m == other._m and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._m, frozenset(self._terms.items())))
        return self._hash

    # arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CliffordPolynomial):
            return other
        if isinstance(other, Multivector):
            return CliffordPolynomial.constant(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CliffordPolynomial.constant(other, self._m)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return poly_scale(self, other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return poly_scale(self, other)
        if isinstance(other, Multivector):
            return poly_mul(CliffordPolynomial.constant(other), self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return poly_scale(self, 1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = CliffordPolynomial.constant(1, self._m)
        for _ in range(n):
            out = poly_mul(out, self)
        return out

    def to_json(self) -> dict:
        return poly_to_json(self)

    def __str__(self) -> str:
        return format_poly_text(self)

    def __repr__(self) -> str:
        return f"CliffordPolynomial({self._m}, {format_poly_text(self)!r})"


def _check_same(p: CliffordPolynomial, q: CliffordPolynomial) -> None:
    if p.m != q.m:
        raise DimensionError(f"polynomials over m={p.m} and m={q.m} cannot be combined")


def _check_variable(m: int, j: int) -> None:
    if isinstance(j, bool) or not isinstance(j, int) or not 0 <= j <= m:
        raise ValueError(f"variable index must lie in 0..{m}, got {j!r}")


def poly_add(p: CliffordPolynomial, q: CliffordPolynomial) -> CliffordPolynomial:
    _check_same(p, q)
    acc = {exp: dict(c.coeffs) for exp, c in p._terms.items()}
    for exp, coeff in q._terms.items():
        slot = acc.setdefault(exp, {})
        for mask, value in coeff.coeffs.items():
            slot[mask] = slot.get(mask, 0) + value
    return _build(p.m, acc)


def poly_sum(polys, m: int) -> CliffordPolynomial:
    acc: dict = {}
    for p in polys:
        if p.m != m:
            raise DimensionError(f"polynomial over m={p.m} in a sum over m={m}")
        for exp, coeff in p._terms.items():
            slot = acc.setdefault(exp, {})
            for mask, value in coeff.coeffs.items():
                slot[mask] = slot.get(mask, 0) + value
    return _build(m, acc)


def poly_scale(p: CliffordPolynomial, c: Scalar) -> CliffordPolynomial:
    c = _as_fraction(c)
    if not c:
        return CliffordPolynomial._raw(p.m, {})
    return CliffordPolynomial._raw(
        p.m, {exp: Multivector._raw(p.m, {k: v * c for k, v in coeff.coeffs.items()})
              for exp, coeff in p._terms.items()})


def poly_mul(p: CliffordPolynomial, q: CliffordPolynomial) -> CliffordPolynomial:
    _check_same(p, q)
    acc: dict = {}
    for ea, ca in p._terms.items():
        for eb, cb in q._terms.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            slot = acc.setdefault(exp, {})
            for ma, va in ca.coeffs.items():
                for mb, vb in cb.coeffs.items():
                    term = va * vb
                    if _product_sign(ma, mb) < 0:
                        term = -term
                    mask = ma ^ mb
                    slot[mask] = slot.get(mask, 0) + term
    return _build(p.m, acc)


def partial_derivative(p: CliffordPolynomial, j: int) -> CliffordPolynomial:
    """``d/dx_j`` by the power rule, ``0 <= j <= m``."""
    _check_variable(p.m, j)
    terms = {}
    for exp, coeff in p._terms.items():
        e = exp[j]
        if e:
            new = exp[:j] + (e - 1,) + exp[j + 1:]
            terms[new] = Multivector._raw(p.m, {k: v * e for k, v in coeff.coeffs.items()})
    return CliffordPolynomial._raw(p.m, terms)


def restrict_x0(p: CliffordPolynomial) -> CliffordPolynomial:
    """Substitute ``x_0 = 0``."""
    return CliffordPolynomial._raw(
        p.m, {exp: c for exp, c in p._terms.items() if exp[0] == 0})


def homogeneous_components(p: CliffordPolynomial) -> List[Tuple[int, CliffordPolynomial]]:
    """Split ``p`` by total degree; ascending degree, zero parts omitted."""
    groups: dict = {}
    for exp, coeff in p._terms.items():
        groups.setdefault(sum(exp), {})[exp] = coeff
    return [(d, CliffordPolynomial._raw(p.m, groups[d])) for d in sorted(groups)]


def homogeneous_degree(p: CliffordPolynomial):
    """Common total degree of all monomials.

    Returns :data:`ZERO_DEGREE` for the zero polynomial and ``None`` when the
    monomials have different degrees.
    """
    if not p._terms:
        return ZERO_DEGREE
    degrees = {sum(exp) for exp in p._terms}
    return degrees.pop() if len(degrees) == 1 else None


def is_homogeneous(p: CliffordPolynomial, degree: int | None = None) -> bool:
    """True if ``p`` is homogeneous (of ``degree``, when given).

    The zero polynomial belongs to every homogeneous space.
    """
    d = homogeneous_degree(p)
    if d is ZERO_DEGREE:
        return True
    if d is None:
        return False
    return degree is None or d == degree


def evaluate(p: CliffordPolynomial, point: Sequence[Scalar]) -> Multivector:
    """Exact value of ``p`` at ``(x_0, ..., x_m)``."""
    point = [_as_fraction(v) for v in point]
    if len(point) != p.m + 1:
        raise ValueError(f"point must have {p.m + 1} coordinates, got {len(point)}")
    acc: dict = {}
    for exp, coeff in p._terms.items():
        weight = Fraction(1)
        for x, e in zip(point, exp):
            if e:
                weight *= x ** e
        if weight:
            for mask, value in coeff.coeffs.items():
                acc[mask] = acc.get(mask, 0) + weight * value
    return Multivector(p.m, acc)


# --------------------------------------------------------------------------
# serialization and rendering
# --------------------------------------------------------------------------

def poly_to_json(p: CliffordPolynomial) -> dict:
    return {
        "m": p.m,
        "terms": [{"exp": list(exp), "coeff": multivector_to_json(c)} for exp, c in p.items()],
    }


def poly_from_json(obj, m: int | None = None) -> CliffordPolynomial:
    """Inverse of :func:`poly_to_json`.

    If ``m`` is given it must agree with the ``"m"`` field.
    """
    if not isinstance(obj, dict) or set(obj) != {"m", "terms"}:
        raise ParseError('polynomial must be an object with exactly the keys "m" and "terms"')
    dim = obj["m"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise ParseError(f'"m" must be an integer, got {dim!r}')
    if m is not None and dim != m:
        raise ParseError(f"polynomial has m={dim} but m={m} was requested")
    try:
        check_dim(dim)
    except DimensionError as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(obj["terms"], list):
        raise ParseError('"terms" must be a list')
    acc: dict = {}
    for entry in obj["terms"]:
        if not isinstance(entry, dict) or set(entry) != {"exp", "coeff"}:
            raise ParseError('each term must be an object with keys "exp" and "coeff"')
        if not isinstance(entry["exp"], list):
            raise ParseError(f"exponent vector must be a list, got {entry['exp']!r}")
        try:
            exp = _check_monomial(dim, entry["exp"])
        except ValueError as exc:
            raise ParseError(f"bad exponent vector {entry['exp']!r}: {exc}") from None
        coeff = multivector_from_json(dim, entry["coeff"])
        slot = acc.setdefault(exp, {})
        for mask, value in coeff.coeffs.items():
            slot[mask] = slot.get(mask, 0) + value
    return _build(dim, acc)


def scalar_from_json(value, m: int) -> CliffordPolynomial:
    return CliffordPolynomial.constant(parse_rational(value), m)


def _monomial_text(exp: Monomial) -> str:
    return "*".join(f"x{j}" if e == 1 else f"x{j}^{e}" for j, e in enumerate(exp) if e)


def format_poly_text(p: CliffordPolynomial) -> str:
    """Plain ascii rendering, e.g. ``x0 + 1/3*x1*e1 - (1 + e12)*x2^2``."""
    if not p:
        return "0"
    pieces = []
    for exp, coeff in p.items():
        mono = _monomial_text(exp)
        if len(coeff) == 1 or not mono:
            for mask, value in coeff.items():
                factors = []
                mag = abs(value)
                if mag != 1 or (not mono and mask == 0):
                    factors.append(format_rational_short(mag))
                if mono:
                    factors.append(mono)
                if mask:
                    factors.append(_blade_text(mask))
                pieces.append(("-" if value < 0 else "+", "*".join(factors)))
        else:
            pieces.append(("+", f"({format_multivector_text(coeff)})*{mono}"))
    return join_signed(pieces)


def _latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return rf"\frac{{{value.numerator}}}{{{value.denominator}}}"


def _latex_blade(mask: int) -> str:
    return "e_{" + "".join(str(j) for j in blade_indices(mask)) + "}"


def _latex_monomial(exp: Monomial) -> str:
    return " ".join(f"x_{{{j}}}" if e == 1 else f"x_{{{j}}}^{{{e}}}" for j, e in enumerate(exp) if e)


def _latex_multivector(coeff: Multivector) -> str:
    pieces = []
    for mask, value in coeff.items():
        mag = abs(value)
        if mask == 0:
            body = _latex_rational(mag)
        elif mag == 1:
            body = _latex_blade(mask)
        else:
            body = f"{_latex_rational(mag)} {_latex_blade(mask)}"
        pieces.append(("-" if value < 0 else "+", body))
    return join_signed(pieces)


def format_poly_latex(p: CliffordPolynomial) -> str:
    """LaTeX rendering with blades as ``e_{12}``; one-way, never parsed back."""
    if not p:
        return "0"
    pieces = []
    for exp, coeff in p.items():
        mono = _latex_monomial(exp)
        if len(coeff) == 1 or not mono:
            for mask, value in coeff.items():
                factors = []
                mag = abs(value)
                if mag != 1 or (not mono and mask == 0):
                    factors.append(_latex_rational(mag))
                if mono:
                    factors.append(mono)
                if mask:
                    factors.append(_latex_blade(mask))
                pieces.append(("-" if value < 0 else "+", " ".join(factors)))
        else:
            pieces.append(("+", rf"\left({_latex_multivector(coeff)}\right) {mono}"))
    return join_signed(pieces)
