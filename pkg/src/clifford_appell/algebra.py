"""Exact arithmetic in the Clifford algebra R_{0,m}.

Basis blades are encoded as bitmasks: bit ``j - 1`` set means the generator
``e_j`` occurs.  The mask ``0`` is the identity blade ``e_∅ = 1``.  All
generators square to ``-1``.

Coefficients are :class:`fractions.Fraction` throughout; there is no floating
point anywhere in the package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import DimensionError, ParseError

Rational = Fraction
Scalar = Union[int, Fraction]

DEFAULT_MAX_GENERATORS = 8
_max_generators = DEFAULT_MAX_GENERATORS


def get_max_generators() -> int:
    return _max_generators


def set_max_generators(cap: int) -> int:
    """Change the largest accepted ``m`` and return the previous cap."""
    global _max_generators
    if not isinstance(cap, int) or cap < 1:
        raise ValueError(f"cap must be a positive integer, got {cap!r}")
    previous, _max_generators = _max_generators, cap
    return previous


def check_dim(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise DimensionError(f"m must be an integer, got {m!r}")
    if not 1 <= m <= _max_generators:
        raise DimensionError(
            f"m must lie in 1..{_max_generators}, got {m}")
    return m


# --------------------------------------------------------------------------
# blades
# --------------------------------------------------------------------------

def blade_from_indices(indices: Iterable[int], m: int | None = None) -> int:
    """Bitmask of the blade ``e_{j1...jk}``; indices must be strictly ascending."""
    mask = 0
    last = 0
    for j in indices:
        if j <= last:
            raise ValueError(f"blade indices must be strictly ascending and >= 1: {indices!r}")
        if m is not None and j > m:
            raise ValueError(f"blade index {j} out of range 1..{m}")
        mask |= 1 << (j - 1)
        last = j
    return mask


def blade_indices(mask: int) -> Tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def blade_grade(mask: int) -> int:
    return mask.bit_count()


def blade_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    return mask.bit_count(), blade_indices(mask)


def _check_blade(m: int, mask: int) -> None:
    if isinstance(mask, bool) or not isinstance(mask, int) or mask < 0 or mask >> m:
        raise ValueError(f"blade {mask!r} has an index outside 1..{m}")


@lru_cache(maxsize=1 << 16)
def _product_sign(a: int, b: int) -> int:
    # transpositions needed to move every generator of b past the larger
    # generators of a, then one factor -1 per squared generator
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    swaps += (a & b).bit_count()
    return -1 if swaps & 1 else 1


def blade_product(m: int, a: int, b: int) -> Tuple[int, int]:
    """Geometric product of two basis blades.

    Returns ``(sign, blade)`` with ``e_a e_b = sign * e_blade``.

    >>> blade_product(2, 0b01, 0b01)
    (-1, 0)
    >>> blade_product(2, 0b11, 0b10)
    (-1, 1)
    """
    check_dim(m)
    _check_blade(m, a)
    _check_blade(m, b)
    return _product_sign(a, b), a ^ b


def conjugation_sign(mask: int) -> int:
    """Sign picked up by ``e_A`` under Clifford conjugation, ``(-1)^{g(g+1)/2}``."""
    g = mask.bit_count()
    return -1 if (g * (g + 1) // 2) & 1 else 1


# --------------------------------------------------------------------------
# multivectors
# --------------------------------------------------------------------------

def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


class Multivector:
    """An element ``sum_A a_A e_A`` of R_{0,m} with rational coefficients.

    Instances are immutable.  Zero coefficients are never stored, so the zero
    element has an empty coefficient map.

    Args:
        m: number of generators.
        coeffs: mapping from blade bitmask to an ``int`` or ``Fraction``.
    """

    __slots__ = ("_m", "_coeffs", "_hash")

    def __init__(self, m: int, coeffs: Mapping[int, Scalar] | None = None):
        check_dim(m)
        clean = {}
        for mask, value in (coeffs or {}).items():
            _check_blade(m, mask)
            value = _as_fraction(value)
            if value:
                clean[mask] = value
        self._m = m
        self._coeffs = clean
        self._hash = None

    @classmethod
    def _raw(cls, m: int, coeffs: dict) -> "Multivector":
        # trusted constructor: coeffs already validated and zero-free
        obj = object.__new__(cls)
        obj._m = m
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, m: int) -> "Multivector":
        return cls(m)

    @classmethod
    def scalar(cls, m: int, value: Scalar = 1) -> "Multivector":
        return cls(m, {0: value})

    @classmethod
    def basis(cls, m: int, *indices: int, coeff: Scalar = 1) -> "Multivector":
        """``coeff * e_{indices}``; ``basis(m)`` is the identity."""
        return cls(m, {blade_from_indices(indices, m): coeff})

    @property
    def m(self) -> int:
        return self._m

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, mask: int) -> Fraction:
        return self._coeffs.get(mask, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Nonzero ``(blade, coefficient)`` pairs in canonical blade order."""
        for mask in sorted(self._coeffs, key=blade_sort_key):
            yield mask, self._coeffs[mask]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_scalar(self) -> bool:
        return all(mask == 0 for mask in self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._m == other._m and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._m, frozenset(self._coeffs.items())))
        return self._hash

    def _check_same(self, other: "Multivector") -> None:
        if self._m != other._m:
            raise DimensionError(
                f"multivectors from R_(0,{self._m}) and R_(0,{other._m}) cannot be combined")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
                other = Multivector.scalar(self._m, other)
            else:
                return NotImplemented
        return mv_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector._raw(self._m, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return mv_add(self, -other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return mv_scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return mv_scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return mv_scale(self, 1 / Fraction(other))
        return NotImplemented

    def conjugate(self) -> "Multivector":
        return mv_conjugate(self)

    def to_json(self) -> dict:
        return multivector_to_json(self)

    def __repr__(self) -> str:
        return f"Multivector({self._m}, {format_multivector_text(self)!r})"

    def __str__(self) -> str:
        return format_multivector_text(self)


def mv_add(a: Multivector, b: Multivector) -> Multivector:
    a._check_same(b)
    out = dict(a._coeffs)
    for mask, value in b._coeffs.items():
        total = out.get(mask, 0) + value
        if total:
            out[mask] = total
        else:
            out.pop(mask, None)
    return Multivector._raw(a._m, out)


def mv_scale(a: Multivector, c: Scalar) -> Multivector:
    c = _as_fraction(c)
    if not c:
        return Multivector._raw(a._m, {})
    return Multivector._raw(a._m, {k: v * c for k, v in a._coeffs.items()})


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product, bilinear extension of :func:`blade_product`."""
    a._check_same(b)
    out: dict = {}
    for ma, ca in a._coeffs.items():
        for mb, cb in b._coeffs.items():
            mask = ma ^ mb
            term = ca * cb
            if _product_sign(ma, mb) < 0:
                term = -term
            out[mask] = out.get(mask, 0) + term
    return Multivector._raw(a._m, {k: v for k, v in out.items() if v})


def mv_left_generator(j: int, a: Multivector) -> Multivector:
    """``e_j * a`` without going through the general product."""
    g = 1 << (j - 1)
    out = {}
    for mask, value in a._coeffs.items():
        out[mask ^ g] = -value if _product_sign(g, mask) < 0 else value
    return Multivector._raw(a._m, out)


def mv_conjugate(a: Multivector) -> Multivector:
    return Multivector._raw(
        a._m, {k: (-v if conjugation_sign(k) < 0 else v) for k, v in a._coeffs.items()})


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; integers are accepted as JSON numbers too."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ParseError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def blade_key(mask: int) -> str:
    return ",".join(str(j) for j in blade_indices(mask))


def parse_blade_key(key: str, m: int) -> int:
    if not isinstance(key, str):
        raise ParseError(f"blade key must be a string, got {key!r}")
    if key == "":
        return 0
    try:
        indices = [int(part) for part in key.split(",")]
        return blade_from_indices(indices, m)
    except ValueError as exc:
        raise ParseError(f"bad blade key {key!r} for m={m}: {exc}") from None


def multivector_to_json(a: Multivector) -> dict:
    return {blade_key(mask): format_rational(value) for mask, value in a.items()}


def multivector_from_json(m: int, obj) -> Multivector:
    if not isinstance(obj, dict):
        raise ParseError(f"multivector must be a JSON object, got {type(obj).__name__}")
    coeffs: dict = {}
    for key, value in obj.items():
        mask = parse_blade_key(key, m)
        coeffs[mask] = coeffs.get(mask, 0) + parse_rational(value)
    return Multivector(m, coeffs)


def _blade_text(mask: int) -> str:
    return "e" + "".join(str(j) for j in blade_indices(mask))


def format_multivector_text(a: Multivector) -> str:
    """Plain text form such as ``1 - 3/2*e12``."""
    if not a:
        return "0"
    pieces = []
    for mask, value in a.items():
        sign = "-" if value < 0 else "+"
        mag = abs(value)
        if mask == 0:
            body = format_rational_short(mag)
        elif mag == 1:
            body = _blade_text(mask)
        else:
            body = f"{format_rational_short(mag)}*{_blade_text(mask)}"
        pieces.append((sign, body))
    return join_signed(pieces)


def format_rational_short(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def join_signed(pieces) -> str:
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
