"""Exact scalar and 2x2 matrix arithmetic.

Everything downstream works over arbitrary-precision rationals; floating
point is forbidden throughout the package. ``fractions.Fraction`` already
keeps values in canonical form (positive denominator, reduced), so it is
the scalar carrier here, wrapped with a strict text codec and the few
matrix helpers the identity engine needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(?:\s*/\s*[0-9]+)?$")


def ensure_fraction(value) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting floats outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or bare "p") into a Fraction.

    Non-canonical input such as "2/4" is accepted and reduced; a zero
    denominator or anything outside integer/fraction syntax (decimals,
    exponents) is rejected.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num_text, den_text = (part.strip() for part in s.split("/"))
        if int(den_text) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num_text), int(den_text))
    return Fraction(int(s))


def format_rational(q: Fraction) -> str:
    """Canonical text form: "p/q" with q > 0, collapsing to "p" when q = 1."""
    return str(ensure_fraction(q))


def rat_pow(q, e: int) -> Fraction:
    """Exact integer power of a rational; 0 with e < 0 is a domain error."""
    q = ensure_fraction(q)
    if e < 0 and q == 0:
        raise ZeroDivisionError("0 cannot be raised to a negative power")
    return q ** e


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix with exact rational entries, row-major [[a, b], [c, d]]."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, ensure_fraction(getattr(self, name)))


MAT2_IDENTITY = Mat2(1, 0, 0, 1)


def companion(c1, c2) -> Mat2:
    """Companion matrix [[c1, c2], [1, 0]] of x_n = c1*x_{n-1} + c2*x_{n-2}."""
    return Mat2(c1, c2, 1, 0)


def mat2_mul(m: Mat2, n: Mat2) -> Mat2:
    return Mat2(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def mat2_det(m: Mat2) -> Fraction:
    return m.a * m.d - m.b * m.c


def mat2_inverse(m: Mat2) -> Mat2:
    det = mat2_det(m)
    if det == 0:
        raise ZeroDivisionError("singular matrix has no inverse")
    return Mat2(m.d / det, -m.b / det, -m.c / det, m.a / det)


def mat2_pow(m: Mat2, e: int) -> Mat2:
    """Binary exponentiation on |e|, inverting the result once when e < 0."""
    result = MAT2_IDENTITY
    base = m
    k = abs(e)
    while k:
        if k & 1:
            result = mat2_mul(result, base)
        k >>= 1
        if k:
            base = mat2_mul(base, base)
    if e < 0:
        return mat2_inverse(result)
    return result
