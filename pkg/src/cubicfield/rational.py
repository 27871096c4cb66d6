"""Exact rational helpers shared by every module.

Everything in the package is an ``int`` or a ``fractions.Fraction``.  Floats
are refused at the boundary so that nothing downstream can silently lose
precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Union

RationalLike = Union[int, Fraction, str]

_MINUS_SIGNS = ("−", "–")


def to_q(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction, rejecting floats and junk strings."""
    if isinstance(value, bool):
        raise TypeError("booleans are not numerals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        for sign in _MINUS_SIGNS:
            text = text.replace(sign, "-")
        if not text or any(ch in text for ch in ".eE_ "):
            raise ValueError(f"not an exact rational numeral: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational numeral: {value!r}") from exc
    raise TypeError(f"expected int, Fraction or numeral string, got {type(value).__name__}")


def to_int(value: RationalLike) -> int:
    q = to_q(value)
    if q.denominator != 1:
        raise ValueError(f"expected an integer, got {q}")
    return q.numerator


def fmt_q(value: RationalLike) -> str:
    """Canonical string form: ``"7"``, ``"-7/3"``."""
    q = to_q(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integral(value: RationalLike) -> bool:
    return to_q(value).denominator == 1


def primitive_integer_vector(values: Iterable[RationalLike]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers; the last nonzero entry is made positive.

    The zero vector is returned unchanged (as integers).
    """
    qs = [to_q(v) for v in values]
    den = 1
    for q in qs:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in qs]
    g = 0
    for i in ints:
        g = gcd(g, i)
    if g == 0:
        return tuple(ints)
    ints = [i // g for i in ints]
    last = next(i for i in reversed(ints) if i != 0)
    if last < 0:
        ints = [-i for i in ints]
    return tuple(ints)
