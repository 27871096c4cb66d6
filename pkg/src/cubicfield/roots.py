"""Exact rational roots of univariate polynomials.

Coefficient lists run from the highest degree down.  Rational roots are found
without factoring any integer: ``f(z) = c_n z^n + ...`` is made monic by the
substitution ``s = c_n z``; a rational root of a monic integer polynomial is an
integer, and integer roots are located by exact bisection on the intervals
where the polynomial is monotone (found recursively from the derivative).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .rational import RationalLike, to_q


def _strip(coeffs: Sequence) -> list:
    out = list(coeffs)
    while out and out[0] == 0:
        out.pop(0)
    return out


def horner(coeffs: Sequence, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def derivative(coeffs: Sequence) -> list:
    n = len(coeffs) - 1
    return [c * (n - i) for i, c in enumerate(coeffs[:-1])]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _root_floors(coeffs: Sequence[int]) -> set[int]:
    """A superset of ``floor(r)`` over the real roots ``r`` of an integer polynomial."""
    coeffs = _strip(coeffs)
    deg = len(coeffs) - 1
    if deg <= 0:
        return set()
    if deg == 1:
        return {(-coeffs[1]) // coeffs[0]}
    lead = abs(coeffs[0])
    bound = 2 + max(abs(c) for c in coeffs[1:]) // lead
    crit = {k for k in _root_floors(derivative(coeffs)) if -bound < k < bound}
    points = sorted({-bound, bound} | crit | {k + 1 for k in crit})
    floors: set[int] = set()
    for lo, hi in zip(points, points[1:]):
        if lo in crit:
            floors.add(lo)
            continue
        glo, ghi = horner(coeffs, lo), horner(coeffs, hi)
        if glo == 0:
            floors.add(lo)
            continue
        if _sign(glo) * _sign(ghi) >= 0:
            continue
        s_lo = _sign(glo)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            gm = horner(coeffs, mid)
            if gm == 0:
                lo = mid
                break
            if _sign(gm) == s_lo:
                lo = mid
            else:
                hi = mid
        floors.add(lo)
    return floors


def integer_roots(coeffs: Sequence[int]) -> list[int]:
    """Distinct integer roots of an integer polynomial, ascending."""
    coeffs = _strip([int(c) for c in coeffs])
    if not coeffs:
        raise ValueError("the zero polynomial has every root")
    return sorted(k for k in _root_floors(coeffs) if horner(coeffs, k) == 0)


def integer_coefficients(coeffs: Sequence[RationalLike]) -> list[int]:
    """Scale rational coefficients to a primitive integer list with positive leading term."""
    qs = _strip([to_q(c) for c in coeffs])
    if not qs:
        return []
    den = 1
    for q in qs:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in qs]
    g = 0
    for i in ints:
        g = gcd(g, i)
    ints = [i // g for i in ints]
    if ints[0] < 0:
        ints = [-i for i in ints]
    return ints


def rational_roots(coeffs: Sequence[RationalLike]) -> list[Fraction]:
    """Distinct rational roots of a nonzero polynomial, ascending."""
    ints = integer_coefficients(coeffs)
    if not ints:
        raise ValueError("the zero polynomial has every root")
    roots: list[Fraction] = []
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
        if not roots:
            roots.append(Fraction(0))
    n = len(ints) - 1
    if n >= 1:
        lead = ints[0]
        monic = [c * lead ** (i - 1) if i else 1 for i, c in enumerate(ints)]
        roots.extend(Fraction(s, lead) for s in integer_roots(monic))
    return sorted(set(roots))


def divide_linear(coeffs: Sequence[Fraction], root: Fraction) -> tuple[list[Fraction], Fraction]:
    """Synthetic division by (z - root): returns (quotient, remainder)."""
    out: list[Fraction] = []
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * root + c
        out.append(acc)
    return out[:-1], out[-1]


def factor_rational_roots(coeffs: Sequence[RationalLike]) -> tuple[list[tuple[Fraction, int]], list[Fraction]]:
    """Split off every rational linear factor.

    Returns ``(roots_with_multiplicity, cofactor)`` where the cofactor has no
    rational root.
    """
    rest = _strip([to_q(c) for c in coeffs])
    if not rest:
        raise ValueError("the zero polynomial has every root")
    found = []
    for r in rational_roots(rest):
        mult = 0
        while len(rest) > 1:
            q, rem = divide_linear(rest, r)
            if rem != 0:
                break
            rest = q
            mult += 1
        found.append((r, mult))
    return found, rest
