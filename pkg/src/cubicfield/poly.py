"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` lives in a fixed number of variables and maps exponent tuples
to nonzero Fractions.  It is deliberately small: enough ring arithmetic,
substitution and differentiation to expand the identities in this package
exactly, nothing more.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rational import RationalLike, to_q

Monomial = tuple[int, ...]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, RationalLike] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity for {nvars} variables")
            q = to_q(coeff)
            if q:
                clean[tuple(mono)] = clean.get(tuple(mono), Fraction(0)) + q
        self.terms = {m: c for m, c in clean.items() if c}

    # construction ---------------------------------------------------------

    @classmethod
    def const(cls, nvars: int, value: RationalLike) -> "Poly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, nvars: int, index: int) -> "Poly":
        mono = [0] * nvars
        mono[index] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def gens(cls, nvars: int) -> tuple["Poly", ...]:
        return tuple(cls.var(nvars, i) for i in range(nvars))

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Poly.const(self.nvars, other)

    # ring operations ------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._lift(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(i + j for i, j in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Poly":
        q = to_q(scalar)
        return Poly(self.nvars, {m: c / q for m, c in self.terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        parts = [f"{c}*{m}" for m, c in sorted(self.terms.items(), reverse=True)]
        return "Poly(" + " + ".join(parts) + ")"

    # inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    # calculus and substitution -------------------------------------------

    def diff(self, index: int) -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            if m[index]:
                mm = list(m)
                mm[index] -= 1
                out[tuple(mm)] = c * m[index]
        return Poly(self.nvars, out)

    def __call__(self, *values):
        """Evaluate at a point; values may be rationals or Polys of a common ring."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        if any(isinstance(v, Poly) for v in values):
            return self.substitute(values)
        vals = [to_q(v) for v in values]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(vals, m):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, images: Sequence["Poly | RationalLike"]) -> "Poly":
        """Replace variable i by ``images[i]`` (all Polys in one common ring)."""
        target = next((v.nvars for v in images if isinstance(v, Poly)), None)
        if target is None:
            raise ValueError("substitute needs at least one Poly image; use evaluation instead")
        imgs = [v if isinstance(v, Poly) else Poly.const(target, v) for v in images]
        cache: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in cache:
                cache[key] = imgs[i] ** e
            return cache[key]

        total = Poly(target)
        for m, c in self.terms.items():
            term = Poly.const(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def divide_monomial(self, mono: Sequence[int]) -> "Poly":
        """Exact division by a monomial; raises if some term is not divisible."""
        out = {}
        for m, c in self.terms.items():
            q = tuple(i - j for i, j in zip(m, mono))
            if min(q) < 0:
                raise ArithmeticError(f"term {m} is not divisible by {tuple(mono)}")
            out[q] = c
        return Poly(self.nvars, out)

    def monomials(self) -> Iterable[Monomial]:
        return self.terms.keys()


def det(matrix: Sequence[Sequence]):
    """Cofactor-expansion determinant over any commutative ring (small sizes only)."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if isinstance(entry, Poly) and entry.is_zero():
            continue
        if not isinstance(entry, Poly) and entry == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return 0 if total is None else total
