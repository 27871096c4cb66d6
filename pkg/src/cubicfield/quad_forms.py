"""Quadratic composition laws: Brahmagupta, Pell, 2x2 element matrices, Gauss.

Notation for a quadratic discriminant ``D``: ``s = D mod 4`` (0 or 1),
``m = (D - s) / 4`` and ``omega = (s + sqrt(D)) / 2``, so that every integer
of the field is ``u + y*omega``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .linalg import Matrix, as_matrix
from .rational import RationalLike, to_q


def quad_params(D: int) -> tuple[int, int]:
    """Return ``(s, m)`` for the discriminant ``D``."""
    s = D % 4
    if s not in (0, 1):
        raise ValueError(f"D = {D} is not 0 or 1 mod 4, so it is not a quadratic discriminant")
    return s, (D - s) // 4


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


# --- Brahmagupta / Pell -----------------------------------------------------


def brahmagupta_compose(x1: int, y1: int, x2: int, y2: int, D: int) -> tuple[int, int]:
    """Compose ``(x1, y1)`` and ``(x2, y2)`` so that the values of ``x^2 - D y^2`` multiply."""
    return x1 * x2 + D * y1 * y2, x1 * y2 + x2 * y1


def brahmagupta_matrix(x: int, y: int, D: int) -> Matrix:
    """``[[x, D y], [y, x]]``; its determinant is ``x^2 - D y^2``."""
    return as_matrix([[x, D * y], [y, x]])


@dataclass(frozen=True)
class PellSolution:
    """A pair ``(x, y)`` for the Pell equation ``x^2 - D y^2 = 1`` with non-square ``D``."""

    x: int
    y: int
    D: int

    def __post_init__(self):
        if is_square(self.D):
            raise ValueError(f"D = {self.D} is a perfect square; Pell units need non-square D")

    @property
    def value(self) -> int:
        return self.x * self.x - self.D * self.y * self.y

    @property
    def is_unit(self) -> bool:
        return self.value == 1

    def __mul__(self, other: "PellSolution") -> "PellSolution":
        if other.D != self.D:
            raise ValueError("cannot compose solutions for different D")
        return PellSolution(*brahmagupta_compose(self.x, self.y, other.x, other.y, self.D), self.D)


def pythagorean_compose(t1: tuple[int, int, int], t2: tuple[int, int, int]) -> tuple[int, int, int]:
    """Combine two Pythagorean triples via the ``D = -1`` identity."""
    for t in (t1, t2):
        x, y, z = t
        if min(x, y, z) <= 0 or x * x + y * y != z * z:
            raise ValueError(f"{t} is not a Pythagorean triple of positive integers")
    (x1, y1, z1), (x2, y2, z2) = t1, t2
    x3 = abs(x1 * x2 - y1 * y2)
    if x3 == 0:
        raise ValueError(f"composing {t1} and {t2} degenerates (x3 = 0)")
    return x3, x1 * y2 + x2 * y1, z1 * z2


# --- 2x2 element matrices ---------------------------------------------------


@dataclass(frozen=True)
class QuadIntegerCoords:
    """The element ``u + y*omega`` of the quadratic field of discriminant ``D``."""

    u: Fraction
    y: Fraction
    D: int

    def __post_init__(self):
        object.__setattr__(self, "u", to_q(self.u))
        object.__setattr__(self, "y", to_q(self.y))
        quad_params(self.D)

    @property
    def s(self) -> int:
        return quad_params(self.D)[0]

    @property
    def m(self) -> int:
        return quad_params(self.D)[1]

    @property
    def trace(self) -> Fraction:
        return 2 * self.u + self.s * self.y

    @property
    def norm(self) -> Fraction:
        x = self.trace
        return (x * x - self.D * self.y * self.y) / 4

    @property
    def is_integral(self) -> bool:
        return self.u.denominator == 1 and self.y.denominator == 1

    def matrix(self) -> Matrix:
        return quad_element_matrix(self.u, self.y, self.D)


def quad_element_matrix(u: RationalLike, y: RationalLike, D: int) -> Matrix:
    """``[[u, m y], [y, u + s y]]``: trace is the element trace, determinant its norm."""
    s, m = quad_params(D)
    u, y = to_q(u), to_q(y)
    return as_matrix([[u, m * y], [y, u + s * y]])


def norm_form_map(u: int, y: int, D: int) -> tuple[int, int, int]:
    """Send ``u + y*omega`` to ``(x, y, n)`` with ``x^2 - D y^2 = 4 n``."""
    s, _ = quad_params(D)
    x = 2 * u + s * y
    num = x * x - D * y * y
    assert num % 4 == 0, "x^2 - D y^2 must be divisible by 4 when D = s mod 4"
    return x, y, num // 4


# --- Gauss composition ------------------------------------------------------


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """``A x^2 + B x y + C y^2``."""

    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return self.A, self.B, self.C

    def __call__(self, x, y):
        return self.A * x * x + self.B * x * y + self.C * y * y

    def is_primitive(self) -> bool:
        return gcd(gcd(self.A, self.B), self.C) == 1

    @property
    def beta(self) -> int:
        s, _ = quad_params(self.disc)
        return (self.B - s) // 2

    @classmethod
    def principal(cls, D: int) -> "BinaryQuadraticForm":
        s, m = quad_params(D)
        return cls(1, s, -m)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, p, q)`` with ``a p + b q = g = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_p, p = p, old_p - k * p
        old_q, q = q, old_q - k * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


def ext_gcd3(a: int, b: int, c: int) -> tuple[int, int, int, int]:
    """``(e, p, q, r)`` with ``a p + b q + c r = e = gcd(a, b, c)``, via two chained two-term steps."""
    g, p1, q1 = ext_gcd(a, b)
    e, t, r = ext_gcd(g, c)
    return e, p1 * t, q1 * t, r


@dataclass(frozen=True)
class GaussComposition:
    """Result of composing two forms.

    ``u3`` and ``y3`` hold the integer coefficients of ``(u1 u2, u1 y2, u2 y1, y1 y2)``
    in the bilinear substitution, so ``form(u3, y3) = Q1(u1, y1) * Q2(u2, y2)``.
    """

    form: BinaryQuadraticForm
    e: int
    u3: tuple[int, int, int, int]
    y3: tuple[int, int, int, int]

    def evaluate(self, u1: int, y1: int, u2: int, y2: int) -> tuple[int, int]:
        basis = (u1 * u2, u1 * y2, u2 * y1, y1 * y2)
        return (
            sum(c * v for c, v in zip(self.u3, basis)),
            sum(c * v for c, v in zip(self.y3, basis)),
        )


def _exact(num: int, den: int, what: str) -> int:
    if num % den:
        raise ArithmeticError(f"{what} = {num}/{den} is not an integer; inputs are outside the supported case")
    return num // den


def gauss_compose(Q1: BinaryQuadraticForm, Q2: BinaryQuadraticForm) -> GaussComposition:
    D = Q1.disc
    if Q2.disc != D:
        raise ValueError(f"discriminants differ: {Q1.disc} vs {Q2.disc}")
    for Q in (Q1, Q2):
        if not Q.is_primitive():
            raise ValueError(f"{Q} is not primitive")
        if Q.A == 0:
            raise ValueError(f"{Q} has A = 0; the composition formulas divide by A")
    s, m = quad_params(D)
    A1, A2 = Q1.A, Q2.A
    b1, b2 = Q1.beta, Q2.beta
    b_plus = b1 + b2 + s
    b_times = b1 * b2 + m
    e, p, q, r = ext_gcd3(A1, A2, b_plus)
    b3 = _exact(A1 * b2 * p + A2 * b1 * q + b_times * r, e, "b3")
    A3 = _exact(A1 * A2, e * e, "A3")
    beta3 = b3 % abs(A3)
    B3 = 2 * beta3 + s
    C3 = _exact(beta3 * beta3 + s * beta3 - m, A3, "C3")
    u3 = (
        e,
        _exact(e * (b2 - beta3), A2, "u1*y2 coefficient"),
        _exact(e * (b1 - beta3), A1, "u2*y1 coefficient"),
        _exact(e * (b_times - beta3 * b_plus), A1 * A2, "y1*y2 coefficient"),
    )
    y3 = (0, _exact(A1, e, "A1/e"), _exact(A2, e, "A2/e"), _exact(b_plus, e, "beta+/e"))
    return GaussComposition(BinaryQuadraticForm(A3, B3, C3), e, u3, y3)


def gauss_compose_values(
    Q1: BinaryQuadraticForm, p1: tuple[int, int], Q2: BinaryQuadraticForm, p2: tuple[int, int]
) -> tuple[int, int]:
    return gauss_compose(Q1, Q2).evaluate(p1[0], p1[1], p2[0], p2[1])
