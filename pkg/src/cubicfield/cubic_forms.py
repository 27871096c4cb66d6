"""Binary cubic forms and their covariants.

For ``C = a x^3 + b x^2 y + c x y^2 + d y^3`` the Hessian covariant is the
quadratic ``Q`` and the Jacobian covariant the cubic ``F = -(Q_x C_y - Q_y C_x)``;
together with the discriminant they satisfy ``F^2 + 27 disc C^2 = 4 Q^3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binary import BinaryForm
from .quad_forms import BinaryQuadraticForm
from .rational import RationalLike, to_q
from .roots import rational_roots


@dataclass(frozen=True)
class UnimodularMap:
    """The substitution ``(x, y) -> (p x + q y, r x + s y)`` with ``p s - q r = +-1``."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"map ({self.p}, {self.q}; {self.r}, {self.s}) has determinant {self.det}, not +-1")

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def swap(cls) -> "UnimodularMap":
        return cls(0, 1, 1, 0)


@dataclass(frozen=True)
class BinaryCubicForm:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"coefficient {name} must be an int, got {v!r}")

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def as_binary(self) -> BinaryForm:
        return BinaryForm(self.coeffs)

    @classmethod
    def from_binary(cls, f: BinaryForm) -> "BinaryCubicForm":
        if f.degree != 3:
            raise ValueError(f"expected a cubic, got degree {f.degree}")
        vals = []
        for v in f.coeffs:
            q = to_q(v)
            if q.denominator != 1:
                raise ValueError(f"non-integral coefficient {q}")
            vals.append(q.numerator)
        return cls(*vals)

    def __call__(self, x: RationalLike, y: RationalLike) -> Fraction:
        return evaluate(self, x, y)

    def discriminant(self) -> int:
        return discriminant(self)

    def hessian(self) -> BinaryQuadraticForm:
        return hessian(self)

    def jacobian(self) -> "BinaryCubicForm":
        return jacobian(self)

    def is_irreducible(self) -> bool:
        return is_irreducible(self)

    def transform(self, g: UnimodularMap) -> "BinaryCubicForm":
        return gl2_transform(self, g)


def discriminant(C: BinaryCubicForm) -> int:
    a, b, c, d = C.coeffs
    return b * b * c * c + 18 * a * b * c * d - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d


def hessian(C: BinaryCubicForm) -> BinaryQuadraticForm:
    a, b, c, d = C.coeffs
    return BinaryQuadraticForm(b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)


def hessian_by_partials(C: BinaryCubicForm) -> BinaryForm:
    """``-det`` of half the matrix of second partials, expanded as a binary quadratic."""
    f = C.as_binary()
    fxx, fxy, fyy = f.dx().dx(), f.dx().dy(), f.dy().dy()
    # det(H/2) = (fxx fyy - fxy^2) / 4
    return (fxy * fxy - fxx * fyy) * Fraction(1, 4)


def jacobian(C: BinaryCubicForm) -> BinaryCubicForm:
    f = C.as_binary()
    q = BinaryForm(hessian(C).coeffs)
    jac = q.dy() * f.dx() - q.dx() * f.dy()
    return BinaryCubicForm.from_binary(jac)


def syzygy_residual(C: BinaryCubicForm) -> BinaryForm:
    """The sextic ``F^2 + 27 disc C^2 - 4 Q^3``, expanded exactly."""
    f = C.as_binary()
    q = BinaryForm(hessian(C).coeffs)
    F = jacobian(C).as_binary()
    return F * F + f * f * (27 * discriminant(C)) - q * q * q * 4


def syzygy_check(C: BinaryCubicForm) -> bool:
    return syzygy_residual(C).is_zero()


def evaluate(C: BinaryCubicForm, x: RationalLike, y: RationalLike) -> Fraction:
    x, y = to_q(x), to_q(y)
    a, b, c, d = C.coeffs
    return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y


def is_irreducible(C: BinaryCubicForm) -> bool:
    """Irreducible over Q as a cubic in x (so ``a = 0`` counts as reducible)."""
    if C.a == 0:
        return False
    return not rational_roots(list(C.coeffs))


def gl2_transform(C: BinaryCubicForm, g: UnimodularMap) -> BinaryCubicForm:
    return BinaryCubicForm.from_binary(C.as_binary().substitute(g.p, g.q, g.r, g.s))
