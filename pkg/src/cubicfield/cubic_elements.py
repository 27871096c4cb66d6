"""Elements ``u + x*rho + y*omega`` of a cubic ring, carried by 3x3 matrices.

With ``zeta`` a root of ``C(z, 1)`` for ``C = (a, b, c, d)``, the basis is
``1, rho = a*zeta, omega = a*zeta^2 + b*zeta``.  The element matrix

    [[u,  -a d y,        -a d x - b d y],
     [x,  u - b x - c y, -c x - d y    ],
     [y,  a x,           u - c y       ]]

turns field multiplication into matrix multiplication; its trace is the
element trace, its determinant the norm, and its left column the coordinates.
The multiplication law holds for any integers ``a, b, c, d``, so the degenerate
forms used for the Brahmagupta and Gauss specialisations are accepted too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cubic_forms import BinaryCubicForm
from .linalg import Matrix
from .rational import RationalLike, to_q


def element_matrix_entries(a, b, c, d, u, x, y) -> list[list]:
    """The element matrix over any commutative ring (ints, Fractions, Polys, sympy)."""
    return [
        [u, -a * d * y, -a * d * x - b * d * y],
        [x, u - b * x - c * y, -c * x - d * y],
        [y, a * x, u - c * y],
    ]


def product_coordinates(a, b, c, d, u1, x1, y1, u2, x2, y2) -> tuple:
    """Closed-form coordinates of a product, ring-generic."""
    u3 = u1 * u2 - a * d * (x2 * y1 + x1 * y2) - b * d * y1 * y2
    x3 = u1 * x2 + u2 * x1 - b * x1 * x2 - c * (x1 * y2 + x2 * y1) - d * y1 * y2
    y3 = u1 * y2 + u2 * y1 + a * x1 * x2 - c * y1 * y2
    return u3, x3, y3


@dataclass(frozen=True)
class CubicElement:
    form: BinaryCubicForm
    u: Fraction
    x: Fraction
    y: Fraction

    def __post_init__(self):
        for name in "uxy":
            object.__setattr__(self, name, to_q(getattr(self, name)))

    @classmethod
    def one(cls, form: BinaryCubicForm) -> "CubicElement":
        return cls(form, 1, 0, 0)

    @classmethod
    def zero(cls, form: BinaryCubicForm) -> "CubicElement":
        return cls(form, 0, 0, 0)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.u, self.x, self.y

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "CubicElement") -> "CubicElement":
        return add(self, other)

    def __sub__(self, other: "CubicElement") -> "CubicElement":
        return add(self, negate(other))

    def __neg__(self) -> "CubicElement":
        return negate(self)

    def __mul__(self, other: "CubicElement") -> "CubicElement":
        return multiply(self, other)

    def __truediv__(self, other: "CubicElement") -> "CubicElement":
        return multiply(self, inverse(other))

    def __pow__(self, k: int) -> "CubicElement":
        return power(self, k)


def _same_form(e1: CubicElement, e2: CubicElement) -> None:
    if e1.form != e2.form:
        raise ValueError(f"elements live over different forms {e1.form.coeffs} and {e2.form.coeffs}")


def to_matrix(e: CubicElement) -> Matrix:
    return linalg.as_matrix(element_matrix_entries(*e.form.coeffs, e.u, e.x, e.y))


def from_matrix(form: BinaryCubicForm, m: Matrix) -> CubicElement:
    """Read coordinates off the left column; the rest of ``m`` must have element shape."""
    e = CubicElement(form, m[0][0], m[1][0], m[2][0])
    if to_matrix(e) != linalg.as_matrix(m):
        raise ValueError("matrix does not have the element-matrix shape for this form")
    return e


def multiply(e1: CubicElement, e2: CubicElement) -> CubicElement:
    _same_form(e1, e2)
    return CubicElement(e1.form, *product_coordinates(*e1.form.coeffs, *e1.coords, *e2.coords))


def add(e1: CubicElement, e2: CubicElement) -> CubicElement:
    _same_form(e1, e2)
    return CubicElement(e1.form, e1.u + e2.u, e1.x + e2.x, e1.y + e2.y)


def negate(e: CubicElement) -> CubicElement:
    return CubicElement(e.form, -e.u, -e.x, -e.y)


def trace(e: CubicElement) -> Fraction:
    return 3 * e.u - e.form.b * e.x - 2 * e.form.c * e.y


def norm(e: CubicElement) -> Fraction:
    return linalg.det(to_matrix(e))


def inverse(e: CubicElement) -> CubicElement:
    if norm(e) == 0:
        raise ZeroDivisionError(f"element ({e.u}, {e.x}, {e.y}) has norm 0 and no inverse")
    inv = linalg.inverse(to_matrix(e))
    result = CubicElement(e.form, inv[0][0], inv[1][0], inv[2][0])
    if multiply(e, result) != CubicElement.one(e.form):
        raise ArithmeticError("left column of the matrix inverse is not an inverse element")
    return result


def power(e: CubicElement, k: int) -> CubicElement:
    if k < 0:
        return power(inverse(e), -k)
    result = CubicElement.one(e.form)
    base = e
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


# --- the factorisation N = S U^T --------------------------------------------


def s_matrix(form: BinaryCubicForm) -> Matrix:
    a, b, c, d = form.coeffs
    return linalg.as_matrix(
        [
            [1, 0, 0, 0, -a * d, -b * d],
            [0, 1, 0, -b, -c, -d],
            [0, 0, 1, a, 0, -c],
        ]
    )


def u_matrix(e: CubicElement) -> Matrix:
    u, x, y = e.coords
    return linalg.as_matrix(
        [
            [u, x, y, 0, 0, 0],
            [0, u, 0, x, y, 0],
            [0, 0, u, 0, x, y],
        ]
    )


def factor_check(e1: CubicElement, e2: CubicElement) -> bool:
    """Check ``S (U3^T - U1^T S U2^T) = 0`` for ``e3 = e1 e2``, plus ``N_j = S U_j^T``."""
    _same_form(e1, e2)
    S = s_matrix(e1.form)
    e3 = multiply(e1, e2)
    for e in (e1, e2, e3):
        if linalg.matmul(S, linalg.transpose(u_matrix(e))) != to_matrix(e):
            return False
    U1t = linalg.transpose(u_matrix(e1))
    U2t = linalg.transpose(u_matrix(e2))
    U3t = linalg.transpose(u_matrix(e3))
    inner = linalg.matsub(U3t, linalg.matmul(linalg.matmul(U1t, S), U2t))
    return linalg.is_zero(linalg.matmul(S, inner))


# --- characteristic polynomial, two ways ------------------------------------


def char_poly(e: CubicElement) -> tuple[Fraction, Fraction, Fraction]:
    """``(t, q, n)`` with ``det(lambda I - N) = lambda^3 - t lambda^2 + q lambda - n``."""
    m = to_matrix(e)
    q = sum(
        (m[i][i] * m[j][j] - m[i][j] * m[j][i] for i in range(3) for j in range(i + 1, 3)),
        Fraction(0),
    )
    return linalg.trace(m), q, linalg.det(m)


def root_power_sums(form: BinaryCubicForm, count: int) -> list[Fraction]:
    """``sum zeta_i^k`` for ``k < count`` over the roots of ``C(z, 1)``, by Newton's identities."""
    a, b, c, d = form.coeffs
    if a == 0:
        raise ValueError("power sums of the roots need a != 0")
    e1, e2, e3 = Fraction(-b, a), Fraction(c, a), Fraction(-d, a)
    p = [Fraction(3), e1, e1 * e1 - 2 * e2]
    while len(p) < count:
        k = len(p)
        nxt = e1 * p[k - 1] - e2 * p[k - 2] + e3 * p[k - 3]
        p.append(nxt)
    return p[:count]


def char_poly_from_roots(e: CubicElement) -> tuple[Fraction, Fraction, Fraction]:
    """``(t, q, n)`` from the conjugates ``g(zeta_i)``, ``g(z) = u + (a x + b y) z + a y z^2``."""
    a, b, _, _ = e.form.coeffs
    g = [e.u, a * e.x + b * e.y, a * e.y]
    p = root_power_sums(e.form, 7)
    sums = []
    gk = [Fraction(1)]
    for _ in range(3):
        nxt = [Fraction(0)] * (len(gk) + 2)
        for i, ci in enumerate(gk):
            for j, cj in enumerate(g):
                nxt[i + j] += ci * cj
        gk = nxt
        sums.append(sum((c * p[j] for j, c in enumerate(gk)), Fraction(0)))
    s1, s2, s3 = sums
    return s1, (s1 * s1 - s2) / 2, (s1**3 - 3 * s1 * s2 + 2 * s3) / 6


def char_poly_oracle(e: CubicElement) -> tuple[Fraction, Fraction, Fraction]:
    via_matrix = char_poly(e)
    via_roots = char_poly_from_roots(e)
    if via_matrix != via_roots:
        raise ArithmeticError(f"characteristic polynomial mismatch: {via_matrix} vs {via_roots}")
    return via_matrix


def element(form: BinaryCubicForm, u: RationalLike, x: RationalLike, y: RationalLike) -> CubicElement:
    return CubicElement(form, u, x, y)
