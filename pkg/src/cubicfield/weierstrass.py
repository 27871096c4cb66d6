"""Plane-cubic geometry and reduction to long Weierstrass form.

The fixed trace/norm curve is homogenised to

    Gamma(X, Y, Z) = F(X, Y) - 3 t Z Q(X, Y) + (t^3 - 27 n) Z^3.

Starting from a rational point ``P`` there are two routes to a Weierstrass
model.  If ``P`` is a flex (case 1), ``P`` is sent to ``(0:1:0)`` and its
tangent to ``Z = 0``.  Otherwise (case 2) the tangent at ``P`` meets the curve
again at ``Q``, the tangent at ``Q`` meets it again at ``R``, and the
substitution ``(X, Y, Z) = [P|Q|R] (U^2, V T, U T)`` after cancelling ``U^2 T``
leaves a cubic that is Weierstrass up to scaling.

Projective points and lines are stored as coprime integer vectors whose last
nonzero entry is positive, so an affine point ``(x, y)`` keeps ``Z > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice, product
from math import gcd
from typing import Sequence

from . import linalg
from .binary import BinaryForm
from .cubic_forms import BinaryCubicForm, hessian, jacobian
from .diophantine import PellCubeInstance
from .linalg import Matrix
from .poly import Poly, det as poly_det
from .rational import RationalLike, primitive_integer_vector, to_q
from .roots import factor_rational_roots, rational_roots


class ReductionError(ArithmeticError):
    """The chosen route to a Weierstrass model cannot be completed."""


class SingularCurveError(ReductionError):
    pass


class IrrationalPointError(ReductionError):
    pass


# --- points, lines, curves ---------------------------------------------------


def _normalize(coords: Sequence[RationalLike], what: str) -> tuple[int, int, int]:
    if len(coords) != 3:
        raise ValueError(f"a projective {what} needs three coordinates")
    v = primitive_integer_vector(coords)
    if not any(v):
        raise ValueError(f"(0:0:0) is not a projective {what}")
    return v  # type: ignore[return-value]


@dataclass(frozen=True)
class ProjectivePoint:
    X: int
    Y: int
    Z: int

    def __post_init__(self):
        X, Y, Z = _normalize((self.X, self.Y, self.Z), "point")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "Z", Z)

    @classmethod
    def of(cls, coords: Sequence[RationalLike]) -> "ProjectivePoint":
        return cls(*coords)

    @classmethod
    def affine(cls, x: RationalLike, y: RationalLike) -> "ProjectivePoint":
        return cls(to_q(x), to_q(y), 1)

    @property
    def coords(self) -> tuple[int, int, int]:
        return self.X, self.Y, self.Z

    def to_affine(self) -> tuple[Fraction, Fraction] | None:
        if self.Z == 0:
            return None
        return Fraction(self.X, self.Z), Fraction(self.Y, self.Z)


@dataclass(frozen=True)
class ProjectiveLine:
    """The line ``lX X + lY Y + lZ Z = 0``."""

    lX: int
    lY: int
    lZ: int

    def __post_init__(self):
        a, b, c = _normalize((self.lX, self.lY, self.lZ), "line")
        object.__setattr__(self, "lX", a)
        object.__setattr__(self, "lY", b)
        object.__setattr__(self, "lZ", c)

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return self.lX, self.lY, self.lZ

    def contains(self, P: ProjectivePoint) -> bool:
        return self.lX * P.X + self.lY * P.Y + self.lZ * P.Z == 0

    def spanning_points(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        """Two independent integer points on the line (cross products with the axes)."""
        a, b, c = self.coeffs
        candidates = [(0, c, -b), (-c, 0, a), (b, -a, 0)]
        candidates = [v for v in candidates if any(v)]
        for v, w in zip(candidates, candidates[1:] + candidates[:1]):
            if any(_cross(v, w)):
                return v, w
        raise AssertionError("a nonzero line always has two independent points")


def _cross(v, w):
    return (v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0])


def line_through(P: ProjectivePoint, Q: ProjectivePoint) -> ProjectiveLine:
    return ProjectiveLine(*_cross(P.coords, Q.coords))


@dataclass(frozen=True)
class ProjectiveCubic:
    """A ternary cubic; ``source`` remembers the trace/norm instance it came from, if any."""

    poly: Poly
    source: PellCubeInstance | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.poly.nvars != 3:
            raise ValueError("a ternary cubic has three variables")
        if self.poly.is_zero() or self.poly.degree() != 3 or not self.poly.is_homogeneous():
            raise ValueError("not a nonzero homogeneous cubic")

    @classmethod
    def from_coeffs(cls, coeffs: dict[tuple[int, int, int], RationalLike]) -> "ProjectiveCubic":
        return cls(Poly(3, coeffs))

    def coefficients(self) -> dict[tuple[int, int, int], Fraction]:
        return {m: self.poly.coeff(m) for m in _CUBIC_MONOMIALS}

    def __call__(self, P: ProjectivePoint | Sequence) -> Fraction:
        coords = P.coords if isinstance(P, ProjectivePoint) else tuple(P)
        return self.poly(*coords)


_CUBIC_MONOMIALS = [(i, j, 3 - i - j) for i in range(3, -1, -1) for j in range(3 - i, -1, -1)]


def build_gamma(form: BinaryCubicForm, t: RationalLike, n: RationalLike) -> ProjectiveCubic:
    inst = PellCubeInstance(form, t, n)
    X, Y, Z = Poly.gens(3)
    Q = hessian(form)
    F = jacobian(form)
    poly = F.as_binary()(X, Y) - 3 * inst.t * Z * Q(X, Y) + (inst.t**3 - 27 * inst.n) * Z**3
    return ProjectiveCubic(poly, inst)


def is_on_curve(gamma: ProjectiveCubic, P: ProjectivePoint) -> bool:
    return gamma(P) == 0


def gradient(gamma: ProjectiveCubic, P: ProjectivePoint | Sequence) -> tuple[Fraction, Fraction, Fraction]:
    coords = P.coords if isinstance(P, ProjectivePoint) else tuple(to_q(v) for v in P)
    g = tuple(gamma.poly.diff(i)(*coords) for i in range(3))
    # Euler's relation for a cubic
    assert 3 * gamma.poly(*coords) == sum(c * gi for c, gi in zip(coords, g))
    return g  # type: ignore[return-value]


# --- singularity ------------------------------------------------------------

_QUADRIC_MONOMIALS = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]


def partials_resultant(gamma: ProjectiveCubic) -> Fraction:
    """Sylvester's 6x6 determinant for the three partials of ``gamma``.

    The rows are the coefficients of the partials and of the partials of their
    Jacobian determinant.  It vanishes exactly when the partials share a
    projective zero, i.e. when the cubic is singular.
    """
    partials = [gamma.poly.diff(i) for i in range(3)]
    jac = poly_det([[p.diff(j) for j in range(3)] for p in partials])
    rows = partials + [jac.diff(j) for j in range(3)]
    return linalg.det(linalg.as_matrix([[r.coeff(m) for m in _QUADRIC_MONOMIALS] for r in rows]))


def is_singular_curve(gamma: ProjectiveCubic) -> bool:
    if gamma.source is not None and gamma.source.singular:
        return True
    return partials_resultant(gamma) == 0


def _y_coeffs(p: Poly) -> list[Poly]:
    """View a Poly in (X, Y) as a list of Poly-in-X coefficients, highest Y power first."""
    deg = p.degree_in(1)
    out = [Poly(1) for _ in range(deg + 1)]
    for (i, j), c in p.terms.items():
        out[deg - j] = out[deg - j] + Poly(1, {(i,): c})
    return out


def _resultant_y(f: Poly, g: Poly) -> Poly:
    fc, gc = _y_coeffs(f), _y_coeffs(g)
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    if size == 0:
        return Poly.const(1, 1)
    zero = Poly(1)
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    res = poly_det(rows)
    return res if isinstance(res, Poly) else Poly.const(1, res)


def _univariate(p: Poly, index: int, degree: int) -> list[Fraction]:
    return [p.coeff(tuple(degree - k if v == index else 0 for v in range(p.nvars))) for k in range(degree + 1)]


def singular_points(gamma: ProjectiveCubic) -> list[ProjectivePoint]:
    """Rational singular points found by elimination (empty for a smooth cubic).

    An irreducible singular cubic has exactly one singular point and it is
    rational, so it is always found; for reducible cubics only the rational
    ones are reported.
    """
    partials = [gamma.poly.diff(i) for i in range(3)]
    found: set[ProjectivePoint] = set()

    def check(coords) -> None:
        if any(coords) and all(p(*coords) == 0 for p in partials):
            found.add(ProjectivePoint(*coords))

    # line at infinity Z = 0
    check((1, 0, 0))
    for p in partials:
        line_poly = [p.coeff((2 - k, k, 0)) for k in range(3)]
        if any(line_poly):
            for r in _binary_roots(line_poly):
                check((r, 1, 0))
            break

    # affine chart Z = 1
    X2, Y2 = Poly.gens(2)
    affine = [p.substitute([X2, Y2, Poly.const(2, 1)]) for p in partials]
    nonzero = [p for p in affine if not p.is_zero()]
    xs: set[Fraction] = set()
    pairs = [(f, g) for i, f in enumerate(nonzero) for g in nonzero[i + 1:]]
    for f, g in pairs:
        res = _resultant_y(f, g)
        if not res.is_zero():
            deg = res.degree()
            if deg > 0:
                xs.update(rational_roots(_univariate(res, 0, deg)))
            break
    for x0 in xs:
        specs = [p.substitute([Poly.const(1, x0), Poly.var(1, 0)]) for p in affine]
        specs = [s for s in specs if not s.is_zero()]
        if not specs:
            check((x0, 0, 1))
            continue
        s0 = min(specs, key=lambda s: s.degree())
        if s0.degree() <= 0:
            continue
        for y0 in rational_roots(_univariate(s0, 0, s0.degree())):
            check((x0, y0, 1))
    return sorted(found, key=lambda P: (P.Z, P.Y, P.X))


def _binary_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Rational ``r`` with ``f(r, 1) = 0`` for a binary form given highest-x first."""
    c = list(coeffs)
    while c and c[0] == 0:
        c.pop(0)
    if len(c) <= 1:
        return []
    return rational_roots(c)


# --- tangent lines and intersections ----------------------------------------


def tangent_line(gamma: ProjectiveCubic, P: ProjectivePoint) -> ProjectiveLine:
    if not is_on_curve(gamma, P):
        raise ValueError(f"{P.coords} is not on the curve")
    g = gradient(gamma, P)
    if not any(g):
        raise SingularCurveError(f"{P.coords} is a singular point; it has no tangent line")
    return ProjectiveLine(*g)


@dataclass(frozen=True)
class LineIntersection:
    """Rational intersection points with multiplicities; ``irrational`` counts the rest."""

    points: tuple[tuple[ProjectivePoint, int], ...]
    irrational: int

    def multiplicity(self, P: ProjectivePoint) -> int:
        return next((m for Q, m in self.points if Q == P), 0)

    def others(self, P: ProjectivePoint) -> list[tuple[ProjectivePoint, int]]:
        return [(Q, m) for Q, m in self.points if Q != P]


def restrict_to_line(gamma: ProjectiveCubic, A: Sequence, B: Sequence) -> BinaryForm:
    """The binary cubic ``f(s, t) = Gamma(s A + t B)``."""
    s, t = Poly.gens(2)
    images = [s * A[i] + t * B[i] for i in range(3)]
    f = gamma.poly.substitute(images)
    return BinaryForm(tuple(f.coeff((3 - k, k)) for k in range(4)))


def line_cubic_intersection(gamma: ProjectiveCubic, line: ProjectiveLine) -> LineIntersection:
    A, B = line.spanning_points()
    f = restrict_to_line(gamma, A, B)
    if f.is_zero():
        raise ValueError(f"line {line.coeffs} lies inside the cubic (the cubic is reducible)")
    coeffs = list(f.coeffs)
    points: list[tuple[ProjectivePoint, int]] = []
    lead_zeros = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        lead_zeros += 1
    if lead_zeros:
        points.append((ProjectivePoint(*A), lead_zeros))
    # remaining roots have t != 0: f(r, 1) = 0 at the point r A + B
    roots, cofactor = factor_rational_roots(coeffs)
    for r, mult in roots:
        points.append((ProjectivePoint(*(r * a + b for a, b in zip(A, B))), mult))
    return LineIntersection(tuple(points), len(cofactor) - 1)


# --- Weierstrass curves -----------------------------------------------------


@dataclass(frozen=True)
class CurveInvariants:
    c4: Fraction
    c6: Fraction
    disc: Fraction
    j: Fraction


@dataclass(frozen=True)
class WeierstrassCurve:
    """``y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6``."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, to_q(getattr(self, name)))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    def b_invariants(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c4(self) -> Fraction:
        b2, b4, _, _ = self.b_invariants()
        return b2 * b2 - 24 * b4

    @property
    def c6(self) -> Fraction:
        b2, b4, b6, _ = self.b_invariants()
        return -(b2**3) + 36 * b2 * b4 - 216 * b6

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def is_singular(self) -> bool:
        return self.discriminant == 0

    @property
    def j(self) -> Fraction:
        disc = self.discriminant
        if disc == 0:
            raise SingularCurveError("j-invariant is undefined for a singular Weierstrass cubic")
        return self.c4**3 / disc

    def contains(self, x: RationalLike, y: RationalLike) -> bool:
        x, y = to_q(x), to_q(y)
        a1, a2, a3, a4, a6 = self.coeffs
        return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6


def curve_invariants(W: WeierstrassCurve) -> CurveInvariants:
    return CurveInvariants(W.c4, W.c6, W.discriminant, W.j)


_AFFINE_ALLOWED = {(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)}


def weierstrass_from_affine(eq: Poly) -> tuple[WeierstrassCurve, Fraction]:
    """Scale ``A v^2 + B u v + C v + D u^3 + E u^2 + F u + G = 0`` to long Weierstrass form.

    Returns the curve and the factor ``k`` with ``(x, y) = (k u, k v)``.
    """
    if eq.nvars != 2:
        raise ValueError("expected a polynomial in (u, v)")
    extra = [m for m in eq.monomials() if m not in _AFFINE_ALLOWED]
    if extra:
        raise ReductionError(f"equation has non-Weierstrass monomials {sorted(extra)}")
    A = eq.coeff((0, 2))
    D = eq.coeff((3, 0))
    if A == 0 or D == 0:
        raise ReductionError("equation lacks a v^2 or u^3 term")
    B, C = eq.coeff((1, 1)) / A, eq.coeff((0, 1)) / A
    k = -D / A
    E, F, G = (-eq.coeff(m) / A for m in ((2, 0), (1, 0), (0, 0)))
    curve = WeierstrassCurve(B, E, C * k, F * k, G * k * k)
    return curve, k


# --- the reduction ----------------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """Everything produced on the way to the Weierstrass model.

    ``affine_equation`` is the cubic in ``(u, v)`` just before scaling, and
    ``scale`` the factor taking ``(u, v)`` to Weierstrass coordinates.
    """

    case: int
    start: ProjectivePoint
    P: ProjectivePoint
    Q: ProjectivePoint
    R: ProjectivePoint | None
    tangents: tuple[ProjectiveLine, ...]
    M: Matrix
    affine_equation: Poly
    curve: WeierstrassCurve
    scale: Fraction
    chart: tuple[Fraction, Fraction] | None = None

    def map_point(self, S: ProjectivePoint) -> tuple[Fraction, Fraction] | None:
        """Image of a curve point in Weierstrass coordinates (``None`` for infinity or undefined)."""
        w = linalg.matvec(linalg.inverse(self.M), S.coords)
        if self.case == 1:
            k, r = self.chart  # type: ignore[misc]
            U, V, T = w
            W = -r * T / k
            if W == 0:
                return None
            u, v = U / W, V / W
        else:
            if w[2] == 0:
                return None
            u = w[0] / w[2]
            v = w[0] * w[1] / (w[2] * w[2])
        return self.scale * u, self.scale * v


def _column_matrix(*cols: Sequence) -> Matrix:
    return linalg.as_matrix([[col[i] for col in cols] for i in range(3)])


def _transform(gamma: ProjectiveCubic, M: Matrix, images: Sequence[Poly]) -> Poly:
    lin = [sum((M[i][j] * images[j] for j in range(3)), Poly(images[0].nvars)) for i in range(3)]
    return gamma.poly.substitute(lin)


def _auxiliary_points(P: ProjectivePoint, line: ProjectiveLine):
    """Points ``s B + t P`` of the line, ``s != 0``, in order of increasing height ``max(|s|, |t|)``."""
    A, B = line.spanning_points()
    other = A if any(_cross(A, P.coords)) else B
    h = 1
    while True:
        for s, t in sorted(product(range(-h, h + 1), repeat=2), key=lambda st: (abs(st[1]), st[1], st[0])):
            if max(abs(s), abs(t)) != h or s <= 0 or gcd(s, t) != 1:
                continue
            yield ProjectivePoint(*(s * o + t * p for o, p in zip(other, P.coords)))
        h += 1


_CASE1_ALLOWED = {(3, 0, 0), (2, 0, 1), (1, 1, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3)}


def _require_smooth_point(gamma: ProjectiveCubic, P: ProjectivePoint) -> None:
    if not is_on_curve(gamma, P):
        raise ValueError(f"{P.coords} is not on the curve")
    if not any(gradient(gamma, P)):
        raise SingularCurveError(f"{P.coords} is a singular point of the curve")


def reduce_case1(gamma: ProjectiveCubic, P: ProjectivePoint, start: ProjectivePoint | None = None,
                 max_candidates: int = 100) -> Reduction:
    """Weierstrass model from a rational flex ``P``."""
    _require_smooth_point(gamma, P)
    L = tangent_line(gamma, P)
    inter = line_cubic_intersection(gamma, L)
    if inter.multiplicity(P) != 3:
        raise ReductionError(f"{P.coords} is not a flex (tangent multiplicity {inter.multiplicity(P)})")
    M = None
    for Q in islice(_auxiliary_points(P, L), max_candidates):
        if gamma(Q) == 0:
            continue
        for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            cand = _column_matrix(Q.coords, P.coords, e)
            if linalg.det(cand) != 0:
                M = cand
                break
        if M is not None:
            break
    if M is None:
        raise ReductionError("no auxiliary point found on the flex tangent")
    U, V, T = Poly.gens(3)
    eq = _transform(gamma, M, (U, V, T))
    extra = [m for m in eq.monomials() if m not in _CASE1_ALLOWED]
    if extra:
        raise ReductionError(f"flex transform left unexpected monomials {sorted(extra)}")
    k = eq.coeff((3, 0, 0))
    r = eq.coeff((0, 2, 1))
    if r == 0:
        raise ReductionError("no V^2 T term after sending the flex to (0:1:0); cannot normalise")
    u2, v2 = Poly.gens(2)
    affine = (eq / k).substitute([u2, v2, Poly.const(2, -k / r)])
    curve, scale = weierstrass_from_affine(affine)
    return Reduction(1, start or P, P, Q, None, (L,), M, affine, curve, scale, (k, r))


def reduce_case2(gamma: ProjectiveCubic, P: ProjectivePoint) -> Reduction:
    """Weierstrass model through the tangent chain ``P -> Q -> R``."""
    _require_smooth_point(gamma, P)
    LP = tangent_line(gamma, P)
    inter_p = line_cubic_intersection(gamma, LP)
    mult = inter_p.multiplicity(P)
    if mult == 3:
        raise ReductionError(f"{P.coords} is a flex; use case 1")
    others = inter_p.others(P)
    if inter_p.irrational or len(others) != 1:
        raise IrrationalPointError(f"tangent at {P.coords} has no rational third intersection")
    Q = others[0][0]
    LQ = tangent_line(gamma, Q)
    inter_q = line_cubic_intersection(gamma, LQ)
    if inter_q.multiplicity(Q) == 3:
        return reduce_case1(gamma, Q, start=P)
    others = inter_q.others(Q)
    if inter_q.irrational or len(others) != 1:
        raise IrrationalPointError(f"tangent at {Q.coords} has no rational third intersection")
    R = others[0][0]
    M = _column_matrix(P.coords, Q.coords, R.coords)
    if linalg.det(M) == 0:
        raise ReductionError("P, Q, R are collinear")
    U, V, T = Poly.gens(3)
    sextic = _transform(gamma, M, (U * U, V * T, U * T))
    try:
        eq = sextic.divide_monomial((2, 0, 1))
    except ArithmeticError as exc:
        raise ReductionError(f"transformed sextic is not divisible by U^2 T: {exc}") from exc
    k = eq.coeff((3, 0, 0))
    if k == 0:
        raise ReductionError("no U^3 term after the tangent-chain substitution")
    u2, v2 = Poly.gens(2)
    affine = (eq / k).substitute([u2, v2, Poly.const(2, 1)])
    curve, scale = weierstrass_from_affine(affine)
    return Reduction(2, P, P, Q, R, (LP, LQ), M, affine, curve, scale)


def to_weierstrass(gamma: ProjectiveCubic, P: ProjectivePoint) -> Reduction:
    if is_singular_curve(gamma):
        raise SingularCurveError("the cubic is singular; it is not an elliptic curve")
    _require_smooth_point(gamma, P)
    inter = line_cubic_intersection(gamma, tangent_line(gamma, P))
    if inter.multiplicity(P) == 3:
        return reduce_case1(gamma, P)
    return reduce_case2(gamma, P)
