"""The trace/norm surface ``t^3 - 3 t Q(x, y) + F(x, y) = 27 n``.

Fixing trace ``t`` and norm ``n`` turns the norm equation into a plane cubic in
``(x, y)``; an on-curve point gives back an element by inverting the trace
formula for ``u``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .cubic_elements import CubicElement, norm, trace
from .cubic_forms import BinaryCubicForm, hessian, jacobian
from .rational import RationalLike, to_q

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PellCubeInstance:
    form: BinaryCubicForm
    t: Fraction
    n: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", to_q(self.t))
        object.__setattr__(self, "n", to_q(self.n))

    @property
    def singular(self) -> bool:
        return self.t**3 == 27 * self.n


def surface_eval(inst: PellCubeInstance, x: RationalLike, y: RationalLike) -> Fraction:
    """``t^3 - 3 t Q(x, y) + F(x, y) - 27 n``; zero exactly on the surface."""
    x, y = to_q(x), to_q(y)
    Q = hessian(inst.form)
    F = jacobian(inst.form)
    t = inst.t
    return t**3 - 3 * t * Q(x, y) + F(x, y) - 27 * inst.n


def element_from_point(inst: PellCubeInstance, x: RationalLike, y: RationalLike) -> CubicElement:
    x, y = to_q(x), to_q(y)
    if surface_eval(inst, x, y) != 0:
        raise ValueError(f"({x}, {y}) is not on the surface for t={inst.t}, n={inst.n}")
    u = (inst.t + inst.form.b * x + 2 * inst.form.c * y) / 3
    return CubicElement(inst.form, u, x, y)


def point_from_element(e: CubicElement) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(t, n, x, y)`` for an element."""
    return trace(e), norm(e), e.x, e.y


def orbit(seed: CubicElement, count: int) -> list[CubicElement]:
    """``seed^1, ..., seed^count`` for a norm-one seed other than 1.

    Distinctness is checked and logged, not guaranteed.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if norm(seed) != 1:
        raise ValueError(f"seed ({seed.u}, {seed.x}, {seed.y}) has norm {norm(seed)}, not 1")
    if seed == CubicElement.one(seed.form):
        raise ValueError("the identity generates a trivial orbit")
    members = []
    current = seed
    for _ in range(count):
        members.append(current)
        current = current * seed
    if len(set(members)) != len(members):
        log.warning("orbit of (%s, %s, %s) repeats within %d steps", seed.u, seed.x, seed.y, count)
    return members


def all_distinct(members: list[CubicElement]) -> bool:
    return len(set(members)) == len(members)


def carmichael_form(n: int) -> BinaryCubicForm:
    """The form ``(1, 0, 0, -n)`` whose norm is ``u^3 + n x^3 + n^2 y^3 - 3 n u x y``."""
    return BinaryCubicForm(1, 0, 0, -n)


def carmichael_eval(n: int, u: int, x: int, y: int) -> int:
    return u**3 + n * x**3 + n * n * y**3 - 3 * n * u * x * y

