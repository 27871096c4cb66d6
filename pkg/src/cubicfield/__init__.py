"""Exact cubic-field arithmetic with 3x3 element matrices.

Binary cubic forms and their covariants, the matrix multiplication law for
elements ``u + x*rho + y*omega``, norm-form orbits, and reduction of the fixed
trace/norm curve to Weierstrass form.  All arithmetic is over ``int`` and
``fractions.Fraction``.
"""

from .cubic_elements import CubicElement
from .cubic_forms import BinaryCubicForm, UnimodularMap
from .diophantine import PellCubeInstance
from .quad_forms import BinaryQuadraticForm, PellSolution
from .weierstrass import (
    ProjectiveCubic,
    ProjectiveLine,
    ProjectivePoint,
    WeierstrassCurve,
    build_gamma,
    to_weierstrass,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryCubicForm",
    "BinaryQuadraticForm",
    "CubicElement",
    "PellCubeInstance",
    "PellSolution",
    "ProjectiveCubic",
    "ProjectiveLine",
    "ProjectivePoint",
    "UnimodularMap",
    "WeierstrassCurve",
    "build_gamma",
    "to_weierstrass",
]
