"""JSON encodings.  Every numeral travels as a decimal string (``"-7/3"`` for rationals)."""

from __future__ import annotations

from typing import Any

from .cubic_elements import CubicElement
from .cubic_forms import BinaryCubicForm
from .linalg import Matrix
from .quad_forms import BinaryQuadraticForm
from .rational import fmt_q, to_int, to_q
from .weierstrass import ProjectiveLine, ProjectivePoint


class InputError(ValueError):
    """Malformed request: wrong shape, wrong type, or a non-numeral."""


def numeral(value: Any, what: str, integer: bool = False):
    if isinstance(value, float):
        raise InputError(f"{what}: floats are not accepted, pass a decimal string")
    try:
        return to_int(value) if integer else to_q(value)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what}: {exc}") from exc


def _list(value: Any, length: int, what: str) -> list:
    if not isinstance(value, list) or len(value) != length:
        raise InputError(f"{what}: expected a list of {length} numerals")
    return value


def require(body: dict, key: str) -> Any:
    if not isinstance(body, dict) or key not in body:
        raise InputError(f"missing field {key!r}")
    return body[key]


def parse_form(value: Any) -> BinaryCubicForm:
    coeffs = _list(value, 4, "form")
    return BinaryCubicForm(*(numeral(c, "form coefficient", integer=True) for c in coeffs))


def encode_form(form: BinaryCubicForm | BinaryQuadraticForm) -> list[str]:
    return [fmt_q(c) for c in form.coeffs]


def parse_quadratic(value: Any) -> BinaryQuadraticForm:
    coeffs = _list(value, 3, "quadratic form")
    return BinaryQuadraticForm(*(numeral(c, "quadratic form coefficient", integer=True) for c in coeffs))


def parse_element(value: Any, form: BinaryCubicForm | None = None) -> CubicElement:
    if isinstance(value, list):
        coords = _list(value, 3, "element")
    elif isinstance(value, dict):
        if "form" in value:
            form = parse_form(value["form"])
        coords = [require(value, k) for k in ("u", "x", "y")]
    else:
        raise InputError("element: expected {u, x, y} or [u, x, y]")
    if form is None:
        raise InputError("element: no form given")
    return CubicElement(form, *(numeral(c, "element coordinate") for c in coords))


def encode_element(e: CubicElement) -> dict[str, Any]:
    return {"form": encode_form(e.form), "u": fmt_q(e.u), "x": fmt_q(e.x), "y": fmt_q(e.y)}


def parse_point(value: Any) -> ProjectivePoint:
    if not isinstance(value, list) or len(value) not in (2, 3):
        raise InputError("point: expected [x, y] or [X, Y, Z]")
    coords = [numeral(c, "point coordinate") for c in value]
    if len(coords) == 2:
        coords.append(1)
    try:
        return ProjectivePoint(*coords)
    except ValueError as exc:
        raise InputError(f"point: {exc}") from exc


def encode_point(P: ProjectivePoint | None):
    return None if P is None else [str(c) for c in P.coords]


def encode_line(L: ProjectiveLine) -> list[str]:
    return [str(c) for c in L.coeffs]


def encode_matrix(m: Matrix) -> list[list[str]]:
    return [[fmt_q(v) for v in row] for row in m]
