import pytest
from hypothesis import given, strategies as st

from cubicfield.cubic_elements import CubicElement, norm, trace
from cubicfield.cubic_forms import BinaryCubicForm
from cubicfield.diophantine import (
    PellCubeInstance,
    all_distinct,
    carmichael_eval,
    carmichael_form,
    element_from_point,
    orbit,
    point_from_element,
    surface_eval,
)

coeff = st.integers(-20, 20)
coord = st.integers(-50, 50)
forms = st.builds(BinaryCubicForm, coeff, coeff, coeff, coeff)
EX = BinaryCubicForm(1, 1, 2, 1)


def test_surface_examples():
    assert surface_eval(PellCubeInstance(EX, 0, 1), -1, 1) == 0
    inst = PellCubeInstance(BinaryCubicForm(2, -1, 3, 4), 5, -7)
    assert surface_eval(inst, 0, 0) == 5**3 - 27 * -7


def test_element_from_point_examples():
    e = element_from_point(PellCubeInstance(EX, 0, 1), -1, 1)
    assert e == CubicElement(EX, 1, -1, 1) and norm(e) == 1
    assert element_from_point(PellCubeInstance(EX, 3, 1), 0, 0) == CubicElement.one(EX)
    with pytest.raises(ValueError):
        element_from_point(PellCubeInstance(EX, 0, 1), 1, 1)


def test_singular_flag():
    assert PellCubeInstance(EX, 3, 1).singular
    assert PellCubeInstance(EX, 0, 0).singular
    assert not PellCubeInstance(EX, 0, 1).singular


@given(forms, coord, coord, coord)
def test_trace_norm_surface_identity(C, u, x, y):
    e = CubicElement(C, u, x, y)
    t, n, ex, ey = point_from_element(e)
    inst = PellCubeInstance(C, t, n)
    assert surface_eval(inst, ex, ey) == 0
    back = element_from_point(inst, ex, ey)
    assert back == e and trace(back) == t and norm(back) == n


def test_carmichael_orbit():
    C = carmichael_form(2)
    members = orbit(CubicElement(C, -1, 1, 0), 8)
    assert len(members) == 8 and all_distinct(members)
    for e in members:
        assert carmichael_eval(2, int(e.u), int(e.x), int(e.y)) == 1
        inst = PellCubeInstance(C, trace(e), 1)
        assert surface_eval(inst, e.x, e.y) == 0
    assert members[:3] == [CubicElement(C, -1, 1, 0), CubicElement(C, 1, -2, 1), CubicElement(C, 1, 3, -3)]


def test_example_orbit_traces_vary():
    members = orbit(CubicElement(EX, 1, -1, 1), 5)
    assert all(norm(e) == 1 for e in members)
    assert len({trace(e) for e in members}) > 1


def test_orbit_errors():
    with pytest.raises(ValueError):
        orbit(CubicElement.one(EX), 3)
    with pytest.raises(ValueError):
        orbit(CubicElement(EX, 2, 0, 0), 3)
    with pytest.raises(ValueError):
        orbit(CubicElement(EX, 1, -1, 1), 0)


@given(st.integers(-12, 12), coord, coord, coord)
def test_carmichael_eval_is_norm(n, u, x, y):
    assert carmichael_eval(n, u, x, y) == norm(CubicElement(carmichael_form(n), u, x, y))
    assert carmichael_eval(2, 1, 0, 0) == 1 and carmichael_eval(2, -1, 1, 0) == 1
