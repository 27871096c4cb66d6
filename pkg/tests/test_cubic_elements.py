from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from cubicfield import linalg
from cubicfield.cubic_elements import (
    CubicElement,
    add,
    char_poly,
    char_poly_from_roots,
    char_poly_oracle,
    element_matrix_entries,
    factor_check,
    from_matrix,
    inverse,
    multiply,
    negate,
    norm,
    power,
    product_coordinates,
    root_power_sums,
    to_matrix,
    trace,
)
from cubicfield.cubic_forms import BinaryCubicForm, hessian

coeff = st.integers(-20, 20)
coord = st.integers(-50, 50)
forms = st.builds(BinaryCubicForm, coeff, coeff, coeff, coeff)
EX = BinaryCubicForm(1, 1, 2, 1)


@st.composite
def element_tuples(draw, n=2, field_forms=False):
    base = forms.filter(lambda C: C.a != 0) if field_forms else forms
    C = draw(base)
    return [CubicElement(C, draw(coord), draw(coord), draw(coord)) for _ in range(n)]


def test_matrix_examples():
    assert to_matrix(CubicElement.one(EX)) == linalg.identity(3)
    assert to_matrix(CubicElement(EX, 0, 1, 0)) == linalg.as_matrix([[0, 0, -1], [1, -1, -2], [0, 1, 0]])
    n = 7
    C = BinaryCubicForm(1, 0, 0, -n)
    assert to_matrix(CubicElement(C, 2, 3, 5)) == linalg.as_matrix(
        [[2, n * 5, n * 3], [3, 2, n * 5], [5, 3, 2]]
    )


def test_example_unit():
    e = CubicElement(EX, 1, -1, 1)
    assert trace(e) == 0 and norm(e) == 1
    assert trace(CubicElement.one(EX)) == 3 and norm(CubicElement.one(EX)) == 1
    assert norm(multiply(e, e)) == 1
    inv = inverse(e)
    assert multiply(e, inv) == CubicElement.one(EX)
    t, q, n = char_poly_oracle(e)
    assert (t, n) == (0, 1)
    assert t * t - 3 * q == hessian(EX)(e.x, e.y)
    assert char_poly_oracle(CubicElement.one(EX)) == (3, 3, 1)


def test_add_and_negate():
    e = CubicElement(EX, 1, 2, 3)
    assert add(e, CubicElement(EX, 4, 5, 6)).coords == (5, 7, 9)
    assert add(e, negate(e)).is_zero()
    assert (e - e).is_zero()


def test_inverse_errors_and_cross_form():
    with pytest.raises(ZeroDivisionError):
        inverse(CubicElement.zero(EX))
    with pytest.raises(ValueError):
        multiply(CubicElement.one(EX), CubicElement.one(BinaryCubicForm(1, 0, 0, -2)))
    assert inverse(CubicElement.one(EX)) == CubicElement.one(EX)


def test_from_matrix_rejects_other_shapes():
    e = CubicElement(EX, 3, -1, 2)
    assert from_matrix(EX, to_matrix(e)) == e
    with pytest.raises(ValueError):
        from_matrix(EX, linalg.as_matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]]))


@given(element_tuples(2))
def test_multiplication_is_matrix_multiplication(pair):
    e1, e2 = pair
    p = multiply(e1, e2)
    assert p == multiply(e2, e1)
    assert to_matrix(p) == linalg.matmul(to_matrix(e1), to_matrix(e2))
    assert to_matrix(add(e1, e2)) == linalg.matadd(to_matrix(e1), to_matrix(e2))
    assert norm(p) == norm(e1) * norm(e2)
    assert factor_check(e1, e2)
    assert p.is_integral


@given(element_tuples(3))
def test_ring_axioms(triple):
    e1, e2, e3 = triple
    assert multiply(multiply(e1, e2), e3) == multiply(e1, multiply(e2, e3))
    assert multiply(e1, add(e2, e3)) == add(multiply(e1, e2), multiply(e1, e3))
    assert multiply(e1, CubicElement.one(e1.form)) == e1


@given(element_tuples(1))
def test_round_trip_and_trace(single):
    (e,) = single
    assert from_matrix(e.form, to_matrix(e)) == e
    assert trace(e) == linalg.trace(to_matrix(e))


@settings(max_examples=50)
@given(element_tuples(1), st.integers(-6, 6))
def test_power_and_inverse(single, k):
    (e,) = single
    if norm(e) == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(e)
        return
    assert power(e, 0) == CubicElement.one(e.form)
    assert power(e, 1) == e and power(e, 2) == multiply(e, e)
    assert norm(power(e, k)) == norm(e) ** k
    assert multiply(power(e, k), power(e, -k)) == CubicElement.one(e.form)
    assert multiply(e, inverse(e)) == CubicElement.one(e.form)


def test_power_sums_against_companion_traces():
    # sum of zeta_i^k is the trace of the k-th power of the companion matrix
    for C in (EX, BinaryCubicForm(2, -3, 5, 7), BinaryCubicForm(1, 0, 0, -2), BinaryCubicForm(-7, 4, 0, 9)):
        a, b, c, d = (sp.Rational(v) for v in C.coeffs)
        comp = sp.Matrix([[0, 0, -d / a], [1, 0, -c / a], [0, 1, -b / a]])
        for k, pk in enumerate(root_power_sums(C, 7)):
            assert (comp**k).trace() == pk


def _char_poly_by_resultant(e):
    """Monic characteristic polynomial of ``g(zeta)`` as a resultant in ``z``."""
    z, lam = sp.symbols("z lam")
    a, b, c, d = e.form.coeffs
    g = e.u + (a * e.x + b * e.y) * z + a * e.y * z**2
    res = sp.Poly(sp.resultant(a * z**3 + b * z**2 + c * z + d, lam - g, z), lam)
    monic = [sp.Rational(v) / res.LC() for v in res.all_coeffs()]
    return Fraction(int(-monic[1].p), int(monic[1].q)), Fraction(int(monic[2].p), int(monic[2].q)), \
        Fraction(int(-monic[3].p), int(monic[3].q))


@settings(max_examples=40, deadline=None)
@given(element_tuples(1, field_forms=True))
def test_char_poly_routes_agree_with_resultant(single):
    (e,) = single
    assert char_poly(e) == char_poly_from_roots(e) == _char_poly_by_resultant(e)


@given(element_tuples(1, field_forms=True))
def test_trace_square_relation(single):
    (e,) = single
    t, q, _ = char_poly_oracle(e)
    assert t * t - 3 * q == hessian(e.form)(e.x, e.y)


def test_power_sums_need_leading_coefficient():
    with pytest.raises(ValueError):
        root_power_sums(BinaryCubicForm(0, 1, 0, -5), 3)


# --- specialisations, checked as polynomial identities ----------------------

u1, x1, y1, u2, x2, y2, D, B, Cc = sp.symbols("u1 x1 y1 u2 x2 y2 D B C")


def _det(entries):
    return sp.expand(sp.Matrix(entries).det())


def test_brahmagupta_specialisation():
    a, b, c, d = 0, 1, 0, -D
    assert sp.expand(_det(element_matrix_entries(a, b, c, d, u1, x1, y1)) - (u1 - x1) * (u1**2 - D * y1**2)) == 0
    u3, _, y3 = product_coordinates(a, b, c, d, u1, x1, y1, u2, x2, y2)
    assert sp.expand(u3 - (u1 * u2 + D * y1 * y2)) == 0
    assert sp.expand(y3 - (u1 * y2 + u2 * y1)) == 0


def test_gauss_principal_specialisation():
    a, b, c, d = 0, Cc, -B, 1
    det = _det(element_matrix_entries(a, b, c, d, u1, x1, y1))
    assert sp.expand(det - (u1 - Cc * x1 + B * y1) * (u1**2 + B * u1 * y1 + Cc * y1**2)) == 0
    u3, x3, y3 = product_coordinates(a, b, c, d, u1, x1, y1, u2, x2, y2)
    assert sp.expand(u3 - (u1 * u2 - Cc * y1 * y2)) == 0
    assert sp.expand(y3 - (u1 * y2 + u2 * y1 + B * y1 * y2)) == 0
    lin3 = u3 - Cc * x3 + B * y3
    assert sp.expand(lin3 - (u1 - Cc * x1 + B * y1) * (u2 - Cc * x2 + B * y2)) == 0


def test_generic_product_is_matrix_product():
    a, b, c, d = sp.symbols("a b c d")
    N1 = sp.Matrix(element_matrix_entries(a, b, c, d, u1, x1, y1))
    N2 = sp.Matrix(element_matrix_entries(a, b, c, d, u2, x2, y2))
    N3 = sp.Matrix(element_matrix_entries(a, b, c, d, *product_coordinates(a, b, c, d, u1, x1, y1, u2, x2, y2)))
    assert (N1 * N2 - N3).expand() == sp.zeros(3, 3)
    assert (N1 * N2 - N2 * N1).expand() == sp.zeros(3, 3)


@pytest.mark.parametrize("pair", [((1, 2, 3), (4, -1, 2)), ((0, 0, 0), (5, 5, 5)), ((1, 0, 0), (1, 0, 0))])
def test_factor_check_specialisations(pair):
    for form in (BinaryCubicForm(0, 1, 0, -5), BinaryCubicForm(0, 3, -1, 1), EX):
        e1, e2 = (CubicElement(form, *p) for p in pair)
        assert factor_check(e1, e2)
