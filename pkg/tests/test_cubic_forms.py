from functools import reduce

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from cubicfield.binary import BinaryForm
from cubicfield.cubic_forms import (
    BinaryCubicForm,
    UnimodularMap,
    discriminant,
    evaluate,
    gl2_transform,
    hessian,
    hessian_by_partials,
    is_irreducible,
    jacobian,
    syzygy_check,
    syzygy_residual,
)

X, Y = sp.symbols("x y")
coeff = st.integers(-20, 20)
forms = st.builds(BinaryCubicForm, coeff, coeff, coeff, coeff)


def _sym(C):
    a, b, c, d = C.coeffs if isinstance(C, BinaryCubicForm) else C
    return a * X**3 + b * X**2 * Y + c * X * Y**2 + d * Y**3


def _sym_covariants(f):
    """Hessian and Jacobian covariants straight from the derivative definitions."""
    H = sp.Matrix([[sp.diff(f, X, X), sp.diff(f, X, Y)], [sp.diff(f, Y, X), sp.diff(f, Y, Y)]])
    Q = sp.expand(-H.det() / 4)
    J = sp.Matrix([[sp.diff(Q, X), sp.diff(Q, Y)], [sp.diff(f, X), sp.diff(f, Y)]])
    return Q, sp.expand(-J.det())


def _coeffs(expr, degree):
    p = sp.Poly(expr, X, Y)
    return tuple(int(p.coeff_monomial(X ** (degree - i) * Y**i)) for i in range(degree + 1))


def test_example_invariants(example_form):
    assert discriminant(example_form) == -23
    assert hessian(example_form).coeffs == (-5, -7, 1)
    assert jacobian(example_form).coeffs == (-11, 39, 48, 25)
    assert evaluate(jacobian(example_form), -1, 1) == 27
    assert syzygy_check(example_form)
    assert is_irreducible(example_form)


@pytest.mark.parametrize("form, disc", [((1, 0, 0, 0), 0), ((1, 0, -1, 0), 4), ((1, 1, 2, 1), -23)])
def test_discriminant_examples(form, disc):
    assert discriminant(BinaryCubicForm(*form)) == disc


@pytest.mark.parametrize("d", [-5, 1, 7])
def test_hessian_examples(d):
    assert hessian(BinaryCubicForm(1, 0, 0, d)).coeffs == (0, -9 * d, 0)
    assert hessian(BinaryCubicForm(0, 1, 0, -d)).coeffs == (1, 0, 3 * d)


@pytest.mark.parametrize("D", [-4, 5, 8])
def test_syzygy_degenerate_family(D):
    assert syzygy_check(BinaryCubicForm(0, 1, 0, -D))


def test_syzygy_symbolic_generic():
    a, b, c, d = sp.symbols("a b c d")
    f = a * X**3 + b * X**2 * Y + c * X * Y**2 + d * Y**3
    Q, F = _sym_covariants(f)
    disc = b**2 * c**2 + 18 * a * b * c * d - 4 * a * c**3 - 4 * b**3 * d - 27 * a**2 * d**2
    assert sp.expand(F**2 + 27 * disc * f**2 - 4 * Q**3) == 0
    assert sp.expand(sp.discriminant(f.subs(Y, 1), X) - disc) == 0


@given(forms)
def test_covariants_match_symbolic_oracle(C):
    Q, F = _sym_covariants(_sym(C))
    assert hessian(C).coeffs == _coeffs(Q, 2)
    assert jacobian(C).coeffs == _coeffs(F, 3)
    assert hessian_by_partials(C) == BinaryForm(hessian(C).coeffs)


@given(forms)
def test_syzygy_holds(C):
    assert syzygy_residual(C).is_zero()


@given(forms)
def test_hessian_discriminant_is_minus_three_disc(C):
    assert hessian(C).disc == -3 * discriminant(C)


@given(forms, st.integers(-3, 3), st.integers(-3, 3))
def test_evaluate_matches_sympy(C, x, y):
    assert evaluate(C, x, y) == _sym(C).subs({X: x, Y: y})


_ELEMENTARY = [(1, 1, 0, 1), (1, -1, 0, 1), (1, 0, 1, 1), (1, 0, -1, 1), (0, 1, 1, 0), (-1, 0, 0, 1)]


def _compose(m, n):
    p, q, r, s = m
    a, b, c, d = n
    return (p * a + q * c, p * b + q * d, r * a + s * c, r * b + s * d)


# words in elementary moves cover GL2(Z)
unimodular = st.lists(st.sampled_from(_ELEMENTARY), max_size=6).map(
    lambda word: reduce(_compose, word, (1, 0, 0, 1))
)


@given(forms, unimodular)
def test_gl2_covariance(C, m):
    g = UnimodularMap(*m)
    eps = g.det
    D = gl2_transform(C, g)
    assert discriminant(D) == discriminant(C)
    Hg = BinaryForm(hessian(C).coeffs).substitute(g.p, g.q, g.r, g.s)
    Fg = jacobian(C).as_binary().substitute(g.p, g.q, g.r, g.s)
    assert BinaryForm(hessian(D).coeffs) == Hg * (eps**2)
    assert jacobian(D).as_binary() == Fg * (eps**3)
    # the substitution itself, against sympy
    expected = sp.expand(_sym(C).subs({X: g.p * X + g.q * Y, Y: g.r * X + g.s * Y}, simultaneous=True))
    assert D.coeffs == _coeffs(expected, 3)


def test_gl2_special_maps():
    C = BinaryCubicForm(2, -3, 5, 7)
    assert gl2_transform(C, UnimodularMap.identity()) == C
    assert gl2_transform(C, UnimodularMap.swap()).coeffs == (7, 5, -3, 2)
    with pytest.raises(ValueError):
        UnimodularMap(2, 0, 0, 1)


@pytest.mark.parametrize("form, expected", [
    ((1, 1, 2, 1), True), ((1, 0, 0, 0), False), ((1, 0, 0, -8), False), ((0, 1, 0, -5), False),
    ((1, 0, 0, -2), True), ((2, 0, 0, -1), True), ((3, 0, 0, -24), False),
])
def test_irreducibility(form, expected):
    assert is_irreducible(BinaryCubicForm(*form)) is expected


@given(forms.filter(lambda C: C.a != 0))
def test_irreducibility_matches_sympy(C):
    _, factors = sp.factor_list(_sym(C).subs(Y, 1), X)
    assert is_irreducible(C) == (len(factors) == 1 and factors[0][1] == 1 and sp.degree(factors[0][0], X) == 3)


def test_forms_reject_non_integers():
    with pytest.raises((TypeError, ValueError)):
        BinaryCubicForm(1, 2, 3, "1/2")
