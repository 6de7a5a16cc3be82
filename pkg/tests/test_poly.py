from fractions import Fraction as F

import pytest

from stablelab.exactmath import (
    SymbolicPolynomial,
    ValuedSymbol,
    coeffs_to_poly,
    inverse_mod,
    normal_form,
    poly_to_coeffs,
    sym,
    univariate_divmod,
    univariate_gcd,
)

x, y, r = sym("x"), sym("y"), sym("r")


def test_arithmetic_basics():
    f = (x + y) * (x - y)
    assert f == x**2 - y**2
    assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1
    assert (x - x).is_zero()
    assert SymbolicPolynomial.constant(F(2, 3)) * 3 == 2


def test_substitute_shift():
    x0 = sym("x0")
    assert (x**2).substitute("x", x0 + r) == x0**2 + 2 * r * x0 + r**2
    assert y.substitute("y", 5 * sym("y1")) == 5 * sym("y1")
    # monomial power: x^5 with x -> y^2/20, cleared by 20^5
    f = (x**5).substitute("x", y * y / 20) * 20**5
    assert f == y**10


def test_evaluate_and_derivative():
    f = x**3 + 2 * x * y
    assert f.evaluate({"x": F(2), "y": F(1, 2)}) == 10
    assert f.derivative("x") == 3 * x**2 + 2 * y
    assert f.derivative("y") == 2 * x


def test_normal_form_rules():
    rule_r = ValuedSymbol("r", F(2, 5), (5, 25 - 25 * r))
    assert normal_form(r**6, [rule_r]) == 25 * r - 25 * r**2
    assert normal_form(r**5 + 25 * r - 25, [rule_r]).is_zero()
    s15 = sym("s15")
    rule_s15 = ValuedSymbol("s15", F(1, 2), (2, SymbolicPolynomial.constant(15)))
    assert normal_form(s15**2, [rule_s15]) == 15
    # chained rules: beta^2 -> 5 alpha, alpha^2 -> 5
    alpha, beta = sym("alpha"), sym("beta")
    rules = [
        ValuedSymbol("alpha", F(1, 2), (2, SymbolicPolynomial.constant(5))),
        ValuedSymbol("beta", F(3, 4), (2, 5 * alpha)),
    ]
    assert normal_form(beta**4, rules) == 125


def test_normal_form_order_independent():
    rule_r = ValuedSymbol("r", F(2, 5), (5, 25 - 25 * r))
    s15 = sym("s15")
    rule_s = ValuedSymbol("s15", F(1, 2), (2, SymbolicPolynomial.constant(15)))
    f = (r**7 + 3) * s15**3 - r**6 * s15 + s15**2 * r**11
    assert normal_form(f, [rule_r, rule_s]) == normal_form(f, [rule_s, rule_r])
    # exponents of rewritten symbols stay below the rewrite power
    reduced = normal_form(f, [rule_r, rule_s])
    for mono, _ in reduced.items():
        exps = dict(mono)
        assert exps.get("r", 0) < 5 and exps.get("s15", 0) < 2


def test_normal_form_conflicting_rules():
    rule1 = ValuedSymbol("r", F(1), (2, SymbolicPolynomial.constant(2)))
    rule2 = ValuedSymbol("r", F(1), (3, SymbolicPolynomial.constant(3)))
    with pytest.raises(ValueError):
        normal_form(r**5, [rule1, rule2])


def test_rewrite_must_lower_degree():
    with pytest.raises(ValueError):
        ValuedSymbol("r", F(1), (2, r**2 + 1))


def test_exact_division():
    f = (x**2 + y) * (x - 3 * y + 1)
    assert f.exact_divide(x**2 + y) == x - 3 * y + 1
    with pytest.raises(ValueError):
        (f + 1).exact_divide(x**2 + y)


def test_univariate_helpers():
    coeffs = poly_to_coeffs(x**3 - 2 * x + 5, "x")
    assert coeffs == [5, -2, 0, 1]
    assert coeffs_to_poly(coeffs, "x") == x**3 - 2 * x + 5
    q, rem = univariate_divmod([F(1), F(0), F(1)], [F(1), F(1)])  # (x^2+1)/(x+1)
    assert q == [F(-1), F(1)] and rem == [F(2)]
    g = univariate_gcd(poly_to_coeffs((x + 1) ** 2 * (x - 2), "x"),
                       poly_to_coeffs((x + 1) * (x - 3), "x"))
    assert g == [F(1), F(1)]


def test_inverse_mod():
    minpoly = poly_to_coeffs(r**5 + 25 * r - 25, "r")
    inv = inverse_mod(poly_to_coeffs(r, "r"), minpoly)
    assert inv == [F(1), 0, 0, 0, F(1, 25)]  # (r^4 + 25)/25
    with pytest.raises(ValueError):
        inverse_mod(minpoly, minpoly)
