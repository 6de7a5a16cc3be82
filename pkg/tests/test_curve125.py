from fractions import Fraction as F

import pytest

from stablelab import curve125
from stablelab.exactmath import (
    INF,
    SymbolicPolynomial,
    min_valuation,
    monomial_valuation,
    normal_form,
    sym,
    univariate_gcd,
    val_rat,
)

r, x, y = sym("r"), sym("x"), sym("y")


def test_plus_curve_model_terms():
    model = curve125.plus_curve_model()
    # the published quintic-quartic has 14 monomials (the shifted model's
    # table has 16 nonzero cells; see test_table1_spot_values)
    assert len(model.f_plus.terms) == 14
    assert model.f_plus.coefficient("x", 3).coefficient("y", 1) == 25
    assert model.f_plus.coefficient("x", 0).coefficient("y", 0) == 25
    assert model.fiber == x * sym("u") ** 2 - y * sym("u") + 5


def test_table1_spot_values():
    table = curve125.table1_coefficients()
    assert table[(4, 0)] == -5 * r + 25
    assert table[(0, 4)] == 1
    assert (5, 1) not in table  # empty cell
    model = curve125.build_shifted_model()
    assert model.g_plus.coefficient("x0", 5).coefficient("y", 1).is_zero()
    assert model.g_plus.coefficient("x0", 4).coefficient("y", 0) == -5 * r + 25
    assert model.g_plus.coefficient("x0", 0).coefficient("y", 0) == (
        25 * r**4 - 25 * r**3 + 25 * r**2
    )


def test_shifted_model_roundtrip():
    model = curve125.build_shifted_model()
    back = normal_form(model.g_plus.substitute("x0", x - r), [curve125.R_SYMBOL])
    assert back == curve125.plus_curve_model().f_plus


def test_ramification_valuation_table():
    ram = curve125.ramification_polynomials()
    assert len(ram.p_ram_y) == 11 and len(ram.p_ram_x) == 11
    vals = [val_rat(c, 5) for c in ram.p_ram_y]
    assert vals == [7, 7, 6, 6, 5, 5, 4, 4, 3, INF, 0]
    assert ram.p_ram_y[9] == 0  # a_9 vanishes exactly


def test_ramification_polygons():
    ram = curve125.ramification_polynomials()
    assert curve125.root_valuation_multiset(ram.p_ram_y) == ((F(7, 10), 10),)
    # x = y^2/20 at the roots, so v(x) = 2*(7/10) - 1 = 2/5
    assert curve125.root_valuation_multiset(ram.p_ram_x) == ((F(2, 5), 10),)


def test_ramification_polynomials_squarefree():
    ram = curve125.ramification_polynomials()
    for coeffs in (ram.p_ram_y, ram.p_ram_x):
        f = [F(c) for c in coeffs]
        df = [F((i + 1) * c) for i, c in enumerate(coeffs[1:])]
        assert univariate_gcd(f, df) == [F(1)]


def test_distance_multisets():
    ram = curve125.ramification_polynomials()
    assert ram.y_distance_multiset == ((F(7, 10), 50), (F(4, 5), 40))
    # computed fact: five cross-cluster pairs are strictly closer than 1/2
    assert ram.x_distance_multiset == ((F(1, 2), 80), (F(7, 10), 10))
    assert sum(n for _, n in ram.y_distance_multiset) == 90
    assert sum(n for _, n in ram.x_distance_multiset) == 90


def test_distance_multisets_consistency():
    """v(x_i - x_j) = v(y_i - y_j) + v(y_i + y_j) - 1: the observed x-multiset
    is forced by the y-difference and y-sum structure."""
    ram = curve125.ramification_polynomials()
    # in-cluster: 4/5 + 7/10 - 1 = 1/2 (40 pairs); generic cross:
    # 7/10 + 4/5 - 1 = 1/2 (40 pairs); special cross: 7/10 + 1 - 1 = 7/10
    assert F(4, 5) + F(7, 10) - 1 == F(1, 2)
    assert F(7, 10) + F(1) - 1 == F(7, 10)
    assert ram.x_distance_multiset == ((F(1, 2), 80), (F(7, 10), 10))


def test_p_ram_x_even_odd_route():
    """Independent construction of p_ram_x: split f+ into even/odd y-parts on
    y^2 = 20x; the resultant must equal E^2 - 20x * O^2 up to sign."""
    model = curve125.plus_curve_model()
    even = SymbolicPolynomial.zero()
    odd = SymbolicPolynomial.zero()
    for e, coeff_poly in model.f_plus.as_univariate("y").items():
        replaced = coeff_poly * (20 * x) ** (e // 2)
        if e % 2 == 0:
            even = even + replaced
        else:
            odd = odd + replaced
    candidate = even * even - 20 * x * odd * odd
    ram = curve125.ramification_polynomials()
    from stablelab.exactmath import poly_to_coeffs

    coeffs = [int(c) for c in poly_to_coeffs(candidate, "x")]
    assert coeffs == list(ram.p_ram_x) or coeffs == [-c for c in ram.p_ram_x]


def test_x_distances_via_y_route():
    """Second, p_ram_x-free route to the x-distance multiset: the monic image
    of p_ram_y under y -> y^2 has roots y_i^2 = 20*x_i, so its distance
    multiset shifted by -v(20) must reproduce the x-distance multiset."""
    ram = curve125.ramification_polynomials()
    even = [0] * 6
    odd = [0] * 5
    for i, c in enumerate(ram.p_ram_y):
        if i % 2 == 0:
            even[i // 2] = c
        else:
            odd[i // 2] = c

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for k, cb in enumerate(b):
                out[i + k] += ca * cb
        return out

    squared_roots = mul(even, even)  # E(x)^2 - x*O(x)^2 has roots y_i^2
    shifted = [0] + mul(odd, odd)
    shifted += [0] * (len(squared_roots) - len(shifted))
    p2 = [a - b for a, b in zip(squared_roots, shifted)]
    assert len(p2) == 11 and abs(p2[-1]) == 1
    dist = curve125.pairwise_distance_valuations(p2)
    rescaled = tuple(sorted((v - 1, n) for v, n in dist))  # divide roots by 20
    assert rescaled == ram.x_distance_multiset


def test_two_cluster_combinatorics():
    assert curve125.cluster_sizes(((F(7, 10), 50), (F(4, 5), 40))) == (5, 5)
    with pytest.raises(ValueError):
        curve125.cluster_sizes(((F(7, 10), 50), (F(4, 5), 30)))


def test_pairwise_distance_trivial_example():
    assert curve125.pairwise_distance_valuations([-1, 0, 1]) == ((F(0), 2),)


def test_pairwise_distance_rejects_non_squarefree():
    with pytest.raises(ValueError):
        curve125.pairwise_distance_valuations([1, 2, 1])  # (x+1)^2


def test_dominance_certificate():
    cert = curve125.verify_dominance_eq3()
    assert cert.passed
    assert cert.dominant == ((("x0", 1),), (("x0", 5),), (("y", 2),))
    assert cert.data["min_valuation"] == F(5, 2)
    assert cert.data["coefficient_minima"] == (F(5, 2), 2, 2, F(9, 5), F(7, 5), 0)
    assert cert.data["polygon_roots"] == ((F(1, 2), 5),)
    # a competing monomial stays strictly above: 25*x0^3*y at 2 + 3/2 + 3/4
    v = monomial_valuation(
        (("x0", 3), ("y", 1)), F(25), curve125.EQ3_ASSIGNMENT, 5
    )
    assert v == F(17, 4) > F(5, 2)


def test_eq4_reduction():
    cert = curve125.verify_reduction("eq4")
    assert cert.passed
    assert cert.data["residue_mod5"] == {
        (("y1", 2),): 1,
        (("x1", 5),): 3,
        (("x1", 1),): 3,
    }
    # the scaling valuations behind the residue: v(alpha^5/(15 beta^2)) = 0
    assert 5 * F(1, 2) - (1 + 2 * F(3, 4)) == 0
    assert 2 - 4 * F(1, 2) == 0  # v(25 / alpha^4)
    assert cert.residual_min is not None and cert.residual_min > 0


def test_hensel_certificate():
    cert = curve125.hensel_certificate()
    assert cert.passed
    lo_min, hi_min = cert.data["h1_endpoint_minima"]
    assert lo_min == 0 and hi_min == 0
    lo_wit, hi_wit = cert.data["h1_endpoint_witnesses"]
    assert len(lo_wit) == 1 and len(hi_wit) == 1
    # the boundary witnesses: s^20/225 (from y^4) and -25 s^2 (from -25*x0)
    assert lo_wit[0].constant == -2 and lo_wit[0].slope == 10
    assert hi_wit[0].constant == 2 and hi_wit[0].slope == -8
    assert all(v > 0 for v in cert.data["h1_interior_minima"].values())
    assert cert.data["hp1_endpoint_minima"] == (0, 0)
    assert cert.data["delta_at_ram_circle"] == F(2, 25)


def test_eq6_reduction():
    cert = curve125.verify_reduction("eq6")
    assert cert.passed
    assert cert.data["coefficient_valuations"] == (0, 0)
    assert cert.residual_min == F(2, 25)
    assert cert.data["delta_bound"] == F(2, 25)


def test_verify_reduction_unknown_claim():
    with pytest.raises(ValueError):
        curve125.verify_reduction("eq7")


def test_fiber_square_identity():
    cert = curve125.fiber_square_identity()
    assert cert.passed
    assert cert.quotient == 4 * x
    # u = y/(2x) kills (2xu - y)^2, so y^2 - 20x = -4x * fiber / x-part there;
    # numeric check at x=1, y=0, u=t: (2t)^2 + 20 = 4(t^2 + 5)
    t = sym("t")
    assert (2 * t) ** 2 + 20 == 4 * (t**2 + 5)


def test_reduction_certificates_carry_exact_rationals():
    """Residual minima are positive Fractions computed exactly, never floats."""
    certificates = [
        curve125.verify_dominance_eq3(),
        curve125.verify_reduction("eq4"),
        curve125.verify_reduction("eq6"),
        curve125.hensel_certificate(),
        curve125.fiber_square_identity(),
    ]
    for cert in certificates:
        assert cert.passed, cert.claim_id
        if cert.residual_min is not None:
            assert isinstance(cert.residual_min, F)
            assert cert.residual_min > 0


def test_min_valuation_lower_bound_on_evaluations():
    """The generic minimum bounds the valuation of any rational evaluation."""
    g_plus = curve125.build_shifted_model().g_plus
    # specialize x0 -> 5^k etc. only through valuation bookkeeping: use r = 0
    f = g_plus.substitute("r", 0)
    value = f.evaluate({"x0": F(5), "y": F(25)})
    mv = min_valuation(f, {"x0": F(1), "y": F(2)}, 5)
    assert val_rat(value, 5) >= mv.value
