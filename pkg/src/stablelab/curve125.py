"""Plane models of X0(125)+ / X0(125) and their exact reduction certificates.

The plus-quotient curve is the 14-term quintic-quartic f+(x, y) = 0 together
with the fiber equation x*u**2 - y*u + 5 = 0 that cuts out the degree-2
extension up to X0(125).  Everything here is certified with exact rational
arithmetic: coefficient tables over Q[r] (r a fixed root of r^5 + 25r - 25),
Newton polygons of the ramification polynomials, pairwise root-distance
multisets, dominance of the approximating equation x0^5 + 25*x0 = 15*y^2,
good-reduction residue equations, and the valuation envelopes behind the
annulus parameterization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactmath import (
    INF,
    Affine,
    Monomial,
    SymbolicPolynomial,
    ValuedSymbol,
    affine,
    envelope_breakpoints,
    envelope_min,
    inverse_mod,
    is_finite,
    min_valuation,
    monomial_valuation,
    newton_polygon,
    normal_form,
    param_valuations,
    poly_to_coeffs,
    coeffs_to_poly,
    resultant,
    difference_root_resultant,
    sym,
    univariate_gcd,
    val_rat,
)

P = 5
F = Fraction

x, y, u = sym("x"), sym("y"), sym("u")
x0, r = sym("x0"), sym("r")
sqrt15 = sym("sqrt15")

#: r is any root of r^5 + 25r - 25 (totally ramified over Q_5, v(r) = 2/5)
R_SYMBOL = ValuedSymbol("r", F(2, 5), (5, 25 - 25 * r))
SQRT15_SYMBOL = ValuedSymbol("sqrt15", F(1, 2), (2, SymbolicPolynomial.constant(15)))
R_MINPOLY = r**5 + 25 * r - 25


@dataclass(frozen=True)
class PlusCurveModel:
    f_plus: SymbolicPolynomial
    fiber: SymbolicPolynomial


@dataclass(frozen=True)
class ShiftedModel:
    g_plus: SymbolicPolynomial  # f_plus(x0 + r, y), reduced mod r^5 + 25r - 25


@dataclass(frozen=True)
class RamificationData:
    p_ram_y: tuple[int, ...]  # ascending coefficients, degree 10
    p_ram_x: tuple[int, ...]
    y_distance_multiset: tuple[tuple[Fraction, int], ...]
    x_distance_multiset: tuple[tuple[Fraction, int], ...]


@dataclass(frozen=True)
class ReductionCertificate:
    claim_id: str  # eq3 | eq4 | eq6 | hensel | z_identity
    status: str  # pass | fail
    dominant: tuple[Monomial, ...] = ()
    residual_min: Fraction | None = None
    quotient: SymbolicPolynomial | None = None
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def plus_curve_model() -> PlusCurveModel:
    f_plus = (
        y**4 - x**5 + 5 * x * y**3 + 15 * x**2 * y**2 + 25 * x**3 * y
        + 25 * x**4 + 5 * y**3 + 5 * x * y**2 - 25 * x**3 + 15 * y**2
        + 25 * x**2 + 25 * y - 25 * x + 25
    )
    fiber = x * u**2 - y * u + 5
    return PlusCurveModel(f_plus, fiber)


def table1_coefficients() -> dict[tuple[int, int], SymbolicPolynomial]:
    """The published coefficient table of g+(x0, y): (x0 exp, y exp) -> Q[r]."""
    return {
        (5, 0): SymbolicPolynomial.constant(-1),
        (4, 0): -5 * r + 25,
        (3, 1): SymbolicPolynomial.constant(25),
        (3, 0): -10 * r**2 + 100 * r - 25,
        (2, 2): SymbolicPolynomial.constant(15),
        (2, 1): 75 * r,
        (2, 0): -10 * r**3 + 150 * r**2 - 75 * r + 25,
        (1, 3): SymbolicPolynomial.constant(5),
        (1, 2): 30 * r + 5,
        (1, 1): 75 * r**2,
        (1, 0): -5 * r**4 + 100 * r**3 - 75 * r**2 + 50 * r - 25,
        (0, 4): SymbolicPolynomial.constant(1),
        (0, 3): 5 * r + 5,
        (0, 2): 15 * r**2 + 5 * r + 15,
        (0, 1): 25 * r**3 + 25,
        (0, 0): 25 * r**4 - 25 * r**3 + 25 * r**2,
    }


@lru_cache(maxsize=1)
def build_shifted_model() -> ShiftedModel:
    """Shift x = x0 + r and check the result against the embedded table."""
    model = plus_curve_model()
    g_plus = normal_form(model.f_plus.substitute("x", x0 + r), [R_SYMBOL])
    expected = table1_coefficients()
    for i in range(6):
        for j in range(5):
            got = g_plus.coefficient("x0", i).coefficient("y", j)
            want = expected.get((i, j), SymbolicPolynomial.zero())
            if got != want:
                raise ValueError(
                    f"shifted-model coefficient of x0^{i} y^{j} is {got}, expected {want}"
                )
    return ShiftedModel(g_plus)


def root_valuation_multiset(coeffs: Sequence[int]) -> tuple[tuple[Fraction, int], ...]:
    return newton_polygon([val_rat(c, P) for c in coeffs]).root_valuations()


def _integer_coeffs(f: SymbolicPolynomial, var: str) -> tuple[int, ...]:
    out = []
    for c in poly_to_coeffs(f, var):
        if c.denominator != 1:
            raise ValueError("expected integer coefficients")
        out.append(int(c))
    return tuple(out)


def pairwise_distance_valuations(
    coeffs: Sequence[int],
) -> tuple[tuple[Fraction, int], ...]:
    """Multiset of v_5(root_i - root_j), i != j, for a squarefree integer poly.

    Formed from D(z) = Res_y(f(y), f(y+z)), divided by z**deg f; the Newton
    polygon of the quotient gives the full multiset of ordered differences.
    """
    coeffs = [int(c) for c in coeffs]
    deg = len(coeffs) - 1
    fr = [Fraction(c) for c in coeffs]
    dfr = [Fraction((i + 1) * c) for i, c in enumerate(coeffs[1:])]
    if len(univariate_gcd(fr, dfr)) != 1:
        raise ValueError("polynomial is not squarefree")
    dpoly = difference_root_resultant(coeffs)
    if any(c != 0 for c in dpoly[:deg]):
        raise ValueError("difference polynomial not divisible by z^deg")
    quotient = dpoly[deg:]
    multiset = root_valuation_multiset(quotient)
    assert sum(n for _, n in multiset) == deg * (deg - 1)
    return multiset


#: Published coefficient valuations of p_ram_y, ascending degree 0..10.
P_RAM_Y_VALUATIONS = (7, 7, 6, 6, 5, 5, 4, 4, 3, INF, 0)


def cluster_sizes(distance_multiset) -> tuple[int, ...]:
    """Cluster sizes forced by a two-valued distance multiset.

    For a multiset {(near, a), (far, b)} with far < near over 10 points, the
    partition into maximal near-clusters must have sum of squares 10 + a; the
    unique integer partition realizing it is returned (error if ambiguous).
    """
    values = sorted(distance_multiset, key=lambda pair: pair[0])
    if len(values) != 2:
        raise ValueError("expected exactly two distance values")
    (_, cross_count), (_, near_count) = values
    total_points = 10
    if cross_count + near_count != total_points * (total_points - 1):
        raise ValueError("multiset does not cover all ordered pairs")
    target = total_points + near_count  # sum of n_i^2 over clusters

    def partitions(n, maximum):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maximum), 0, -1):
            for rest in partitions(n - first, first):
                yield (first,) + rest

    matches = [
        p for p in partitions(total_points, total_points)
        if sum(n * n for n in p) == target
    ]
    if len(matches) != 1:
        raise ValueError(f"cluster structure ambiguous: {matches}")
    return matches[0]


@lru_cache(maxsize=1)
def ramification_polynomials() -> RamificationData:
    """Degree-10 polynomials satisfied by the y resp. x coordinates of the
    ten ramification points (which satisfy y^2 = 20x), plus their pairwise
    root-distance valuation multisets."""
    model = plus_curve_model()
    p_ram_y_poly = 20**5 * model.f_plus.substitute("x", (y * y) / 20)
    p_ram_y = _integer_coeffs(p_ram_y_poly, "y")
    p_ram_x = _integer_coeffs(resultant(model.f_plus, y**2 - 20 * x, "y"), "x")
    if len(p_ram_y) != 11 or len(p_ram_x) != 11:
        raise ValueError("ramification polynomials must have degree 10")
    return RamificationData(
        p_ram_y,
        p_ram_x,
        pairwise_distance_valuations(p_ram_y),
        pairwise_distance_valuations(p_ram_x),
    )


# -- dominance of x0^5 + 25 x0 = 15 y^2 (the approximating equation) --------

EQ3_ASSIGNMENT = {"x0": F(1, 2), "y": F(3, 4), "r": F(2, 5)}
EQ3_DOMINANT = (
    (("x0", 1),),
    (("x0", 5),),
    (("y", 2),),
)


def verify_dominance_eq3() -> ReductionCertificate:
    """At v(x0) = 1/2, v(y) = 3/4 exactly the monomials x0^5, 25*x0, 15*y^2
    of g+ attain the minimal valuation 5/2; the Newton polygon in x0 then
    forces v(x0) = 1/2 at all five roots over any y on that circle."""
    g_plus = build_shifted_model().g_plus
    mv = min_valuation(g_plus, EQ3_ASSIGNMENT, P)

    coeff_minima = []
    for i in range(6):
        ci = g_plus.coefficient("x0", i)
        coeff_minima.append(
            min_valuation(ci, {"y": F(3, 4), "r": F(2, 5)}, P).value if not ci.is_zero() else INF
        )
    polygon = newton_polygon(coeff_minima)

    residual = min(
        (
            monomial_valuation(m, c, EQ3_ASSIGNMENT, P)
            for m, c in g_plus.items()
            if m not in mv.witnesses
        ),
        default=INF,
    )
    ok = (
        mv.value == F(5, 2)
        and mv.witnesses == EQ3_DOMINANT
        and polygon.root_valuations() == ((F(1, 2), 5),)
        and residual > F(5, 2)
    )
    return ReductionCertificate(
        claim_id="eq3",
        status="pass" if ok else "fail",
        dominant=mv.witnesses,
        residual_min=residual - mv.value if is_finite(residual) else None,
        data={
            "min_valuation": mv.value,
            "coefficient_minima": tuple(coeff_minima),
            "polygon_roots": polygon.root_valuations(),
        },
    )


# -- good-reduction and genus-0-component residue equations -----------------


def _valuation_level_split(f, assignment):
    """(valuation-0 part, min positive valuation, negative witnesses)."""
    level0 = {}
    pos_min = INF
    negative = []
    for mono, coeff in f.items():
        v = monomial_valuation(mono, coeff, assignment, P)
        if v < 0:
            negative.append(mono)
        elif v == 0:
            level0[mono] = coeff
        elif v < pos_min:
            pos_min = v
    return SymbolicPolynomial(level0), pos_min, negative


def _residues_mod5(f: SymbolicPolynomial) -> dict[Monomial, int]:
    out = {}
    for mono, coeff in f.items():
        num, den = coeff.numerator, coeff.denominator
        out[mono] = num * pow(den, -1, P) % P
    return out


def verify_reduction(claim_id: str) -> ReductionCertificate:
    """Certify the residue equation of the scaled model ('eq4' or 'eq6').

    eq4: with alpha = sqrt(5), beta = 5^(3/4) the scaled plus-curve model
    (1/(15 beta^2)) g+(alpha x1, beta y1) is integral and reduces to
    y1^2 = 2 x1^5 + 2 x1 over F5-bar.

    eq6: on the circle v(s) = 6/25, with s = alpha s0, u = beta u0 and
    y = (s^5/sqrt15)(1 + delta) (delta the annulus-parameterization error,
    bounded by the exported Hensel envelope), the fiber equation scaled by
    1/(r beta^2) is integral and its valuation-0 part is
    u0^2 - (alpha^5/(sqrt15 beta r)) s0^5 u0 + 5/(beta^2 r), term for term.
    """
    if claim_id == "eq4":
        return _verify_reduction_eq4()
    if claim_id == "eq6":
        return _verify_reduction_eq6()
    raise ValueError(f"unknown reduction claim {claim_id!r}")


def _verify_reduction_eq4() -> ReductionCertificate:
    alpha, beta = sym("alpha_eq4"), sym("beta_eq4")
    symbols = [
        R_SYMBOL,
        ValuedSymbol("alpha_eq4", F(1, 2), (2, SymbolicPolynomial.constant(5))),
        ValuedSymbol("beta_eq4", F(3, 4), (2, 5 * alpha)),
    ]
    assignment = {
        "r": F(2, 5), "alpha_eq4": F(1, 2), "beta_eq4": F(3, 4),
        "x1": F(0), "y1": F(0),
    }
    g_plus = build_shifted_model().g_plus
    scaled = g_plus.substitute("x0", alpha * sym("x1")).substitute("y", beta * sym("y1"))
    # 1/(15 beta^2) = alpha/375 after beta^2 -> 5 alpha, alpha^2 -> 5
    scaled = normal_form(scaled * alpha / 375, symbols)

    level0, pos_min, negative = _valuation_level_split(scaled, assignment)
    x1, y1 = sym("x1"), sym("y1")
    expected0 = y1**2 - F(1, 3) * x1**5 - F(1, 3) * x1
    residue = _residues_mod5(level0)
    # y1^2 = 2 x1^5 + 2 x1 over F5: valuation-0 part == y1^2 + 3 x1^5 + 3 x1
    expected_residue = {
        (("y1", 2),): 1,
        (("x1", 5),): 3,
        (("x1", 1),): 3,
    }
    ok = (
        not negative
        and level0 == expected0
        and residue == expected_residue
        and pos_min > 0
    )
    return ReductionCertificate(
        claim_id="eq4",
        status="pass" if ok else "fail",
        dominant=tuple(sorted(level0.terms)),
        residual_min=pos_min if is_finite(pos_min) else None,
        data={"residue_mod5": residue, "negative": tuple(negative)},
    )


def _inverse_of_r() -> SymbolicPolynomial:
    inv = inverse_mod(poly_to_coeffs(r, "r"), poly_to_coeffs(R_MINPOLY, "r"))
    return coeffs_to_poly(inv, "r")


def _verify_reduction_eq6() -> ReductionCertificate:
    alpha, beta = sym("alpha_eq6"), sym("beta_eq6")
    s0, u0, delta = sym("s0"), sym("u0"), sym("delta")
    delta_bound = hensel_certificate().data["delta_at_ram_circle"]
    symbols = [
        R_SYMBOL,
        SQRT15_SYMBOL,
        ValuedSymbol("alpha_eq6", F(6, 25), (25, SymbolicPolynomial.constant(5**6))),
        ValuedSymbol("beta_eq6", F(3, 10), (10, SymbolicPolynomial.constant(5**3))),
    ]
    assignment = {
        "r": F(2, 5), "sqrt15": F(1, 2),
        "alpha_eq6": F(6, 25), "beta_eq6": F(3, 10),
        "s0": F(0), "u0": F(0), "delta": delta_bound,
    }
    inv_r = _inverse_of_r()
    inv_beta2 = beta**8 / 125            # 1/beta^2 via beta^10 -> 5^3
    inv_sqrt15 = sqrt15 / 15             # 1/sqrt15 via sqrt15^2 -> 15

    # fiber equation x u^2 - y u + 5 with x = s^2 + r = alpha^2 s0^2 + r,
    # u = beta u0, y = (s^5/sqrt15)(1 + delta); scaled by 1/(r beta^2)
    x_sub = alpha**2 * s0**2 + r
    y_sub = alpha**5 * s0**5 * inv_sqrt15 * (1 + delta)
    raw = x_sub * (beta * u0) ** 2 - y_sub * (beta * u0) + 5
    scaled = normal_form(raw * inv_r * inv_beta2, symbols)

    # the target equation, assembled independently from its published form
    target = (
        u0**2
        - alpha**5 * inv_sqrt15 * (beta**9 / 125) * inv_r * s0**5 * u0
        + 5 * inv_beta2 * inv_r
    )
    target = normal_form(target, symbols)

    level0, pos_min, negative = _valuation_level_split(scaled, assignment)
    target0, _, target_negative = _valuation_level_split(target, assignment)
    middle = 5 * F(6, 25) - (F(1, 2) + F(3, 10) + F(2, 5))  # v(alpha^5/(sqrt15 beta r))
    constant = 1 - (2 * F(3, 10) + F(2, 5))                 # v(5/(beta^2 r))
    ok = (
        not negative
        and not target_negative
        and level0 == target0
        and pos_min > 0
        and middle == 0
        and constant == 0
        and delta_bound > 0
    )
    return ReductionCertificate(
        claim_id="eq6",
        status="pass" if ok else "fail",
        dominant=tuple(sorted(level0.terms)),
        residual_min=pos_min if is_finite(pos_min) else None,
        data={
            "delta_bound": delta_bound,
            "coefficient_valuations": (middle, constant),
            "negative": tuple(negative),
        },
    )


# -- the annulus parameterization (Hensel) certificate ----------------------

HENSEL_INTERVAL = (F(1, 5), F(1, 4))
RAM_CIRCLE = F(6, 25)  # v(s) at the circle carrying the ramification points


@lru_cache(maxsize=1)
def _hensel_pieces() -> tuple[tuple[Affine, ...], tuple[Affine, ...]]:
    """Affine valuation pieces of h(1) and h'(1) as functions of v(s).

    h(y) = s^-10 g+(s^2, s^5 y / sqrt15); the s^-10 scaling enters as the
    affine shift -10*lambda.
    """
    g_plus = build_shifted_model().g_plus
    subbed = g_plus.substitute("x0", sym("s") ** 2)
    subbed = subbed.substitute("y", sym("s") ** 5 * sym("yh") * sqrt15 / 15)
    G = normal_form(subbed, [R_SYMBOL, SQRT15_SYMBOL])
    h1 = G.substitute("yh", 1)
    hp1 = G.derivative("yh").substitute("yh", 1)
    fixed = {"sqrt15": F(1, 2), "r": F(2, 5)}
    shift = affine(0, -10)
    pieces1 = tuple(sorted({fn for fn, _ in param_valuations(h1, fixed, {"s": 1}, P, shift)}))
    pieces2 = tuple(sorted({fn for fn, _ in param_valuations(hp1, fixed, {"s": 1}, P, shift)}))
    return pieces1, pieces2


@lru_cache(maxsize=1)
def hensel_certificate() -> ReductionCertificate:
    """Valuation envelopes of h(1) and h'(1) on the annulus 1/5 < v(s) < 1/4.

    Certifies, exactly: v(h'(1)) = 0 on the whole closed interval (it has a
    constant valuation-0 piece and every other piece is nonnegative at both
    endpoints); and v(h(1)) > 0 strictly inside the open interval.  The h(1)
    envelope is 0 at both endpoints, each time with a unique witness, so the
    bound is sharp there: the annulus is maximal and the interior is the
    honest domain of the parameterization.  The envelope value at the
    ramification circle v(s) = 6/25 is exported as the error bound used by
    the genus-0-component reduction.
    """
    lo, hi = HENSEL_INTERVAL
    h1_pieces, hp1_pieces = _hensel_pieces()

    lo_min, lo_wit = envelope_min(h1_pieces, lo)
    hi_min, hi_wit = envelope_min(h1_pieces, hi)
    interior = envelope_breakpoints(h1_pieces, lo, hi) + [(lo + hi) / 2, RAM_CIRCLE]
    interior_values = {lam: envelope_min(h1_pieces, lam)[0] for lam in sorted(interior)}
    # concave envelope, >= 0 at endpoints and > 0 at every breakpoint and one
    # interior point  =>  > 0 on the whole open interval
    h1_ok = (
        lo_min == 0 and len(lo_wit) == 1
        and hi_min == 0 and len(hi_wit) == 1
        and all(v > 0 for v in interior_values.values())
    )

    constant_zero = Affine(F(0), F(0)) in hp1_pieces
    others_ok = all(
        fn(lo) >= 0 and fn(hi) >= 0 for fn in hp1_pieces if fn != Affine(F(0), F(0))
    )
    hp1_lo, _ = envelope_min(hp1_pieces, lo)
    hp1_hi, _ = envelope_min(hp1_pieces, hi)
    hp1_ok = constant_zero and others_ok and hp1_lo == 0 and hp1_hi == 0

    delta = envelope_min(h1_pieces, RAM_CIRCLE)[0]
    ok = h1_ok and hp1_ok and delta > 0
    return ReductionCertificate(
        claim_id="hensel",
        status="pass" if ok else "fail",
        residual_min=min(interior_values.values()),
        data={
            "h1_endpoint_minima": (lo_min, hi_min),
            "h1_endpoint_witnesses": (lo_wit, hi_wit),
            "h1_interior_minima": interior_values,
            "hp1_endpoint_minima": (hp1_lo, hp1_hi),
            "delta_at_ram_circle": delta,
        },
    )


def fiber_square_identity() -> ReductionCertificate:
    """(2xu - y)^2 - (y^2 - 20x) factors exactly as 4x * (xu^2 - yu + 5)."""
    model = plus_curve_model()
    z = 2 * x * u - y
    lhs = z**2 - (y**2 - 20 * x)
    try:
        quotient = lhs.exact_divide(model.fiber)
    except ValueError:
        return ReductionCertificate(claim_id="z_identity", status="fail")
    ok = quotient == 4 * x and quotient * model.fiber == lhs
    return ReductionCertificate(
        claim_id="z_identity",
        status="pass" if ok else "fail",
        quotient=quotient,
    )
