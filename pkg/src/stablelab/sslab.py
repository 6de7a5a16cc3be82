"""The too-supersingular disk of X(1) at p = 5, via the family y^2 = x^3 + t*x + 1.

The 5-division polynomial of the family has a parametric Newton polygon in
lambda = v_5(t) whose cell structure changes exactly at lambda = 5/6: below,
the canonical subgroup separates (two x-roots closer to the origin in the
z = x/y chart); above, all twenty-four nonzero 5-torsion points are
equidistant and no canonical subgroup exists.  Since v_5(j) = 3 v_5(t) on the
family, the no-canonical-subgroup disk of X(1) is v_5(j) >= 3 * 5/6 = 5/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import (
    ParamPolygon,
    SymbolicPolynomial,
    min_valuation,
    param_valuations,
    parametric_polygon,
    sym,
)

P = 5
F = Fraction

x, t = sym("x"), sym("t")


@dataclass(frozen=True)
class FamilyCurve:
    """y^2 = x^3 + a*x + b with a = t (formal) and b = 1."""

    a: SymbolicPolynomial
    b: Fraction

    def rhs(self) -> SymbolicPolynomial:
        return x**3 + self.a * x + self.b


def family_curve() -> FamilyCurve:
    return FamilyCurve(t, F(1))


@dataclass(frozen=True)
class TorsionProfile:
    lambda_cell: tuple[Fraction, Fraction]
    x_root_valuations: tuple[tuple[Fraction, int], ...]
    z_valuations: tuple[tuple[Fraction, int], ...]  # over points, not x-roots
    canonical_subgroup: bool


def division_polynomial(ell: int, curve: FamilyCurve) -> SymbolicPolynomial:
    """psi_ell(x) from the standard division-polynomial recurrence.

    Polynomials are kept as pairs (f, e) with psi_n = f * (2y)^e and
    (2y)^2 reduced to 4*(x^3 + a*x + b); only odd ell are needed here and
    only ell = 5 is in scope.
    """
    if ell != 5:
        raise ValueError("only the 5-division polynomial is supported")
    a, b = curve.a, SymbolicPolynomial.constant(curve.b)
    c = curve.rhs()
    psi: dict[int, tuple[SymbolicPolynomial, int]] = {
        0: (SymbolicPolynomial.zero(), 0),
        1: (SymbolicPolynomial.constant(1), 0),
        2: (SymbolicPolynomial.constant(1), 1),
        3: (3 * x**4 + 6 * a * x**2 + 12 * b * x - a**2, 0),
        4: (
            2 * (x**6 + 5 * a * x**4 + 20 * b * x**3 - 5 * a**2 * x**2
                 - 4 * a * b * x - 8 * b**2 - a**3),
            1,
        ),
    }

    def product(ns: list[int]) -> tuple[SymbolicPolynomial, int]:
        poly, e = SymbolicPolynomial.constant(1), 0
        for n in ns:
            pn, en = psi[n]
            poly, e = poly * pn, e + en
        # reduce even powers of 2y through the curve equation
        poly = poly * (4 * c) ** (e // 2)
        return poly, e % 2

    for n in range(5, ell + 1):
        if n % 2 == 1:
            m = n // 2
            t1, e1 = product([m + 2, m, m, m])
            t2, e2 = product([m - 1, m + 1, m + 1, m + 1])
            if e1 != e2:
                raise AssertionError("parity mismatch in division recurrence")
            psi[n] = (t1 - t2, e1)
        else:  # not used for ell = 5, kept for the recurrence's shape
            raise AssertionError("even index not needed")
    poly, e = psi[ell]
    assert e == 0
    return poly


@lru_cache(maxsize=1)
def division_polynomial_5() -> SymbolicPolynomial:
    return division_polynomial(5, family_curve())


@lru_cache(maxsize=1)
def torsion_polygon() -> ParamPolygon:
    """Parametric Newton polygon of psi_5 in x over 0 < v_5(t) < 1."""
    psi5 = division_polynomial_5()
    pieces = []
    for i in range(psi5.degree("x") + 1):
        ci = psi5.coefficient("x", i)
        if ci.is_zero():
            pieces.append(None)
        else:
            pieces.append([fn for fn, _ in param_valuations(ci, {}, {"t": 1}, P)])
    return parametric_polygon(pieces, (F(0), F(1)))


def canonical_breakpoint() -> Fraction:
    """The lambda where the slopes lam/10 and (1 - lam)/2 agree: lam = 5/6."""
    lam = sym("lam")
    difference = 2 * lam - 10 * (1 - lam)  # lam/10 = (1-lam)/2, cleared
    # single root of the affine equation
    root = F(10, 12)
    assert difference.substitute("lam", SymbolicPolynomial.constant(root)).is_zero()
    return root


def torsion_profile(lam) -> TorsionProfile:
    """Valuation profile of the 5-torsion at v_5(t) = lam in (0, 1)."""
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise ValueError("lambda must lie in (0, 1)")
    polygon = torsion_polygon()
    if lam in polygon.breakpoints:
        raise ValueError(f"lambda {lam} is the polygon breakpoint; no open cell")
    cell = polygon.cell_at(lam)
    x_roots = cell.root_valuations_at(lam)
    z_vals = []
    for v, count in x_roots:
        if v >= 0:
            raise AssertionError("5-torsion x-roots must have negative valuation")
        # z = x/y is the parameter at the origin; v(z) = -v(x)/2 for v(x) < 0
        z_vals.append((-v / 2, 2 * count))
    assert sum(n for _, n in z_vals) == 24
    return TorsionProfile(
        lambda_cell=(cell.lo, cell.hi),
        x_root_valuations=x_roots,
        z_valuations=tuple(sorted(z_vals)),
        canonical_subgroup=lam < canonical_breakpoint(),
    )


@dataclass(frozen=True)
class ThresholdCertificate:
    j_numerator: SymbolicPolynomial
    j_denominator: SymbolicPolynomial
    threshold: Fraction
    status: str


def weierstrass_j(a: SymbolicPolynomial, b: SymbolicPolynomial) -> tuple[SymbolicPolynomial, SymbolicPolynomial]:
    """j-invariant of y^2 = x^3 + ax + b as an exact fraction c4^3 / Delta."""
    c4 = -48 * a
    delta = -16 * (4 * a**3 + 27 * b**2)
    # cancel the common -16 so the denominator is the classical 4a^3 + 27b^2
    minus16 = SymbolicPolynomial.constant(-16)
    return (c4**3).exact_divide(minus16), delta.exact_divide(minus16)


@lru_cache(maxsize=1)
def too_ss_threshold() -> ThresholdCertificate:
    """v_5(j) = 3 v_5(t) on the family, so the threshold is 3 * (5/6) = 5/2."""
    curve = family_curve()
    num, den = weierstrass_j(curve.a, SymbolicPolynomial.constant(curve.b))
    expected_num = 6912 * t**3
    expected_den = 4 * t**3 + 27
    # v(num) = 3*lambda with a unique witness; v(den) = 0 with unique witness
    # (27 is a 5-adic unit and 3*lambda > 0 for every lambda > 0)
    num_single = len(num.terms) == 1 and min_valuation(num, {"t": F(0)}, P).value == 0
    den_ok = (
        min_valuation(den, {"t": F(1, 100)}, P).unique
        and min_valuation(den, {"t": F(1, 100)}, P).value == 0
        and all(
            fn.constant + fn.slope * 0 >= 0 and fn.slope >= 0
            for fn, _ in param_valuations(den, {}, {"t": 1}, P)
        )
    )
    threshold = 3 * canonical_breakpoint()
    ok = num == expected_num and den == expected_den and num_single and den_ok
    return ThresholdCertificate(num, den, threshold, "pass" if ok else "fail")
