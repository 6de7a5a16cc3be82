"""Moduli-theoretic maps between X0(5^n) levels and their valuation images.

The six classical maps (forgetful and quotient maps pi_1, pi_5 down the
5-power tower plus the Atkin-Lehner involutions w_5, w_25) are transcribed as
exact rational maps.  Circle regions v(coordinate) = lambda are pushed
forward by generic-valuation dominance: the image valuation is certified
exact when a unique monomial attains the minimum, otherwise only as a bound
(which is how a circle image degenerates to a disk statement).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import curve125
from .exactmath import (
    SymbolicPolynomial,
    field_valuation,
    min_valuation,
    normal_form,
    poly_to_coeffs,
    resultant,
    sym,
    univariate_gcd,
    val_rat,
)

P = 5
F = Fraction

t, u, j = sym("t"), sym("u"), sym("j")


@dataclass(frozen=True)
class RationalMap:
    name: str
    source_coord: str
    target_coord: str
    numerator: SymbolicPolynomial
    denominator: SymbolicPolynomial

    def __post_init__(self):
        num = poly_to_coeffs(self.numerator, self.source_coord)
        den = poly_to_coeffs(self.denominator, self.source_coord)
        if all(c == 0 for c in den):
            raise ValueError("denominator is identically zero")
        if len(univariate_gcd(num, den)) != 1:
            raise ValueError(f"map {self.name} has a common factor")

    def degrees(self) -> tuple[int, int]:
        return (
            self.numerator.degree(self.source_coord),
            self.denominator.degree(self.source_coord),
        )

    def evaluate(self, value) -> Fraction:
        point = {self.source_coord: Fraction(value)}
        den = self.denominator.evaluate(point)
        if den == 0:
            raise ZeroDivisionError(f"{self.name} has a pole at {value}")
        return self.numerator.evaluate(point) / den


@dataclass(frozen=True)
class ValRegion:
    coordinate: str
    kind: str  # circle | disk | annulus
    radius: Fraction | tuple[Fraction, Fraction]
    center: SymbolicPolynomial = field(default_factory=SymbolicPolynomial.zero)


@dataclass(frozen=True)
class ImageCertificate:
    lower_bound: Fraction
    unique: bool
    witnesses: tuple
    conclusion: str  # "circle->circle exact" | "bound only (tie)"


def builtin_maps() -> dict[str, RationalMap]:
    one = SymbolicPolynomial.constant(1)
    pi5_t_factor = u**4 + 5 * u**3 + 15 * u**2 + 25 * u + 25
    return {
        "pi1_j": RationalMap("pi1_j", "t", "j", (t**2 + 2 * 5**3 * t + 5**5) ** 3, t**5),
        "pi5_j": RationalMap("pi5_j", "t", "j", (t**2 + 10 * t + 5) ** 3, t),
        "w5": RationalMap("w5", "t", "t", SymbolicPolynomial.constant(125), t),
        "pi1_t": RationalMap("pi1_t", "u", "t", u**5, pi5_t_factor),
        "pi5_t": RationalMap("pi5_t", "u", "t", u * pi5_t_factor, one),
        "w25": RationalMap("w25", "u", "u", SymbolicPolynomial.constant(5), u),
    }


def image_valuation(rmap: RationalMap, region: ValRegion) -> ImageCertificate:
    """Generic image valuation of a circle under a rational map.

    v(target) = v(numerator) - v(denominator) computed monomial-wise; exact
    when both minima are attained by a unique monomial.
    """
    if region.coordinate != rmap.source_coord:
        raise ValueError("region coordinate does not match the map source")
    if region.kind != "circle":
        raise ValueError("image valuation is computed on circles")
    assignment = {rmap.source_coord: Fraction(region.radius)}
    mv_num = min_valuation(rmap.numerator, assignment, P)
    mv_den = min_valuation(rmap.denominator, assignment, P)
    if not mv_den.witnesses:
        raise ValueError("denominator has infinite valuation on the region")
    unique = mv_num.unique and mv_den.unique
    return ImageCertificate(
        lower_bound=mv_num.value - mv_den.value,
        unique=unique,
        witnesses=(mv_num.witnesses, mv_den.witnesses),
        conclusion="circle->circle exact" if unique else "bound only (tie)",
    )


def al_fixed_circle(rmap: RationalMap) -> Fraction:
    """Fixed circle of an involution c/x: the lambda with v(c) - lambda = lambda."""
    num = rmap.numerator
    den = rmap.denominator
    if not num.is_constant() or den != sym(rmap.source_coord):
        raise ValueError("map is not of the involution form c/x")
    v = val_rat(num.constant_value(), P)
    return Fraction(v, 2)


def compose(outer: RationalMap, inner: RationalMap) -> tuple[SymbolicPolynomial, SymbolicPolynomial]:
    """Exact rational-function composition outer(inner), homogenized."""
    if inner.target_coord != outer.source_coord:
        raise ValueError("maps do not compose")
    var = outer.source_coord
    num_c = poly_to_coeffs(outer.numerator, var)
    den_c = poly_to_coeffs(outer.denominator, var)
    d = max(len(num_c), len(den_c)) - 1
    a, b = inner.numerator, inner.denominator

    def plug(coeffs):
        out = SymbolicPolynomial.zero()
        for i, c in enumerate(coeffs):
            if c != 0:
                out = out + SymbolicPolynomial.constant(c) * a**i * b ** (d - i)
        return out

    return plug(num_c), plug(den_c)


def is_involution(rmap: RationalMap) -> bool:
    """Check map(map(x)) = x as an exact rational-function identity."""
    num, den = compose(rmap, rmap)
    return num == den * sym(rmap.source_coord)


@dataclass(frozen=True)
class RamImageCertificate:
    eliminant: tuple[int, ...]  # T(t), ascending integer coefficients
    squarefree_part: tuple[int, ...]
    status: str


def ramification_image_polynomial() -> RamImageCertificate:
    """Eliminant of the composite sending ramification points into X0(5).

    At a ramification point the fiber equation has the double root
    u = y/(2x), which forces x = 5/u**2 and y = 10/u; substituting into the
    plus-curve model gives the degree-10 integer polynomial satisfied by the
    u coordinates, and T(t) = Res_u(p_ram_u, t - pi5_t(u)).  The certificate
    is that the squarefree part of T is exactly t**2 - 125.
    """
    model = curve125.plus_curve_model()
    p_ram_u = SymbolicPolynomial.zero()
    for mono, coeff in model.f_plus.items():
        exps = dict(mono)
        i, jj = exps.get("x", 0), exps.get("y", 0)
        p_ram_u = p_ram_u + coeff * 5**i * 10**jj * u ** (10 - 2 * i - jj)
    pi5_t = builtin_maps()["pi5_t"].numerator
    eliminant = resultant(p_ram_u, t - pi5_t, "u")
    coeffs = poly_to_coeffs(eliminant, "t")
    if all(c == 0 for c in coeffs):
        raise ValueError("elimination yielded the zero polynomial")
    ints = tuple(int(c) for c in coeffs)
    deriv = [Fraction((k + 1) * c) for k, c in enumerate(coeffs[1:])]
    gcd = univariate_gcd([Fraction(c) for c in coeffs], deriv)
    quotient, rem = _poly_div(coeffs, gcd)
    assert not any(rem)
    squarefree = _monic_integer(quotient)
    ok = squarefree == (-125, 0, 1) and len(ints) % 2 == 1  # even degree
    return RamImageCertificate(ints, squarefree, "pass" if ok else "fail")


def _poly_div(num, den):
    from .exactmath import univariate_divmod

    return univariate_divmod([Fraction(c) for c in num], [Fraction(c) for c in den])


def _monic_integer(coeffs) -> tuple[int, ...]:
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    lead = coeffs[-1]
    scaled = [c / lead for c in coeffs]
    denom = 1
    for c in scaled:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    if denom != 1:
        raise ValueError("squarefree part is not integral after normalization")
    return tuple(int(c) for c in scaled)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class DiskIdentityCertificate:
    u_disk_valuation: Fraction  # v5(5^5/r^5 - 5^3), must exceed 3
    factorization_ok: bool
    status: str


def cm_disk_identities() -> DiskIdentityCertificate:
    """Two exact identities behind the four CM residue disks.

    (i) v5(5**5/r**5 - 5**3) > 3, so the disk description in u matches the
        one pulled back through r;
    (ii) (j**2 - 125)(j**2 + 125) = j**4 - 5**6, merging the four disks into
        a single congruence.
    """
    rr = sym("r")
    numerator = normal_form(
        SymbolicPolynomial.constant(5**5) - 5**3 * rr**5, [curve125.R_SYMBOL]
    )
    v = field_valuation(numerator, "r", curve125.R_MINPOLY, P) - 5 * F(2, 5)
    factor_ok = (j**2 - 125) * (j**2 + 125) == j**4 - 5**6
    ok = v > 3 and factor_ok
    return DiskIdentityCertificate(v, factor_ok, "pass" if ok else "fail")
