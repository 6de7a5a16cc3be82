"""Resultants via Sylvester matrices and fraction-free (Bareiss) elimination.

Entries may be integers, Fractions, or SymbolicPolynomials (for resultants
whose coefficients still involve other symbols); Bareiss's divisions are
always exact in the entry ring, so no rational blowup occurs for integer
input.  A Lagrange/Newton interpolation helper recovers a resultant that is
polynomial in an extra parameter from exact evaluations, which is how the
large pairwise-difference resultants stay fast.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import SymbolicPolynomial


def _exact_div(a, b):
    if isinstance(a, SymbolicPolynomial):
        return a.exact_divide(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ValueError("inexact integer division in Bareiss elimination")
        return q
    return Fraction(a) / Fraction(b)


def bareiss_determinant(matrix: Sequence[Sequence]) -> object:
    """Determinant by Bareiss's fraction-free elimination (exact)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0  # zero of the right type
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(
                    m[k][k] * m[i][j] - m[i][k] * m[k][j], prev
                )
            m[i][k] = m[i][k] * 0
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_zero(x) -> bool:
    if isinstance(x, SymbolicPolynomial):
        return x.is_zero()
    return x == 0


def sylvester_matrix(f: Sequence, g: Sequence) -> list[list]:
    """Sylvester matrix of two dense ascending coefficient lists."""
    df, dg = len(f) - 1, len(g) - 1
    if df < 0 or dg < 0:
        raise ValueError("zero polynomial has no Sylvester matrix")
    n = df + dg
    zero = f[0] * 0
    rows = []
    for shift in range(dg):
        row = [zero] * n
        for i, c in enumerate(reversed(f)):
            row[shift + i] = c
        rows.append(row)
    for shift in range(df):
        row = [zero] * n
        for i, c in enumerate(reversed(g)):
            row[shift + i] = c
        rows.append(row)
    return rows


def resultant_coeffs(f: Sequence, g: Sequence):
    """Resultant of two polynomials given as dense ascending coefficients."""
    f = _trim(f)
    g = _trim(g)
    if f is None or g is None:
        raise ValueError("resultant of the zero polynomial is undefined")
    df, dg = len(f) - 1, len(g) - 1
    if df == 0 and dg == 0:
        raise ValueError("resultant needs at least one nonconstant argument")
    if df == 0:
        return f[0] ** dg
    if dg == 0:
        return g[0] ** df
    return bareiss_determinant(sylvester_matrix(f, g))


def _trim(coeffs):
    out = list(coeffs)
    while out and _is_zero(out[-1]):
        out.pop()
    return out or None


def resultant(
    f: SymbolicPolynomial, g: SymbolicPolynomial, var: str
) -> SymbolicPolynomial:
    """Res_var(f, g); the result is a polynomial in the remaining symbols."""

    def coeff_list(poly):
        parts = poly.as_univariate(var)
        return [parts.get(e, SymbolicPolynomial.zero()) for e in range(max(parts) + 1)]

    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    res = resultant_coeffs(coeff_list(f), coeff_list(g))
    return res if isinstance(res, SymbolicPolynomial) else SymbolicPolynomial.constant(res)


def interpolate_integer_polynomial(points: Sequence[tuple[int, int]]) -> list[int]:
    """Integer polynomial (ascending coefficients) through the given points.

    Newton's divided differences over exact Fractions; raises if the result
    is not integral.  The degree is len(points) - 1.
    """
    xs = [Fraction(x) for x, _ in points]
    divided = [Fraction(y) for _, y in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form prod (x - xs[i]) incrementally
    coeffs = [Fraction(0)] * n
    coeffs[0] = divided[0]
    basis = [Fraction(1)]
    for i in range(1, n):
        new_basis = [Fraction(0)] * (len(basis) + 1)
        for j, c in enumerate(basis):
            new_basis[j] -= xs[i - 1] * c
            new_basis[j + 1] += c
        basis = new_basis
        for j, c in enumerate(basis):
            coeffs[j] += divided[i] * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("interpolated polynomial is not integral")
        out.append(int(c))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def difference_root_resultant(coeffs: Sequence[int]) -> list[int]:
    """D(z) = Res_y(f(y), f(y+z)) for an integer polynomial f, exactly.

    Evaluated by Sylvester/Bareiss at deg**2 + 1 integer points and recovered
    by interpolation (deg_z D = deg(f)**2).
    """
    f = [int(c) for c in coeffs]
    if len(f) < 2:
        raise ValueError("need a nonconstant polynomial")
    deg = len(f) - 1
    target_deg = deg * deg
    half = target_deg // 2
    samples = []
    for z0 in range(-half, target_deg - half + 1):
        shifted = _shift_coeffs(f, z0)
        samples.append((z0, int(resultant_coeffs(f, shifted))))
    return interpolate_integer_polynomial(samples)


def _shift_coeffs(f: Sequence[int], z0: int) -> list[int]:
    """Coefficients of f(y + z0) via binomial expansion."""
    n = len(f)
    out = [0] * n
    for i, c in enumerate(f):
        if c == 0:
            continue
        binom = 1
        power = 1
        for k in range(i, -1, -1):
            out[k] += c * binom * power
            if k:
                binom = binom * k // (i - k + 1)
                power *= z0
    return out
