"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a dictionary mapping monomials to nonzero Fraction
coefficients.  A monomial is a sorted tuple of (symbol, exponent) pairs with
all exponents positive; the empty tuple is the constant monomial.  This keeps
every computation exact, which is the whole point: downstream certificates
(Newton polygons, dominance arguments, reduction identities) must never see a
float.

Symbols may carry a rewrite rule ``symbol**n -> replacement`` (for example a
defining relation of an algebraic number, or a formal square root); see
:class:`ValuedSymbol` and :func:`normal_form`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Monomial = tuple[tuple[str, int], ...]

_ZERO = Fraction(0)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[str, int] = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class SymbolicPolynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[mono] = coeff
        self.terms: dict[Monomial, Fraction] = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def constant(value) -> SymbolicPolynomial:
        return SymbolicPolynomial({(): Fraction(value)})

    @staticmethod
    def zero() -> SymbolicPolynomial:
        return SymbolicPolynomial()

    @staticmethod
    def variable(name: str) -> SymbolicPolynomial:
        return SymbolicPolynomial({((name, 1),): Fraction(1)})

    @staticmethod
    def _coerce(value) -> SymbolicPolynomial:
        if isinstance(value, SymbolicPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return SymbolicPolynomial.constant(value)
        raise TypeError(f"cannot coerce {value!r} to SymbolicPolynomial")

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), _ZERO)

    def symbols(self) -> set[str]:
        return {name for mono in self.terms for name, _ in mono}

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def degree(self, var: str) -> int:
        deg = 0
        for mono in self.terms:
            for name, e in mono:
                if name == var and e > deg:
                    deg = e
        return deg

    def as_univariate(self, var: str) -> dict[int, SymbolicPolynomial]:
        """Split into {exponent of var: coefficient polynomial}."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self.terms.items():
            e = 0
            rest = []
            for name, k in mono:
                if name == var:
                    e = k
                else:
                    rest.append((name, k))
            buckets.setdefault(e, {})[tuple(rest)] = coeff
        return {e: SymbolicPolynomial(t) for e, t in buckets.items()}

    def coefficient(self, var: str, exponent: int) -> SymbolicPolynomial:
        return self.as_univariate(var).get(exponent, SymbolicPolynomial.zero())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> SymbolicPolynomial:
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, _ZERO) + coeff
        return SymbolicPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> SymbolicPolynomial:
        return SymbolicPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> SymbolicPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> SymbolicPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> SymbolicPolynomial:
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, _ZERO) + c1 * c2
        return SymbolicPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> SymbolicPolynomial:
        scalar = Fraction(scalar)
        return SymbolicPolynomial({m: c / scalar for m, c in self.terms.items()})

    def __pow__(self, n: int) -> SymbolicPolynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = SymbolicPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymbolicPolynomial.constant(other)
        if not isinstance(other, SymbolicPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structural operations ----------------------------------------------

    def substitute(self, var: str, replacement) -> SymbolicPolynomial:
        """Exact composition: replace every occurrence of var."""
        replacement = self._coerce(replacement)
        out = SymbolicPolynomial.zero()
        powers: dict[int, SymbolicPolynomial] = {0: SymbolicPolynomial.constant(1)}
        for e, coeff_poly in self.as_univariate(var).items():
            if e not in powers:
                powers[e] = replacement ** e
            out = out + coeff_poly * powers[e]
        return out

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        total = _ZERO
        for mono, coeff in self.terms.items():
            value = coeff
            for name, e in mono:
                if name not in assignment:
                    raise KeyError(f"no value assigned to symbol {name!r}")
                value *= Fraction(assignment[name]) ** e
            total += value
        return total

    def derivative(self, var: str) -> SymbolicPolynomial:
        out: dict[Monomial, Fraction] = {}
        for e, coeff_poly in self.as_univariate(var).items():
            if e == 0:
                continue
            for mono, coeff in coeff_poly.terms.items():
                new = _mono_mul(mono, ((var, e - 1),)) if e > 1 else mono
                out[new] = out.get(new, _ZERO) + e * coeff
        return SymbolicPolynomial(out)

    def exact_divide(self, divisor: SymbolicPolynomial) -> SymbolicPolynomial:
        """Divide exactly; raise ValueError if the division leaves a remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant():
            return self / divisor.constant_value()
        variables = sorted(self.symbols() | divisor.symbols())

        def lex_key(mono: Monomial) -> tuple[int, ...]:
            exps = dict(mono)
            return tuple(exps.get(v, 0) for v in variables)

        lead_mono = max(divisor.terms, key=lex_key)
        lead_coeff = divisor.terms[lead_mono]
        remainder = self
        quotient: dict[Monomial, Fraction] = {}
        while not remainder.is_zero():
            mono = max(remainder.terms, key=lex_key)
            q_mono = _mono_div(mono, lead_mono)
            if q_mono is None:
                raise ValueError("inexact polynomial division")
            q_coeff = remainder.terms[mono] / lead_coeff
            quotient[q_mono] = quotient.get(q_mono, _ZERO) + q_coeff
            remainder = remainder - divisor * SymbolicPolynomial({q_mono: q_coeff})
        return SymbolicPolynomial(quotient)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            body = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in mono
            )
            if body:
                lead = "" if coeff == 1 else ("-" if coeff == -1 else f"{coeff}*")
                parts.append(f"{lead}{body}")
            else:
                parts.append(str(coeff))
        return " + ".join(parts).replace("+ -", "- ")


def _mono_div(mono: Monomial, by: Monomial) -> Monomial | None:
    exps = dict(mono)
    for name, e in by:
        have = exps.get(name, 0)
        if have < e:
            return None
        if have == e:
            del exps[name]
        else:
            exps[name] = have - e
    return tuple(sorted(exps.items()))


def sym(name: str) -> SymbolicPolynomial:
    """Shorthand constructor for a single-variable polynomial."""
    return SymbolicPolynomial.variable(name)


@dataclass(frozen=True)
class ValuedSymbol:
    """A formal coordinate with an assigned valuation and optional rewrite.

    ``rewrite = (n, g)`` means symbol**n rewrites to the polynomial g, e.g.
    a root r of r**5 + 25r - 25 carries the rule r**5 -> 25 - 25r, and a
    formal sqrt(15) carries sqrt15**2 -> 15.  The replacement must have
    degree < n in the symbol itself so rewriting terminates.
    """

    name: str
    valuation: Fraction
    rewrite: tuple[int, SymbolicPolynomial] | None = None

    def __post_init__(self):
        if self.rewrite is not None:
            n, g = self.rewrite
            poly = SymbolicPolynomial._coerce(g)
            object.__setattr__(self, "rewrite", (n, poly))
            if n < 1 or poly.degree(self.name) >= n:
                raise ValueError(
                    f"rewrite for {self.name} must replace a power by lower-degree terms"
                )


def normal_form(
    f: SymbolicPolynomial, symbols: Iterable[ValuedSymbol]
) -> SymbolicPolynomial:
    """Reduce f so every rewritten symbol appears below its rewrite power.

    The rules must rewrite distinct symbols (checked).  Rules are applied to
    a fixpoint, so replacements are free to introduce other rewritten symbols
    (e.g. beta**2 -> 5*alpha with alpha**2 -> 5).
    """
    rules: dict[str, tuple[int, SymbolicPolynomial]] = {}
    for s in symbols:
        if s.rewrite is None:
            continue
        if s.name in rules:
            raise ValueError(f"conflicting rewrite rules for symbol {s.name!r}")
        rules[s.name] = s.rewrite
    if not rules:
        return f

    for _ in range(10_000):
        out: dict[Monomial, Fraction] = {}
        changed = False
        for mono, coeff in f.terms.items():
            reducible = None
            for name, e in mono:
                if name in rules and e >= rules[name][0]:
                    reducible = (name, e)
                    break
            if reducible is None:
                out[mono] = out.get(mono, _ZERO) + coeff
                continue
            changed = True
            name, e = reducible
            n, g = rules[name]
            rest = tuple((nm, k) for nm, k in mono if nm != name)
            stub = _mono_mul(rest, ((name, e - n),)) if e > n else rest
            piece = SymbolicPolynomial({stub: coeff}) * g
            for m2, c2 in piece.terms.items():
                out[m2] = out.get(m2, _ZERO) + c2
        f = SymbolicPolynomial(out)
        if not changed:
            return f
    raise RuntimeError("rewrite system did not terminate")


# -- univariate helpers (dense Fraction lists, ascending degree) -----------


def poly_to_coeffs(f: SymbolicPolynomial, var: str) -> list[Fraction]:
    """Dense ascending coefficient list of a univariate polynomial."""
    parts = f.as_univariate(var)
    out = [_ZERO] * (max(parts, default=0) + 1)
    for e, c in parts.items():
        if not c.is_constant():
            raise ValueError(f"{f!r} is not univariate in {var!r}")
        out[e] = c.constant_value()
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def coeffs_to_poly(coeffs: Iterable, var: str) -> SymbolicPolynomial:
    out: dict[Monomial, Fraction] = {}
    for e, c in enumerate(coeffs):
        c = Fraction(c)
        if c != 0:
            out[((var, e),) if e else ()] = c
    return SymbolicPolynomial(out)


def univariate_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of two dense coefficient lists (Euclid over Q)."""

    def trim(p):
        p = [Fraction(c) for c in p]
        while p and p[-1] == 0:
            p.pop()
        return p

    def rem(num, den):
        num = num[:]
        while len(num) >= len(den):
            factor = num[-1] / den[-1]
            shift = len(num) - len(den)
            for i, c in enumerate(den):
                num[shift + i] -= factor * c
            num = trim(num)
            if not num:
                break
        return num

    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    if not a:
        return [_ZERO]
    return [c / a[-1] for c in a]


def univariate_divmod(
    num: list[Fraction], den: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("univariate division by zero")
    quot = [_ZERO] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den) and any(c != 0 for c in num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        factor = num[-1] / den[-1]
        shift = len(num) - len(den)
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def inverse_mod(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo a univariate polynomial, by extended Euclid."""
    r0, r1 = [Fraction(c) for c in modulus], [Fraction(c) for c in a]
    s0, s1 = [_ZERO], [Fraction(1)]

    def poly_sub(x, y):
        out = [_ZERO] * max(len(x), len(y))
        for i, c in enumerate(x):
            out[i] += c
        for i, c in enumerate(y):
            out[i] -= c
        while out and out[-1] == 0:
            out.pop()
        return out

    def poly_mul(x, y):
        out = [_ZERO] * (len(x) + len(y) - 1) if x and y else []
        for i, cx in enumerate(x):
            for j, cy in enumerate(y):
                out[i + j] += cx * cy
        return out

    while any(c != 0 for c in r1):
        q, r = univariate_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
    if len(r0) != 1:
        raise ValueError("element is not invertible modulo the given polynomial")
    return [c / r0[0] for c in s0]
