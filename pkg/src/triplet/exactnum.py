"""Exact scalar arithmetic: rationals, roots of unity, rational functions in t.

Every scalar this package produces is one of three things: an exact
rational (``Rat``), a single root of unity stored as a rational multiple
of pi (``Phase``), or a rational function in one formal parameter t
(``ParamScalar``).  Nothing here is ever floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Arbitrary-precision rational, always stored reduced with positive
# denominator.  fractions.Fraction already guarantees both invariants.
Rat = Fraction


def rat_str(x: Rat) -> str:
    """Serialize a rational as "num/den", omitting "/den" when den == 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_parse(s: str) -> Rat:
    """Parse the "num/den" form produced by :func:`rat_str`."""
    return Fraction(s)


@dataclass(frozen=True)
class Phase:
    """The root of unity e^{i*pi*exponent} with exponent rational mod 2.

    Exponents of e^{i*pi*(-)} rather than e^{2*pi*i*(-)} because the
    braiding scalars are half-integer multiples of conformal weights.
    """

    exponent: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", Fraction(self.exponent) % 2)

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.exponent + other.exponent)

    def __pow__(self, k: int) -> "Phase":
        return Phase(k * self.exponent)

    def inverse(self) -> "Phase":
        return Phase(-self.exponent)

    def is_one(self) -> bool:
        return self.exponent == 0

    def as_rat_sign(self) -> Rat:
        """Return +1 or -1 when the phase is real; error otherwise."""
        if self.exponent == 0:
            return Fraction(1)
        if self.exponent == 1:
            return Fraction(-1)
        raise ValueError(f"phase e^(i*pi*{self.exponent}) is not +-1")

    def to_json(self) -> dict:
        return {"exp": rat_str(self.exponent)}

    def __str__(self) -> str:
        return f"e^(i*pi*{rat_str(self.exponent)})"


def phase_mul(a: Phase, b: Phase) -> Phase:
    return a * b


def phase_pow(a: Phase, k: int) -> Phase:
    return a**k


def phase_from_weight(h: Rat, multiple: int) -> Phase:
    """The phase e^{i*pi*multiple*h} for a conformal weight h."""
    return Phase(multiple * Fraction(h))


# ---------------------------------------------------------------------------
# Univariate polynomials over Rat, dense coefficient lists (index = degree).
# Only what ParamScalar needs: ring ops, divmod, gcd, evaluation, printing.
# ---------------------------------------------------------------------------

Poly = tuple  # tuple[Rat, ...], normalized so the last entry is nonzero

POLY_ZERO: Poly = ()
POLY_ONE: Poly = (Fraction(1),)
POLY_T: Poly = (Fraction(0), Fraction(1))


def poly_from_coeffs(coeffs) -> Poly:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_const(c: Rat) -> Poly:
    return poly_from_coeffs([c])


def poly_deg(a: Poly) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return poly_from_coeffs(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    )


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return POLY_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return poly_from_coeffs(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    while len(rem) >= len(b):
        if rem[-1] == 0:
            rem.pop()
            continue
        shift = len(rem) - len(b)
        factor = rem[-1] / b[-1]
        quot[shift] = factor
        for i, cb in enumerate(b):
            rem[shift + i] -= factor * cb
        rem.pop()
    return poly_from_coeffs(quot), poly_from_coeffs(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return POLY_ZERO
    return poly_monic(a)


def poly_monic(a: Poly) -> Poly:
    if not a:
        return POLY_ZERO
    lead = a[-1]
    return tuple(c / lead for c in a)


def poly_eval(a: Poly, t0: Rat) -> Rat:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t0 + c
    return acc


def poly_str(a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for deg in range(len(a) - 1, -1, -1):
        c = a[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(rat_str(c))
        elif deg == 1:
            terms.append("t" if c == 1 else "-t" if c == -1 else f"{rat_str(c)}*t")
        else:
            base = f"t^{deg}"
            terms.append(base if c == 1 else f"-{base}" if c == -1 else f"{rat_str(c)}*{base}")
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


@dataclass(frozen=True)
class ParamScalar:
    """An element num(t)/den(t) of the rational-function field Q(t).

    Stored gcd-reduced with monic denominator; zero is 0/1.
    """

    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        num = poly_from_coeffs(self.num)
        den = poly_from_coeffs(self.den)
        if not den:
            raise ZeroDivisionError("ParamScalar with zero denominator")
        if not num:
            den = POLY_ONE
        else:
            g = poly_gcd(num, den)
            num = poly_divmod(num, g)[0]
            den = poly_divmod(den, g)[0]
            lead = den[-1]
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def const(c: Rat) -> "ParamScalar":
        return ParamScalar(poly_const(Fraction(c)), POLY_ONE)

    @staticmethod
    def t() -> "ParamScalar":
        return ParamScalar(POLY_T, POLY_ONE)

    @staticmethod
    def coerce(x) -> "ParamScalar":
        if isinstance(x, ParamScalar):
            return x
        return ParamScalar.const(Fraction(x))

    def __add__(self, other) -> "ParamScalar":
        other = ParamScalar.coerce(other)
        return ParamScalar(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
        )

    def __sub__(self, other) -> "ParamScalar":
        return self + (-ParamScalar.coerce(other))

    def __neg__(self) -> "ParamScalar":
        return ParamScalar(poly_neg(self.num), self.den)

    def __mul__(self, other) -> "ParamScalar":
        other = ParamScalar.coerce(other)
        return ParamScalar(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    def __truediv__(self, other) -> "ParamScalar":
        other = ParamScalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return ParamScalar(poly_mul(self.num, other.den), poly_mul(self.den, other.num))

    def is_zero(self) -> bool:
        return not self.num

    def eval(self, t0: Rat) -> Rat:
        den = poly_eval(self.den, t0)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at t={t0}")
        return poly_eval(self.num, t0) / den

    def as_rat(self) -> Rat:
        """Return the value when constant; error otherwise."""
        if poly_deg(self.num) > 0 or poly_deg(self.den) > 0:
            raise ValueError(f"{self} is not a constant")
        return self.num[0] if self.num else Fraction(0)

    def __str__(self) -> str:
        if self.den == POLY_ONE:
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"
