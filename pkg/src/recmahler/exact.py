"""Exact arithmetic tower: rationals graded by powers of pi, univariate
polynomials and rational functions over Q, even-exponent Laurent polynomials,
partial fractions over distinct integer poles, and the Laurent-to-Mellin
term table.

pi is never evaluated here; it rides along as an integer grade on otherwise
rational data.  Sums therefore only make sense between values of the same
grade (or with an exact zero), and mismatches raise GradeMismatch rather
than silently coercing.  Numeric values enter only through the explicit
evaluation helpers, which accept the caller's pi (float or mpmath.mpf).

The Mellin convention used throughout maps a Laurent monomial with even
exponent e to the simple fraction (1/2) / (s - e/2):

    xi^{2n}  ->  (1/2) / (s - n)        xi^{-2n}  ->  (1/2) / (s + n)

so a pole at s = +n always comes from the xi^{+2n} term.  Everything
downstream (closed distribution forms, residue tables, volume evaluations)
leans on that orientation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DivisionByZero,
    GradeMismatch,
    ImproperFraction,
    NonIntegerPole,
    OddExponent,
    PoleEvaluation,
    RepeatedPole,
)

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# scalars


@dataclass(frozen=True, slots=True)
class PiScaled:
    """Exact scalar coeff * pi^pi_power with rational coeff.

    Zero is canonical: coeff == 0 forces pi_power == 0, so equality of
    dataclass fields is equality of values.
    """

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", _as_fraction(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "pi_power", 0)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __add__(self, other: "PiScaled") -> "PiScaled":
        if not isinstance(other, PiScaled):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.pi_power != other.pi_power:
            raise GradeMismatch(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms"
            )
        return PiScaled(self.coeff + other.coeff, self.pi_power)

    def __sub__(self, other: "PiScaled") -> "PiScaled":
        if not isinstance(other, PiScaled):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "PiScaled":
        return PiScaled(-self.coeff, self.pi_power)

    def __mul__(self, other):
        if isinstance(other, PiScaled):
            return PiScaled(self.coeff * other.coeff, self.pi_power + other.pi_power)
        if isinstance(other, (int, Fraction)):
            return PiScaled(self.coeff * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScaled):
            if other.is_zero:
                raise DivisionByZero("division by exact zero")
            return PiScaled(self.coeff / other.coeff, self.pi_power - other.pi_power)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by exact zero")
            return PiScaled(self.coeff / other, self.pi_power)
        return NotImplemented

    def to_float(self, pi_value: float = math.pi):
        """Numeric value; pi_value may be a float or an mpmath.mpf."""
        return pi_value ** self.pi_power * self.coeff

    def __str__(self) -> str:
        c = self.coeff
        return f"{c.numerator}/{c.denominator} * pi^{self.pi_power}"


_PI_SCALED_RE = re.compile(
    r"^\s*(-?\d+)\s*/\s*(\d+)\s*\*\s*pi\^(-?\d+)\s*$"
)


def parse_pi_scaled(text: str) -> PiScaled:
    """Inverse of str(PiScaled); accepts exactly the 'p/q * pi^k' form."""
    m = _PI_SCALED_RE.match(text)
    if not m:
        raise ValueError(f"not a 'p/q * pi^k' literal: {text!r}")
    return PiScaled(Fraction(int(m.group(1)), int(m.group(2))), int(m.group(3)))


# ---------------------------------------------------------------------------
# polynomials over Q


@dataclass(frozen=True, slots=True)
class PolyQ:
    """Univariate polynomial over Q, ascending coefficients, trailing zeros
    trimmed so the zero polynomial is the empty tuple."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = tuple(_as_fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "PolyQ") -> "PolyQ":
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(tuple(out))

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, PolyQ):
            if self.is_zero or other.is_zero:
                return PolyQ()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return PolyQ(tuple(out))
        if isinstance(other, (int, Fraction)):
            return PolyQ(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; exact for Fraction x, numeric otherwise."""
        if self.is_zero:
            return Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def divmod(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        """Exact long division: self = q*other + r with deg r < deg other."""
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        if len(rem) - 1 < db:
            return PolyQ(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[db + k] / lead
            quo[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return PolyQ(tuple(quo)), PolyQ(tuple(rem[:db]))

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        inv = 1 / self.leading
        return PolyQ(tuple(c * inv for c in self.coeffs))

    def subs_neg(self) -> "PolyQ":
        """p(-s): flip the sign of the odd-degree coefficients."""
        return PolyQ(
            tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))
        )

    def derivative(self) -> "PolyQ":
        return PolyQ(tuple(c * i for i, c in enumerate(self.coeffs) if i > 0))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*s")
            else:
                parts.append(f"{c}*s^{i}")
        return " + ".join(parts)


def _int_scaled(p: PolyQ) -> list[int]:
    """Clear denominators: integer coefficient list, same roots."""
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in p.coeffs]


def _primitive(ints: list[int]) -> list[int]:
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return ints
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of primitive integer polynomials (b nonzero)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while True:
        while r and r[-1] == 0:
            r.pop()
        dr = len(r) - 1
        if dr < db:
            return r
        lead = r[-1]
        r = [lb * c for c in r]
        for j in range(db + 1):
            r[dr - db + j] -= lead * b[j]


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd over Q via a primitive pseudo-remainder sequence over Z."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    ia = _primitive(_int_scaled(a))
    ib = _primitive(_int_scaled(b))
    if len(ia) < len(ib):
        ia, ib = ib, ia
    while ib:
        ia, ib = ib, _primitive(_pseudo_rem(ia, ib))
    return PolyQ(tuple(Fraction(c) for c in ia)).monic()


# ---------------------------------------------------------------------------
# rational functions


@dataclass(frozen=True, slots=True)
class RatFunQ:
    """Reduced rational function over Q with monic denominator.

    Construct through make(); the bare constructor trusts its inputs.
    Zero is num = 0, den = 1.
    """

    num: PolyQ
    den: PolyQ

    @staticmethod
    def make(num: PolyQ, den: PolyQ) -> "RatFunQ":
        if den.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero:
            return RatFunQ(PolyQ(), PolyQ((Fraction(1),)))
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        inv = 1 / den.leading
        return RatFunQ(num * inv, den * inv)

    @staticmethod
    def from_coeffs(num: Iterable, den: Iterable) -> "RatFunQ":
        return RatFunQ.make(PolyQ(tuple(num)), PolyQ(tuple(den)))

    @staticmethod
    def zero() -> "RatFunQ":
        return RatFunQ(PolyQ(), PolyQ((Fraction(1),)))

    @staticmethod
    def one() -> "RatFunQ":
        return RatFunQ(PolyQ((Fraction(1),)), PolyQ((Fraction(1),)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RatFunQ") -> "RatFunQ":
        if not isinstance(other, RatFunQ):
            return NotImplemented
        return RatFunQ.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RatFunQ") -> "RatFunQ":
        return self + (-other)

    def __neg__(self) -> "RatFunQ":
        return RatFunQ(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, RatFunQ):
            return RatFunQ.make(self.num * other.num, self.den * other.den)
        if isinstance(other, (int, Fraction)):
            return RatFunQ.make(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunQ") -> "RatFunQ":
        if isinstance(other, (int, Fraction)):
            other = RatFunQ.from_coeffs((other,), (1,))
        if not isinstance(other, RatFunQ):
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("division by the zero rational function")
        return RatFunQ.make(self.num * other.den, self.den * other.num)

    def eval(self, s0) -> Fraction:
        """Exact evaluation at a rational point.

        Raises PoleEvaluation on zeros of the reduced denominator.
        """
        s0 = _as_fraction(s0)
        d = self.den(s0)
        if d == 0:
            raise PoleEvaluation(f"denominator vanishes at s = {s0}")
        return self.num(s0) / d

    def subs_neg(self) -> "RatFunQ":
        return RatFunQ.make(self.num.subs_neg(), self.den.subs_neg())

    def __str__(self) -> str:
        if self.den.degree == 0:
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"


@dataclass(frozen=True, slots=True)
class RatFunPi:
    """Rational function over Q times an integer power of pi.

    The grade is a single integer for the whole function, so sums of
    mismatched grades are rejected; this is all the downstream algebra
    (entry sums, determinants, Mellin images) ever needs.
    """

    pi_power: int
    fun: RatFunQ

    def __post_init__(self):
        if self.fun.is_zero:
            object.__setattr__(self, "pi_power", 0)

    @staticmethod
    def zero() -> "RatFunPi":
        return RatFunPi(0, RatFunQ.zero())

    @staticmethod
    def one() -> "RatFunPi":
        return RatFunPi(0, RatFunQ.one())

    @staticmethod
    def from_coeffs(pi_power: int, num: Iterable, den: Iterable) -> "RatFunPi":
        return RatFunPi(pi_power, RatFunQ.from_coeffs(num, den))

    @property
    def is_zero(self) -> bool:
        return self.fun.is_zero

    def __add__(self, other: "RatFunPi") -> "RatFunPi":
        if not isinstance(other, RatFunPi):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.pi_power != other.pi_power:
            raise GradeMismatch(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} functions"
            )
        return RatFunPi(self.pi_power, self.fun + other.fun)

    def __sub__(self, other: "RatFunPi") -> "RatFunPi":
        if not isinstance(other, RatFunPi):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "RatFunPi":
        return RatFunPi(self.pi_power, -self.fun)

    def __mul__(self, other):
        if isinstance(other, RatFunPi):
            return RatFunPi(self.pi_power + other.pi_power, self.fun * other.fun)
        if isinstance(other, PiScaled):
            return RatFunPi(self.pi_power + other.pi_power, self.fun * other.coeff)
        if isinstance(other, (int, Fraction)):
            return RatFunPi(self.pi_power, self.fun * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RatFunPi):
            if other.is_zero:
                raise DivisionByZero("division by the zero rational function")
            return RatFunPi(self.pi_power - other.pi_power, self.fun / other.fun)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by exact zero")
            return RatFunPi(self.pi_power, self.fun * Fraction(1, 1) / other)
        return NotImplemented

    def is_odd(self) -> bool:
        """True when f(-s) == -f(s) exactly."""
        return self.fun.subs_neg() == -self.fun

    def __str__(self) -> str:
        return f"pi^{self.pi_power} * {self.fun}"


def ratfun_eval(f: RatFunPi, s0, pi_value=math.pi):
    """Numeric value of f at rational s0: exact core times pi_value^grade.

    pi_value may be float or mpmath.mpf; the result follows that type.
    """
    val = f.fun.eval(s0)
    return pi_value ** f.pi_power * val


def ratfun_eval_exact(f: RatFunPi, s0) -> PiScaled:
    """Exact value of f at rational s0, keeping the pi grade symbolic."""
    return PiScaled(f.fun.eval(s0), f.pi_power)


# ---------------------------------------------------------------------------
# Laurent polynomials with even exponents


@dataclass(frozen=True)
class LaurentPi:
    """Laurent polynomial in xi with even exponents whose coefficients all
    carry one shared pi grade.

    coeffs maps exponent -> nonzero Fraction; the pi_power applies to every
    term.  The zero polynomial is the empty map at grade 0.
    """

    pi_power: int
    coeffs: Mapping[int, Fraction]

    def __post_init__(self):
        clean: dict[int, Fraction] = {}
        for e, c in self.coeffs.items():
            e = int(e)
            if e % 2:
                raise OddExponent(f"exponent {e} is odd")
            c = _as_fraction(c)
            if c != 0:
                clean[e] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))
        if not clean:
            object.__setattr__(self, "pi_power", 0)

    @staticmethod
    def zero() -> "LaurentPi":
        return LaurentPi(0, {})

    @staticmethod
    def from_terms(terms: Mapping[int, PiScaled]) -> "LaurentPi":
        """Build from per-term PiScaled coefficients; grades must agree."""
        grade = None
        coeffs: dict[int, Fraction] = {}
        for e, t in terms.items():
            if t.is_zero:
                continue
            if grade is None:
                grade = t.pi_power
            elif t.pi_power != grade:
                raise GradeMismatch(
                    f"mixed grades pi^{grade} and pi^{t.pi_power} in one polynomial"
                )
            coeffs[e] = t.coeff
        if grade is None:
            return LaurentPi.zero()
        return LaurentPi(grade, coeffs)

    @property
    def terms(self) -> dict[int, PiScaled]:
        return {e: PiScaled(c, self.pi_power) for e, c in self.coeffs.items()}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentPi") -> "LaurentPi":
        if not isinstance(other, LaurentPi):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.pi_power != other.pi_power:
            raise GradeMismatch(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} polynomials"
            )
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPi(self.pi_power, out)

    def __sub__(self, other: "LaurentPi") -> "LaurentPi":
        return self + (-other)

    def __neg__(self) -> "LaurentPi":
        return LaurentPi(self.pi_power, {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, PiScaled):
            if other.is_zero:
                return LaurentPi.zero()
            return LaurentPi(
                self.pi_power + other.pi_power,
                {e: c * other.coeff for e, c in self.coeffs.items()},
            )
        if isinstance(other, (int, Fraction)):
            return LaurentPi(
                self.pi_power, {e: c * other for e, c in self.coeffs.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def value_at_one(self) -> PiScaled:
        """Exact value at xi = 1: the plain sum of the coefficients."""
        total = Fraction(0)
        for c in self.coeffs.values():
            total += c
        return PiScaled(total, self.pi_power if total != 0 else 0)

    def eval(self, x: float, pi_value: float = math.pi) -> float:
        """Numeric value at x > 0.

        Evaluated as value_at_one + sum c_e (x^e - 1): the constant part is
        exact, every remaining term vanishes identically at x = 1, so the
        cancellation that makes the plain sum noisy near x = 1 never happens.
        """
        if x == 0:
            from .errors import ZeroArgument

            raise ZeroArgument("Laurent evaluation at 0")
        base = float(self.value_at_one().coeff)
        acc = base
        for e, c in self.coeffs.items():
            acc += float(c) * (x ** e - 1.0)
        return acc * pi_value ** self.pi_power

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [
            f"({c.numerator}/{c.denominator})*xi^{e}" for e, c in self.coeffs.items()
        ]
        return f"pi^{self.pi_power} * [" + " + ".join(parts) + "]"


# ---------------------------------------------------------------------------
# partial fractions over distinct integer poles


def _trial_factor(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for the pole products
    this package produces (constant terms up to around (8!)^2)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in _trial_factor(n).items():
        divs = [d * p ** i for d in divs for i in range(k + 1)]
    return sorted(divs)


def _integer_roots(ints: list[int]) -> tuple[dict[int, int], int]:
    """All integer roots (with multiplicity) of an integer polynomial.

    Returns (roots, remaining_degree) after deflating every integer root.
    """

    def eval_at(cs: list[int], x: int) -> int:
        acc = 0
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def deflate(cs: list[int], x: int) -> list[int]:
        # synthetic division by (s - x); exact because x is a root
        out = [0] * (len(cs) - 1)
        carry = cs[-1]
        for i in range(len(cs) - 2, -1, -1):
            out[i] = carry
            carry = cs[i] + carry * x
        assert carry == 0
        return out

    roots: dict[int, int] = {}
    work = list(ints)
    while len(work) > 1 and work[0] == 0:
        roots[0] = roots.get(0, 0) + 1
        work = work[1:]
    if len(work) > 1:
        candidates = set()
        for d in _divisors(abs(work[0])):
            candidates.add(d)
            candidates.add(-d)
        for cand in sorted(candidates):
            while len(work) > 1 and eval_at(work, cand) == 0:
                roots[cand] = roots.get(cand, 0) + 1
                work = deflate(work, cand)
    return roots, len(work) - 1


def partial_fractions(f: RatFunPi) -> dict[int, PiScaled]:
    """Residue map of a proper rational function whose denominator splits
    into distinct monic linear factors with integer roots.

    Residues come from the cover-up rule: res at n is num(n) divided by the
    product of (n - m) over the other poles m.  Everything stays exact.
    """
    num, den = f.fun.num, f.fun.den
    if num.is_zero:
        return {}
    if num.degree >= den.degree:
        raise ImproperFraction(
            f"numerator degree {num.degree} >= denominator degree {den.degree}"
        )
    if any(c.denominator != 1 for c in den.coeffs):
        # a monic product of (s - n) with integer n has integer coefficients
        raise NonIntegerPole("denominator has non-integer coefficients")
    ints = [int(c) for c in den.coeffs]
    roots, leftover = _integer_roots(ints)
    if leftover > 0:
        raise NonIntegerPole("denominator has a non-integer root")
    if any(m > 1 for m in roots.values()):
        bad = [r for r, m in roots.items() if m > 1]
        raise RepeatedPole(f"repeated pole(s) at {bad}")
    out: dict[int, PiScaled] = {}
    poles = sorted(roots)
    for n in poles:
        denom = Fraction(1)
        for m in poles:
            if m != n:
                denom *= n - m
        out[n] = PiScaled(num(Fraction(n)) / denom, f.pi_power)
    return out


def laurent_mellin(g: LaurentPi) -> RatFunPi:
    """Mellin image of an even-exponent Laurent polynomial.

    Term rule: coefficient c at exponent e contributes (c/2) / (s - e/2).
    Grade is preserved.  The zero polynomial maps to zero.
    """
    if g.is_zero:
        return RatFunPi.zero()
    for e in g.coeffs:
        if e % 2:
            raise OddExponent(f"exponent {e} is odd")
    total = RatFunQ.zero()
    for e, c in g.coeffs.items():
        n = e // 2
        total = total + RatFunQ.from_coeffs((c / 2,), (-n, 1))
    return RatFunPi(g.pi_power, total)


# ---------------------------------------------------------------------------
# serialization helpers shared with the CLI


def ratfun_to_lists(f: RatFunPi) -> dict:
    """JSON-friendly form: pi grade plus ascending num/den coefficient lists."""
    return {
        "pi_power": f.pi_power,
        "num": [str(c) for c in f.fun.num.coeffs],
        "den": [str(c) for c in f.fun.den.coeffs],
    }


def ratfun_from_lists(data: Mapping) -> RatFunPi:
    return RatFunPi.from_coeffs(
        int(data["pi_power"]),
        (Fraction(c) for c in data["num"]),
        (Fraction(c) for c in data["den"]),
    )


def laurent_to_map(g: LaurentPi) -> dict:
    return {
        "pi_power": g.pi_power,
        "coeffs": {str(e): str(c) for e, c in g.coeffs.items()},
    }


def laurent_from_map(data: Mapping) -> LaurentPi:
    return LaurentPi(
        int(data["pi_power"]),
        {int(e): Fraction(c) for e, c in data["coeffs"].items()},
    )
