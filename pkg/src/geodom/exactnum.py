"""Exact arithmetic in quadratic extension fields Q(sqrt(d)).

Every coordinate in this package is a ``QuadNum``: a value a + b*sqrt(d)
with rational a, b and a fixed square-free positive integer d.  d == 1
canonically encodes a plain rational (then b == 0), so one type serves
both rational and irrational data.  All comparisons are decided exactly
by sign bookkeeping and at most two squarings; no floating point is ever
consulted for a decision.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Raised when combining values from incompatible quadratic fields."""


class NumberParseError(ValueError):
    """Raised on malformed number literals."""


_Rat = (int, Fraction)
_FRAC_ZERO = Fraction(0)


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (f, d) with n == f*f*d and d square-free, for n > 0."""
    if n <= 0:
        raise ValueError("expected a positive integer under the radical")
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    f, d, m = 1, 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return f, d * m


def _sqrt_of_fraction(s: Fraction) -> tuple[Fraction, int]:
    """Write sqrt(s) as coef*sqrt(d) with rational coef and square-free d.

    s must be >= 0; sqrt(s) = sqrt(num*den)/den.
    """
    if s < 0:
        raise ValueError("negative radicand")
    if s == 0:
        return Fraction(0), 1
    f, d = squarefree_split(s.numerator * s.denominator)
    return Fraction(f, s.denominator), d


def sign_sum1(a: Fraction, b: Fraction, s: Fraction) -> int:
    """Exact sign of a + b*sqrt(s) for rational a, b and s >= 0."""
    if s < 0:
        raise ValueError("negative radicand")
    if b == 0 or s == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    sa = 1 if a > 0 else -1
    sb = 1 if b > 0 else -1
    if sa == sb:
        return sa
    # Opposite signs: |a| vs |b|*sqrt(s) decided by one squaring.
    lhs, rhs = a * a, b * b * s
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


def sign_sum2(a: Fraction, b: Fraction, s: Fraction, c: Fraction, t: Fraction) -> int:
    """Exact sign of a + b*sqrt(s) + c*sqrt(t), s, t >= 0."""
    if b == 0 or s == 0:
        return sign_sum1(a, c, t)
    if c == 0 or t == 0:
        return sign_sum1(a, b, s)
    if s == t:
        return sign_sum1(a, b + c, s)
    # sign of w = b*sqrt(s) + c*sqrt(t)
    if (b > 0) == (c > 0):
        sw = 1 if b > 0 else -1
    else:
        d = b * b * s - c * c * t
        if d == 0:
            sw = 0
        elif d > 0:
            sw = 1 if b > 0 else -1
        else:
            sw = 1 if c > 0 else -1
    if a == 0:
        return sw
    sa = 1 if a > 0 else -1
    if sw == 0 or sa == sw:
        return sa
    # |a| vs |w|: square once; then E vs F*sqrt(s*t): square again.
    e = a * a - b * b * s - c * c * t
    f = 2 * b * c
    cmp_sq = sign_sum1(e, -f, s * t)  # sign of a^2 - w^2
    if cmp_sq == 0:
        return 0
    return sa if cmp_sq > 0 else sw


@dataclass(frozen=True)
class QuadNum:
    """Canonical element rat + irr*sqrt(d) of Q(sqrt(d)).

    Invariants: fractions in lowest terms (Fraction guarantees this),
    d square-free and positive, and irr == 0 implies d == 1.  Use
    :func:`quad` to construct values; the raw constructor trusts its
    arguments.
    """

    rat: Fraction
    irr: Fraction
    d: int

    # -- construction -------------------------------------------------

    @staticmethod
    def of(rat, irr=0, d: int = 1) -> "QuadNum":
        rat = Fraction(rat)
        irr = Fraction(irr)
        if irr == 0:
            return QuadNum(rat, Fraction(0), 1)
        f, d0 = squarefree_split(d)
        irr *= f
        if d0 == 1:
            return QuadNum(rat + irr, Fraction(0), 1)
        return QuadNum(rat, irr, d0)

    @staticmethod
    def sqrt_int(d: int) -> "QuadNum":
        return QuadNum.of(0, 1, d)

    @staticmethod
    def sqrt_fraction(s: Fraction) -> "QuadNum":
        coef, d = _sqrt_of_fraction(Fraction(s))
        return QuadNum.of(0, coef, d) if d != 1 else QuadNum.of(coef)

    # -- field bookkeeping --------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    def _join(self, other: "QuadNum") -> int:
        if self.d == other.d:
            return self.d
        if self.d == 1:
            return other.d
        if other.d == 1:
            return self.d
        raise FieldMismatchError(
            f"cannot combine sqrt({self.d}) with sqrt({other.d}) values"
        )

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "QuadNum":
        if isinstance(value, QuadNum):
            return value
        if isinstance(value, _Rat):
            return QuadNum(Fraction(value), _FRAC_ZERO, 1)
        return NotImplemented

    def __add__(self, other) -> "QuadNum":
        other = QuadNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        irr = self.irr + other.irr
        if irr == 0:
            return QuadNum(self.rat + other.rat, _FRAC_ZERO, 1)
        return QuadNum(self.rat + other.rat, irr, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.rat, -self.irr, self.d)

    def __sub__(self, other) -> "QuadNum":
        other = QuadNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        irr = self.irr - other.irr
        if irr == 0:
            return QuadNum(self.rat - other.rat, _FRAC_ZERO, 1)
        return QuadNum(self.rat - other.rat, irr, d)

    def __rsub__(self, other) -> "QuadNum":
        return (-self) + other

    def __mul__(self, other) -> "QuadNum":
        other = QuadNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        rat = self.rat * other.rat + self.irr * other.irr * d
        irr = self.rat * other.irr + self.irr * other.rat
        if irr == 0:
            return QuadNum(rat, _FRAC_ZERO, 1)
        return QuadNum(rat, irr, d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadNum":
        other = QuadNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.rat == 0 and other.irr == 0:
            raise ZeroDivisionError("division by zero QuadNum")
        d = self._join(other)
        norm = other.rat * other.rat - other.irr * other.irr * d
        # norm == 0 would force other == 0 because d is square-free.
        conj_rat = other.rat / norm
        conj_irr = -other.irr / norm
        rat = self.rat * conj_rat + self.irr * conj_irr * d
        irr = self.rat * conj_irr + self.irr * conj_rat
        return QuadNum.of(rat, irr, d)

    def __rtruediv__(self, other) -> "QuadNum":
        lhs = QuadNum._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return lhs / self

    # -- ordering -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}, no floating point."""
        return sign_sum1(self.rat, self.irr, Fraction(self.d))

    def _cmp(self, other) -> int:
        other = QuadNum._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot compare QuadNum with this type")
        self._join(other)
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        other = QuadNum._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.rat == other.rat and self.irr == other.irr and self.d == other.d

    def __hash__(self):
        if self.d == 1:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.d))

    # -- misc ------------------------------------------------------------

    def __float__(self) -> float:
        return float(self.rat) + float(self.irr) * math.sqrt(self.d)

    def floor(self) -> int:
        """Largest integer <= self, computed exactly."""
        if self.d == 1:
            return self.rat.numerator // self.rat.denominator
        # Start from a float estimate, then repair with exact comparisons.
        try:
            m = math.floor(float(self))
        except OverflowError:
            m = self.rat.numerator // self.rat.denominator
        while (self - m).sign() < 0:
            m -= 1
        while (self - (m + 1)).sign() >= 0:
            m += 1
        return m

    def __repr__(self) -> str:
        return f"QuadNum({format_number(self)!r})"


def quad(rat, irr=0, d: int = 1) -> QuadNum:
    """Convenience constructor with canonicalisation."""
    return QuadNum.of(rat, irr, d)


ZERO = quad(0)
ONE = quad(1)


def cmp_cross(x: QuadNum, y: QuadNum) -> int:
    """Total-order comparison of QuadNums from possibly different fields.

    Resolves sign(x - y) = sign((x.rat - y.rat) + x.irr*sqrt(dx) -
    y.irr*sqrt(dy)) with at most two squarings.
    """
    if x.d == 1 and y.d == 1:
        d = x.rat - y.rat
        return (d > 0) - (d < 0)
    if x.d == y.d:
        return sign_sum1(x.rat - y.rat, x.irr - y.irr, Fraction(x.d))
    return sign_sum2(
        x.rat - y.rat, x.irr, Fraction(x.d), -y.irr, Fraction(y.d)
    )


def is_rational(x: QuadNum) -> bool:
    return x.is_rational


def ratio_is_rational(num: QuadNum, den: QuadNum) -> bool:
    """Whether (a+b*sqrt(d))/(c+e*sqrt(d)) is rational, i.e. b*c - a*e == 0."""
    if den.rat == 0 and den.irr == 0:
        raise ZeroDivisionError("zero denominator in ratio test")
    num._join(den)
    return num.irr * den.rat - num.rat * den.irr == 0


# ---------------------------------------------------------------------------
# SqrtExpr: (p + q*sqrt(s)) / r with rational p, q, r and rational s >= 0.
# Used where two values from different quadratic extensions must be ordered,
# e.g. x-coordinates of circle intersections.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SqrtExpr:
    p: Fraction
    q: Fraction
    s: Fraction  # radicand; 0 or 1 when the value is rational

    @staticmethod
    def of(p, q=0, r=1, s=0) -> "SqrtExpr":
        p, q, r, s = Fraction(p), Fraction(q), Fraction(r), Fraction(s)
        if r == 0:
            raise ZeroDivisionError("zero denominator in SqrtExpr")
        if s < 0:
            raise ValueError("negative radicand in SqrtExpr")
        p, q = p / r, q / r
        if q == 0 or s == 0:
            return SqrtExpr(p, Fraction(0), Fraction(0))
        # Fold perfect-square radicands into the rational part.
        coef, d = _sqrt_of_fraction(s)
        if d == 1:
            return SqrtExpr(p + q * coef, Fraction(0), Fraction(0))
        return SqrtExpr(p, q * coef, Fraction(d))

    @staticmethod
    def from_quadnum(x: QuadNum) -> "SqrtExpr":
        return SqrtExpr.of(x.rat, x.irr, 1, x.d)

    def to_quadnum(self) -> QuadNum:
        if self.q == 0:
            return quad(self.p)
        # s is an integer after canonicalisation (square-free d).
        return quad(self.p, self.q, int(self.s))

    def sign(self) -> int:
        return sign_sum1(self.p, self.q, self.s)

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(self.s)


def cmp_quadratic(x1: SqrtExpr, x2: SqrtExpr) -> int:
    """Exact three-way comparison of two square-root expressions."""
    return sign_sum2(x1.p - x2.p, x1.q, x1.s, -x2.q, x2.s)


# ---------------------------------------------------------------------------
# Literal grammar: `P/Q` or `P/Q+R/S*sqrt(D)` with optional signs.
# Printing always emits canonical explicit-denominator form, and
# parse(format(x)) == x exactly.
# ---------------------------------------------------------------------------

_FRAC = r"\d+(?:/\d+)?"
_RADICAL = rf"(?:(?P<coef>{_FRAC})\*)?sqrt\((?P<d>\d+)\)"
_RE_RATIONAL = re.compile(rf"^\s*(?P<rat>[+-]?{_FRAC})\s*$")
_RE_RADICAL = re.compile(rf"^\s*(?P<sign>[+-])?{_RADICAL}\s*$")
_RE_COMBINED = re.compile(rf"^\s*(?P<rat>[+-]?{_FRAC})(?P<sign>[+-]){_RADICAL}\s*$")


def _parse_fraction(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise NumberParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_number(text: str) -> QuadNum:
    m = _RE_RATIONAL.match(text)
    if m:
        return quad(_parse_fraction(m.group("rat")))
    m = _RE_COMBINED.match(text) or _RE_RADICAL.match(text)
    if not m:
        raise NumberParseError(f"malformed number literal {text!r}")
    rat = _parse_fraction(m.group("rat")) if "rat" in m.groupdict() and m.group("rat") else Fraction(0)
    coef = _parse_fraction(m.group("coef")) if m.group("coef") else Fraction(1)
    if m.group("sign") == "-":
        coef = -coef
    d = int(m.group("d"))
    if d == 0:
        raise NumberParseError(f"sqrt(0) not allowed in {text!r}")
    return quad(rat, coef, d)


def _format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def format_number(x: QuadNum) -> str:
    if x.irr == 0:
        return _format_fraction(x.rat)
    radical = f"{_format_fraction(abs(x.irr))}*sqrt({x.d})"
    sign = "+" if x.irr > 0 else "-"
    if x.rat == 0:
        return radical if x.irr > 0 else f"-{radical}"
    return f"{_format_fraction(x.rat)}{sign}{radical}"
