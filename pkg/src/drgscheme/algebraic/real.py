"""Real algebraic numbers as (minimal polynomial, isolating interval) pairs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import poly as P

Rational = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class AlgebraicReal:
    """A real root of an irreducible primitive integer polynomial.

    ``minpoly`` holds integer coefficients, lowest degree first, with positive
    leading coefficient. For degree one the value is rational and
    ``lo == hi`` is that value. Otherwise ``(lo, hi)`` is an open interval with
    rational endpoints containing exactly one root, and ``minpoly`` changes sign
    across it.

    Instances are immutable; refinement returns new objects.
    """

    minpoly: tuple[int, ...]
    lo: Fraction
    hi: Fraction

    @classmethod
    def from_rational(cls, q: Rational) -> "AlgebraicReal":
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q)

    @classmethod
    def sqrt(cls, q: Rational) -> "AlgebraicReal":
        """Non-negative square root of a non-negative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        return real_roots((-q, 0, 1))[-1]

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def as_rational(self) -> Fraction | None:
        return self.lo if self.is_rational else None

    def is_integer(self) -> bool:
        q = self.as_rational()
        return q is not None and q.denominator == 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refined(self) -> "AlgebraicReal":
        """Bisect the isolating interval once."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        s_mid = P.sign(P.evaluate(self.minpoly, mid))
        s_lo = P.sign(P.evaluate(self.minpoly, self.lo))
        # an irreducible polynomial of degree >= 2 has no rational root
        if s_mid == s_lo:
            return AlgebraicReal(self.minpoly, mid, self.hi)
        return AlgebraicReal(self.minpoly, self.lo, mid)

    def refine_to(self, width: Rational) -> "AlgebraicReal":
        a = self
        while a.hi - a.lo > width:
            a = a.refined()
        return a

    def compare(self, other: "AlgebraicReal | Rational") -> int:
        """Exact three-way comparison: -1, 0 or 1."""
        return compare(self, other)

    def __eq__(self, other):
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        return compare(self, other) == 0

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __hash__(self):
        return hash(self.minpoly)

    def __float__(self):
        a = self.refine_to(Fraction(1, 2**64) * max(1, abs(self.lo)))
        return float((a.lo + a.hi) / 2)

    def decimal(self, digits: int = 12) -> str:
        """Decimal string with ``digits`` fractional digits (advisory only)."""
        a = self.refine_to(Fraction(1, 10 ** (digits + 2)))
        mid = (a.lo + a.hi) / 2
        scaled = round(mid * 10**digits)
        sign = "-" if scaled < 0 else ""
        whole, frac = divmod(abs(scaled), 10**digits)
        return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"

    def __repr__(self):
        q = self.as_rational()
        if q is not None:
            return f"AlgebraicReal({q})"
        return f"AlgebraicReal(root of {_poly_str(self.minpoly)} ~ {self.decimal(6)})"

    # arithmetic goes through the exact tower algebra
    def _binop(self, other, op):
        from .expr import Expr

        return (op(Expr.leaf(self), Expr.leaf(other))).value()

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binop(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binop(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __neg__(self):
        if self.is_rational:
            return AlgebraicReal.from_rational(-self.lo)
        f = tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.minpoly))
        return AlgebraicReal(P.primitive(f), -self.hi, -self.lo)

    def __pow__(self, e: int):
        if e < 0:
            return 1 / (self**-e)
        out = AlgebraicReal.from_rational(1)
        for _ in range(e):
            out = out * self
        return out


def _poly_str(p) -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if mon and abs(c) == 1:
            coef = "-" if c < 0 else "+"
            terms.append(f"{coef}{mon}")
        else:
            terms.append(f"{'+' if c > 0 else '-'}{abs(c)}{mon}")
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s


def _coerce(x) -> AlgebraicReal:
    if isinstance(x, AlgebraicReal):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicReal.from_rational(x)
    raise TypeError(f"cannot treat {type(x).__name__} as an algebraic real")


def _disjoint(a: AlgebraicReal, b: AlgebraicReal) -> int:
    """Order of a and b if their enclosures separate them, else 0."""
    if a.is_rational and b.is_rational:
        return P.sign(a.lo - b.lo)
    # open intervals for irrationals, points for rationals
    if a.hi < b.lo or (a.hi == b.lo and not (a.is_rational and b.is_rational)):
        return -1
    if b.hi < a.lo or (b.hi == a.lo and not (a.is_rational and b.is_rational)):
        return 1
    return 0


def compare(a, b) -> int:
    """Exact comparison of two algebraic reals (or rationals).

    Equality is decided by identical minimal polynomials plus a root of that
    polynomial lying in the overlap of both isolating intervals; otherwise the
    intervals are bisected until they separate, which always happens for
    distinct values.
    """
    a, b = _coerce(a), _coerce(b)
    while True:
        s = _disjoint(a, b)
        if s:
            return s
        if a.is_rational and b.is_rational:
            return 0
        if a.minpoly == b.minpoly:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if lo < hi:
                f = a.minpoly
                if P.sign(P.evaluate(f, lo)) != P.sign(P.evaluate(f, hi)):
                    return 0
        if a.width >= b.width:
            a = a.refined()
        else:
            b = b.refined()


def real_roots(p) -> list[AlgebraicReal]:
    """All distinct real roots of a nonzero rational polynomial, ascending."""
    p = P.trim(p)
    if not p:
        raise ValueError("the zero polynomial has no isolated roots")
    roots: list[AlgebraicReal] = []
    for f, _mult in P.factor(p):
        if len(f) == 2:
            roots.append(AlgebraicReal.from_rational(Fraction(-f[0], f[1])))
            continue
        for lo, hi in P.isolate_real_roots(f):
            roots.append(AlgebraicReal(f, lo, hi))
    _sort(roots)
    return roots


def _sort(xs: list[AlgebraicReal]) -> None:
    # insertion sort on exact comparisons; lists here are short
    for i in range(1, len(xs)):
        j = i
        while j > 0 and compare(xs[j - 1], xs[j]) > 0:
            xs[j - 1], xs[j] = xs[j], xs[j - 1]
            j -= 1


def as_rational(a: AlgebraicReal) -> Fraction | None:
    return a.as_rational()
