"""Expression trees over algebraic reals, with an exact zero test.

An :class:`Expr` records ``+ - * /`` over :class:`AlgebraicReal` leaves. The
zero test clears denominators symbolically, so a whole expression is checked
in one tower over its distinct leaves without ever inverting a multi-generator
element.
"""

from __future__ import annotations

from fractions import Fraction

from .real import AlgebraicReal, _coerce, compare
from .tower import NumberSystem


class Expr:
    __slots__ = ("op", "args")

    def __init__(self, op: str, args: tuple):
        self.op = op
        self.args = args

    @staticmethod
    def leaf(x) -> "Expr":
        if isinstance(x, Expr):
            return x
        return Expr("leaf", (_coerce(x),))

    def _bin(self, op, other, swap=False):
        other = Expr.leaf(other)
        return Expr(op, (other, self) if swap else (self, other))

    def __add__(self, o):
        return self._bin("+", o)

    def __radd__(self, o):
        return self._bin("+", o, True)

    def __sub__(self, o):
        return self._bin("-", o)

    def __rsub__(self, o):
        return self._bin("-", o, True)

    def __mul__(self, o):
        return self._bin("*", o)

    def __rmul__(self, o):
        return self._bin("*", o, True)

    def __truediv__(self, o):
        return self._bin("/", o)

    def __rtruediv__(self, o):
        return self._bin("/", o, True)

    def __neg__(self):
        return Expr("neg", (self,))

    def leaves(self) -> list[AlgebraicReal]:
        if self.op == "leaf":
            return [self.args[0]]
        out = []
        for a in self.args:
            out.extend(a.leaves())
        return out

    def _system(self):
        gens: list[AlgebraicReal] = []
        for x in self.leaves():
            if x.is_rational:
                continue
            if not any(g.minpoly == x.minpoly and compare(g, x) == 0 for g in gens):
                gens.append(x)
        return NumberSystem(gens), gens

    def _fraction(self, system, gens):
        """(numerator, denominator) elements; raises ZeroDivisionError on a zero divisor."""
        if self.op == "leaf":
            x = self.args[0]
            if x.is_rational:
                return system.const(x.lo), system.const(1)
            i = next(i for i, g in enumerate(gens) if g.minpoly == x.minpoly and compare(g, x) == 0)
            return system.gen(i), system.const(1)
        if self.op == "neg":
            n, d = self.args[0]._fraction(system, gens)
            return -n, d
        (n1, d1), (n2, d2) = (a._fraction(system, gens) for a in self.args)
        if self.op == "+":
            return n1 * d2 + n2 * d1, d1 * d2
        if self.op == "-":
            return n1 * d2 - n2 * d1, d1 * d2
        if self.op == "*":
            return n1 * n2, d1 * d2
        if n2.is_zero():
            raise ZeroDivisionError("division by an expression equal to zero")
        return n1 * d2, d1 * n2

    def sign(self) -> int:
        system, gens = self._system()
        n, d = self._fraction(system, gens)
        return n.sign() * d.sign()

    def value(self) -> AlgebraicReal:
        """Evaluate bottom-up, each step in a tower of at most two generators."""
        if self.op == "leaf":
            return self.args[0]
        if self.op == "neg":
            return -self.args[0].value()
        a, b = (x.value() for x in self.args)
        gens = []
        for x in (a, b):
            if not x.is_rational and not any(g.minpoly == x.minpoly and compare(g, x) == 0 for g in gens):
                gens.append(x)
        system = NumberSystem(gens)

        def elem(x):
            if x.is_rational:
                return system.const(x.lo)
            return system.gen(next(i for i, g in enumerate(gens) if g.minpoly == x.minpoly and compare(g, x) == 0))

        ea, eb = elem(a), elem(b)
        if self.op == "+":
            r = ea + eb
        elif self.op == "-":
            r = ea - eb
        elif self.op == "*":
            r = ea * eb
        else:
            # eb is a single generator or a rational, so its inverse lives in a field
            r = ea * eb.inverse()
        return r.to_algebraic()


def expr_is_zero(e) -> bool:
    """Exact zero test for an expression (or a bare algebraic real / rational)."""
    if not isinstance(e, Expr):
        e = Expr.leaf(e)
    return e.sign() == 0


def as_fraction(x) -> Fraction | None:
    x = _coerce(x)
    return x.as_rational()
