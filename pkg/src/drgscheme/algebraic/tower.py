"""Exact arithmetic in the Q-algebra generated by a fixed list of real algebraic numbers.

A :class:`NumberSystem` owns an ordered list of pairwise distinct generators
(for a scheme: its eigenvalues). Elements are polynomials over Q in those
generators, kept reduced modulo a triangular set of relations: the first
generator with a given minimal polynomial ``f`` satisfies ``f(x) = 0``; a later
generator ``y`` with the same ``f`` satisfies ``f(y) / ((y - x1)...(y - xr))``
where ``x1..xr`` are its earlier conjugates. The quotient algebra is therefore
a finite product of fields whose points are exactly the tuples of *distinct*
conjugates, and the dimension stays small even when several eigenvalues share
a minimal polynomial.

Zero testing never uses a tolerance. The exact route forms the matrix of
multiplication by the element, takes its characteristic polynomial (the
iterated resultant), and reads off a lower bound on the absolute value of its
nonzero roots; an interval enclosure narrower than that bound decides the
question. The alternative route replaces the characteristic polynomial by a
Liouville-type bound computed from degrees and coefficient heights. Both routes
must agree; :func:`zero_test_strategy` selects one or both.
"""

from __future__ import annotations

import contextvars
import itertools
import threading
from contextlib import contextmanager
from fractions import Fraction
from math import lcm
from typing import Iterator, Sequence, Union

from . import poly as P
from .real import AlgebraicReal, compare, real_roots

Mono = tuple
Rational = Union[int, Fraction]

_STRATEGIES = ("exact", "bound", "both")
_strategy = contextvars.ContextVar("zero_test_strategy", default="exact")


class ZeroTestDisagreement(AssertionError):
    pass


@contextmanager
def zero_test_strategy(name: str) -> Iterator[None]:
    """Select the zero-test route for the current context.

    ``"exact"`` (default) uses the characteristic-polynomial bound,
    ``"bound"`` the height/degree bound, ``"both"`` runs both and raises
    :class:`ZeroTestDisagreement` if they differ.
    """
    if name not in _STRATEGIES:
        raise ValueError(f"unknown zero-test strategy {name!r}")
    token = _strategy.set(name)
    try:
        yield
    finally:
        _strategy.reset(token)


def _imul(a, b):
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


def _ipow(a, e):
    lo, hi = a
    if e % 2 == 0 and lo < 0 < hi:
        return Fraction(0), max(lo**e, hi**e)
    x, y = lo**e, hi**e
    return (x, y) if x <= y else (y, x)


class Tower:
    """Triangular relations for a sorted tuple of irrational generator indices."""

    def __init__(self, system: "NumberSystem", idx: tuple[int, ...]):
        self.idx = idx
        self.r = len(idx)
        self.tails: list[dict] = []
        self.dims: list[int] = []
        zero = (0,) * self.r
        gens = system.generators
        for s, g in enumerate(idx):
            coeffs = [{zero: c} for c in P.monic(gens[g].minpoly)]
            for t in range(s):
                if gens[idx[t]].minpoly == gens[g].minpoly:
                    coeffs = self._divide_linear(coeffs, t)
            tail = {}
            for j, cj in enumerate(coeffs[:-1]):
                for mono, c in cj.items():
                    m = list(mono)
                    m[s] = j
                    tail[tuple(m)] = -c
            self.tails.append({m: c for m, c in tail.items() if c})
            self.dims.append(len(coeffs) - 1)

    def _divide_linear(self, coeffs: list[dict], t: int) -> list[dict]:
        # synthetic division of sum_j coeffs[j] * y^j by (y - x_t)
        n = len(coeffs) - 1
        q = [None] * n
        q[n - 1] = dict(coeffs[n])
        for j in range(n - 1, 0, -1):
            q[j - 1] = self.reduce(_add(coeffs[j], _shift(q[j], t)))
        rem = self.reduce(_add(coeffs[0], _shift(q[0], t)))
        if rem:
            raise ArithmeticError("conjugate generators are not roots of the shared polynomial")
        return q

    @property
    def dimension(self) -> int:
        out = 1
        for g in self.dims:
            out *= g
        return out

    def reduce(self, poly: dict) -> dict:
        poly = dict(poly)
        for s in reversed(range(len(self.tails))):
            g = self.dims[s]
            tail = self.tails[s]
            high = [m for m in poly if m[s] >= g]
            while high:
                for m in high:
                    c = poly.pop(m, 0)
                    if not c:
                        continue
                    base = list(m)
                    base[s] -= g
                    for tm, tc in tail.items():
                        nm = tuple(a + b for a, b in zip(base, tm))
                        v = poly.get(nm, 0) + c * tc
                        if v:
                            poly[nm] = v
                        else:
                            poly.pop(nm, None)
                high = [m for m in poly if m[s] >= g]
        return poly

    def basis(self) -> list[Mono]:
        return [tuple(m) for m in itertools.product(*(range(g) for g in self.dims))]

    def multiplication_matrix(self, poly: dict) -> list[list[Fraction]]:
        basis = self.basis()
        pos = {m: i for i, m in enumerate(basis)}
        n = len(basis)
        mat = [[Fraction(0)] * n for _ in range(n)]
        for j, b in enumerate(basis):
            prod = self.reduce({tuple(x + y for x, y in zip(m, b)): c for m, c in poly.items()})
            for m, c in prod.items():
                mat[pos[m]][j] = Fraction(c)
        return mat


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _shift(a: dict, t: int) -> dict:
    out = {}
    for m, c in a.items():
        nm = list(m)
        nm[t] += 1
        out[tuple(nm)] = c
    return out


class NumberSystem:
    """The algebra generated by pairwise distinct real algebraic numbers.

    Rational generators are substituted by their values, so towers only ever
    involve irrational generators.
    """

    def __init__(self, generators: Sequence[AlgebraicReal]):
        self.generators = tuple(generators)
        self._approx = list(self.generators)
        self._towers: dict[tuple[int, ...], Tower] = {}
        self._lock = threading.Lock()
        # equal values would make the conjugate division invalid
        for (i, a), (j, b) in itertools.combinations(enumerate(self.generators), 2):
            if a.minpoly == b.minpoly and not a.is_rational and compare(a, b) == 0:
                raise ValueError(f"generators {i} and {j} are equal")

    def tower(self, idx: tuple[int, ...]) -> Tower:
        with self._lock:
            t = self._towers.get(idx)
        if t is None:
            t = Tower(self, idx)
            with self._lock:
                self._towers.setdefault(idx, t)
        return t

    def approx(self, g: int, width: Fraction) -> tuple[Fraction, Fraction]:
        with self._lock:
            a = self._approx[g]
        if a.hi - a.lo > width:
            a = a.refine_to(width)
            with self._lock:
                if a.hi - a.lo < self._approx[g].hi - self._approx[g].lo:
                    self._approx[g] = a
        return a.lo, a.hi

    def const(self, q: Rational) -> "Element":
        q = Fraction(q)
        return Element(self, (), {(): q} if q else {})

    def gen(self, i: int) -> "Element":
        a = self.generators[i]
        if a.is_rational:
            return self.const(a.lo)
        return Element(self, (i,), {(1,): Fraction(1)})

    def univariate(self, i: int, coeffs: Sequence[Rational]) -> "Element":
        """The element sum_j coeffs[j] * generator_i ** j."""
        x = self.gen(i)
        out = self.const(0)
        for c in reversed(coeffs):
            out = out * x + c
        return out

    def coerce(self, x) -> "Element":
        if isinstance(x, Element):
            if x.system is not self:
                raise ValueError("elements belong to different number systems")
            return x
        if isinstance(x, (int, Fraction)):
            return self.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into a number system")


class Element:
    """An immutable element of a :class:`NumberSystem`."""

    __slots__ = ("system", "idx", "poly", "_sign")

    def __init__(self, system: NumberSystem, idx: tuple[int, ...], poly: dict):
        self.system = system
        self.idx = idx
        self.poly = poly
        self._sign = None

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def _make(system, idx, poly, reduce=True) -> "Element":
        if idx and reduce:
            poly = system.tower(idx).reduce(poly)
        if idx:
            idx, poly = _shrink(system, idx, poly)
        return Element(system, idx, poly)

    def _lift(self, idx: tuple[int, ...]) -> dict:
        if idx == self.idx:
            return self.poly
        where = [idx.index(g) for g in self.idx]
        out = {}
        for m, c in self.poly.items():
            nm = [0] * len(idx)
            for s, e in zip(where, m):
                nm[s] = e
            out[tuple(nm)] = c
        return out

    def _binary(self, other, op) -> "Element":
        other = self.system.coerce(other)
        idx = tuple(sorted(set(self.idx) | set(other.idx)))
        same = idx == self.idx == other.idx
        return Element._make(self.system, idx, op(self._lift(idx), other._lift(idx)), reduce=not same or op is _mul_polys)

    def __add__(self, other):
        return self._binary(other, _add)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.system, self.idx, {m: -c for m, c in self.poly.items()})

    def __sub__(self, other):
        return self + (-self.system.coerce(other))

    def __rsub__(self, other):
        return self.system.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.system.const(0)
            return Element(self.system, self.idx, {m: c * other for m, c in self.poly.items()})
        return self._binary(other, _mul_polys)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self.system.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.system.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.system.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- queries ---------------------------------------------------------------
    def rational(self) -> Fraction | None:
        """The value when it is syntactically a rational constant."""
        if not self.idx:
            return self.poly.get((), Fraction(0))
        return None

    def is_zero(self) -> bool:
        return self.sign() == 0

    def sign(self) -> int:
        if self._sign is None:
            self._sign = self._decide()
        return self._sign

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Element)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        raise TypeError("Element values are compared exactly; they are not hashable")

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __repr__(self):
        q = self.rational()
        if q is not None:
            return f"Element({q})"
        return f"Element({self.to_algebraic()!r})"

    def inverse(self) -> "Element":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        q = self.rational()
        if q is not None:
            return self.system.const(1 / q)
        if len(self.idx) == 1:
            g = self.idx[0]
            f = P.monic(self.system.generators[g].minpoly)
            coeffs = [Fraction(0)] * len(f)
            for (e,), c in self.poly.items():
                coeffs[e] = c
            inv = P.inverse_mod(P.trim(coeffs), f)
            return Element._make(self.system, self.idx, {(e,): c for e, c in enumerate(inv) if c})
        tower = self.system.tower(self.idx)
        mat = tower.multiplication_matrix(self.poly)
        basis = tower.basis()
        rhs = [Fraction(1) if all(e == 0 for e in m) else Fraction(0) for m in basis]
        sol = _solve(mat, rhs)
        if sol is None:
            raise ArithmeticError("element is a zero divisor of its tower; invert in a single-generator field")
        return Element._make(self.system, self.idx, {m: c for m, c in zip(basis, sol) if c})

    # -- exact decision machinery ---------------------------------------------
    def _enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        boxes = [self.system.approx(g, width) for g in self.idx]
        lo = hi = Fraction(0)
        for m, c in self.poly.items():
            box = (Fraction(1), Fraction(1))
            for s, e in enumerate(m):
                if e:
                    box = _imul(box, _ipow(boxes[s], e))
            a, b = c * box[0], c * box[1]
            if a > b:
                a, b = b, a
            lo += a
            hi += b
        return lo, hi

    def _exact_beta(self):
        """None if provably nonzero, else a positive lower bound on |nonzero value|."""
        tower = self.system.tower(self.idx)
        cp = P.charpoly(tower.multiplication_matrix(self.poly))
        if cp[0] != 0:
            return None
        e = next(i for i, c in enumerate(cp) if c != 0)
        rest = cp[e:]
        r0 = abs(rest[0])
        if len(rest) == 1:
            return Fraction(1)  # every point gives zero
        return r0 / (r0 + max(abs(c) for c in rest[1:]))

    def _liouville_beta(self):
        gens = self.system.generators
        tower = self.system.tower(self.idx)
        den = 1
        for c in self.poly.values():
            den = lcm(den, Fraction(c).denominator)
        n = den
        for s, g in enumerate(self.idx):
            top = max(m[s] for m in self.poly)
            n *= gens[g].minpoly[-1] ** top
        radii = [P.cauchy_bound(gens[g].minpoly) for g in self.idx]
        bound = Fraction(0)
        for m, c in self.poly.items():
            term = abs(Fraction(c))
            for s, e in enumerate(m):
                term *= radii[s] ** e
            bound += term
        h = max(Fraction(1), n * bound)
        return 1 / (n * h ** (tower.dimension - 1))

    def _refine_sign(self, beta) -> int:
        width = Fraction(1, 2**8)
        while True:
            lo, hi = self._enclosure(width)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if beta is not None and -beta < lo and hi < beta:
                return 0
            width /= 2**8

    def _decide(self) -> int:
        if not self.poly:
            return 0
        q = self.rational()
        if q is not None:
            return P.sign(q)
        if len(self.idx) == 1:
            # a nonzero reduced polynomial in one generator is nonzero in its field
            return self._refine_sign(None)
        strategy = _strategy.get()
        if strategy == "exact":
            return self._refine_sign(self._exact_beta())
        if strategy == "bound":
            return self._refine_sign(self._liouville_beta())
        a = self._refine_sign(self._exact_beta())
        b = self._refine_sign(self._liouville_beta())
        if a != b:
            raise ZeroTestDisagreement(f"exact route gave {a}, bound route gave {b}")
        return a

    def to_algebraic(self) -> AlgebraicReal:
        """The value as an :class:`AlgebraicReal` (minimal polynomial + interval)."""
        if self.is_zero():
            return AlgebraicReal.from_rational(0)
        q = self.rational()
        if q is not None:
            return AlgebraicReal.from_rational(q)
        tower = self.system.tower(self.idx)
        cp = P.charpoly(tower.multiplication_matrix(self.poly))
        candidates = []
        for f, _ in P.factor(cp):
            candidates.extend(real_roots(f))
        width = Fraction(1, 2**8)
        while True:
            lo, hi = self._enclosure(width)
            alive = []
            for c in candidates:
                c = c.refine_to(width)
                if c.is_rational:
                    hit = lo <= c.lo <= hi
                else:
                    hit = c.lo < hi and lo < c.hi
                if hit:
                    alive.append(c)
            candidates = alive
            if len(candidates) == 1:
                return candidates[0]
            if not candidates:
                raise ArithmeticError("value not found among characteristic roots")
            width /= 2**8

    def __float__(self):
        return float(self.to_algebraic())


def _mul_polys(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _shrink(system: NumberSystem, idx: tuple[int, ...], poly: dict):
    """Drop generators the element does not depend on (keeping conjugate prerequisites)."""
    used = {s for m in poly for s, e in enumerate(m) if e}
    gens = system.generators
    keep = set(used)
    for s in used:
        for t in range(s):
            if gens[idx[t]].minpoly == gens[idx[s]].minpoly:
                keep.add(t)
    if len(keep) == len(idx):
        return idx, poly
    order = sorted(keep)
    new_idx = tuple(idx[s] for s in order)
    new_poly = {tuple(m[s] for s in order): c for m, c in poly.items()}
    return new_idx, new_poly


def _solve(mat, rhs):
    n = len(mat)
    a = [list(row) + [b] for row, b in zip(mat, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]
