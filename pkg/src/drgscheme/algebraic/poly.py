"""Dense univariate polynomials over Q.

Polynomials are tuples of coefficients, lowest degree first. Coefficients are
``int`` or ``Fraction``; every function returns trimmed tuples (no trailing
zeros), so the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_factor_list

Poly = tuple


def trim(p: Sequence) -> Poly:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def add(p, q) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p) -> Poly:
    return tuple(-c for c in p)


def sub(p, q) -> Poly:
    return add(p, neg(q))


def scale(p, s) -> Poly:
    if s == 0:
        return ()
    return trim([c * s for c in p])


def mul(p, q) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def divmod_(a, b) -> tuple[Poly, Poly]:
    """Euclidean division over Q."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(a)]
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(r) - 1 < db:
        return (), trim(r)
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] / lead
        if c == 0:
            continue
        q[i - db] = c
        for j, bc in enumerate(b):
            r[i - db + j] -= c * bc
    return trim(q), trim(r[:db])


def mod(a, b) -> Poly:
    return divmod_(a, b)[1]


def monic(p) -> Poly:
    p = trim(p)
    if not p:
        return ()
    lead = Fraction(p[-1])
    return tuple(Fraction(c) / lead for c in p)


def pgcd(a, b) -> Poly:
    """Monic gcd over Q."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(a, b)
    return monic(a)


def inverse_mod(a, f) -> Poly:
    """Inverse of ``a`` modulo ``f`` (requires gcd(a, f) = 1)."""
    r0, r1 = trim(f), trim(a)
    s0, s1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo f")
    return mod(scale(s0, 1 / Fraction(r0[0])), f)


def deriv(p) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign(x) -> int:
    return (x > 0) - (x < 0)


def primitive(p) -> tuple[int, ...]:
    """Integer multiple of ``p`` with content 1 and positive leading coefficient."""
    p = trim(p)
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def squarefree(p) -> Poly:
    p = trim(p)
    g = pgcd(p, deriv(p))
    return divmod_(p, g)[0] if len(g) > 1 else monic(p)


def factor(p) -> list[tuple[tuple[int, ...], int]]:
    """Irreducible factors over Z as ``(primitive factor, multiplicity)`` pairs.

    Constant content is dropped. Factors are returned in a deterministic order
    (by degree, then coefficients).
    """
    prim = primitive(p)
    if len(prim) <= 1:
        return []
    _, facs = dup_factor_list([ZZ(c) for c in reversed(prim)], ZZ)
    out = []
    for f, mult in facs:
        coeffs = tuple(int(c) for c in reversed(f))
        out.append((primitive(coeffs), mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def cauchy_bound(p) -> Fraction:
    """Strict upper bound on the absolute value of every complex root."""
    p = trim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))


def sturm_chain(p) -> list[Poly]:
    p = trim(p)
    chain = [primitive(p), primitive(deriv(p))]
    while True:
        r = mod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive(neg(r)))
    return chain


def variations(chain, x) -> int:
    count, prev = 0, 0
    for q in chain:
        s = sign(evaluate(q, x))
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def count_roots(chain, lo, hi) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return variations(chain, lo) - variations(chain, hi)


def isolate_real_roots(p) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the real roots of a square-free polynomial.

    Returns ascending pairs. A rational root hit during bisection comes back as a
    degenerate pair ``(r, r)``; any other pair ``(lo, hi)`` satisfies
    ``p(lo) * p(hi) < 0`` and contains exactly one root.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    chain = sturm_chain(p)
    bound = cauchy_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    # (lo, hi, closed): the interval is (lo, hi] when closed else (lo, hi)
    stack = [(-bound, bound, True)]
    while stack:
        lo, hi, closed = stack.pop()
        n = count_roots(chain, lo, hi)
        hi_root = evaluate(p, hi) == 0
        if hi_root:
            n -= 1
            if closed:
                out.append((hi, hi))
        if n == 0:
            continue
        if n == 1 and not hi_root and evaluate(p, lo) != 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid, True))
        stack.append((mid, hi, False if hi_root else closed))
    out.sort()
    return out


def charpoly(m: Sequence[Sequence]) -> Poly:
    """Characteristic polynomial det(tI - M) over Q via Hessenberg reduction."""
    n = len(m)
    h = [[Fraction(x) for x in row] for row in m]
    for col in range(n - 2):
        piv = next((r for r in range(col + 1, n) if h[r][col] != 0), None)
        if piv is None:
            continue
        if piv != col + 1:
            h[piv], h[col + 1] = h[col + 1], h[piv]
            for row in h:
                row[piv], row[col + 1] = row[col + 1], row[piv]
        t = h[col + 1][col]
        for r in range(col + 2, n):
            u = h[r][col] / t
            if u == 0:
                continue
            hr, hp = h[r], h[col + 1]
            for c in range(n):
                hr[c] -= u * hp[c]
            for row in h:
                row[col + 1] += u * row[r]
    polys: list[Poly] = [(Fraction(1),)]
    for m_ in range(1, n + 1):
        p = mul((-h[m_ - 1][m_ - 1], Fraction(1)), polys[m_ - 1])
        prod = Fraction(1)
        for i in range(m_ - 1, 0, -1):
            prod *= h[i][i - 1]
            if prod == 0:
                break
            p = sub(p, scale(polys[i - 1], prod * h[i - 1][m_ - 1]))
        polys.append(p)
    return polys[n]
