"""Parameters of a (putative) distance-regular graph from its intersection array.

Everything here is exact: intersection numbers are Fractions, eigenvalues are
:class:`AlgebraicReal`, and all spectral quantities live in one
:class:`NumberSystem` generated by the eigenvalues.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebraic import AlgebraicReal, Element, NumberSystem, real_roots
from .algebraic import poly as P


class InvalidArrayError(ValueError):
    """The array violates a defining invariant (message names the first one)."""


class ArraySyntaxError(InvalidArrayError):
    """The text is not of the form ``b_0,...,b_{d-1};c_1,...,c_d``."""


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_(self, i: int) -> int:
        """b_i with the conventions b_d = 0."""
        return self.b[i] if i < self.d else 0

    def c_(self, i: int) -> int:
        """c_i with c_0 = 0."""
        return self.c[i - 1] if i >= 1 else 0

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(self.k - self.b_(i) - self.c_(i) for i in range(self.d + 1))

    @property
    def valencies(self) -> tuple[Fraction, ...]:
        ks = [Fraction(1)]
        for i in range(self.d):
            ks.append(ks[-1] * self.b[i] / self.c[i])
        return tuple(ks)

    @property
    def n(self) -> Fraction:
        return sum(self.valencies)

    def problems(self) -> list[str]:
        """All violated invariants, in a fixed order (empty for a valid array)."""
        out = []
        if self.d < 1:
            out.append("diameter must be at least 1")
            return out
        if len(self.c) != self.d:
            out.append(f"b has {len(self.b)} entries but c has {len(self.c)}")
            return out
        if any(x <= 0 for x in self.b):
            out.append("every b_i must be a positive integer")
        if any(x <= 0 for x in self.c):
            out.append("every c_i must be a positive integer")
        if self.c[0] != 1:
            out.append(f"c_1 = {self.c[0]} but must be 1")
        for i, a in enumerate(self.a):
            if a < 0:
                out.append(f"a_{i} = k - b_{i} - c_{i} = {a} is negative")
        if out:
            return out
        for i, ki in enumerate(self.valencies):
            if ki.denominator != 1:
                out.append(f"k_{i} = {ki} is not an integer")
        return out

    def validate(self) -> "IntersectionArray":
        probs = self.problems()
        if probs:
            raise InvalidArrayError(probs[0])
        return self

    def text(self) -> str:
        return ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c))

    def __str__(self):
        return "{" + ", ".join(map(str, self.b)) + "; " + ", ".join(map(str, self.c)) + "}"


_ARRAY_RE = re.compile(r"^\s*\{?\s*([-+\d\s,]+);([-+\d\s,]+)\}?\s*$")


def parse_array(src, validate: bool = True) -> IntersectionArray:
    """Parse ``"b_0,...,b_{d-1};c_1,...,c_d"`` (braces optional), a dict or a pair.

    Raises :class:`ArraySyntaxError` on malformed text and
    :class:`InvalidArrayError` (first failing invariant) when ``validate``.
    """
    if isinstance(src, IntersectionArray):
        arr = src
    elif isinstance(src, dict):
        arr = IntersectionArray(tuple(int(x) for x in src["b"]), tuple(int(x) for x in src["c"]))
    elif isinstance(src, (tuple, list)) and len(src) == 2:
        arr = IntersectionArray(tuple(int(x) for x in src[0]), tuple(int(x) for x in src[1]))
    else:
        m = _ARRAY_RE.match(str(src))
        if not m:
            raise ArraySyntaxError(f"cannot parse intersection array {src!r}")
        try:
            b = tuple(int(x) for x in m.group(1).split(","))
            c = tuple(int(x) for x in m.group(2).split(","))
        except ValueError:
            raise ArraySyntaxError(f"non-integer entry in {src!r}") from None
        arr = IntersectionArray(b, c)
    if validate:
        arr.validate()
    return arr


# --------------------------------------------------------------------------
# intersection numbers


class PTensor:
    """p^h_{ij} for all h, i, j, indexed ``p[h][i][j]``."""

    def __init__(self, arr: IntersectionArray):
        self.arr = arr
        d = arr.d
        a = arr.a
        # M[i] is multiplication by A_i in the basis A_0..A_d (column j = A_i A_j)
        m1 = [[Fraction(0)] * (d + 1) for _ in range(d + 1)]
        for j in range(d + 1):
            if j > 0:
                m1[j - 1][j] = Fraction(arr.b_(j - 1))
            m1[j][j] = Fraction(a[j])
            if j < d:
                m1[j + 1][j] = Fraction(arr.c_(j + 1))
        ident = [[Fraction(int(r == s)) for s in range(d + 1)] for r in range(d + 1)]
        mats = [ident, m1]
        for i in range(1, d):
            nxt = _matmul(m1, mats[i])
            for r in range(d + 1):
                for s in range(d + 1):
                    nxt[r][s] = (nxt[r][s] - arr.b_(i - 1) * mats[i - 1][r][s] - a[i] * mats[i][r][s]) / arr.c_(i + 1)
            mats.append(nxt)
        self._mats = mats
        self.p = [[[mats[i][h][j] for j in range(d + 1)] for i in range(d + 1)] for h in range(d + 1)]

    def __call__(self, h: int, i: int, j: int) -> Fraction:
        return self.p[h][i][j]

    @property
    def intersection_matrix(self):
        return self._mats[1]

    def problems(self) -> list[str]:
        out = []
        d = self.arr.d
        for h, i, j in itertools.product(range(d + 1), repeat=3):
            v = self.p[h][i][j]
            if v < 0:
                out.append(f"p^{h}_{{{i}{j}}} = {v} is negative")
            elif v.denominator != 1:
                out.append(f"p^{h}_{{{i}{j}}} = {v} is not an integer")
        return out

    def invariant_failures(self) -> list[str]:
        out = []
        d = self.arr.d
        ks = self.arr.valencies
        for h, i, j in itertools.product(range(d + 1), repeat=3):
            if self.p[h][i][j] != self.p[h][j][i]:
                out.append(f"p^{h}_{{{i}{j}}} != p^{h}_{{{j}{i}}}")
            if ks[h] * self.p[h][i][j] != ks[i] * self.p[i][h][j]:
                out.append(f"k_{h} p^{h}_{{{i}{j}}} != k_{i} p^{i}_{{{h}{j}}}")
            if abs(h - j) > 1 and self.p[h][1][j] != 0:
                out.append(f"p^{h}_{{1{j}}} != 0")
        for h, i in itertools.product(range(d + 1), repeat=2):
            if sum(self.p[h][i]) != ks[i]:
                out.append(f"sum_j p^{h}_{{{i}j}} != k_{i}")
        return out

    def closed_walks(self, s: int) -> Fraction:
        """Closed walks of length s at one vertex, (M_1^s)_{00}."""
        d = self.arr.d
        vec = [Fraction(int(r == 0)) for r in range(d + 1)]
        m1 = self._mats[1]
        for _ in range(s):
            vec = [sum(m1[r][t] * vec[t] for t in range(d + 1)) for r in range(d + 1)]
        return vec[0]


def _matmul(x, y):
    n, m, p = len(x), len(y), len(y[0])
    return [[sum(x[i][t] * y[t][j] for t in range(m)) for j in range(p)] for i in range(n)]


def intersection_numbers(arr: IntersectionArray) -> PTensor:
    return PTensor(arr)


# --------------------------------------------------------------------------
# spectrum


def characteristic_polynomial(arr: IntersectionArray) -> tuple[int, ...]:
    """det(xI - L) of the tridiagonal intersection matrix, via the continuant."""
    a = arr.a
    prev, cur = (1,), (-a[0], 1)
    for i in range(1, arr.d + 1):
        nxt = P.sub(P.mul((-a[i], 1), cur), P.scale(prev, arr.b_(i - 1) * arr.c_(i)))
        prev, cur = cur, nxt
    return tuple(int(x) for x in cur)


@dataclass
class Spectrum:
    eigenvalues: list[AlgebraicReal]  # descending
    system: NumberSystem
    theta: list[Element]
    cosines: list[list[Element]]  # cosines[i][u]
    multiplicities: list[Element]

    @property
    def d(self) -> int:
        return len(self.eigenvalues) - 1


def spectrum(arr: IntersectionArray) -> Spectrum:
    chi = characteristic_polynomial(arr)
    roots = real_roots(chi)
    roots.reverse()
    if len(roots) != arr.d + 1:
        raise InvalidArrayError(f"expected {arr.d + 1} distinct real eigenvalues, found {len(roots)}")
    system = NumberSystem(roots)
    theta = [system.gen(i) for i in range(len(roots))]
    k, n, ks = arr.k, arr.n, arr.valencies
    cosines, mults = [], []
    for i, th in enumerate(theta):
        sig = [system.const(1), th / k]
        for u in range(1, arr.d):
            sig.append((th * sig[u] - arr.c_(u) * sig[u - 1] - arr.a[u] * sig[u]) / arr.b_(u))
        cosines.append(sig)
        norm = sum((ks[u] * sig[u] * sig[u] for u in range(arr.d + 1)), system.const(0))
        mults.append(norm.inverse() * n)
    return Spectrum(roots, system, theta, cosines, mults)


# --------------------------------------------------------------------------
# eigenmatrices


@dataclass
class Eigenmatrices:
    P: list[list[Element]]  # P[i][u], idempotent i, relation u
    Q: list[list[Element]]  # Q[u][i]


def lagrange_dual_eigenmatrix(arr: IntersectionArray, spec: Spectrum) -> list[list[Element]]:
    """Q computed without cosines: E_i = chi(A)/((A - theta_i) chi'(theta_i)).

    The polynomial is applied to A_0 in the regular representation of the
    algebra spanned by A_0..A_d, where multiplication by A_1 acts tridiagonally.
    """
    d = arr.d
    chi = characteristic_polynomial(arr)
    dchi = P.deriv(chi)
    m1 = PTensor(arr).intersection_matrix
    n = arr.n
    q_cols = []
    for i, th in enumerate(spec.theta):
        # chi(x)/(x - th) by synthetic division, coefficients in Q(th)
        quot = [None] * (len(chi) - 1)
        acc = spec.system.const(0)
        for e in range(len(chi) - 1, 0, -1):
            acc = acc * th + chi[e]
            quot[e - 1] = acc
        denom = spec.system.univariate(i, dchi)
        # Horner on vectors: v = sum quot[e] * L^e e_0
        vec = [spec.system.const(0) for _ in range(d + 1)]
        for e in range(len(quot) - 1, -1, -1):
            vec = [sum((m1[r][t] * vec[t] for t in range(d + 1) if m1[r][t]), spec.system.const(0)) for r in range(d + 1)]
            vec[0] = vec[0] + quot[e]
        scale = denom.inverse() * n
        q_cols.append([v * scale for v in vec])
    return [[q_cols[i][u] for i in range(d + 1)] for u in range(d + 1)]


def distance_polynomial_eigenmatrix(arr: IntersectionArray, spec: Spectrum) -> list[list[Element]]:
    """P[i][u] = v_u(theta_i) from the distance polynomials of the array."""
    d = arr.d
    polys = [(Fraction(1),), (Fraction(0), Fraction(1))]
    for u in range(1, d):
        nxt = P.sub(P.mul((-arr.a[u], 1), polys[u]), P.scale(polys[u - 1], arr.b_(u - 1)))
        polys.append(P.scale(nxt, Fraction(1, arr.c_(u + 1))))
    return [[spec.system.univariate(i, polys[u]) for u in range(d + 1)] for i in range(d + 1)]


def eigenmatrices(spec: Spectrum, arr: IntersectionArray, check: bool = True) -> Eigenmatrices:
    d = arr.d
    ks = arr.valencies
    Pm = [[spec.cosines[i][u] * ks[u] for u in range(d + 1)] for i in range(d + 1)]
    Qm = [[spec.cosines[i][u] * spec.multiplicities[i] for i in range(d + 1)] for u in range(d + 1)]
    if check:
        n = arr.n
        for i, j in itertools.product(range(d + 1), repeat=2):
            s = sum((Pm[i][u] * Qm[u][j] for u in range(d + 1)), spec.system.const(0))
            if not (s - (n if i == j else 0)).is_zero():
                raise ArithmeticError(f"PQ != nI at ({i}, {j})")
        lag = lagrange_dual_eigenmatrix(arr, spec)
        for u, i in itertools.product(range(d + 1), repeat=2):
            if not (lag[u][i] - Qm[u][i]).is_zero():
                raise ArithmeticError(f"dual eigenmatrix routes disagree at Q[{u}][{i}]")
    return Eigenmatrices(Pm, Qm)


# --------------------------------------------------------------------------
# Krein parameters


class KreinTensor:
    """q^k_{ij} under an idempotent ordering; ``q(k, i, j)`` in ordered labels."""

    def __init__(self, base: "NaturalKrein", ordering: Sequence[int]):
        self.base = base
        self.ordering = tuple(ordering)

    def __call__(self, k: int, i: int, j: int) -> Element:
        o = self.ordering
        return self.base.value(o[k], o[i], o[j])

    def is_zero(self, k: int, i: int, j: int) -> bool:
        o = self.ordering
        return self.base.zero(o[k], o[i], o[j])

    @property
    def d(self) -> int:
        return len(self.ordering) - 1


class NaturalKrein:
    """Krein parameters in the natural (descending eigenvalue) ordering.

    T_{ijk} = sum_u k_u s_iu s_ju s_ku is symmetric, so only sorted triples are
    computed; q^k_{ij} = m_i m_j T_{ijk} / n. Zero flags are cached.
    """

    def __init__(self, arr: IntersectionArray, spec: Spectrum):
        self.arr = arr
        self.spec = spec
        self._t: dict = {}
        self._zero: dict = {}

    def triple(self, i, j, k) -> Element:
        key = tuple(sorted((i, j, k)))
        t = self._t.get(key)
        if t is None:
            ks = self.arr.valencies
            cos = self.spec.cosines
            a, b, c = key
            t = self.spec.system.const(0)
            for u in range(self.arr.d + 1):
                t = t + cos[a][u] * cos[b][u] * cos[c][u] * ks[u]
            self._t[key] = t
        return t

    def value(self, k, i, j) -> Element:
        m = self.spec.multiplicities
        return self.triple(i, j, k) * m[i] * m[j] / self.arr.n

    def zero(self, k, i, j) -> bool:
        key = tuple(sorted((i, j, k)))
        z = self._zero.get(key)
        if z is None:
            z = self.triple(*key).is_zero()
            self._zero[key] = z
        return z

    def sign(self, k, i, j) -> int:
        if self.zero(k, i, j):
            return 0
        m = self.spec.multiplicities
        return self.triple(i, j, k).sign() * m[i].sign() * m[j].sign()


def dual_route_krein(arr: IntersectionArray, spec: Spectrum) -> list:
    """q^k_{ij} = (1/n) sum_l Q_li Q_lj P_kl with Q from Lagrange interpolation and
    P from distance polynomials; indexed ``[k][i][j]``."""
    d = arr.d
    Q = lagrange_dual_eigenmatrix(arr, spec)
    Pm = distance_polynomial_eigenmatrix(arr, spec)
    n = arr.n
    zero = spec.system.const(0)
    return [
        [[sum((Q[l][i] * Q[l][j] * Pm[k][l] for l in range(d + 1)), zero) / n for j in range(d + 1)] for i in range(d + 1)]
        for k in range(d + 1)
    ]


def krein_parameters(spec: Spectrum, arr: IntersectionArray, ordering: Sequence[int] | None = None, check: bool = True, base: NaturalKrein | None = None) -> KreinTensor:
    """Krein tensor under ``ordering`` (default natural), cross-checked by two routes."""
    d = arr.d
    if ordering is None:
        ordering = tuple(range(d + 1))
    if sorted(ordering) != list(range(d + 1)) or ordering[0] != 0:
        raise ValueError("ordering must be a permutation of 0..d fixing 0")
    base = base or NaturalKrein(arr, spec)
    if check:
        dual = dual_route_krein(arr, spec)
        for k, i, j in itertools.product(range(d + 1), repeat=3):
            if j < i:
                continue
            if not (dual[k][i][j] - base.value(k, i, j)).is_zero():
                raise ArithmeticError(f"Krein routes disagree at q^{k}_{{{i}{j}}}")
    return KreinTensor(base, ordering)


# --------------------------------------------------------------------------
# scheme bundle and feasibility


class Scheme:
    """Lazily computed parameter system of one intersection array."""

    def __init__(self, arr):
        self.arr = parse_array(arr)

    @cached_property
    def ptensor(self) -> PTensor:
        return PTensor(self.arr)

    @cached_property
    def spectrum(self) -> Spectrum:
        return spectrum(self.arr)

    @cached_property
    def natural_krein(self) -> NaturalKrein:
        return NaturalKrein(self.arr, self.spectrum)

    @cached_property
    def krein(self) -> KreinTensor:
        return krein_parameters(self.spectrum, self.arr, base=self.natural_krein)

    @cached_property
    def eigenmatrices(self) -> Eigenmatrices:
        return eigenmatrices(self.spectrum, self.arr)

    def krein_under(self, ordering) -> KreinTensor:
        return KreinTensor(self.natural_krein, ordering)

    @property
    def d(self):
        return self.arr.d


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class FeasibilityReport:
    array: str
    checks: list[Check] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))


def feasibility_report(src) -> FeasibilityReport:
    """Run the formal feasibility conditions, accumulating failures."""
    arr = src if isinstance(src, IntersectionArray) else parse_array(src, validate=False)
    rep = FeasibilityReport(arr.text())
    probs = arr.problems()
    rep.add("array invariants", not probs, "; ".join(probs))
    if probs:
        return rep
    scheme = Scheme(arr)
    pt = scheme.ptensor
    probs = pt.problems()
    rep.add("intersection numbers nonnegative integers", not probs, "; ".join(probs[:3]))
    inv = pt.invariant_failures()
    rep.add("intersection number identities", not inv, "; ".join(inv[:3]))
    spec = scheme.spectrum
    d, k, n = arr.d, arr.k, arr.n
    bad = []
    for i, m in enumerate(spec.multiplicities):
        q = m.to_algebraic().as_rational()
        if q is None or q.denominator != 1 or q <= 0:
            bad.append(f"m_{i} = {m.to_algebraic().decimal(6) if q is None else q}")
    rep.add("multiplicities positive integers", not bad, "; ".join(bad))
    total = sum(spec.multiplicities, spec.system.const(0))
    rep.add("sum of multiplicities is n", (total - n).is_zero())
    rep.add("cosine recurrence", not cosine_recurrence_failures(arr, spec))
    fails = trace_moment_failures(arr, spec, pt)
    rep.add("trace moments s = 0..3", not fails, "; ".join(fails))
    if d >= 2:
        sg = cosine_sign_failures(spec)
        rep.add("cosine sign patterns", not sg, "; ".join(sg))
        eb = eigenvalue_bound_failures(arr, spec)
        rep.add("eigenvalue bounds", not eb, "; ".join(eb))
    neg = krein_negative(scheme)
    rep.add("Krein nonnegativity", not neg, "; ".join(neg[:3]))
    return rep


def cosine_recurrence_failures(arr: IntersectionArray, spec: Spectrum) -> list[str]:
    """c_i(s_{i-1} - s_i) - b_i(s_i - s_{i+1}) = k(s_1 - 1)s_i for i = 1..d."""
    out = []
    d, k = arr.d, arr.k
    for t, sig in enumerate(spec.cosines):
        if not (sig[1] * k - spec.theta[t]).is_zero():
            out.append(f"k s_1 != theta_{t}")
        for i in range(1, d + 1):
            nxt = sig[i + 1] if i < d else spec.system.const(0)
            lhs = (sig[i - 1] - sig[i]) * arr.c_(i) - (sig[i] - nxt) * arr.b_(i)
            if not (lhs - (sig[1] - 1) * sig[i] * k).is_zero():
                out.append(f"theta_{t}, i={i}")
    return out


def trace_moment_failures(arr, spec, pt, upto: int = 3) -> list[str]:
    out = []
    n = arr.n
    for s in range(upto + 1):
        tot = sum((spec.multiplicities[i] * spec.theta[i] ** s for i in range(arr.d + 1)), spec.system.const(0))
        if not (tot - n * pt.closed_walks(s)).is_zero():
            out.append(f"s={s}")
    return out


def cosine_sign_failures(spec: Spectrum) -> list[str]:
    out = []
    s1, sd = spec.cosines[1], spec.cosines[-1]
    for i in range(spec.d):
        if not s1[i] > s1[i + 1]:
            out.append(f"theta_1 cosines not decreasing at {i}")
    for i in range(spec.d + 1):
        if not sd[i] * (-1) ** i > 0:
            out.append(f"theta_d cosine sign at {i}")
    return out


def eigenvalue_bound_failures(arr: IntersectionArray, spec: Spectrum) -> list[str]:
    out = []
    th1, thd = spec.theta[1], spec.theta[-1]
    if not (0 < th1.sign() and th1 < arr.k):
        out.append("0 < theta_1 < k fails")
    if not (thd >= arr.a[1] - arr.k and thd < -1):
        out.append("a_1 - k <= theta_d < -1 fails")
    return out


def krein_negative(scheme: Scheme) -> list[str]:
    d = scheme.d
    nk = scheme.natural_krein
    out = []
    for k, i, j in itertools.product(range(d + 1), repeat=3):
        if i <= j and nk.sign(k, i, j) < 0:
            out.append(f"q^{k}_{{{i}{j}}} < 0")
    return out
