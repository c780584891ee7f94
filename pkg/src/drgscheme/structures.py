"""P- and Q-polynomial structures, imprimitivity, tightness and Schur products."""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Sequence

from .algebraic import Element
from .scheme import KreinTensor, PTensor, Scheme


# --------------------------------------------------------------------------
# Q-polynomial structures


@dataclass
class RecurrenceFit:
    p: Element
    r: Element
    r_star: Element
    s_star: Element  # convention: theta_{l+1} theta_{l-1} = theta_l^2 - r* theta_l + s*


@dataclass
class QStructure:
    ordering: tuple[int, ...]
    krein: KreinTensor
    a_star: list[Element]
    b_star: list[Element]
    c_star: list[Element]
    k_star: list[Element]
    fit: RecurrenceFit | None = None

    @property
    def primary(self) -> int:
        return self.ordering[1]

    @property
    def d(self) -> int:
        return len(self.ordering) - 1


@dataclass
class PStructure:
    ordering: tuple[int, ...]
    a: list
    b: list
    c: list


def _is_q_ordering(nk, order) -> bool:
    d = len(order) - 1
    one = order[1]
    for i in range(d):
        if nk.zero(order[i + 1], one, order[i]):
            return False
    for i in range(d + 1):
        for k in range(i + 2, d + 1):
            if not nk.zero(order[k], one, order[i]):
                return False
    return True


def q_structures(scheme: Scheme, fit: bool = True) -> list[QStructure]:
    """Every idempotent ordering (fixing E_0) that is Q-polynomial, by brute force."""
    d = scheme.d
    nk = scheme.natural_krein
    out = []
    for perm in itertools.permutations(range(1, d + 1)):
        order = (0,) + perm
        if not _is_q_ordering(nk, order):
            continue
        kt = scheme.krein_under(order)
        zero = scheme.spectrum.system.const(0)
        qs = QStructure(
            order,
            kt,
            a_star=[kt(i, 1, i) for i in range(d + 1)],
            b_star=[kt(i, 1, i + 1) if i < d else zero for i in range(d + 1)],
            c_star=[kt(i, 1, i - 1) if i > 0 else zero for i in range(d + 1)],
            k_star=[kt(0, i, i) for i in range(d + 1)],
        )
        if fit and d >= 3:
            qs.fit = recurrence_fit(qs, scheme)
        out.append(qs)
    return out


def q_structure_failures(qs: QStructure, scheme: Scheme) -> list[str]:
    """Invariant audit of one structure (empty when all hold)."""
    out = []
    m = scheme.spectrum.multiplicities
    if not (qs.k_star[1] - m[qs.primary]).is_zero():
        out.append("k*_1 != m of primary idempotent")
    for i in range(qs.d + 1):
        if not (qs.a_star[i] + qs.b_star[i] + qs.c_star[i] - qs.k_star[1]).is_zero():
            out.append(f"a*_{i} + b*_{i} + c*_{i} != k*_1")
    return out


def p_structures(pt: PTensor) -> list[PStructure]:
    """All relation orderings under which the scheme is a path (P-polynomial)."""
    d = pt.arr.d
    out = []
    for perm in itertools.permutations(range(1, d + 1)):
        o = (0,) + perm
        one = o[1]
        ok = all(pt(o[i + 1], one, o[i]) != 0 for i in range(d))
        ok = ok and all(pt(o[k], one, o[i]) == 0 for i in range(d + 1) for k in range(i + 2, d + 1))
        if ok:
            out.append(
                PStructure(
                    o,
                    a=[pt(o[i], one, o[i]) for i in range(d + 1)],
                    b=[pt(o[i], one, o[i + 1]) if i < d else 0 for i in range(d + 1)],
                    c=[pt(o[i], one, o[i - 1]) if i > 0 else 0 for i in range(d + 1)],
                )
            )
    return out


# --------------------------------------------------------------------------
# second-structure patterns


def _streams(label: str, d: int):
    if label == "I":
        return list(range(2, d + 1, 2)), list(range(1, d + 1, 2))
    if label == "II":
        front = []
        for t in range(d):
            front += [d - t, 1 + t]
        return front, []
    if label == "III":
        front, back = [], []
        for t in range(0, d + 1, 2):
            front += [d - t, t + 2]
            back += [t + 1, d - t - 1]
        return front, back
    if label == "IV":
        front, back = [], []
        for t in range(0, d + 1, 2):
            front += [d - 1 - t, t + 2]
            back += [d - t, t + 1]
        return front, back
    raise ValueError(label)


def _clean(xs, d):
    seen, out = set(), []
    for x in xs:
        if 1 <= x <= d and x not in seen:
            seen.add(x)
            out.append(x)
    return out


def suzuki_patterns(d: int) -> dict[str, set[tuple[int, ...]]]:
    """Instantiated candidate orderings per type, relative to a reference E_0..E_d.

    Each pattern reads a front stream forward and a back stream from the end;
    every split point giving a permutation of 1..d is accepted, which is how the
    overlapping middles at small d are resolved.
    """
    pats: dict[str, set] = {}
    full = set(range(1, d + 1))
    for label in ("I", "II", "III", "IV"):
        front, back = (_clean(s, d) for s in _streams(label, d))
        found = set()
        for split in range(d + 1):
            cand = front[:split] + list(reversed(back[: d - split]))
            if len(cand) == d and set(cand) == full:
                found.add((0,) + tuple(cand))
        pats[label] = found
    pats["V"] = {(0, 5, 3, 2, 4, 1)} if d == 5 else set()
    return pats


@dataclass
class SuzukiMatch:
    relative: tuple[int, ...]
    labels: tuple[str, ...]

    @property
    def label(self) -> str:
        return self.labels[0] if self.labels else "none"

    @property
    def eliminated(self) -> bool:
        # type V is known not to occur
        return self.labels == ("V",)


def suzuki_type(s1, s2, d: int | None = None) -> SuzukiMatch:
    """Match s2's ordering, written in s1's labels, against the candidate types.

    Accepts QStructure objects or raw orderings.
    """
    o1 = tuple(getattr(s1, "ordering", s1))
    o2 = tuple(getattr(s2, "ordering", s2))
    d = d if d is not None else len(o1) - 1
    rel = tuple(o1.index(x) for x in o2)
    labels = tuple(lab for lab, pats in suzuki_patterns(d).items() if rel in pats)
    return SuzukiMatch(rel, labels)


# --------------------------------------------------------------------------
# imprimitivity and tightness


@dataclass
class ClassificationReport:
    bipartite: bool
    antipodal: bool
    dual_bipartite: bool | None = None
    dual_antipodal: bool | None = None
    almost_dual_bipartite: bool | None = None
    almost_dual_antipodal: bool | None = None
    tight: bool | None = None
    schur_closed_subsets: list[tuple[int, ...]] = field(default_factory=list)

    def flags(self) -> dict:
        return {
            "bipartite": self.bipartite,
            "antipodal": self.antipodal,
            "dual_bipartite": self.dual_bipartite,
            "dual_antipodal": self.dual_antipodal,
            "almost_dual_bipartite": self.almost_dual_bipartite,
            "almost_dual_antipodal": self.almost_dual_antipodal,
            "tight": self.tight,
        }


def is_bipartite(arr) -> bool:
    return all(x == 0 for x in arr.a)


def is_antipodal(arr) -> bool:
    d = arr.d
    return all(arr.b_(i) == arr.c_(d - i) for i in range(d + 1) if i != d // 2)


def schur_closed_subsets(scheme: Scheme, ordering: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """All T containing 0 whose idempotents span a Schur-closed subspace (in ordering labels)."""
    d = scheme.d
    o = tuple(ordering) if ordering is not None else tuple(range(d + 1))
    nk = scheme.natural_krein
    out = []
    for r in range(d + 1):
        for rest in itertools.combinations(range(1, d + 1), r):
            t = (0,) + rest
            ts = set(t)
            closed = all(
                k in ts
                for i in t
                for j in t
                for k in range(d + 1)
                if not nk.zero(o[k], o[i], o[j])
            )
            if closed:
                out.append(t)
    return out


def imprimitivity(scheme: Scheme, qs: QStructure | None = None) -> ClassificationReport:
    arr = scheme.arr
    d = arr.d
    rep = ClassificationReport(is_bipartite(arr), is_antipodal(arr))
    if d >= 3:
        rep.tight = tightness(scheme).tight
    if qs is None:
        rep.schur_closed_subsets = schur_closed_subsets(scheme)
        return rep
    a, b, c = qs.a_star, qs.b_star, qs.c_star
    rep.dual_bipartite = all(x.is_zero() for x in a)
    rep.dual_antipodal = all((c[i] - b[d - i]).is_zero() for i in range(d + 1) if i != d // 2)
    rep.almost_dual_bipartite = all(x.is_zero() for x in a[:d]) and not a[d].is_zero()
    kt = qs.krein
    rep.almost_dual_antipodal = (not kt.is_zero(d, 1, d)) and all(kt.is_zero(d, i, d) for i in range(2, d + 1))
    rep.schur_closed_subsets = schur_closed_subsets(scheme, qs.ordering)
    return rep


@dataclass
class Tightness:
    tight: bool
    reason: str = ""

    def __str__(self):
        return "tight" if self.tight else f"not_tight({self.reason})"


def tight_residual(scheme: Scheme) -> Element:
    """(t1 + k/(a1+1))(td + k/(a1+1)) + k a1 b1/(a1+1)^2, zero exactly at equality."""
    arr = scheme.arr
    k, a1, b1 = arr.k, arr.a[1], arr.b[1]
    th = scheme.spectrum.theta
    s = Fraction(k, a1 + 1)
    return (th[1] + s) * (th[-1] + s) + s * s * a1 * b1 / k


def tightness(scheme: Scheme) -> Tightness:
    arr = scheme.arr
    if arr.d < 3:
        raise ValueError("tightness is defined here for diameter at least 3")
    if is_bipartite(arr):
        return Tightness(False, "bipartite")
    if tight_residual(scheme).is_zero():
        return Tightness(True)
    return Tightness(False, "bound not attained")


# --------------------------------------------------------------------------
# Schur products that are multiples of one idempotent


@dataclass
class SchurPair:
    i: int
    j: int
    h: int
    scalar: Element
    scalar_ok: bool


def schur_idempotent_pairs(scheme: Scheme) -> list[SchurPair]:
    """Pairs 1 <= i <= j <= d with E_i o E_j a multiple of a single E_h (natural labels)."""
    d = scheme.d
    nk = scheme.natural_krein
    m = scheme.spectrum.multiplicities
    n = scheme.arr.n
    out = []
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            hs = [h for h in range(d + 1) if not nk.zero(h, i, j)]
            if len(hs) != 1:
                continue
            h = hs[0]
            scalar = nk.value(h, i, j) / n
            expected = m[i] * m[j] / (m[h] * n)
            out.append(SchurPair(i, j, h, scalar, (scalar - expected).is_zero()))
    return out


def trichotomy_failures(scheme: Scheme) -> list[str]:
    """Compare Schur pairs with the tight / bipartite / neither prediction."""
    d = scheme.d
    if d < 3:
        return []
    pairs = schur_idempotent_pairs(scheme)
    got = {(p.i, p.j) for p in pairs}
    out = [f"scalar wrong for ({p.i},{p.j})" for p in pairs if not p.scalar_ok]
    if is_bipartite(scheme.arr):
        want = {(i, d) for i in range(1, d + 1)}
    elif tightness(scheme).tight:
        want = {(1, d)}
    else:
        want = set()
    if got != want:
        out.append(f"pairs {sorted(got)} but expected {sorted(want)}")
    return out


# --------------------------------------------------------------------------
# recurrence fit


def recurrence_fit(qs: QStructure, scheme: Scheme) -> RecurrenceFit | None:
    """p, r from the Q-sequence; r*, s* from the eigenvalues in the structure's order.

    Returns None when any of the overdetermined equations fails.
    """
    d = scheme.d
    if d < 3:
        return None
    sig = scheme.spectrum.cosines[qs.primary]
    den = sig[1] - sig[2]
    if den.is_zero():
        return None
    p = (sig[2] + sig[0] - sig[3] - sig[1]) / den
    r = sig[2] + sig[0] - p * sig[1]
    for i in range(1, d):
        if not (sig[i + 1] + sig[i - 1] - p * sig[i] - r).is_zero():
            return None
    th = [scheme.spectrum.theta[x] for x in qs.ordering]
    r_star = th[2] + th[0] - p * th[1]
    for ell in range(1, d):
        if not (th[ell + 1] + th[ell - 1] - p * th[ell] - r_star).is_zero():
            return None
    s_star = th[2] * th[0] - th[1] * th[1] + r_star * th[1]
    for ell in range(1, d):
        if not (th[ell + 1] * th[ell - 1] - th[ell] * th[ell] + r_star * th[ell] - s_star).is_zero():
            return None
    return RecurrenceFit(p, r, r_star, s_star)


# --------------------------------------------------------------------------
# implication checks


def dual_vanishing_failures(qs: QStructure) -> list[str]:
    """q^1_11 = 0 forces every a*_i (i < d) to vanish; q^1_11 != 0 forces none to."""
    d = qs.d
    zero1 = qs.a_star[1].is_zero()
    out = []
    for i in range(1, d):
        if qs.a_star[i].is_zero() != zero1:
            out.append(f"a*_{i} zero={not zero1} against a*_1 zero={zero1}")
    return out


def p_vanishing_failures(pt: PTensor) -> list[str]:
    """p^1_11 != 0 forces p^i_1i != 0 for i < d."""
    d = pt.arr.d
    if pt(1, 1, 1) == 0:
        return []
    return [f"p^{i}_1{i} = 0" for i in range(1, d) if pt(i, 1, i) == 0]
