"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (the lines are repeated in the terminal summary) or as a
script: ``python3 tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from drgscheme import families, oracle
from drgscheme.catalog import builtin_catalog
from drgscheme.harness import CORE_IDENTITIES, forced_parameters, refute_selfdual_family, verify_twice_q_identities
from drgscheme.scheme import (
    Scheme,
    cosine_recurrence_failures,
    cosine_sign_failures,
    eigenmatrices,
    eigenvalue_bound_failures,
    krein_negative,
    spectrum,
)
from drgscheme.structures import (
    dual_vanishing_failures,
    p_vanishing_failures,
    q_structure_failures,
    q_structures,
    trichotomy_failures,
)

# wall-clock limits in seconds, pinned
LIMIT_THM3 = 60.0
LIMIT_SELFDUAL = 10.0
LIMIT_ORACLE = 30.0
LIMIT_NGON = 10.0

LINES: list[str] = []


def _record(num, title, ok, detail, elapsed):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title} ({elapsed:.2f}s) {detail}".rstrip()
    LINES.append(line)
    print(line)
    return ok


def _nq(arr):
    return len(q_structures(Scheme(arr), fit=False))


# --------------------------------------------------------------------------


def criterion_1():
    cases = [
        ("H(4,2)", families.hamming(4), 2),
        ("halved 9-cube", families.halved_cube(9), 2),
        ("folded 9-cube", families.folded_cube(9), 2),
        ("2A7(2)", families.dual_polar_2A(4, 2), 2),
        ("2A7(3)", families.dual_polar_2A(4, 3), 2),
        ("Hadamard gamma=2", families.hadamard(2), 2),
        ("Hadamard gamma=4", families.hadamard(4), 2),
        ("J(8,4)", families.johnson(8, 4), 1),
        ("H(5,2)", families.hamming(5), 1),
    ]
    t = time.perf_counter()
    bad = []
    for name, arr, want in cases:
        got = _nq(arr)
        if got != want:
            bad.append(f"{name}: {got} != {want}")
    el = time.perf_counter() - t
    ok = not bad and el < LIMIT_THM3
    return _record(1, "two Q-structures on the d=4 list, one on controls", ok, "; ".join(bad) or f"{len(cases)} arrays", el)


def criterion_2():
    t = time.perf_counter()
    bad = []
    for mu in range(2, 6):
        rep = refute_selfdual_family(mu)
        checks = {
            "feasible": rep.feasible,
            "2 P-structures": rep.p_structures == 2,
            "2 Q-structures": rep.q_structures == 2,
            "tight": rep.tight,
            "theta1 irrational": rep.theta1_irrational,
            "theta4 irrational": rep.theta4_irrational,
            "a1 != (k-1)/2": not rep.conference_condition,
        }
        bad += [f"mu={mu}: {k}" for k, v in checks.items() if not v]
    el = time.perf_counter() - t
    ok = not bad and el < LIMIT_SELFDUAL
    return _record(2, "self-dual family mu=2..5 refuted", ok, "; ".join(bad) or "4 arrays", el)


def criterion_3():
    t = time.perf_counter()
    bad = []
    for mu in range(2, 6):
        rep = verify_twice_q_identities(families.selfdual(mu))
        if not rep.applicable:
            bad.append(f"mu={mu}: hypotheses " + ", ".join(rep.failed_hypotheses))
            continue
        names = [r.name for r in rep.identities]
        for name in CORE_IDENTITIES:
            if name not in names:
                bad.append(f"mu={mu}: {name} missing")
        bad += [f"mu={mu}: {r.name} residual {r.residual}" for r in rep.identities if not r.holds]
    for t2 in range(2, 11):
        cand = forced_parameters(t2, complete=False)
        bad += [f"theta2={t2}: {r.name}" for r in cand.identities if not r.holds]
    el = time.perf_counter() - t
    return _record(3, "twice-Q identities exact", not bad, "; ".join(bad) or "all residuals zero", el)


def criterion_4():
    cases = [(("hypercube", {"d": d}), families.hamming(d)) for d in range(1, 6)]
    cases += [
        (("halved_cube", {"n": 5}), families.halved_cube(5)),
        (("folded_cube", {"n": 5}), families.folded_cube(5)),
        (("hadamard", {"k": 2}), families.hadamard(2)),
        (("hadamard", {"k": 3}), families.hadamard(4)),
    ]
    t = time.perf_counter()
    bad = []
    for (kind, params), want in cases:
        g = oracle.build_graph(kind, **params)
        res = oracle.verify_drg(g)
        tag = f"{kind}{params}"
        if not res.is_drg or res.array != want:
            bad.append(f"{tag}: measured {res.array}")
            continue
        cc = oracle.spectrum_crosscheck(g, spectrum(want), want)
        if not (cc.annihilator and cc.traces):
            bad.append(f"{tag}: " + "; ".join(cc.details))
    el = time.perf_counter() - t
    ok = not bad and el < LIMIT_ORACLE
    return _record(4, "oracle graphs certified, spectra cross-checked", ok, "; ".join(bad) or f"{len(cases)} graphs", el)


def _three_term_failures(arr, spec):
    """c_i s_{i-1} + a_i s_i + b_i s_{i+1} = theta s_i, with s_0 = 1 and s_{d+1} = 0."""
    out = []
    d = arr.d
    zero = spec.system.const(0)
    for t, sig in enumerate(spec.cosines):
        if not (sig[0] - 1).is_zero():
            out.append(f"theta_{t}: s_0 != 1")
        for i in range(d + 1):
            prev = sig[i - 1] if i > 0 else zero
            nxt = sig[i + 1] if i < d else zero
            lhs = prev * arr.c_(i) + sig[i] * arr.a[i] + nxt * arr.b_(i)
            if not (lhs - spec.theta[t] * sig[i]).is_zero():
                out.append(f"three-term theta_{t}, i={i}")
    return out


def criterion_5():
    t = time.perf_counter()
    entries = builtin_catalog()
    bad = []
    for e in entries:
        arr = e.parsed()
        s = Scheme(arr)
        sp = s.spectrum
        f = []
        two = _three_term_failures(arr, sp)
        three = cosine_recurrence_failures(arr, sp)
        if bool(two) != bool(three):
            f.append("cosine forms disagree")
        f += two + three
        f += cosine_sign_failures(sp)
        f += eigenvalue_bound_failures(arr, sp)
        f += krein_negative(s)
        try:
            eigenmatrices(sp, arr, check=True)
        except ArithmeticError as exc:
            f.append(str(exc))
        f += trichotomy_failures(s)
        for q in q_structures(s, fit=False):
            f += dual_vanishing_failures(q)
            f += q_structure_failures(q, s)
        f += p_vanishing_failures(s.ptensor)
        bad += [f"{e.name}: {x}" for x in f]
    el = time.perf_counter() - t
    ok = not bad and len(entries) >= 20
    return _record(5, f"property regression over {len(entries)} catalog arrays", ok, "; ".join(bad[:10]), el)


def criterion_6():
    t = time.perf_counter()
    counts = {n: _nq(families.polygon(n)) for n in range(4, 9)}
    bad = [f"C{n}: {c}" for n, c in counts.items() if (c > 2 if n < 7 else c < 3)]
    el = time.perf_counter() - t
    ok = not bad and el < LIMIT_NGON
    detail = ", ".join(f"C{n}={c}" for n, c in counts.items())
    if bad:
        detail += "; violates: " + ", ".join(bad)
    return _record(6, "polygon Q-structure counts", ok, detail, el)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6]


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 7)])
def test_criterion(crit):
    assert crit()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
