"""Full analysis of one array, rendered as JSON or text.

Exact values are serialized as ``{"minimal_polynomial": [c0, c1, ...],
"interval": ["lo", "hi"], "decimal": "...", "digits": n}``. The polynomial and
the rational isolating interval pin the number down; the decimal is advisory.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicReal, Element
from .algebraic.real import _coerce
from .harness import classify_theorem3, verify_twice_q_identities
from .scheme import IntersectionArray, Scheme, feasibility_report, parse_array
from .structures import (
    imprimitivity,
    is_antipodal,
    is_bipartite,
    p_structures,
    q_structures,
    schur_idempotent_pairs,
    suzuki_type,
    tightness,
)

DIGITS = 12


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def exact_value(x, digits: int = DIGITS) -> dict:
    a = x.to_algebraic() if isinstance(x, Element) else _coerce(x)
    q = a.as_rational()
    if q is not None:
        lo = hi = q
    else:
        a = a.refine_to(Fraction(1, 10 ** (digits + 1)))
        lo, hi = a.lo, a.hi
    return {
        "minimal_polynomial": [int(c) for c in a.minpoly],
        "interval": [_frac(lo), _frac(hi)],
        "decimal": a.decimal(digits),
        "digits": digits,
    }


def _ordering(o) -> list[int]:
    return [int(x) for x in o]


@dataclass
class AnalysisReport:
    data: dict

    @property
    def feasible(self) -> bool:
        return bool(self.data["feasibility"]["feasible"])

    @property
    def q_count(self) -> int | None:
        qs = self.data.get("q_structures")
        return None if qs is None else len(qs)

    def to_json(self) -> str:
        return json.dumps(self.data, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls(json.loads(text))

    def to_text(self) -> str:
        d = self.data
        out = [f"array {d['array']['text']}"]
        par = d.get("parameters")
        if par:
            out.append(f"  d = {par['d']}, k = {par['k']}, n = {par['n']}, a = {par['a']}")
        fe = d["feasibility"]
        out.append(f"feasible: {'yes' if fe['feasible'] else 'no'}")
        for c in fe["checks"]:
            mark = "ok  " if c["ok"] else "FAIL"
            out.append(f"  [{mark}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
        if "spectrum" in d:
            out.append("spectrum (eigenvalue, multiplicity):")
            for e in d["spectrum"]:
                ev, m = e["eigenvalue"], e["multiplicity"]
                poly = "" if len(ev["minimal_polynomial"]) <= 2 else f"   root of {ev['minimal_polynomial']}"
                out.append(f"  theta_{e['index']} = {ev['decimal']}  m = {m['decimal']}{poly}")
        if "q_structures" in d:
            out.append(f"Q-structures: {len(d['q_structures'])}")
            for s in d["q_structures"]:
                extra = f"  type {s['suzuki_type']}" if s.get("suzuki_type") else ""
                out.append(f"  {s['ordering']}{extra}")
            out.append(f"P-structures: {len(d['p_structures'])}")
            for s in d["p_structures"]:
                out.append(f"  {s['ordering']}")
        cl = d.get("classification")
        if cl:
            out.append("classification:")
            out.append(f"  bipartite {cl['bipartite']}, antipodal {cl['antipodal']}, tightness {cl['tightness']}")
            if cl.get("schur_pairs") is not None:
                out.append(f"  E_i o E_j proportional to one idempotent: {cl['schur_pairs']}")
            for s in cl.get("per_q_structure", []):
                on = sorted(k for k, v in s["flags"].items() if v and k.startswith(("dual", "almost")))
                out.append(f"  {s['ordering']}: {', '.join(on) or 'dual primitive'}")
        h = d.get("harness")
        if h:
            if "classification_list" in h:
                t = h["classification_list"]
                out.append(f"diameter-4 list membership: {t['label']}" + "".join(f"; {n}" for n in t["notes"]))
            if "twice_q_identities" in h:
                t = h["twice_q_identities"]
                if t["failed_hypotheses"]:
                    out.append(f"twice-Q identities: not applicable ({', '.join(t['failed_hypotheses'])})")
                else:
                    out.append("twice-Q identities:")
                    for r in t["identities"]:
                        out.append(f"  [{'ok  ' if r['holds'] else 'FAIL'}] {r['name']}" + ("" if r["holds"] else f" residual {r['residual']}"))
        return "\n".join(out) + "\n"


def analyze(src) -> AnalysisReport:
    """Run the whole pipeline on one array. Invariant violations stop after the feasibility block."""
    arr = src if isinstance(src, IntersectionArray) else parse_array(src, validate=False)
    data: dict = {"array": {"b": list(arr.b), "c": list(arr.c), "text": arr.text()}}
    fr = feasibility_report(arr)
    data["feasibility"] = {
        "feasible": fr.feasible,
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in fr.checks],
    }
    if arr.problems():
        return AnalysisReport(data)
    d, k = arr.d, arr.k
    data["parameters"] = {
        "d": d,
        "k": k,
        "n": _frac(arr.n),
        "a": list(arr.a),
        "valencies": [_frac(v) for v in arr.valencies],
    }
    scheme = Scheme(arr)
    spec = scheme.spectrum
    data["spectrum"] = [
        {"index": i, "eigenvalue": exact_value(spec.eigenvalues[i]), "multiplicity": exact_value(spec.multiplicities[i])}
        for i in range(d + 1)
    ]
    qs = q_structures(scheme)
    entries = []
    for t, s in enumerate(qs):
        e = {"ordering": _ordering(s.ordering)}
        if t and d in (4, 5):
            e["suzuki_type"] = suzuki_type(qs[0], s).label
        entries.append(e)
    data["q_structures"] = entries
    data["p_structures"] = [{"ordering": _ordering(s.ordering)} for s in p_structures(scheme.ptensor)]
    cl = {
        "bipartite": is_bipartite(arr),
        "antipodal": is_antipodal(arr),
        "tightness": str(tightness(scheme)) if d >= 3 else None,
        "schur_pairs": [[p.i, p.j, p.h] for p in schur_idempotent_pairs(scheme)] if d >= 3 else None,
        "per_q_structure": [
            {"ordering": _ordering(s.ordering), "flags": imprimitivity(scheme, s).flags()} for s in qs
        ],
    }
    data["classification"] = cl
    harness: dict = {}
    if d >= 4 and k >= 3:
        r = classify_theorem3(arr)
        harness["classification_list"] = {
            "label": r.label,
            "cases": [{"case": c, "params": p} for c, p in r.cases],
            "notes": r.notes,
        }
    if d == 4:
        tq = verify_twice_q_identities(arr)
        harness["twice_q_identities"] = {
            "failed_hypotheses": tq.failed_hypotheses,
            "identities": [
                {"name": i.name, "holds": i.holds, "residual": i.residual, "note": i.note} for i in tq.identities
            ],
        }
    if harness:
        data["harness"] = harness
    return AnalysisReport(data)
