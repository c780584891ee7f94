"""Command-line entry point: ``drgscheme {analyze,family,build-graph,verify,catalog}``.

Exit codes: 0 success, 1 a check failed (infeasible array, count mismatch,
suite failure), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import families, oracle
from .catalog import builtin_catalog, read_catalog, write_catalog
from .harness import classify_theorem3, forced_parameters, refute_selfdual_family, verify_twice_q_identities
from .report import analyze
from .scheme import ArraySyntaxError, Scheme, parse_array, spectrum
from .structures import p_structures, q_structures

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def int_range(text: str) -> list[int]:
    """Parse ``2..5``, ``2,3`` or mixtures such as ``2..4,7``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def _line(ok: bool | None, label: str, detail: str = "") -> str:
    tag = {True: "PASS", False: "FAIL", None: "SKIP"}[ok]
    return f"{tag}  {label}" + (f"  ({detail})" if detail else "")


# --------------------------------------------------------------------------
# analyze / family / build-graph


def cmd_analyze(args) -> int:
    try:
        arr = parse_array(args.array, validate=False)
    except ArraySyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = analyze(arr)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    code = EXIT_OK if rep.feasible else EXIT_FAIL
    if args.expect_q is not None and rep.q_count != args.expect_q:
        print(f"expected {args.expect_q} Q-structures, found {rep.q_count}", file=sys.stderr)
        code = EXIT_FAIL
    return code


_FAMILY_PARAMS = ("d", "n", "q", "gamma", "mu", "k", "a1", "e")


def cmd_family(args) -> int:
    params = {p: getattr(args, p) for p in _FAMILY_PARAMS if getattr(args, p) is not None}
    try:
        arr = families.family_array(args.name, **params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps({"family": args.name, "params": params, "b": list(arr.b), "c": list(arr.c)}, sort_keys=True))
    else:
        print(arr.text())
    return EXIT_OK


def cmd_build_graph(args) -> int:
    params = {p: getattr(args, p) for p in ("d", "n", "k", "e") if getattr(args, p) is not None}
    try:
        g = oracle.build_graph(args.kind, **params)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.check:
        sys.stdout.write(g.edge_lines())
        return EXIT_OK
    res = oracle.verify_drg(g)
    if not res.is_drg:
        print(f"not distance-regular; witness {res.witness}")
        return EXIT_FAIL
    cc = oracle.spectrum_crosscheck(g, spectrum(res.array), res.array)
    print(f"{g.n} vertices, intersection array {res.array}")
    print(_line(cc.ok, "spectral cross-check", "; ".join(cc.details)))
    return EXIT_OK if cc.ok else EXIT_FAIL


# --------------------------------------------------------------------------
# verify suites


def _suite_thm3(args) -> list[bool | None]:
    results = []
    cases = []
    for d in args.d:
        if d % 2 == 0:
            cases.append((f"H({d},2)", families.hamming(d), 2))
        cases.append((f"halved {2 * d + 1}-cube", families.halved_cube(2 * d + 1), 2))
        cases.append((f"folded {2 * d + 1}-cube", families.folded_cube(2 * d + 1), 2))
        for q in args.q:
            cases.append((f"dual polar 2A_{2 * d - 1}({q})", families.dual_polar_2A(d, q), 2))
        if d == 4:
            for g in args.gamma:
                cases.append((f"Hadamard gamma={g}", families.hadamard(g), 2))
            cases.append(("control J(8,4)", families.johnson(8, 4), 1))
            cases.append(("control H(5,2)", families.hamming(5), 1))
    for label, arr, want in cases:
        if arr.k < 3:
            print(_line(None, label, f"{arr} has valency {arr.k} < 3"))
            results.append(None)
            continue
        t = time.perf_counter()
        got = len(q_structures(Scheme(arr), fit=False))
        extra = ""
        if arr.d >= 4:
            extra = f", list case {classify_theorem3(arr, count=False).label}"
        ok = got == want
        print(_line(ok, label, f"{arr}: {got} Q-structures, expected {want}{extra}, {time.perf_counter() - t:.2f}s"))
        results.append(ok)
    return results


def _suite_selfdual(args) -> list[bool | None]:
    results = []
    for mu in args.mu:
        rep = refute_selfdual_family(mu)
        detail = f"{rep.array}: " + "; ".join(rep.notes)
        print(_line(rep.refuted, f"self-dual mu={mu} refuted", detail))
        results.append(rep.refuted)
    return results


def _suite_identities(args) -> list[bool | None]:
    results = []
    for mu in args.mu:
        rep = verify_twice_q_identities(families.selfdual(mu))
        if not rep.applicable:
            print(_line(False, f"self-dual mu={mu}", "hypotheses fail: " + ", ".join(rep.failed_hypotheses)))
            results.append(False)
            continue
        for r in rep.identities:
            print(_line(r.holds, f"self-dual mu={mu}: {r.name}", "" if r.holds else f"residual {r.residual}"))
            results.append(r.holds)
    for t2 in args.theta2:
        cand = forced_parameters(t2)
        for r in cand.identities:
            print(_line(r.holds, f"theta2={t2}: {r.name}", "" if r.holds else f"residual {r.residual}"))
            results.append(r.holds)
    return results


def _suite_oracle(args) -> list[bool | None]:
    cases = [(f"hypercube d={d}", ("hypercube", {"d": d}), families.hamming(d)) for d in args.d]
    for n in args.n:
        cases.append((f"halved {n}-cube", ("halved_cube", {"n": n}), families.halved_cube(n)))
        cases.append((f"folded {n}-cube", ("folded_cube", {"n": n}), families.folded_cube(n)))
    for k in args.k:
        order = 2**k
        cases.append((f"Hadamard graph, Sylvester order {order}", ("hadamard", {"k": k}), families.hadamard(order // 2)))
    results = []
    for label, (kind, params), want in cases:
        t = time.perf_counter()
        g = oracle.build_graph(kind, **params)
        res = oracle.verify_drg(g)
        if not res.is_drg:
            print(_line(False, label, f"not distance-regular, witness {res.witness}"))
            results.append(False)
            continue
        cc = oracle.spectrum_crosscheck(g, spectrum(res.array), res.array)
        ok = res.array == want and cc.ok
        detail = f"{g.n} vertices, measured {res.array}, expected {want}"
        if not cc.ok:
            detail += "; " + "; ".join(cc.details)
        print(_line(ok, label, f"{detail}, {time.perf_counter() - t:.2f}s"))
        results.append(ok)
    return results


def _suite_ngon(args) -> list[bool | None]:
    results = []
    for n in args.n:
        arr = families.polygon(n)
        got = len(q_structures(Scheme(arr), fit=False))
        ok = got <= 2 if n < 7 else got >= 3
        want = "<= 2" if n < 7 else ">= 3"
        print(_line(ok, f"C{n}", f"{arr}: {got} Q-structures, expected {want}"))
        results.append(ok)
    return results


SUITES = {
    "thm3": _suite_thm3,
    "selfdual": _suite_selfdual,
    "identities": _suite_identities,
    "oracle": _suite_oracle,
    "ngon": _suite_ngon,
}

# per-suite defaults for the shared range flags
_DEFAULTS = {
    "thm3": {"d": [4], "q": [2, 3], "gamma": [2, 4]},
    "selfdual": {"mu": [2, 3, 4, 5]},
    "identities": {"mu": [2, 3, 4, 5], "theta2": list(range(2, 11))},
    "oracle": {"d": [2, 3, 4, 5], "n": [5], "k": [2, 3]},
    "ngon": {"n": [4, 5, 6, 7, 8]},
}


def cmd_verify(args) -> int:
    for name, default in _DEFAULTS[args.suite].items():
        if getattr(args, name) is None:
            setattr(args, name, default)
    for name in ("d", "q", "gamma", "mu", "n", "k", "theta2"):
        if getattr(args, name) is None:
            setattr(args, name, [])
    results = SUITES[args.suite](args)
    failed = sum(1 for r in results if r is False)
    passed = sum(1 for r in results if r is True)
    print(f"{args.suite}: {passed} passed, {failed} failed, {len(results) - passed - failed} skipped")
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------------------
# catalog


def _observe(entry) -> dict:
    arr = entry.parsed()
    scheme = Scheme(arr)
    rep = analyze(arr)
    got = {
        "feasible": rep.feasible,
        "q_structures": rep.q_count,
        "p_structures": len(p_structures(scheme.ptensor)),
        "bipartite": rep.data["classification"]["bipartite"],
        "antipodal": rep.data["classification"]["antipodal"],
    }
    tight = rep.data["classification"]["tightness"]
    got["tight"] = None if tight is None else tight == "tight"
    return got


def cmd_catalog(args) -> int:
    if args.dump:
        write_catalog(builtin_catalog(), sys.stdout)
        return EXIT_OK
    try:
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                entries = list(read_catalog(fh))
        else:
            entries = builtin_catalog()
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bad = 0
    for e in entries:
        got = _observe(e)
        mismatches = {k: {"expected": v, "observed": got.get(k)} for k, v in e.expect.items() if k in got and got[k] != v}
        bad += bool(mismatches)
        print(json.dumps({"name": e.name, "array": e.array, "ok": not mismatches, "observed": got, "mismatches": mismatches}, sort_keys=True))
    return EXIT_FAIL if bad else EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="drgscheme", description="Exact parameter analysis of distance-regular graph intersection arrays.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis of one intersection array")
    p.add_argument("array", help='e.g. "4,3,2,1;1,2,3,4" or "{4,3,2,1;1,2,3,4}"')
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--expect-q", type=int, default=None, metavar="N", help="fail unless exactly N Q-structures")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="print the intersection array of a named family")
    p.add_argument("name", choices=families.FAMILIES)
    for name in _FAMILY_PARAMS:
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("build-graph", help="emit an explicit graph as 'u v' edge lines")
    p.add_argument("kind", choices=oracle.GRAPH_KINDS)
    for name in ("d", "n", "k", "e"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--check", action="store_true", help="verify distance-regularity and the spectrum instead of printing edges")
    p.set_defaults(func=cmd_build_graph)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=tuple(SUITES))
    for name in ("d", "q", "gamma", "mu", "n", "k", "theta2"):
        p.add_argument(f"--{name}", type=int_range, default=None, metavar="RANGE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="check a JSON-lines catalog (default: the built-in one)")
    p.add_argument("file", nargs="?")
    p.add_argument("--dump", action="store_true", help="print the built-in catalog as JSON lines")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except oracle.GraphTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
