"""Explicit graphs, brute-force distance-regularity, and exact spectral cross-checks."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np

from . import kernels
from .algebraic import poly as P
from .families import sylvester_hadamard
from .scheme import IntersectionArray, Spectrum

DEFAULT_MAX_VERTICES = 5000


class GraphTooLarge(ValueError):
    pass


def max_vertices() -> int:
    return int(os.environ.get("DRG_MAX_VERTICES", DEFAULT_MAX_VERTICES))


@dataclass
class GraphInstance:
    labels: list
    adjacency: np.ndarray  # symmetric bool, zero diagonal
    provenance: dict = field(default_factory=dict)
    _dist: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        a = self.adjacency
        if a.shape != (len(self.labels), len(self.labels)):
            raise ValueError("adjacency shape does not match labels")
        if not np.array_equal(a, a.T) or a.diagonal().any():
            raise ValueError("graph must be simple and undirected")

    @property
    def n(self) -> int:
        return len(self.labels)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def csr(self):
        rows, cols = np.nonzero(self.adjacency)
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.add.at(indptr, rows + 1, 1)
        return np.cumsum(indptr, dtype=np.int32), cols.astype(np.int32)

    def distances(self) -> np.ndarray:
        if self._dist is None:
            indptr, indices = self.csr()
            self._dist = kernels.all_distances(indptr, indices, self.n)
        return self._dist

    def is_connected(self) -> bool:
        return self.n == 0 or bool((self.distances()[0] >= 0).all())

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency))
        return list(zip(rows.tolist(), cols.tolist()))

    def edge_lines(self) -> str:
        """Edge list as ``u v`` lines (0-indexed)."""
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def with_edge(self, u: int, v: int) -> "GraphInstance":
        adj = self.adjacency.copy()
        adj[u, v] = adj[v, u] = True
        return GraphInstance(list(self.labels), adj, dict(self.provenance, added_edge=(u, v)))


def from_edges(labels: Sequence[Hashable], edges, provenance=None) -> GraphInstance:
    n = len(labels)
    if n > max_vertices():
        raise GraphTooLarge(f"{n} vertices exceeds the cap of {max_vertices()} (DRG_MAX_VERTICES)")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adj[u, v] = adj[v, u] = True
    return GraphInstance(list(labels), adj, provenance or {})


def _from_rule(labels, adjacent, provenance) -> GraphInstance:
    n = len(labels)
    if n > max_vertices():
        raise GraphTooLarge(f"{n} vertices exceeds the cap of {max_vertices()} (DRG_MAX_VERTICES)")
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if adjacent(labels[i], labels[j])]
    return from_edges(labels, edges, provenance)


def _check_size(n):
    if n > max_vertices():
        raise GraphTooLarge(f"{n} vertices exceeds the cap of {max_vertices()} (DRG_MAX_VERTICES)")


def hypercube(d: int) -> GraphInstance:
    _check_size(2**d)
    labels = list(range(2**d))
    edges = [(x, x ^ (1 << i)) for x in labels for i in range(d) if x < x ^ (1 << i)]
    return from_edges(labels, edges, {"kind": "hypercube", "d": d})


def halved_cube(n: int) -> GraphInstance:
    _check_size(2 ** (n - 1))
    labels = [x for x in range(2**n) if bin(x).count("1") % 2 == 0]
    pos = {x: i for i, x in enumerate(labels)}
    edges = set()
    for x in labels:
        for i, j in itertools.combinations(range(n), 2):
            y = x ^ (1 << i) ^ (1 << j)
            if x < y:
                edges.add((pos[x], pos[y]))
    return from_edges(labels, sorted(edges), {"kind": "halved_cube", "n": n})


def folded_cube(n: int) -> GraphInstance:
    """Quotient of the n-cube by antipodal pairs; representative has top bit clear."""
    _check_size(2 ** (n - 1))
    full = (1 << n) - 1
    labels = list(range(2 ** (n - 1)))

    def rep(x):
        return x if x < 2 ** (n - 1) else x ^ full

    edges = set()
    for x in labels:
        for i in range(n):
            y = rep(x ^ (1 << i))
            if x != y:
                edges.add((min(x, y), max(x, y)))
    return from_edges(labels, sorted(edges), {"kind": "folded_cube", "n": n})


def hadamard_graph(h) -> GraphInstance:
    """Vertices (side, index, sign) with side 'r' or 'c'; r_i^a ~ c_j^b iff H_ij = a*b."""
    h = np.asarray(h, dtype=np.int64)
    m = h.shape[0]
    _check_size(4 * m)
    labels = [(side, i, s) for side in ("r", "c") for i in range(m) for s in (1, -1)]
    pos = {lab: t for t, lab in enumerate(labels)}
    edges = []
    for i, j in itertools.product(range(m), repeat=2):
        for a, b in itertools.product((1, -1), repeat=2):
            if h[i, j] == a * b:
                edges.append((pos[("r", i, a)], pos[("c", j, b)]))
    return from_edges(labels, edges, {"kind": "hadamard", "order": m})


def cycle(n: int) -> GraphInstance:
    _check_size(n)
    return from_edges(list(range(n)), [(i, (i + 1) % n) for i in range(n)], {"kind": "cycle", "n": n})


def petersen() -> GraphInstance:
    labels = [frozenset(s) for s in itertools.combinations(range(5), 2)]
    return _from_rule(labels, lambda x, y: not (x & y), {"kind": "petersen"})


def johnson(n: int, e: int) -> GraphInstance:
    labels = [frozenset(s) for s in itertools.combinations(range(n), e)]
    _check_size(len(labels))
    return _from_rule(labels, lambda x, y: len(x & y) == e - 1, {"kind": "johnson", "n": n, "e": e})


def taylor_complement(k: int) -> GraphInstance:
    """Complement of the Cartesian product K_{k+1} x K_2: (i, s) ~ (j, t) iff i != j and s != t."""
    labels = [(i, s) for s in (0, 1) for i in range(k + 1)]
    return _from_rule(labels, lambda x, y: x[0] != y[0] and x[1] != y[1], {"kind": "taylor", "k": k})


_KINDS = {
    "hypercube": lambda p: hypercube(int(p["d"])),
    "halved_cube": lambda p: halved_cube(int(p["n"])),
    "folded_cube": lambda p: folded_cube(int(p["n"])),
    "hadamard": lambda p: hadamard_graph(sylvester_hadamard(int(p["k"]))),
    "cycle": lambda p: cycle(int(p["n"])),
    "petersen": lambda p: petersen(),
    "johnson": lambda p: johnson(int(p["n"]), int(p["e"])),
    "taylor": lambda p: taylor_complement(int(p["k"])),
}
GRAPH_KINDS = tuple(_KINDS)


def build_graph(kind: str, **params) -> GraphInstance:
    """Build a named graph. For ``hadamard``, ``k`` is the Sylvester exponent (order 2^k)."""
    if kind not in _KINDS:
        raise ValueError(f"unknown graph kind {kind!r}; choose from {', '.join(GRAPH_KINDS)}")
    return _KINDS[kind](params)


# --------------------------------------------------------------------------
# distance-regularity


@dataclass
class DRGResult:
    array: IntersectionArray | None
    witness: tuple | None = None  # (x, y, distance) where counts first disagree

    @property
    def is_drg(self) -> bool:
        return self.array is not None


def verify_drg(g: GraphInstance) -> DRGResult:
    """Measure c_h, a_h, b_h over every ordered pair; the array iff pair-independent."""
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    dist = g.distances()
    diam = int(dist.max())
    indptr, indices = g.csr()
    status, c, a, b, x, y = kernels.local_counts(dist, indptr, indices, diam)
    if status:
        return DRGResult(None, (int(x), int(y), int(dist[x, y])))
    if diam == 0:
        return DRGResult(None, None)
    arr = IntersectionArray(tuple(int(v) for v in b[:diam]), tuple(int(v) for v in c[1:]))
    return DRGResult(arr)


# --------------------------------------------------------------------------
# spectral cross-check


def _matrix_bound_ok(bound: int) -> bool:
    return bound < 2**62


def _poly_at_matrix(f, a, dtype):
    n = a.shape[0]
    out = np.zeros((n, n), dtype=dtype)
    eye = np.eye(n, dtype=np.int64).astype(dtype)
    for c in reversed(f):
        out = out @ a + int(c) * eye
    return out


@dataclass
class CrossCheck:
    annihilator: bool
    traces: bool
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.annihilator and self.traces


def spectrum_crosscheck(g: GraphInstance, spec: Spectrum, arr: IntersectionArray | None = None) -> CrossCheck:
    """prod_i (A - theta_i I) = 0 and tr(A^s) = sum_i m_i theta_i^s for s = 1..2d, exactly."""
    details = []
    k = int(g.degrees().max()) if g.n else 0
    # the eigenvalues are closed under conjugation, so the product is a product of minimal polynomials
    factors = []
    seen = []
    for th in spec.eigenvalues:
        if th.minpoly in seen:
            continue
        seen.append(th.minpoly)
        factors.append(th.minpoly)
    complete = True
    for f in factors:
        members = [t for t in spec.eigenvalues if t.minpoly == f]
        if len(members) != len(f) - 1:
            complete = False
    bound = 1
    for f in factors:
        bound *= sum(abs(c) * k**j for j, c in enumerate(f))
    dtype = np.int64 if _matrix_bound_ok(bound) else object
    a = g.adjacency.astype(np.int64).astype(dtype)
    if complete:
        prod = np.eye(g.n, dtype=np.int64).astype(dtype)
        for f in factors:
            prod = prod @ _poly_at_matrix(f, a, dtype)
        annihilator = not np.any(prod != 0)
    else:
        details.append("eigenvalue set not closed under conjugation")
        annihilator = False
    if not annihilator:
        details.append("prod (A - theta_i I) != 0")
    d = spec.d
    traces = True
    system = spec.system
    power = np.eye(g.n, dtype=np.int64).astype(object if not _matrix_bound_ok(k ** (2 * d) * max(g.n, 1)) else np.int64)
    a2 = g.adjacency.astype(np.int64).astype(power.dtype)
    if not (sum(spec.multiplicities, system.const(0)) - g.n).is_zero():
        details.append("sum of multiplicities differs from vertex count")
        traces = False
    for s in range(1, 2 * d + 1):
        power = power @ a2
        tr = int(np.trace(power))
        rhs = sum((spec.multiplicities[i] * spec.theta[i] ** s for i in range(d + 1)), system.const(0))
        if not (rhs - tr).is_zero():
            traces = False
            details.append(f"tr(A^{s}) = {tr} differs from the spectral moment")
            break
    return CrossCheck(annihilator, traces, details)
