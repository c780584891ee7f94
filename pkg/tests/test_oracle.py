import os
import subprocess
import sys

import numpy as np
import pytest

from drgscheme import _kernels_py, kernels, oracle
from drgscheme.families import folded_cube, hadamard, halved_cube, hamming, johnson, taylor
from drgscheme.scheme import spectrum

try:
    from drgscheme import _kernels
except ImportError:  # extension not built
    _kernels = None


def test_build_examples():
    g = oracle.build_graph("hypercube", d=4)
    assert g.n == 16 and set(g.degrees().tolist()) == {4}
    g = oracle.build_graph("hadamard", k=3)
    assert g.n == 32 and set(g.degrees().tolist()) == {8}
    # bipartite: rows only meet columns
    sides = np.array([lab[0] == "r" for lab in g.labels])
    assert not g.adjacency[np.ix_(sides, sides)].any() and not g.adjacency[np.ix_(~sides, ~sides)].any()
    g = oracle.build_graph("folded_cube", n=5)
    assert g.n == 16 and set(g.degrees().tolist()) == {5}


@pytest.mark.parametrize(
    "kind, params, want",
    [
        ("hypercube", {"d": 4}, hamming(4)),
        ("hypercube", {"d": 5}, hamming(5)),
        ("halved_cube", {"n": 5}, halved_cube(5)),
        ("folded_cube", {"n": 5}, folded_cube(5)),
        ("folded_cube", {"n": 6}, folded_cube(6)),
        ("hadamard", {"k": 2}, hadamard(2)),
        ("hadamard", {"k": 3}, hadamard(4)),
        ("johnson", {"n": 8, "e": 4}, johnson(8, 4)),
    ],
)
def test_measured_arrays(kind, params, want):
    g = oracle.build_graph(kind, **params)
    res = oracle.verify_drg(g)
    assert res.is_drg and res.array == want
    assert oracle.spectrum_crosscheck(g, spectrum(want)).ok


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_taylor_complement(k):
    res = oracle.verify_drg(oracle.taylor_complement(k))
    assert res.array == taylor(k, 0)


def test_petersen_plus_edge_has_witness():
    g = _petersen_plus_edge()
    assert g.edges() != oracle.petersen().edges()
    res = oracle.verify_drg(g)
    assert not res.is_drg
    x, y, h = res.witness
    assert g.distances()[x, y] == h


def _petersen_plus_edge():
    p = oracle.petersen()
    v = int(np.flatnonzero(~p.adjacency[0])[1])  # index 0 is the vertex itself
    return p.with_edge(0, v)


def test_crosscheck_detects_wrong_spectrum():
    g = oracle.hypercube(4)
    cc = oracle.spectrum_crosscheck(g, spectrum(johnson(8, 4)))
    assert not cc.ok and not cc.annihilator


def test_edge_lines():
    text = oracle.cycle(4).edge_lines()
    assert text == "0 1\n0 3\n1 2\n2 3\n"


def test_size_cap(monkeypatch):
    monkeypatch.setenv("DRG_MAX_VERTICES", "100")
    with pytest.raises(oracle.GraphTooLarge):
        oracle.hypercube(7)


def test_disconnected_rejected():
    g = oracle.from_edges(list(range(4)), [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        oracle.verify_drg(g)


# --------------------------------------------------------------------------
# kernel backends


GRAPHS = [
    lambda: oracle.hypercube(6),
    lambda: oracle.johnson(8, 4),
    lambda: oracle.cycle(9),
    _petersen_plus_edge,
    lambda: oracle.from_edges(list(range(5)), [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]),
]


@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
@pytest.mark.parametrize("make", GRAPHS)
def test_backend_parity(make):
    g = make()
    ip, ix = g.csr()
    d1 = _kernels.all_distances(ip, ix, g.n)
    d2 = _kernels_py.all_distances(ip, ix, g.n)
    assert np.array_equal(d1, d2)
    r1 = _kernels.local_counts(d1, ip, ix, int(d1.max()))
    r2 = _kernels_py.local_counts(d2, ip, ix, int(d2.max()))
    assert r1[0] == r2[0] and r1[4:] == r2[4:]
    if r1[0] == 0:
        for a, b in zip(r1[1:4], r2[1:4]):
            assert np.array_equal(a, b)


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels is not None and not os.environ.get("DRG_PURE_PYTHON"):
        assert kernels.BACKEND == "cython"


def test_pure_python_switch():
    code = "from drgscheme import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={**os.environ, "DRG_PURE_PYTHON": "1"}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
