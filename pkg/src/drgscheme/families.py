"""Intersection arrays of the named families and Sylvester Hadamard matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .scheme import IntersectionArray, InvalidArrayError, feasibility_report

FAMILIES = ("hamming", "halved_cube", "folded_cube", "dual_polar_2A", "hadamard", "selfdual", "taylor", "polygon", "johnson")
STANDARD = ("hamming", "halved_cube", "folded_cube", "dual_polar_2A")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict, hash=False)

    def __str__(self):
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({inner})"


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q  # q itself is prime
    while q % p == 0:
        q //= p
    return q == 1


def _need(params, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise ValueError(f"missing family parameter(s): {', '.join(missing)}")
    return [int(params[n]) for n in names]


def hamming(d: int, q: int = 2) -> IntersectionArray:
    if d < 1 or q < 2:
        raise ValueError("hamming needs d >= 1, q >= 2")
    return IntersectionArray(tuple((d - i) * (q - 1) for i in range(d)), tuple(range(1, d + 1)))


def halved_cube(n: int) -> IntersectionArray:
    if n < 4:
        raise ValueError("halved cube needs n >= 4")
    d = n // 2
    b = tuple((n - 2 * i) * (n - 2 * i - 1) // 2 for i in range(d))
    c = tuple(i * (2 * i - 1) for i in range(1, d + 1))
    return IntersectionArray(b, c)


def folded_cube(n: int) -> IntersectionArray:
    if n < 4:
        raise ValueError("folded cube needs n >= 4")
    d = n // 2
    b = tuple(n - i for i in range(d))
    c = list(range(1, d + 1))
    if n % 2 == 0:
        c[-1] = n
    return IntersectionArray(b, tuple(c))


def dual_polar_2A(d: int, q: int) -> IntersectionArray:
    if d < 1 or not is_prime_power(q):
        raise ValueError("dual polar graph needs d >= 1 and q a prime power")
    qq = q * q
    c = tuple((qq**i - 1) // (qq - 1) for i in range(1, d + 1))
    b = tuple(q ** (2 * i + 1) * (qq ** (d - i) - 1) // (qq - 1) for i in range(d))
    return IntersectionArray(b, c)


def hadamard(gamma: int) -> IntersectionArray:
    if gamma < 1:
        raise ValueError("hadamard needs gamma >= 1")
    g = gamma
    return IntersectionArray((2 * g, 2 * g - 1, g, 1), (1, g, 2 * g - 1, 2 * g))


def selfdual(mu: int) -> IntersectionArray:
    if mu < 2:
        raise ValueError("the self-dual family needs mu >= 2 (mu = 1 gives b_1 = 0)")
    m = mu
    return IntersectionArray((m * (2 * m + 1), (m - 1) * (2 * m + 1), m * m, m), (1, m, m * (m - 1), m * (2 * m + 1)))


def taylor(k: int, a1: int) -> IntersectionArray:
    mu = k - a1 - 1
    if mu < 1:
        raise ValueError("taylor needs k - a_1 - 1 >= 1")
    return IntersectionArray((k, mu, 1), (1, mu, k))


def polygon(n: int) -> IntersectionArray:
    if n < 3:
        raise ValueError("polygon needs n >= 3")
    d = n // 2
    b = (2,) + (1,) * (d - 1)
    c = (1,) * (d - 1) + ((2,) if n % 2 == 0 else (1,))
    return IntersectionArray(b, c)


def johnson(n: int, e: int) -> IntersectionArray:
    e = min(e, n - e)
    if e < 1:
        raise ValueError("johnson needs 1 <= e <= n - 1")
    b = tuple((e - i) * (n - e - i) for i in range(e))
    c = tuple(i * i for i in range(1, e + 1))
    return IntersectionArray(b, c)


_BUILDERS = {
    "hamming": lambda p: hamming(*_need(p, "d"), q=int(p.get("q", 2))),
    "halved_cube": lambda p: halved_cube(*_need(p, "n")),
    "folded_cube": lambda p: folded_cube(*_need(p, "n")),
    "dual_polar_2A": lambda p: dual_polar_2A(*_need(p, "d", "q")),
    "hadamard": lambda p: hadamard(*_need(p, "gamma")),
    "selfdual": lambda p: selfdual(*_need(p, "mu")),
    "taylor": lambda p: taylor(*_need(p, "k", "a1")),
    "polygon": lambda p: polygon(*_need(p, "n")),
    "johnson": lambda p: johnson(*_need(p, "n", "e")),
}


def family_array(spec, check: bool = True, **params) -> IntersectionArray:
    """Array for a :class:`FamilySpec` (or a family name plus keyword parameters).

    The result always passes array validation; with ``check`` the four standard
    families must also pass the full feasibility report.
    """
    if isinstance(spec, str):
        spec = FamilySpec(spec, params)
    if spec.family not in _BUILDERS:
        raise ValueError(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}")
    arr = _BUILDERS[spec.family](spec.params).validate()
    if check and spec.family in STANDARD:
        rep = feasibility_report(arr)
        if not rep.feasible:
            raise InvalidArrayError(f"{spec} fails feasibility: {rep.failures()[0].name}")
    return arr


def sylvester_hadamard(k: int) -> np.ndarray:
    """Order-2^k Hadamard matrix by repeated doubling; H H^T = nI is verified."""
    if k < 0:
        raise ValueError("k must be non-negative")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    n = h.shape[0]
    if not np.array_equal(h @ h.T, n * np.eye(n, dtype=np.int64)):
        raise ArithmeticError("doubling construction broke orthogonality")
    return h


def is_hadamard(h) -> bool:
    h = np.asarray(h, dtype=np.int64)
    n = h.shape[0]
    return h.shape == (n, n) and bool(np.all(np.abs(h) == 1)) and np.array_equal(h @ h.T, n * np.eye(n, dtype=np.int64))
