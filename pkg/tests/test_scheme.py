from fractions import Fraction

import pytest

from drgscheme.algebraic import AlgebraicReal, compare
from drgscheme.families import hadamard, johnson, polygon, selfdual
from drgscheme.scheme import (
    ArraySyntaxError,
    IntersectionArray,
    InvalidArrayError,
    Scheme,
    characteristic_polynomial,
    dual_route_krein,
    eigenmatrices,
    feasibility_report,
    intersection_numbers,
    krein_parameters,
    parse_array,
    spectrum,
)

H42 = "4,3,2,1;1,2,3,4"


@pytest.mark.parametrize("text", [H42, "{4,3,2,1;1,2,3,4}", " { 4, 3, 2, 1 ; 1, 2, 3, 4 } "])
def test_parse_grammar(text):
    arr = parse_array(text)
    assert arr.b == (4, 3, 2, 1) and arr.c == (1, 2, 3, 4)


def test_parse_records():
    assert parse_array({"b": [4, 3, 2, 1], "c": [1, 2, 3, 4]}) == parse_array(H42)
    assert parse_array(([4, 3, 2, 1], [1, 2, 3, 4])) == parse_array(H42)


def test_h42_parameters():
    arr = parse_array(H42)
    assert arr.d == 4
    assert arr.a == (0, 0, 0, 0, 0)
    assert arr.valencies == (1, 4, 6, 4, 1)
    assert arr.n == 16
    assert str(arr) == "{4, 3, 2, 1; 1, 2, 3, 4}"


def test_hadamard_gamma4_parameters():
    arr = parse_array("8,7,4,1;1,4,7,8")
    assert arr == hadamard(4)
    assert arr.n == 32 and arr.a == (0,) * 5


def test_small_array_parameters():
    arr = parse_array("3,2;1,2")
    assert arr.a == (0, 0, 1)
    assert arr.valencies == (1, 3, 3) and arr.n == 7


@pytest.mark.parametrize("bad", ["", "abc", "4,3,x;1,2,3", "4,3;1,2;5"])
def test_syntax_errors(bad):
    with pytest.raises(ArraySyntaxError):
        parse_array(bad)


@pytest.mark.parametrize("bad", ["3,2;1,4", "3,2,1;1,2,4", "3,2;2,1", "3,0;1,1", "4,3;1"])
def test_invariant_violations(bad):
    with pytest.raises(InvalidArrayError):
        parse_array(bad)
    assert parse_array(bad, validate=False).problems()


def test_nonintegral_valency_rejected():
    arr = IntersectionArray((5, 4), (1, 3))  # k_2 = 20/3
    assert any("integer" in p for p in arr.problems())


# --------------------------------------------------------------------------
# intersection numbers


def test_ptensor_h42():
    pt = intersection_numbers(parse_array(H42))
    assert pt(2, 1, 1) == 2
    assert pt(1, 1, 1) == 0
    assert pt(0, 2, 2) == 6
    assert not pt.problems() and not pt.invariant_failures()


def test_pentagon_p222_is_zero():
    # measured on the explicit 5-cycle: two vertices at distance 2 have no common vertex at distance 2 from both
    pt = intersection_numbers(polygon(5))
    assert pt(2, 2, 2) == 0
    assert pt(1, 2, 2) == 1
    assert pt(2, 1, 2) == 1


def test_ptensor_matches_explicit_graph():
    from drgscheme.oracle import johnson as johnson_graph

    g = johnson_graph(7, 3)
    dist = g.distances()
    pt = intersection_numbers(johnson(7, 3))
    d = 3
    for h in range(d + 1):
        x, y = 0, int((dist[0] == h).nonzero()[0][0])
        for i in range(d + 1):
            for j in range(d + 1):
                got = int(((dist[x] == i) & (dist[y] == j)).sum())
                assert pt(h, i, j) == got


def test_closed_walks():
    pt = intersection_numbers(parse_array(H42))
    # sum_i m_i theta_i^s / n with spectrum 4, 2, 0, -2, -4 and m = 1, 4, 6, 4, 1
    for s in range(1, 7):
        spectral = Fraction(sum(m * t**s for m, t in zip((1, 4, 6, 4, 1), (4, 2, 0, -2, -4))), 16)
        assert pt.closed_walks(s) == spectral
    assert pt.closed_walks(4) == 40


# --------------------------------------------------------------------------
# spectrum


def test_h42_spectrum():
    sp = spectrum(parse_array(H42))
    assert [e.as_rational() for e in sp.eigenvalues] == [4, 2, 0, -2, -4]
    assert [m.rational() for m in sp.multiplicities] == [1, 4, 6, 4, 1]
    assert [s.rational() for s in sp.cosines[1]] == [1, Fraction(1, 2), 0, Fraction(-1, 2), -1]


def test_characteristic_polynomial_h42():
    chi = characteristic_polynomial(parse_array(H42))
    # x(x^2-4)(x^2-16) = x^5 - 20x^3 + 64x
    assert chi == (0, 64, 0, -20, 0, 1)


def test_selfdual_spectrum_irrational_pair():
    sp = spectrum(selfdual(2))
    assert sp.eigenvalues[1].minpoly == sp.eigenvalues[4].minpoly == (-20, -4, 1)
    assert [sp.eigenvalues[i].as_rational() for i in (0, 2, 3)] == [10, 2, -2]


# --------------------------------------------------------------------------
# eigenmatrices and Krein parameters


def test_h42_eigenmatrices():
    arr = parse_array(H42)
    em = eigenmatrices(spectrum(arr), arr)
    assert [x.rational() for x in em.P[0]] == [1, 4, 6, 4, 1]
    assert all((em.P[i][j] - em.Q[i][j]).is_zero() for i in range(5) for j in range(5))


def test_pentagon_eigenmatrices_exact():
    arr = polygon(5)
    sp = spectrum(arr)
    em = eigenmatrices(sp, arr)
    # P[1][1] = theta_1 = (sqrt5 - 1)/2
    assert compare(em.P[1][1].to_algebraic(), (AlgebraicReal.sqrt(5) - 1) / 2) == 0
    for i in range(3):
        for j in range(3):
            s = sum((em.P[i][u] * em.Q[u][j] for u in range(3)), sp.system.const(0))
            assert (s - (5 if i == j else 0)).is_zero()


def test_krein_equals_p_for_h42():
    arr = parse_array(H42)
    sp = spectrum(arr)
    kt = krein_parameters(sp, arr)
    pt = intersection_numbers(arr)
    for h in range(5):
        for i in range(5):
            for j in range(5):
                assert (kt(h, i, j) - pt(h, i, j)).is_zero()


@pytest.mark.parametrize("arr", [parse_array(H42), polygon(5), selfdual(2), johnson(8, 4), polygon(7)])
def test_krein_basics(arr):
    sp = spectrum(arr)
    kt = krein_parameters(sp, arr)
    d = arr.d
    for i in range(1, d + 1):
        assert (kt(0, i, i) - sp.multiplicities[i]).is_zero()
    for h in range(d + 1):
        for i in range(d + 1):
            for j in range(d + 1):
                assert kt(h, i, j).sign() >= 0


def test_pentagon_is_formally_self_dual():
    # the Krein parameters live in the sqrt(5) field but collapse to the p^h_ij
    arr = polygon(5)
    kt = krein_parameters(spectrum(arr), arr)
    pt = intersection_numbers(arr)
    assert kt(1, 1, 1).is_zero()
    for h in range(3):
        for i in range(3):
            for j in range(3):
                assert (kt(h, i, j) - pt(h, i, j)).is_zero()


def test_dual_route_matches_cosine_route():
    arr = selfdual(3)
    sp = spectrum(arr)
    dual = dual_route_krein(arr, sp)
    kt = krein_parameters(sp, arr, check=False)
    for h in range(5):
        for i in range(5):
            for j in range(5):
                assert (dual[h][i][j] - kt(h, i, j)).is_zero()


def test_krein_under_ordering_relabels():
    s = Scheme(selfdual(2))
    kt = s.krein_under((0, 4, 2, 3, 1))
    assert (kt(1, 1, 1) - s.krein(4, 4, 4)).is_zero()


# --------------------------------------------------------------------------
# feasibility


def test_feasibility_h42_passes():
    rep = feasibility_report(H42)
    assert rep.feasible and not rep.failures()


def test_feasibility_invariant_violation():
    rep = feasibility_report("3,2,1;1,2,4")
    assert not rep.feasible
    assert rep.failures()[0].name == "array invariants"


def test_feasibility_selfdual_formally_feasible():
    assert feasibility_report(selfdual(2)).feasible


def test_feasibility_catches_irrational_multiplicity():
    rep = feasibility_report("3,2;1,2")
    names = {c.name for c in rep.failures()}
    assert "multiplicities positive integers" in names
