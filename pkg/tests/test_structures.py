from fractions import Fraction

import pytest

from drgscheme.algebraic import AlgebraicReal, compare
from drgscheme.families import dual_polar_2A, folded_cube, hadamard, halved_cube, hamming, johnson, polygon, selfdual
from drgscheme.scheme import Scheme, parse_array
from drgscheme.structures import (
    QStructure,
    imprimitivity,
    p_structures,
    q_structure_failures,
    q_structures,
    recurrence_fit,
    schur_closed_subsets,
    schur_idempotent_pairs,
    suzuki_patterns,
    suzuki_type,
    tight_residual,
    tightness,
    trichotomy_failures,
)


def nq(arr):
    return len(q_structures(Scheme(arr), fit=False))


# counts by brute force over all orderings, frozen
@pytest.mark.parametrize(
    "arr, count",
    [
        (hamming(4), 2),
        (hamming(5), 1),
        (johnson(8, 4), 1),
        (polygon(4), 1),
        (polygon(5), 2),
        (polygon(6), 1),
        (polygon(7), 3),
        (polygon(8), 2),
        (halved_cube(9), 2),
        (folded_cube(9), 2),
        (dual_polar_2A(4, 2), 2),
        (dual_polar_2A(4, 3), 2),
        (hadamard(4), 2),
        (hadamard(6), 2),
        (hadamard(3), 2),
        (selfdual(2), 2),
        (selfdual(3), 2),
    ],
)
def test_q_structure_counts(arr, count):
    assert nq(arr) == count


def test_natural_ordering_is_first_for_p_and_q_polynomial_arrays():
    s = Scheme(hamming(4))
    assert q_structures(s)[0].ordering == (0, 1, 2, 3, 4)
    assert p_structures(s.ptensor)[0].ordering == (0, 1, 2, 3, 4)


def test_seven_gon_orderings():
    orders = {q.ordering for q in q_structures(Scheme(polygon(7)))}
    assert orders == {(0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2)}


@pytest.mark.parametrize("arr, count", [(selfdual(2), 2), (polygon(5), 2), (dual_polar_2A(4, 2), 1), (hamming(4), 2)])
def test_p_structure_counts(arr, count):
    assert len(p_structures(Scheme(arr).ptensor)) == count


def test_q_structure_invariants():
    for arr in (hamming(4), selfdual(2), dual_polar_2A(4, 2), polygon(7)):
        s = Scheme(arr)
        for q in q_structures(s):
            assert q_structure_failures(q, s) == []


# --------------------------------------------------------------------------
# Suzuki types


def test_suzuki_examples():
    m = suzuki_type((0, 1, 2, 3, 4, 5), (0, 5, 3, 2, 4, 1))
    assert m.label == "V" and m.eliminated
    assert suzuki_type((0, 1, 2, 3, 4), (0, 2, 4, 3, 1)).label == "I"


def test_suzuki_d4_patterns():
    pats = suzuki_patterns(4)
    assert (0, 2, 4, 3, 1) in pats["I"]
    assert (0, 4, 1, 3, 2) in pats["II"]
    assert (0, 4, 2, 3, 1) in pats["III"]
    assert (0, 3, 2, 1, 4) in pats["IV"]
    assert "V" not in pats or not pats["V"]


def test_suzuki_relative_labels():
    # the second structure read in the labels of the first
    m = suzuki_type((0, 2, 1, 3, 4), (0, 4, 1, 3, 2))
    assert m.relative == (0, 4, 2, 3, 1)


@pytest.mark.parametrize(
    "arr, label",
    [
        (hamming(4), "IV"),
        (hadamard(4), "IV"),
        (halved_cube(9), "I"),
        (folded_cube(9), "II"),
        (dual_polar_2A(4, 2), "II"),
        (selfdual(2), "III"),
    ],
)
def test_second_structure_types(arr, label):
    s1, s2 = q_structures(Scheme(arr), fit=False)
    assert suzuki_type(s1, s2).label == label


# --------------------------------------------------------------------------
# imprimitivity, tightness, Schur products


def test_hadamard_bipartite_antipodal():
    rep = imprimitivity(Scheme(hadamard(4)))
    assert rep.bipartite and rep.antipodal


def test_h42_natural_dual_bipartite():
    s = Scheme(hamming(4))
    rep = imprimitivity(s, q_structures(s)[0])
    assert rep.dual_bipartite


def test_dual_polar_structures():
    s = Scheme(dual_polar_2A(4, 2))
    natural, other = q_structures(s)
    r1, r2 = imprimitivity(s, natural), imprimitivity(s, other)
    assert r1.almost_dual_antipodal and not r1.almost_dual_bipartite
    assert r2.almost_dual_bipartite and not r2.dual_bipartite


def test_schur_closed_subsets_bipartite():
    s = Scheme(hamming(4))
    assert (0, 4) in schur_closed_subsets(s)


def test_tightness_examples():
    assert tightness(Scheme(selfdual(2))).tight
    h = tightness(Scheme(hamming(4)))
    assert not h.tight and str(h) == "not_tight(bipartite)"
    # J(8,4) attains the bound exactly
    s = Scheme(johnson(8, 4))
    assert tight_residual(s).is_zero()
    assert tightness(s).tight
    assert str(tightness(Scheme(hamming(3, 3)))) == "not_tight(bound not attained)"


def test_tightness_needs_diameter_three():
    with pytest.raises(ValueError):
        tightness(Scheme(polygon(5)))


def test_schur_pairs_selfdual():
    pairs = schur_idempotent_pairs(Scheme(selfdual(2)))
    assert [(p.i, p.j) for p in pairs] == [(1, 4)]
    assert all(p.scalar_ok for p in pairs)


def test_schur_pairs_bipartite():
    pairs = schur_idempotent_pairs(Scheme(hamming(4)))
    assert {(p.i, p.j) for p in pairs} == {(1, 4), (2, 4), (3, 4), (4, 4)}


def test_schur_pairs_johnson_tight():
    assert {(p.i, p.j) for p in schur_idempotent_pairs(Scheme(johnson(8, 4)))} == {(1, 4)}


def test_schur_pairs_neither():
    assert schur_idempotent_pairs(Scheme(hamming(3, 3))) == []
    assert trichotomy_failures(Scheme(hamming(3, 3))) == []


# --------------------------------------------------------------------------
# recurrence fits


def test_recurrence_fit_h42():
    s = Scheme(hamming(4))
    fit = q_structures(s)[0].fit
    assert fit is not None
    assert fit.p.rational() == 2 and fit.r.rational() == 0


def test_recurrence_fit_selfdual():
    s = Scheme(selfdual(2))
    th = s.spectrum.theta
    fit = q_structures(s)[0].fit
    assert (fit.r_star - th[2]).is_zero()
    # with theta_{l+1} theta_{l-1} = theta_l^2 - r* theta_l + s*
    assert (fit.s_star - th[1] * th[3]).is_zero()
    assert compare(fit.s_star.to_algebraic(), AlgebraicReal.from_rational(Fraction(-1379, 100))) < 0


def test_recurrence_fit_rejects_non_q_ordering():
    s = Scheme(johnson(8, 4))
    zero = s.spectrum.system.const(0)
    fake = QStructure((0, 2, 1, 3, 4), None, [zero] * 5, [zero] * 5, [zero] * 5, [zero] * 5)
    assert recurrence_fit(fake, s) is None
