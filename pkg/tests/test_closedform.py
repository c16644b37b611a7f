"""Closed-form predictions and the congruence rank count.

Both shortcuts are validated against the exact matrix rank over an
exhaustive parameter box, not just spot examples: the closed forms are
treated as hypotheses and the exact computation as the oracle.
"""

import pytest

from anumber.cartier import cartier_matrix, rank_mod_p
from anumber.closedform import (
    THEOREM_IDS,
    TheoremPrediction,
    congruence_rank,
    predicted_a,
)
from anumber.curves import (
    CurveValidationError,
    family_a,
    family_b,
    generic,
    make_curve,
)
from anumber.ffpoly import DensePolynomial, Prime


def test_prediction_examples():
    # A, p=7, m=22 = 3*7+1: odd s=3, k=1.
    pred = predicted_a(make_curve(Prime(7), family_a(22)))
    assert (pred.theorem_id, pred.s, pred.k, pred.predicted_a) == \
        ("T31_1", 3, 1, 6)
    # A, p=5, m=9 = 2*5-1: even s=2, k=1.
    pred = predicted_a(make_curve(Prime(5), family_a(9)))
    assert (pred.theorem_id, pred.s, pred.k, pred.predicted_a) == \
        ("T32_2", 2, 1, 2)
    # A, p=7, m=8 = 1*7+1: s=1, k=0.
    pred = predicted_a(make_curve(Prime(7), family_a(8)))
    assert (pred.theorem_id, pred.s, pred.k, pred.predicted_a) == \
        ("T31_1", 1, 0, 3)
    # A, p=7, m=6 = 1*7-1: s=1, k=0, predicted a is zero (ordinary).
    pred = predicted_a(make_curve(Prime(7), family_a(6)))
    assert (pred.theorem_id, pred.s, pred.k, pred.predicted_a) == \
        ("T32_1", 1, 0, 0)
    # A, p=5, m=11 = 2*5+1: even s=2, k=1.
    pred = predicted_a(make_curve(Prime(5), family_a(11)))
    assert (pred.theorem_id, pred.s, pred.k, pred.predicted_a) == \
        ("T31_2", 2, 1, 2)
    # B, p=3, m=9 = 3*3: odd s=3, k=1.
    pred = predicted_a(make_curve(Prime(3), family_b(9)))
    assert (pred.theorem_id, pred.s, pred.k, pred.predicted_a) == \
        ("T41", 3, 1, 2)
    # B, p=3, m=3: s=1, k=0.
    pred = predicted_a(make_curve(Prime(3), family_b(3)))
    assert (pred.theorem_id, pred.s, pred.k, pred.predicted_a) == \
        ("T41", 1, 0, 1)


def test_no_prediction_off_pattern():
    # B with even s has no rule.
    assert predicted_a(make_curve(Prime(5), family_b(10))) is None
    # A with m far from a multiple of p has no rule.
    assert predicted_a(make_curve(Prime(5), family_a(7))) is None
    assert predicted_a(make_curve(Prime(7), family_a(11))) is None
    # B with m not a multiple of p has no rule.
    assert predicted_a(make_curve(Prime(5), family_b(9))) is None


def test_generic_curves_have_no_closed_form():
    p = Prime(5)
    spec = make_curve(p, generic(DensePolynomial([1, 1, 0, 1], p)))
    with pytest.raises(ValueError):
        predicted_a(spec)
    with pytest.raises(ValueError):
        congruence_rank(spec)


def test_prediction_validation():
    TheoremPrediction("T31_1", 3, 1, 6)
    TheoremPrediction("T41", 1, 0, 1)
    with pytest.raises(ValueError):
        TheoremPrediction("T31_1", 2, 1, 6)  # odd rule, even s
    with pytest.raises(ValueError):
        TheoremPrediction("T31_2", 3, 1, 2)  # even rule, odd s
    with pytest.raises(ValueError):
        TheoremPrediction("T41", -1, -1, 1)
    with pytest.raises(ValueError):
        TheoremPrediction("T99", 1, 0, 1)
    with pytest.raises(ValueError):
        TheoremPrediction("T41", 1, 0, -2)


def test_theorem_ids_cover_all_rules():
    assert THEOREM_IDS == ("T31_1", "T31_2", "T32_1", "T32_2", "T41")
    # Each id is reachable from an actual curve.
    reached = {
        predicted_a(make_curve(Prime(7), family_a(22))).theorem_id,
        predicted_a(make_curve(Prime(5), family_a(11))).theorem_id,
        predicted_a(make_curve(Prime(7), family_a(20))).theorem_id,
        predicted_a(make_curve(Prime(5), family_a(9))).theorem_id,
        predicted_a(make_curve(Prime(3), family_b(9))).theorem_id,
    }
    assert reached == set(THEOREM_IDS)


def test_congruence_rank_examples():
    assert congruence_rank(make_curve(Prime(3), family_b(9))) == 2
    assert congruence_rank(make_curve(Prime(7), family_a(22))) == 4
    # Zero matrix case: p=5, A, m=6.
    assert congruence_rank(make_curve(Prime(5), family_a(6))) == 0


def test_congruence_rank_equals_matrix_rank_exhaustively():
    # The count never touches coefficients; the matrix rank is the
    # oracle.  Exhaustive over a box that hits all five rules and many
    # off-pattern curves.
    for pv in (3, 5, 7, 11, 13):
        p = Prime(pv)
        for ctor in (family_a, family_b):
            for m in range(3, 31):
                try:
                    spec = make_curve(p, ctor(m))
                except CurveValidationError:
                    continue
                assert congruence_rank(spec) == \
                    rank_mod_p(cartier_matrix(spec)), (pv, ctor.__name__, m)


def test_predictions_match_exact_a_number_exhaustively():
    for pv in (3, 5, 7, 11, 13):
        p = Prime(pv)
        for ctor in (family_a, family_b):
            for m in range(3, 31):
                try:
                    spec = make_curve(p, ctor(m))
                except CurveValidationError:
                    continue
                pred = predicted_a(spec)
                if pred is None:
                    continue
                rank = rank_mod_p(cartier_matrix(spec))
                assert pred.predicted_a == spec.g - rank, \
                    (pv, ctor.__name__, m, pred)


def test_rank_recursion_in_odd_s_family_a():
    # rank at m = (2k+1)p + 1 grows by (p+1)/2 per step in k.
    for pv in (3, 5, 7, 11, 13):
        p = Prime(pv)
        prev = rank_mod_p(cartier_matrix(make_curve(p, family_a(pv + 1))))
        for k in range(1, 4):
            m = (2 * k + 1) * pv + 1
            rank = rank_mod_p(cartier_matrix(make_curve(p, family_a(m))))
            assert rank == prev + (pv + 1) // 2, (pv, k)
            prev = rank


def test_predicted_a_never_exceeds_genus():
    for pv in (3, 5, 7, 11, 13):
        p = Prime(pv)
        for ctor in (family_a, family_b):
            for m in range(3, 60):
                try:
                    spec = make_curve(p, ctor(m))
                except CurveValidationError:
                    continue
                pred = predicted_a(spec)
                if pred is not None:
                    assert 0 <= pred.predicted_a <= spec.g, (pv, m)
